#include "qf/classgroup.hpp"

#include <map>
#include <mutex>
#include <set>

#include "qf/pell.hpp"

namespace qf {

namespace {

void check_discriminant_domain(const Int &d, const Int &bound) {
  if (d >= 0 && is_square(d))
    throw domain_error("square_discriminant",
                       "class data requires a non-square discriminant");
  Int r = d % 4;
  if (r < 0)
    r += 4;
  if (r == 2 || r == 3)
    throw domain_error("bad_residue", "discriminant must be 0 or 1 mod 4");
  if (abs(d) > bound)
    throw domain_error("bound_exceeded", "discriminant exceeds configured bound");
}

Int gcd3(const Int &a, const Int &b, const Int &c) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

} // namespace

std::vector<Form> reduced_definite_forms(const Int &d) {
  if (d >= 0)
    throw domain_error("bad_sign", "expected a negative discriminant");
  std::vector<Form> out;
  for (Int a = 1; 3 * a * a <= -d; a++) {
    for (Int b = -a + 1; b <= a; b++) {
      Int num = b * b - d;
      if (num % (4 * a) != 0)
        continue;
      Int c = num / (4 * a);
      if (c < a)
        continue;
      if (b < 0 && a == c)
        continue;
      if (gcd3(a, b, c) != 1)
        continue;
      out.emplace_back(a, b, c);
    }
  }
  return out;
}

std::vector<ReducedCycle> indefinite_cycles(const Int &d) {
  if (d <= 0 || is_square(d))
    throw domain_error("square_discriminant",
                       "expected a positive non-square discriminant");
  // all reduced primitive forms of discriminant d
  std::set<Form> reduced;
  Int b = (d % 2 == 0) ? 2 : 1;
  for (; b * b < d; b += 2) {
    Int n = (d - b * b) / 4; // = -ac >= 1
    for (Int e = 1; e * e <= n; e++) {
      if (n % e != 0)
        continue;
      const Int div_lo = e, div_hi = n / e;
      for (const Int &a0 : {div_lo, div_hi}) {
        Int c0 = n / a0;
        for (int sign = 0; sign < 2; sign++) {
          Form f = sign == 0 ? Form(a0, b, -c0) : Form(-a0, b, c0);
          if (is_reduced(f) && f.is_primitive())
            reduced.insert(f);
        }
      }
    }
  }
  std::vector<ReducedCycle> cycles;
  while (!reduced.empty()) {
    ReducedCycle cyc = cycle(*reduced.begin());
    for (const Form &f : cyc.forms)
      reduced.erase(f);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

const ClassData &class_data(const Int &d, const Int &bound) {
  check_discriminant_domain(d, bound);

  static std::mutex cache_mutex;
  static std::map<Int, ClassData> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(d);
    if (it != cache.end())
      return it->second;
  }

  ClassData data;
  data.d = d;
  std::vector<ReducedCycle> cycles;
  if (d < 0) {
    data.reps = reduced_definite_forms(d);
    data.unit_norm = 0;
  } else {
    cycles = indefinite_cycles(d);
    for (const ReducedCycle &cyc : cycles)
      data.reps.push_back(cyc.forms.front());
    data.unit_norm = fundamental_unit(d).norm;
  }
  data.h_plus = static_cast<long>(data.reps.size());
  data.h_ord = (d > 0 && data.unit_norm == 1) ? data.h_plus / 2 : data.h_plus;

  // orbits of the inversion involution rep -> reduce(opposite(rep))
  auto class_index = [&](const Form &f) -> size_t {
    Form r = reduce(f);
    if (d < 0) {
      for (size_t i = 0; i < data.reps.size(); i++)
        if (data.reps[i] == r)
          return i;
    } else {
      for (size_t i = 0; i < cycles.size(); i++)
        if (cycles[i].contains(r))
          return i;
    }
    throw domain_error("internal_error", "class representative not found");
  };
  long fixed = 0;
  for (const Form &rep : data.reps)
    if (class_index(opposite(rep)) == class_index(rep))
      fixed++;
  data.h_star = fixed + (data.h_plus - fixed) / 2;

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(d, std::move(data)).first->second;
}

} // namespace qf
