#include "qf/valuesets.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "qf/pell.hpp"
#include "qf/reduction.hpp"

namespace qf {

namespace {

Int check_rep_domain(const Form &f) {
  if (f.is_zero())
    throw domain_error("zero_form", "zero form has no value-set machinery");
  if (!f.is_primitive())
    throw domain_error("imprimitive_form",
                       "caller must divide by the content first");
  Int d = f.discriminant();
  if (d >= 0 && is_square(d))
    throw domain_error("square_discriminant",
                       "operation requires a non-square discriminant");
  return d;
}

// ordering key for deterministic witness output; nonnegative entries win ties
std::tuple<Int, Int, int, int> witness_key(const Witness &w) {
  return {abs(w.x), abs(w.y), w.x < 0 ? 1 : 0, w.y < 0 ? 1 : 0};
}

/* All solutions of f(x, y) = n for positive definite f and n > 0 via
 * 4an = (2ax + by)^2 + |d| y^2; returns the smallest witness. */
std::optional<Witness> definite_search(const Form &f, const Int &n,
                                       const Int &d, bool primitive_only) {
  std::optional<Witness> best;
  auto offer = [&](Witness w) {
    if (primitive_only) {
      Int g;
      mpz_gcd(g.get_mpz_t(), w.x.get_mpz_t(), w.y.get_mpz_t());
      if (g != 1)
        return;
    }
    if (!best || witness_key(w) < witness_key(*best))
      best = std::move(w);
  };
  Int fouran = 4 * f.a * n;
  Int ymax = isqrt(fouran / -d);
  for (Int y = -ymax; y <= ymax; y++) {
    Int rhs = fouran + d * y * y;
    if (!is_square(rhs))
      continue;
    Int s = isqrt(rhs);
    for (int sign = 0; sign < (s == 0 ? 1 : 2); sign++) {
      Int t = sign == 0 ? s : Int(-s);
      Int num = t - f.b * y;
      if (num % (2 * f.a) != 0)
        continue;
      offer({num / (2 * f.a), y});
    }
  }
  return best;
}

/* Primitive representability of m by an indefinite primitive f: scan the
 * square roots b of d mod 4|m| with 0 <= b < 2|m| and test proper
 * equivalence of (m, b, (b^2-d)/(4m)) with f.  The transform's first
 * column is the witness. */
std::optional<Witness> indefinite_primitive_search(const Form &f, const Int &m,
                                                   const Int &d) {
  Int am = abs(m);
  Int fourm = 4 * am;
  Int b = ((d % 2) + 2) % 2; // b and d share parity
  for (; b < 2 * am; b += 2) {
    if ((b * b - d) % fourm != 0)
      continue;
    Form g(m, b, (b * b - d) / (4 * m));
    if (auto tr = sl2_transform(f, g))
      return Witness{tr->alpha, tr->gamma};
  }
  return std::nullopt;
}

RepResult represents(const Form &f, const Int &n, bool primitive_only) {
  Int d = check_rep_domain(f);
  if (n == 0) {
    // (0,0) always works; a primitive representation of 0 would force a
    // square discriminant
    if (primitive_only)
      return {false, std::nullopt};
    return {true, Witness{0, 0}};
  }
  if (d < 0) {
    bool negdef = f.a < 0;
    if ((n > 0) == negdef)
      return {false, std::nullopt};
    auto w = definite_search(negdef ? f.negated() : f, negdef ? Int(-n) : n, d,
                             primitive_only);
    if (!w)
      return {false, std::nullopt};
    return {true, *w};
  }
  for (Int k = 1; k * k <= abs(n); k++) {
    if (n % (k * k) != 0)
      continue;
    if (auto w = indefinite_primitive_search(f, n / (k * k), d))
      return {true, Witness{k * w->x, k * w->y}};
    if (primitive_only)
      break; // k = 1 only
  }
  return {false, std::nullopt};
}

} // namespace

RepResult represents_exact(const Form &f, const Int &n) {
  return represents(f, n, false);
}

RepResult represents_primitively(const Form &f, const Int &n) {
  return represents(f, n, true);
}

std::pair<Int, Int> evenize_representation(const Form &f, const Int &x,
                                           const Int &y) {
  Int d = check_rep_domain(f);
  Int r = d % 8;
  if (r < 0)
    r += 8;
  if (r != 5)
    throw domain_error("criterion_fails",
                       "evenization requires discriminant 5 mod 8");
  if (x % 2 == 0)
    return {x, y};
  Mat2 m;
  if (d < 0) {
    if (d != -3)
      throw domain_error("criterion_fails",
                         "no evenization for definite d != -3");
    // automorph from t^2 - d u^2 = 4 with (t, u) = (1, 1)
    m = Mat2{(1 - f.b) / 2, -f.c, f.a, (1 + f.b) / 2};
  } else {
    if (!unit_parity_criterion(d))
      throw domain_error("criterion_fails",
                         "evenization requires the unit parity criterion");
    m = automorph(f);
  }
  Int value = f.eval(x, y);
  Int cx = x, cy = y;
  for (int i = 0; i < 2; i++) {
    Int nx = m.alpha * cx + m.beta * cy;
    Int ny = m.gamma * cx + m.delta * cy;
    cx = nx;
    cy = ny;
    if (cx % 2 == 0) {
      if (f.eval(cx, cy) != value)
        throw domain_error("internal_error", "evenization changed the value");
      return {cx, cy};
    }
  }
  throw domain_error("internal_error",
                     "automorph mod 2 did not have order 3");
}

ResidueImage image_mod(const Form &f, long m, PairRestriction r) {
  if (m < 2)
    throw domain_error("bad_modulus", "modulus must be >= 2");
  ResidueImage img;
  img.modulus = m;
  img.restriction = r;
  std::set<long> vals;
  Int mm(m);
  for (long x = 0; x < m; x++) {
    for (long y = 0; y < m; y++) {
      switch (r) {
      case PairRestriction::AllPairs:
        break;
      case PairRestriction::CoprimePairs: {
        Int g;
        Int gx = Int(x), gy = Int(y);
        mpz_gcd(g.get_mpz_t(), gx.get_mpz_t(), gy.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mm.get_mpz_t());
        if (g != 1)
          continue;
        break;
      }
      case PairRestriction::EqualParity:
        if ((x - y) % 2 != 0)
          continue;
        break;
      case PairRestriction::FirstEven:
        if (x % 2 != 0)
          continue;
        break;
      }
      Int v = f.eval(Int(x), Int(y));
      Int res;
      mpz_fdiv_r(res.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
      vals.insert(res.get_si());
    }
  }
  img.values.assign(vals.begin(), vals.end());
  return img;
}

Int square_count(long q, long k) {
  Int qq(q);
  if (q < 2 || mpz_probab_prime_p(qq.get_mpz_t(), 30) == 0)
    throw domain_error("not_prime", "q must be prime");
  if (k < 1)
    throw domain_error("bad_exponent", "k must be >= 1");
  Int qk;
  mpz_pow_ui(qk.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(k));
  if (q == 2) {
    // 2^(k-1)/2 ... closed forms (2^{k-1}+4)/3 for even k, (2^{k-1}+5)/3 odd
    Int half = qk / 2;
    return (k % 2 == 0) ? (half + 4) / 3 : (half + 5) / 3;
  }
  Int qk1 = qk * q;
  return (k % 2 == 0) ? (qk1 + q + 2) / (2 * (q + 1))
                      : (qk1 + 2 * q + 1) / (2 * (q + 1));
}

ValueWindow value_window(const Form &f, long bound, long cap) {
  if (bound < 0 || bound > cap)
    throw domain_error("bound_exceeded", "window bound outside [0, cap]");
  check_rep_domain(f);
  ValueWindow win;
  win.form = f;
  win.bound = bound;
  for (Int n = -bound; n <= bound; n++)
    if (represents_exact(f, n).represented)
      win.values.push_back(n);
  win.complete = true;
  return win;
}

Rational prime_density_estimate(const Form &f, long x, long cap) {
  if (x < 2 || x > cap)
    throw domain_error("bound_exceeded", "prime bound outside [2, cap]");
  Int d = check_rep_domain(f);
  std::vector<bool> composite(static_cast<size_t>(x) + 1, false);
  Int num = 0, den = 0;
  for (long p = 2; p <= x; p++) {
    if (composite[static_cast<size_t>(p)])
      continue;
    for (long q = 2 * p; q <= x; q += p)
      composite[static_cast<size_t>(q)] = true;
    if ((2 * d) % p == 0)
      continue;
    den++;
    if (represents_exact(f, Int(p)).represented)
      num++;
  }
  return {num, den};
}

} // namespace qf
