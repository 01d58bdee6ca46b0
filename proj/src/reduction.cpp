#include "qf/reduction.hpp"

#include <algorithm>

#include "qf/pell.hpp"

namespace qf {

namespace {

Int check_disc(const Form &f) {
  if (f.is_zero())
    throw domain_error("zero_form", "cannot reduce the zero form");
  Int d = f.discriminant();
  if (d >= 0 && is_square(d))
    throw domain_error("square_discriminant",
                       "operation requires a non-square discriminant");
  return d;
}

Mat2 shear(const Int &k) { return {Int(1), k, Int(0), Int(1)}; }
const Mat2 kSwap{0, -1, 1, 0};

Int mod_fdiv(const Int &a, const Int &m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/* Normalized b for an indefinite form with leading coefficient a:
 * b' = b mod 2|a| placed in (-|a|, |a|] when |a| > sqrt(d), and in
 * (sqrt(d) - 2|a|, sqrt(d)] otherwise. */
Int normalized_b(const Int &a, const Int &b, const Int &sq) {
  Int t = 2 * abs(a);
  Int low = (abs(a) > sq) ? Int(-abs(a)) : Int(sq - t); // exclusive
  return low + 1 + mod_fdiv(b - low - 1, t);
}

bool is_reduced_definite(const Form &f) {
  // positive definite convention; caller negates first if needed
  if (!(abs(f.b) <= f.a && f.a <= f.c))
    return false;
  if (f.b < 0 && (-f.b == f.a || f.a == f.c))
    return false;
  return true;
}

bool is_reduced_indefinite(const Form &f, const Int &d) {
  if (f.b <= 0 || f.b * f.b >= d)
    return false;
  Int s = 2 * abs(f.a);
  if ((s + f.b) * (s + f.b) <= d) // sqrt(d) - b >= 2|a|
    return false;
  if (s > f.b && (s - f.b) * (s - f.b) >= d) // 2|a| >= sqrt(d) + b
    return false;
  return true;
}

struct Tracked {
  Form cur;
  Mat2 m;

  void step(const Mat2 &s) {
    cur = act(cur, s);
    m = m * s;
  }
};

void reduce_definite(Tracked &t) {
  for (;;) {
    // place b in (-a, a]
    Int twoa = 2 * t.cur.a;
    Int r = mod_fdiv(t.cur.b, twoa);
    if (r > t.cur.a)
      r -= twoa;
    if (r != t.cur.b)
      t.step(shear((r - t.cur.b) / twoa));
    if (t.cur.a > t.cur.c) {
      t.step(kSwap);
      continue;
    }
    break;
  }
  if (t.cur.b < 0 && (t.cur.a == t.cur.c || -t.cur.b == t.cur.a))
    t.step(t.cur.a == t.cur.c ? kSwap : shear(Int(1)));
}

void normalize_indefinite(Tracked &t, const Int &sq) {
  Int b2 = normalized_b(t.cur.a, t.cur.b, sq);
  if (b2 != t.cur.b)
    t.step(shear((b2 - t.cur.b) / (2 * t.cur.a)));
}

void reduce_indefinite(Tracked &t, const Int &d) {
  Int sq = isqrt(d);
  normalize_indefinite(t, sq);
  while (!is_reduced_indefinite(t.cur, d)) {
    // rho-step: (a, b, c) -> (c, b', (b'^2 - d)/(4c))
    t.step(kSwap);
    normalize_indefinite(t, sq);
  }
}

} // namespace

bool ReducedCycle::contains(const Form &f) const {
  return std::find(forms.begin(), forms.end(), f) != forms.end();
}

bool is_reduced(const Form &f) {
  Int d = check_disc(f);
  if (d < 0)
    return f.a > 0 ? is_reduced_definite(f)
                   : is_reduced_definite(f.negated());
  return is_reduced_indefinite(f, d);
}

std::pair<Form, Mat2> reduce_with_matrix(const Form &f) {
  Int d = check_disc(f);
  if (d < 0) {
    bool neg = f.a < 0;
    Tracked t{neg ? f.negated() : f, Mat2::identity()};
    reduce_definite(t);
    return {neg ? t.cur.negated() : t.cur, t.m};
  }
  Tracked t{f, Mat2::identity()};
  reduce_indefinite(t, d);
  return {t.cur, t.m};
}

Form reduce(const Form &f) { return reduce_with_matrix(f).first; }

std::pair<Form, Mat2> rho_with_matrix(const Form &f) {
  Int d = check_disc(f);
  if (d <= 0)
    throw domain_error("nonpositive_discriminant",
                       "rho-step requires a positive discriminant");
  Tracked t{f, Mat2::identity()};
  Int sq = isqrt(d);
  t.step(kSwap);
  normalize_indefinite(t, sq);
  return {t.cur, t.m};
}

Form rho(const Form &f) { return rho_with_matrix(f).first; }

ReducedCycle cycle(const Form &f) {
  Int d = check_disc(f);
  if (d <= 0)
    throw domain_error("nonpositive_discriminant",
                       "reduction cycles require a positive discriminant");
  ReducedCycle cyc;
  cyc.d = d;
  Form start = reduce(f);
  Form cur = start;
  do {
    cyc.forms.push_back(cur);
    cur = rho(cur);
  } while (cur != start);
  return cyc;
}

bool is_sl2_equivalent(const Form &f, const Form &g) {
  Int d1 = check_disc(f);
  Int d2 = check_disc(g);
  if (d1 != d2 || f.content() != g.content())
    return false;
  if (d1 < 0) {
    if ((f.a > 0) != (g.a > 0))
      return false;
    return reduce(f) == reduce(g);
  }
  return cycle(f).contains(reduce(g));
}

bool is_gl2_equivalent(const Form &f, const Form &g) {
  return is_sl2_equivalent(f, g) || is_sl2_equivalent(f, opposite(g));
}

std::optional<Mat2> sl2_transform(const Form &f, const Form &g) {
  Int d1 = check_disc(f);
  Int d2 = check_disc(g);
  if (d1 != d2 || f.content() != g.content())
    return std::nullopt;
  auto [rf, mf] = reduce_with_matrix(f);
  auto [rg, mg] = reduce_with_matrix(g);
  Mat2 walk = Mat2::identity();
  if (d1 < 0) {
    if (rf != rg)
      return std::nullopt;
  } else {
    // walk f's cycle until we meet rg
    Form cur = rf;
    while (cur != rg) {
      auto [nxt, step] = rho_with_matrix(cur);
      walk = walk * step;
      cur = nxt;
      if (cur == rf)
        return std::nullopt;
    }
  }
  Mat2 m = mf * walk * mg.inverse();
  if (act(f, m) != g)
    throw domain_error("internal_error", "sl2_transform verification failed");
  return m;
}

Mat2 automorph(const Form &f) {
  Int d = check_disc(f);
  if (d <= 0)
    throw domain_error("nonpositive_discriminant",
                       "automorph requires a positive discriminant");
  if (!f.is_primitive())
    throw domain_error("imprimitive_form", "automorph requires a primitive form");
  auto [t, u] = pell4(d);
  Mat2 m{(t - f.b * u) / 2, -f.c * u, f.a * u, (t + f.b * u) / 2};
  if (m.det() != 1 || act(f, m) != f)
    throw domain_error("internal_error", "automorph verification failed");
  return m;
}

} // namespace qf
