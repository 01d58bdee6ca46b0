#ifndef QF_FORM_HPP
#define QF_FORM_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "qf/errors.hpp"

namespace qf {

using Int = mpz_class;

/* Binary quadratic form a*X^2 + b*X*Y + c*Y^2 with integer coefficients.
 * Plain value object: no normalization or primitivity requirement on
 * construction; reduction is a separate explicit step. */
struct Form {
  Int a, b, c;

  Form() : a(0), b(0), c(0) {}
  Form(Int a_, Int b_, Int c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}
  Form(long a_, long b_, long c_) : a(a_), b(b_), c(c_) {}

  /// b^2 - 4ac; always congruent to 0 or 1 mod 4.
  Int discriminant() const;

  /// gcd(a, b, c) >= 1.  Throws on the zero form.
  Int content() const;

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  bool is_primitive() const { return content() == 1; }

  Int eval(const Int &x, const Int &y) const;

  Form negated() const { return {-a, -b, -c}; }
  Form divided_by(const Int &k) const { return {a / k, b / k, c / k}; }
  Form scaled(const Int &k) const { return {k * a, k * b, k * c}; }

  bool operator==(const Form &o) const = default;
  bool operator<(const Form &o) const; // lexicographic, for ordered containers
};

/* 2x2 integer matrix (alpha beta; gamma delta) acting on forms by the
 * substitution (X, Y) -> (alpha X + beta Y, gamma X + delta Y). */
struct Mat2 {
  Int alpha, beta, gamma, delta;

  Mat2() : alpha(1), beta(0), gamma(0), delta(1) {}
  Mat2(Int a_, Int b_, Int c_, Int d_)
      : alpha(std::move(a_)), beta(std::move(b_)), gamma(std::move(c_)),
        delta(std::move(d_)) {}
  Mat2(long a_, long b_, long c_, long d_)
      : alpha(a_), beta(b_), gamma(c_), delta(d_) {}

  static Mat2 identity() { return {}; }

  Int det() const { return alpha * delta - beta * gamma; }
  bool is_unimodular() const;

  /// Exact inverse; requires det = +-1.
  Mat2 inverse() const;

  Mat2 operator*(const Mat2 &o) const;
  bool operator==(const Mat2 &o) const = default;
};

/* Substitution action: act(f, m)(X, Y) = f(alpha X + beta Y, gamma X + delta Y).
 * Satisfies act(f, m1 * m2) = act(act(f, m1), m2).  The discriminant is
 * multiplied by det(m)^2; unimodular action preserves content. */
Form act(const Form &f, const Mat2 &m);

/// f^dag(X, Y) = f(2X, Y) = (4a, 2b, c); discriminant multiplied by 4.
Form dag(const Form &f);

/// f^ddag(X, Y) = f(X, 2Y) = (a, 2b, 4c).
Form ddag(const Form &f);

/// (a, b, c) -> (a, -b, c); realizes class inversion on SL2 classes.
Form opposite(const Form &f);

/* Form in the classical even-middle-coefficient convention
 * a*X^2 + 2b*X*Y + c*Y^2. */
struct ScheringForm {
  Int a, b, c;
};

struct ScheringInvariants {
  Int determinant; // b^2 - ac
  Int order;       // gcd(a, b, c)
  int species;     // gcd(a, 2b, c) / gcd(a, b, c), always 1 or 2
};

ScheringInvariants schering_invariants(const ScheringForm &f);

// floor square root of n >= 0, and exact squareness test
Int isqrt(const Int &n);
bool is_square(const Int &n);

// canonical textual encoding "a,b,c" (base 10, optional signs)
Form parse_form(const std::string &s);
std::string to_string(const Form &f);

std::ostream &operator<<(std::ostream &os, const Form &f);

} // namespace qf

#endif
