#include "qf/form.hpp"

#include <ostream>
#include <sstream>
#include <tuple>

namespace qf {

Int Form::discriminant() const { return b * b - 4 * a * c; }

Int Form::content() const {
  if (is_zero())
    throw domain_error("zero_form", "content of the zero form is undefined");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Int Form::eval(const Int &x, const Int &y) const {
  return a * x * x + b * x * y + c * y * y;
}

bool Form::operator<(const Form &o) const {
  return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

bool Mat2::is_unimodular() const {
  Int d = det();
  return d == 1 || d == -1;
}

Mat2 Mat2::inverse() const {
  Int d = det();
  if (d == 1)
    return {delta, -beta, -gamma, alpha};
  if (d == -1)
    return {-delta, beta, gamma, -alpha};
  throw domain_error("not_unimodular", "matrix has determinant != +-1");
}

Mat2 Mat2::operator*(const Mat2 &o) const {
  return {alpha * o.alpha + beta * o.gamma, alpha * o.beta + beta * o.delta,
          gamma * o.alpha + delta * o.gamma, gamma * o.beta + delta * o.delta};
}

Form act(const Form &f, const Mat2 &m) {
  const Int &al = m.alpha, &be = m.beta, &ga = m.gamma, &de = m.delta;
  Int a2 = f.a * al * al + f.b * al * ga + f.c * ga * ga;
  Int b2 = 2 * f.a * al * be + f.b * (al * de + be * ga) + 2 * f.c * ga * de;
  Int c2 = f.a * be * be + f.b * be * de + f.c * de * de;
  return {a2, b2, c2};
}

Form dag(const Form &f) { return {4 * f.a, 2 * f.b, f.c}; }

Form ddag(const Form &f) { return {f.a, 2 * f.b, 4 * f.c}; }

Form opposite(const Form &f) { return {f.a, -f.b, f.c}; }

ScheringInvariants schering_invariants(const ScheringForm &f) {
  if (f.a == 0 && f.b == 0 && f.c == 0)
    throw domain_error("zero_form", "invariants of the zero form are undefined");
  Int g;
  mpz_gcd(g.get_mpz_t(), f.a.get_mpz_t(), f.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c.get_mpz_t());
  Int g2;
  Int twob = 2 * f.b;
  mpz_gcd(g2.get_mpz_t(), f.a.get_mpz_t(), twob.get_mpz_t());
  mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), f.c.get_mpz_t());
  ScheringInvariants inv;
  inv.determinant = f.b * f.b - f.a * f.c;
  inv.order = g;
  inv.species = static_cast<int>(Int(g2 / g).get_si());
  return inv;
}

Int isqrt(const Int &n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int &n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Form parse_form(const std::string &s) {
  std::istringstream in(s);
  std::string part;
  Int coeff[3];
  for (int i = 0; i < 3; i++) {
    if (!std::getline(in, part, ','))
      throw domain_error("parse_error", "expected form as \"a,b,c\": " + s);
    try {
      coeff[i] = Int(part);
    } catch (const std::invalid_argument &) {
      throw domain_error("parse_error", "bad integer in form: " + part);
    }
  }
  if (std::getline(in, part, ','))
    throw domain_error("parse_error", "trailing data in form: " + s);
  return {coeff[0], coeff[1], coeff[2]};
}

std::string to_string(const Form &f) {
  return f.a.get_str() + "," + f.b.get_str() + "," + f.c.get_str();
}

std::ostream &operator<<(std::ostream &os, const Form &f) {
  return os << "(" << f.a << "," << f.b << "," << f.c << ")";
}

} // namespace qf
