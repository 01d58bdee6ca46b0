#ifndef QF_VALUESETS_HPP
#define QF_VALUESETS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qf/form.hpp"

namespace qf {

struct Witness {
  Int x, y;
};

struct RepResult {
  bool represented = false;
  std::optional<Witness> witness;
};

/* Exact decision of n in Im(f) for primitive f with non-square
 * discriminant, with a witness when true.  Definite forms are decided by
 * sign short-circuit and bounded direct search; indefinite forms by the
 * classical reduction: n = k^2 m is represented iff some m = n/k^2 is
 * primitively represented, which holds iff (m, b, (b^2-d)/(4m)) is
 * properly equivalent to f for some b^2 = d mod 4|m|. */
RepResult represents_exact(const Form &f, const Int &n);

/// As represents_exact but restricted to gcd(x, y) = 1.
RepResult represents_primitively(const Form &f, const Int &n);

/* Given f(x, y) = n with f primitive of discriminant d = 5 mod 8 and
 * unit_parity_criterion(d) true, returns (x', y') with f(x', y') = n and
 * x' even, by applying the automorph at most twice (its reduction mod 2
 * has order 3).  The d = -3 case is handled by bounded search. */
std::pair<Int, Int> evenize_representation(const Form &f, const Int &x,
                                           const Int &y);

enum class PairRestriction {
  AllPairs,
  CoprimePairs, // gcd(x, y, m) = 1
  EqualParity,  // x = y mod 2
  FirstEven,    // x even
};

/* Attained subset of Z/mZ, computed by full enumeration of pairs under
 * the restriction. */
struct ResidueImage {
  long modulus = 0;
  std::vector<long> values; // sorted, distinct, in [0, m)
  PairRestriction restriction = PairRestriction::AllPairs;
};

ResidueImage image_mod(const Form &f, long m,
                       PairRestriction r = PairRestriction::AllPairs);

/// |squares mod q^k| by the closed formulas (q prime, k >= 1).
Int square_count(long q, long k);

/* Complete window of the value set: all distinct v with |v| <= bound and
 * v in Im(f), decided per element by represents_exact. */
struct ValueWindow {
  Form form;
  long bound = 0;
  std::vector<Int> values; // sorted
  bool complete = false;
};

ValueWindow value_window(const Form &f, long bound, long cap = 1000000);

struct Rational {
  Int num, den;
  double approx() const { return num.get_d() / den.get_d(); }
};

/* Empirical fraction of primes p <= x, p not dividing 2d, represented
 * by f. */
Rational prime_density_estimate(const Form &f, long x, long cap = 1000000);

} // namespace qf

#endif
