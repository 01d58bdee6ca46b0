#ifndef QF_PELL_HPP
#define QF_PELL_HPP

#include <utility>

#include "qf/form.hpp"

namespace qf {

/* Fundamental unit eps_d of the real quadratic order O_d, written as
 * x + y*omega_d where omega_d = (1+sqrt(d))/2 for d = 1 mod 4 and
 * omega_d = sqrt(d/4) for d = 0 mod 4.  The unit is minimal > 1, so
 * y >= 1. */
struct FundamentalUnit {
  Int d;
  Int x, y;
  int norm; // +1 or -1
};

/* Computed by the continued-fraction expansion of omega_d with exact
 * integer state (P + sqrt(D))/Q; no floating point.  max_steps caps the
 * period detection and triggers a period_cap_exceeded error. */
FundamentalUnit fundamental_unit(const Int &d, long max_steps = 1000000);

/* For d = 5 mod 8: decides h+(d) = h+(4d).
 * d > 0: true iff y_d is odd; d < 0: true iff d = -3. */
bool unit_parity_criterion(const Int &d);

/// Minimal positive (t, u) with t^2 - d u^2 = 4, for d > 0 non-square.
std::pair<Int, Int> pell4(const Int &d);

/* Self-test of the norm transfer N(eps_d) = N(eps_4d) for d = 1 mod 4,
 * d > 0 non-square; expected to always return true. */
bool norm_transfer_check(const Int &d);

/// Norm of x + y*omega_d in O_d (exact, d = 0 or 1 mod 4).
Int order_norm(const Int &d, const Int &x, const Int &y);

} // namespace qf

#endif
