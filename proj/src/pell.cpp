#include "qf/pell.hpp"

#include <map>
#include <vector>

namespace qf {

namespace {

void check_unit_domain(const Int &d) {
  if (d <= 0)
    throw domain_error("nonpositive_discriminant",
                       "fundamental unit requires d > 0");
  if (is_square(d))
    throw domain_error("square_discriminant",
                       "fundamental unit requires non-square d");
  Int r = d % 4;
  if (r != 0 && r != 1)
    throw domain_error("bad_residue", "d must be 0 or 1 mod 4");
}

// omega_d as a continued-fraction state (P + sqrt(D))/Q
struct CfState {
  Int P, Q, D;
  bool operator<(const CfState &o) const {
    if (P != o.P)
      return P < o.P;
    return Q < o.Q;
  }
};

} // namespace

Int order_norm(const Int &d, const Int &x, const Int &y) {
  if (d % 4 == 0) {
    // omega = sqrt(d/4): N = x^2 - (d/4) y^2
    return x * x - (d / 4) * y * y;
  }
  // omega = (1+sqrt(d))/2: Tr(omega) = 1, N(omega) = (1-d)/4
  return x * x + x * y + y * y * ((1 - d) / 4);
}

FundamentalUnit fundamental_unit(const Int &d, long max_steps) {
  check_unit_domain(d);

  CfState st;
  if (d % 4 == 0) {
    st = {0, 1, d / 4};
  } else {
    st = {1, 2, d};
  }
  const Int D = st.D;
  const Int sq = isqrt(D);

  /* Expand omega_d until a state repeats.  The repeating segment is the
   * purely periodic tail alpha = (P + sqrt(D))/Q; one period of its
   * convergents yields the fundamental unit eps = q_{l-1} alpha + q_{l-2}
   * with norm (-1)^l. */
  std::map<CfState, long> seen;
  std::vector<Int> quotients;
  std::vector<CfState> states;
  long start = -1;
  for (long k = 0;; k++) {
    if (k > max_steps)
      throw domain_error("period_cap_exceeded",
                         "continued-fraction period exceeds step cap");
    auto it = seen.find(st);
    if (it != seen.end()) {
      start = it->second;
      break;
    }
    seen.emplace(st, k);
    states.push_back(st);
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), Int(st.P + sq).get_mpz_t(), st.Q.get_mpz_t());
    quotients.push_back(a);
    Int P2 = a * st.Q - st.P;
    Int Q2 = (D - P2 * P2) / st.Q;
    st = {P2, Q2, D};
  }

  const long period = static_cast<long>(quotients.size()) - start;
  const CfState &alpha = states[static_cast<size_t>(start)];

  // convergent denominators over one period of alpha's expansion
  Int q1 = 0, q2 = 1; // q_{-1}, q_{-2}
  for (long i = 0; i < period; i++) {
    Int q = quotients[static_cast<size_t>(start + i)] * q1 + q2;
    q2 = q1;
    q1 = q;
  }
  // eps = q1 * alpha + q2 = (q1 P + q2 Q + q1 sqrt(D)) / Q

  FundamentalUnit u;
  u.d = d;
  if (d % 4 == 0) {
    // basis [1, sqrt(D)]
    Int num = q1 * alpha.P + q2 * alpha.Q;
    if (num % alpha.Q != 0 || q1 % alpha.Q != 0)
      throw domain_error("internal_error", "unit is not integral in O_d");
    u.x = num / alpha.Q;
    u.y = q1 / alpha.Q;
  } else {
    // basis [1, (1+sqrt(D))/2]: sqrt(D) = 2*omega - 1
    Int xnum = q1 * (alpha.P - 1) + q2 * alpha.Q;
    Int ynum = 2 * q1;
    if (xnum % alpha.Q != 0 || ynum % alpha.Q != 0)
      throw domain_error("internal_error", "unit is not integral in O_d");
    u.x = xnum / alpha.Q;
    u.y = ynum / alpha.Q;
  }
  u.norm = (period % 2 == 0) ? 1 : -1;
  if (order_norm(d, u.x, u.y) != u.norm)
    throw domain_error("internal_error", "unit norm mismatch");
  if (u.y < 1)
    throw domain_error("internal_error", "unit is not normalized (y < 1)");
  return u;
}

bool unit_parity_criterion(const Int &d) {
  Int r = d % 8; // GMP keeps the sign of d here
  if (r < 0)
    r += 8;
  if (r != 5)
    throw domain_error("bad_residue",
                       "parity criterion requires d = 5 mod 8");
  if (d < 0)
    return d == -3;
  return fundamental_unit(d).y % 2 != 0;
}

std::pair<Int, Int> pell4(const Int &d) {
  if (d <= 0 || is_square(d))
    throw domain_error("square_discriminant",
                       "pell4 requires positive non-square d");
  if (d % 4 == 2 || d % 4 == 3)
    throw domain_error("bad_residue", "pell4 requires d = 0 or 1 mod 4");
  FundamentalUnit u = fundamental_unit(d);
  Int x = u.x, y = u.y;
  if (u.norm == -1) {
    // square the unit to reach norm +1
    if (d % 4 == 0) {
      Int x2 = x * x + (d / 4) * y * y;
      Int y2 = 2 * x * y;
      x = x2;
      y = y2;
    } else {
      Int nw = (d - 1) / 4; // omega^2 = omega + (d-1)/4
      Int x2 = x * x + y * y * nw;
      Int y2 = 2 * x * y + y * y;
      x = x2;
      y = y2;
    }
  }
  // rewrite x + y*omega as (t + u*sqrt(d))/2
  Int t, uu;
  if (d % 4 == 0) {
    t = 2 * x;
    uu = y;
  } else {
    t = 2 * x + y;
    uu = y;
  }
  if (t < 0) {
    t = -t;
    uu = -uu;
  }
  if (uu < 0)
    uu = -uu;
  if (t * t - d * uu * uu != 4)
    throw domain_error("internal_error", "pell4 identity violated");
  return {t, uu};
}

bool norm_transfer_check(const Int &d) {
  if (d <= 0 || is_square(d))
    throw domain_error("square_discriminant",
                       "norm transfer requires positive non-square d");
  if (d % 4 != 1)
    throw domain_error("bad_residue", "norm transfer requires d = 1 mod 4");
  return fundamental_unit(d).norm == fundamental_unit(4 * d).norm;
}

} // namespace qf
