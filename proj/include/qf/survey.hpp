#ifndef QF_SURVEY_HPP
#define QF_SURVEY_HPP

#include <iosfwd>
#include <vector>

#include "qf/valuesets.hpp" // Rational

namespace qf {

struct SurveyRow {
  long d = 0;
  bool squarefree = false;
  bool y_odd = false; // fundamental-unit parity: d in D_{5,8} iff true
};

/* Sweep over d = 5 mod 8, 0 < d <= x, counting
 *   d58: h+(d) = h+(4d) (decided by the unit parity fast path),
 *   g58: squarefree d,
 *   s58: squarefree with the criterion,
 *   eis: squarefree without it (the Eisenstein set);
 * s58 + eis = g58 by construction.  A deterministic ~1% subsample is
 * cross-validated against the two class-number computations. */
struct SurveyReport {
  long x = 0;
  long d58 = 0;
  long s58 = 0;
  long g58 = 0;
  long eis = 0;
  long crosscheck_samples = 0;
  bool crosscheck_ok = true;
  std::vector<SurveyRow> rows; // populated when requested

  Rational d58_density() const { return {Int(d58), Int(x)}; }
  Rational g58_density() const { return {Int(g58), Int(x)}; }
  Rational s58_over_g58() const { return {Int(s58), Int(g58)}; }
  Rational eisenstein_ratio() const { return {Int(eis), Int(g58)}; }
};

/// Squarefree marks for 1..x (index 0 unused, false).
std::vector<bool> squarefree_sieve(long x);

SurveyReport survey(long x, bool keep_rows = false, long cap = 100000);

/// |E intersect [1,x]| / G_{5,8}(x); report-only quantity.
Rational eisenstein_ratio(long x);

/// CSV rows: d,squarefree,y_odd,in_d58,in_s58,in_e
void write_survey_csv(const SurveyReport &report, std::ostream &os);

} // namespace qf

#endif
