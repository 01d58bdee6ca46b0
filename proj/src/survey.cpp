#include "qf/survey.hpp"

#include <cstdint>
#include <ostream>

#include "qf/classgroup.hpp"
#include "qf/pell.hpp"

namespace qf {

std::vector<bool> squarefree_sieve(long x) {
  if (x < 1)
    throw domain_error("bad_bound", "sieve bound must be >= 1");
  std::vector<bool> sf(static_cast<size_t>(x) + 1, true);
  sf[0] = false;
  for (long i = 2; i * i <= x; i++)
    for (long q = i * i; q <= x; q += i * i)
      sf[static_cast<size_t>(q)] = false;
  return sf;
}

SurveyReport survey(long x, bool keep_rows, long cap) {
  if (x < 1 || x > cap)
    throw domain_error("bound_exceeded", "survey bound outside [1, cap]");
  SurveyReport rep;
  rep.x = x;
  std::vector<bool> sf = squarefree_sieve(x);

  // deterministic ~1% subsample for the slow-path cross-check
  uint64_t rng = 0x9e3779b97f4a7c15ULL;
  auto sampled = [&rng]() {
    rng = rng * 6364136223846793005ULL + 1442695040888963407ULL;
    return (rng >> 33) % 100 == 0;
  };

  for (long d = 5; d <= x; d += 8) {
    bool y_odd = fundamental_unit(Int(d)).y % 2 != 0;
    bool squarefree = sf[static_cast<size_t>(d)];
    if (y_odd)
      rep.d58++;
    if (squarefree) {
      rep.g58++;
      if (y_odd)
        rep.s58++;
      else
        rep.eis++;
    }
    if (sampled()) {
      rep.crosscheck_samples++;
      bool slow = class_data(Int(d)).h_plus == class_data(Int(4 * d)).h_plus;
      if (slow != y_odd)
        rep.crosscheck_ok = false;
    }
    if (keep_rows)
      rep.rows.push_back({d, squarefree, y_odd});
  }
  return rep;
}

Rational eisenstein_ratio(long x) { return survey(x).eisenstein_ratio(); }

void write_survey_csv(const SurveyReport &report, std::ostream &os) {
  os << "d,squarefree,y_odd,in_d58,in_s58,in_e\n";
  for (const SurveyRow &row : report.rows) {
    bool in_d58 = row.y_odd;
    bool in_s58 = row.squarefree && row.y_odd;
    bool in_e = row.squarefree && !row.y_odd;
    os << row.d << ',' << (row.squarefree ? 1 : 0) << ',' << (row.y_odd ? 1 : 0)
       << ',' << (in_d58 ? 1 : 0) << ',' << (in_s58 ? 1 : 0) << ','
       << (in_e ? 1 : 0) << '\n';
  }
}

} // namespace qf
