#ifndef QF_CLASSIFY_HPP
#define QF_CLASSIFY_HPP

#include <optional>
#include <string>

#include "qf/form.hpp"

namespace qf {

enum class Verdict { Ordinary, LowerExtraordinary, UpperExtraordinary };

/* Which clause of the classification criterion fired. */
enum class Reason {
  LowerCriterion,        // d 5 mod 8 and h+(d) = h+(4d)
  UpperCriterion,        // d 20 mod 32 and h+(d) = h+(d/4)
  OneMod8,               // d 1 mod 8: always ordinary
  LowerClassMismatch,    // d 5 mod 8 but h+(d) != h+(4d)
  EvenResidueOrdinary,   // d mod 32 in {0,4,8,12,16,24,28}
  UpperClassMismatch,    // d 20 mod 32 but h+(d) != h+(d/4)
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

struct Certificate {
  Int d;             // discriminant of the input form
  Int content;       // Delta = gcd(a, b, c)
  Int d_reduced;     // d / Delta^2
  long residue = 0;  // d_reduced mod 32 (in [0, 32))
  long h_low = -1;   // h+ of the smaller discriminant compared (-1: unused)
  long h_high = -1;  // h+ of the larger discriminant compared
  std::optional<bool> unit_parity; // y_d odd, when d_reduced > 0, 5 mod 8
  Reason reason = Reason::OneMod8;
};

struct Classification {
  Verdict verdict = Verdict::Ordinary;
  std::optional<Form> partner; // f-dag for lower; halved form for upper
  Certificate certificate;
};

/* The main classifier: decides ordinary vs. lower/upper extraordinary
 * for any form with non-square discriminant, definite or indefinite,
 * primitive or not (via the reduced discriminant d/Delta^2). */
Classification classify(const Form &f);

/* For an upper extraordinary F, the associated lower form f with
 * disc f = disc F / 4 and dag(f) GL2-equivalent to F; found by scanning
 * SL2 class representatives of the quarter discriminant. */
Form upper_to_lower(const Form &F);

enum class ValReason {
  EqualDiscEquivalent,
  EqualDiscInequivalent,
  LowerUpperPair,
  ContentMismatch,
  SignMismatch,
  DiscRatioBad,
  NotFiveMod8,
  ClassNumberMismatch,
  DagInequivalent,
};

std::string to_string(ValReason r);

struct ValEquivResult {
  bool equal = false;
  ValReason reason = ValReason::DiscRatioBad;
};

/* Structural decision of Im(f) = Im(g) (no value enumeration). */
ValEquivResult val_equivalent(const Form &f, const Form &g);

/* Empirical helper: smallest |n| <= cap represented by exactly one of
 * f, g (a concrete refutation witness for value-set equality). */
std::optional<Int> find_value_witness(const Form &f, const Form &g, long cap);

} // namespace qf

#endif
