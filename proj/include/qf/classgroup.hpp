#ifndef QF_CLASSGROUP_HPP
#define QF_CLASSGROUP_HPP

#include <vector>

#include "qf/form.hpp"
#include "qf/reduction.hpp"

namespace qf {

/* Per-discriminant bundle: one representative per SL2 class of primitive
 * forms (positive definite only when d < 0), the narrow class number
 * h+, the ordinary class number h and the number h* of GL2 classes.
 * unit_norm is the norm of the fundamental unit for d > 0 and 0 for
 * d < 0 (not applicable). */
struct ClassData {
  Int d;
  std::vector<Form> reps;
  long h_plus = 0;
  long h_ord = 0;
  long h_star = 0;
  int unit_norm = 0;
};

/* Exhaustive enumeration of reduced primitive forms of discriminant d
 * (non-square, 0 or 1 mod 4, |d| <= bound).  Results are memoized in a
 * process-wide cache guarded by a mutex. */
const ClassData &class_data(const Int &d, const Int &bound = Int(2000000));

/// All reduced primitive positive definite forms of discriminant d < 0.
std::vector<Form> reduced_definite_forms(const Int &d);

/// Reduction cycles partitioning the reduced primitive forms of d > 0.
std::vector<ReducedCycle> indefinite_cycles(const Int &d);

} // namespace qf

#endif
