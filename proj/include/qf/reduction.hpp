#ifndef QF_REDUCTION_HPP
#define QF_REDUCTION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qf/form.hpp"

namespace qf {

/* Closed cycle of reduced indefinite forms sharing one positive
 * non-square discriminant.  Applying one rho-step to the last member
 * yields the first again. */
struct ReducedCycle {
  std::vector<Form> forms;
  Int d;

  bool contains(const Form &f) const;
  size_t size() const { return forms.size(); }
};

/// True iff f is reduced (definite: |b| <= a <= c with tie-breaks;
/// indefinite: 0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b).
bool is_reduced(const Form &f);

/* Gauss reduction.  Definite forms go to the unique reduced
 * representative of their proper class (sign of definiteness kept);
 * indefinite forms go to some member of their reduction cycle.
 * Throws on square or zero discriminant. */
Form reduce(const Form &f);

/// As reduce, but also returns m with act(f, m) = reduce(f).
std::pair<Form, Mat2> reduce_with_matrix(const Form &f);

/// One rho-step applied to a reduced indefinite form.
Form rho(const Form &f);
std::pair<Form, Mat2> rho_with_matrix(const Form &f);

/// Full closed cycle containing reduce(f); requires disc > 0 non-square.
ReducedCycle cycle(const Form &f);

/* Proper (determinant +1) equivalence.  Requires equal non-square
 * discriminants to possibly hold; decided via reduced representatives
 * (definite) or cycle membership (indefinite). */
bool is_sl2_equivalent(const Form &f, const Form &g);

/// Proper or improper equivalence: sl2(f, g) or sl2(f, opposite(g)).
bool is_gl2_equivalent(const Form &f, const Form &g);

/// When f and g are properly equivalent, a matrix m with act(f, m) = g.
std::optional<Mat2> sl2_transform(const Form &f, const Form &g);

/* The automorph of a primitive indefinite form: the infinite-order
 * determinant +1 matrix ((t-bu)/2, -cu; au, (t+bu)/2) built from the
 * fundamental solution of t^2 - d u^2 = 4.  Fixes f exactly. */
Mat2 automorph(const Form &f);

} // namespace qf

#endif
