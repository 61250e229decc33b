#pragma once

#include "hopfgal/linalg.hpp"

namespace hopfgal {

// Balanced tensor products X ⊗_B Y of module structures given by matrix
// families.  The base algebra enters only through its action matrices:
// right_acts_on_left[k] : X → X is the right action of the k-th base basis
// vector on X, and left_acts_on_right[k] : Y → Y its left action on Y.  The
// balanced product is the quotient of X⊗Y by the span of
//   (x·b)⊗y − x⊗(b·y)
// over all basis vectors x, y, b.

std::vector<Vec> balancing_generators(const Field& f,
                                      const std::vector<Matrix>& right_acts_on_left,
                                      const std::vector<Matrix>& left_acts_on_right);

QuotientSpace balanced_tensor(const Field& f,
                              const std::vector<Matrix>& right_acts_on_left,
                              const std::vector<Matrix>& left_acts_on_right);

// A balancing condition between adjacent factors pos and pos+1 of a
// multi-factor tensor product.
struct FactorBalance {
  std::size_t pos;
  std::vector<Matrix> right_acts;  // on factor pos
  std::vector<Matrix> left_acts;   // on factor pos+1
};

// Quotient of X_0⊗…⊗X_{n-1} by all listed adjacent balancing relations,
// each extended by identities on the remaining factors.
QuotientSpace multi_balanced_tensor(const Field& f,
                                    const std::vector<std::size_t>& dims,
                                    const std::vector<FactorBalance>& balances);

// The subspace of a balanced product X⊗_B Y on which two commuting families
// of operators agree:  {ξ : (A_k⊗id)ξ = (id⊗B_k)ξ  for all k}, computed in
// quotient coordinates.  Every A_k⊗id − id⊗B_k must descend to the quotient.
Subspace agreement_subspace(const QuotientSpace& q, std::size_t dim_x,
                            std::size_t dim_y, const std::vector<Matrix>& acts_on_left,
                            const std::vector<Matrix>& acts_on_right);

// Lift a quotient-coordinate subspace back to canonical ambient vectors.
std::vector<Vec> ambient_basis(const QuotientSpace& q, const Subspace& s);

}  // namespace hopfgal
