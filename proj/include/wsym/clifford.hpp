#pragma once

#include "wsym/lie_algebra.hpp"

namespace wsym {

/// Real gamma matrices with gamma_i gamma_j + gamma_j gamma_i = +-2 delta,
/// + for the first p generators, - for the last q.  Built from small base
/// cases (including the octonion left multiplications for (0,7) and (4,3))
/// by exact tensor rules; anticommutation is asserted on every pair.
struct CliffordData {
  int p = 0, q = 0;
  std::vector<MatrixXq> gamma;
  Index rep_dim() const { return gamma.empty() ? 1 : gamma[0].rows(); }
};

/// Throws DimensionCap when p + q > 9.
CliffordData clifford(int p, int q);

/// The spin algebra spanned by the bivectors gamma_i gamma_j / 2 acting on
/// the Clifford representation space, together with the so(p,q) vector
/// action obtained from [x, gamma(v)] = gamma(rho(x) v) exactly.
struct SpinAlgebra {
  CliffordData cliff;
  LieAlgebra algebra;                    // matrices act on spinors
  std::vector<MatrixXq> vector_action;   // (p+q) x (p+q) per basis element
};

SpinAlgebra spin_algebra(int p, int q);

/// Span of the submodule generated by a seed vector under a matrix action.
MatrixXq submodule_span(const std::vector<MatrixXq>& action, const VectorXq& seed);

/// Dimension and basis of the commutant of a matrix action (1 means
/// absolutely irreducible; counts invariant structure otherwise).
Index commutant_dimension(const std::vector<MatrixXq>& action);
std::vector<MatrixXq> commutant_basis(const std::vector<MatrixXq>& action);

/// A minimal invariant subspace, found by refining along generic commutant
/// elements; the whole space when the action is irreducible.
MatrixXq minimal_invariant_subspace(const std::vector<MatrixXq>& action);

} // namespace wsym
