#pragma once

#include "wsym/lie_algebra.hpp"

namespace wsym {

/// A composition algebra presented by its multiplication tensor on a fixed
/// basis with e_0 the unit.  Built by Cayley-Dickson doubling; the norm
/// form is multiplicative (checked exactly on basis pairs against the
/// bilinear extension).
struct CompositionAlgebra {
  Index dim = 0;
  bool split = false;
  // mult[i][j] = coordinates of e_i * e_j
  std::vector<std::vector<SparseVec>> mult;
  MatrixXq norm;  // symmetric bilinear form N(x+y)-N(x)-N(y) over 2

  VectorXq multiply(const VectorXq& x, const VectorXq& y) const;
  VectorXq conjugate(const VectorXq& x) const;
  /// Left multiplication operator L_x.
  MatrixXq left_mult(const VectorXq& x) const;
  MatrixXq left_mult_basis(Index i) const;
  MatrixXq right_mult_basis(Index i) const;
};

/// Cayley-Dickson doubling with parameter gamma: on A + A,
/// (a,b)(c,d) = (ac + gamma conj(d) b, d a + b conj(c)).
CompositionAlgebra cayley_dickson(const CompositionAlgebra& a, const Rational& gamma);

CompositionAlgebra real_numbers();
CompositionAlgebra quaternions(bool split = false);
/// Octonions: norm signature (8,0) compact, (4,4) split.
CompositionAlgebra octonions(bool split);

/// Derivation algebra {D : D(xy) = D(x)y + x D(y)} as a matrix Lie algebra
/// on the composition algebra; dim 14 for octonions, 3 for quaternions.
LieAlgebra derivations(const CompositionAlgebra& a);

/// Derivations annihilating a chosen element (coordinates); the su(3)-type
/// and sl(3,R)-type subalgebras of the two G2 forms arise this way.
LieAlgebra derivations_annihilating(const CompositionAlgebra& a, const VectorXq& fixed);

/// Derivations preserving the span of basis indices 0..3 (a quaternion
/// subalgebra): the so(4)-type maximal subalgebra of G2.
LieAlgebra derivations_preserving_quaternions(const CompositionAlgebra& a);

} // namespace wsym
