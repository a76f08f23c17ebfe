#pragma once

#include "wsym/clifford.hpp"
#include "wsym/octonion.hpp"

namespace wsym {

/// A spin-type subalgebra inside an orthogonal algebra with the exact
/// inclusion in ambient coordinates.
struct SpinEmbedding {
  LieAlgebra ambient;
  LieAlgebra sub;
  MatrixXq inclusion;  // ambient coordinates of the sub basis
  std::string label;   // vector / S2 / S3 / G2-chain
};

/// spin(7)-type algebra acting on the octonions by left-multiplication
/// bivectors; for split = true the split octonions give the spin(3,4) form
/// acting on R^{4,4}.
LieAlgebra spin7_spinor_rep(bool split);

/// G2 inside spin(7) as the annihilator of a rational spinor, computed in
/// the octonion left-multiplication model.  Falls back through unit
/// coordinate spinors and sums of two when the annihilator dimension is
/// not 14 (BadSpinorChoice after the list is exhausted).
SpinEmbedding g2_in_spin7(bool split);

/// The two Spin(7) conjugacy classes in so(8): S2 from left
/// multiplications, S3 from right multiplications; the vector class is
/// so(7) fixing the unit octonion coordinate.
SpinEmbedding spin7_in_so8(const std::string& class_label);

/// so(7)-block embedding (the vector class) for comparison.
SpinEmbedding so7_vector_in_so8();

} // namespace wsym
