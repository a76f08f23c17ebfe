#include "wsym/spin_chain.hpp"
#include "wsym/classical.hpp"
#include "wsym/errors.hpp"

namespace wsym {

namespace {

std::vector<MatrixXq> octonion_bivectors(const CompositionAlgebra& o, bool right) {
  std::vector<MatrixXq> mults;
  for (Index i = 1; i < 8; ++i)
    mults.push_back(right ? o.right_mult_basis(i) : o.left_mult_basis(i));
  std::vector<MatrixXq> biv;
  for (size_t i = 0; i < mults.size(); ++i)
    for (size_t j = i + 1; j < mults.size(); ++j)
      biv.push_back(mults[i] * mults[j] * Rational(1, 2));
  return biv;
}

LieAlgebra bivector_algebra(const CompositionAlgebra& o, bool right, const std::string& name) {
  return LieAlgebra::from_matrices(octonion_bivectors(o, right), name);
}

}  // namespace

LieAlgebra spin7_spinor_rep(bool split) {
  return bivector_algebra(octonions(split), false,
                          split ? "spin(3,4)s" : "spin(7)s");
}

SpinEmbedding g2_in_spin7(bool split) {
  CompositionAlgebra o = octonions(split);
  SpinEmbedding out;
  out.ambient = spin7_spinor_rep(split);
  out.label = "G2-chain";

  // candidate spinors: unit coordinate vectors, then sums of two
  std::vector<VectorXq> candidates;
  for (Index i = 0; i < 8; ++i) {
    VectorXq v = VectorXq::Zero(8);
    v(i) = 1;
    candidates.push_back(v);
  }
  for (Index i = 0; i < 8; ++i)
    for (Index j = i + 1; j < 8; ++j) {
      VectorXq v = VectorXq::Zero(8);
      v(i) = 1;
      v(j) = 1;
      candidates.push_back(v);
    }

  for (const VectorXq& s : candidates) {
    MatrixXq action(8, out.ambient.dim());
    for (Index c = 0; c < out.ambient.dim(); ++c)
      action.col(c) = out.ambient.basis[static_cast<size_t>(c)] * s;
    MatrixXq ann = kernel(std::move(action));
    if (ann.cols() != 14) continue;
    std::vector<MatrixXq> sub_basis;
    for (Index c = 0; c < ann.cols(); ++c)
      sub_basis.push_back(out.ambient.realize(ann.col(c)));
    out.sub = LieAlgebra::from_matrices(std::move(sub_basis), split ? "g2_split" : "g2");
    out.inclusion = ann;
    return out;
  }
  throw BadSpinorChoice("no candidate spinor has a 14-dimensional annihilator");
}

SpinEmbedding spin7_in_so8(const std::string& class_label) {
  const bool right = (class_label == "S3");
  if (!right && class_label != "S2") throw BadParams("class label must be S2 or S3");
  CompositionAlgebra o = octonions(false);
  SpinEmbedding out;
  out.label = class_label;
  out.ambient = classical(Series::so, {8, 0});
  out.sub = bivector_algebra(o, right, "spin7_" + class_label);
  MatrixXq incl(out.ambient.dim(), out.sub.dim());
  for (Index c = 0; c < out.sub.dim(); ++c)
    incl.col(c) = out.ambient.coordinates(out.sub.basis[static_cast<size_t>(c)]);
  out.inclusion = std::move(incl);
  return out;
}

SpinEmbedding so7_vector_in_so8() {
  SpinEmbedding out;
  out.label = "vector";
  out.ambient = classical(Series::so, {8, 0});
  // so(7) fixing the unit coordinate e_0
  std::vector<MatrixXq> basis;
  for (Index a = 1; a < 8; ++a)
    for (Index b = a + 1; b < 8; ++b) {
      MatrixXq m = MatrixXq::Zero(8, 8);
      m(a, b) = 1;
      m(b, a) = -1;
      basis.push_back(std::move(m));
    }
  out.sub = LieAlgebra::from_matrices(std::move(basis), "so7_vector");
  MatrixXq incl(out.ambient.dim(), out.sub.dim());
  for (Index c = 0; c < out.sub.dim(); ++c)
    incl.col(c) = out.ambient.coordinates(out.sub.basis[static_cast<size_t>(c)]);
  out.inclusion = std::move(incl);
  return out;
}

} // namespace wsym
