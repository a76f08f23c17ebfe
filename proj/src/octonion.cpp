#include "wsym/octonion.hpp"
#include "wsym/errors.hpp"

namespace wsym {

VectorXq CompositionAlgebra::multiply(const VectorXq& x, const VectorXq& y) const {
  VectorXq out = VectorXq::Zero(dim);
  for (Index i = 0; i < dim; ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < dim; ++j) {
      if (y(j) == 0) continue;
      const Rational f = x(i) * y(j);
      for (const auto& [k, v] : mult[static_cast<size_t>(i)][static_cast<size_t>(j)])
        out(k) += f * v;
    }
  }
  return out;
}

VectorXq CompositionAlgebra::conjugate(const VectorXq& x) const {
  VectorXq out = -x;
  out(0) = x(0);
  return out;
}

MatrixXq CompositionAlgebra::left_mult(const VectorXq& x) const {
  MatrixXq m = MatrixXq::Zero(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    VectorXq e = VectorXq::Zero(dim);
    e(j) = 1;
    m.col(j) = multiply(x, e);
  }
  return m;
}

MatrixXq CompositionAlgebra::left_mult_basis(Index i) const {
  VectorXq e = VectorXq::Zero(dim);
  e(i) = 1;
  return left_mult(e);
}

MatrixXq CompositionAlgebra::right_mult_basis(Index i) const {
  MatrixXq m = MatrixXq::Zero(dim, dim);
  VectorXq ei = VectorXq::Zero(dim);
  ei(i) = 1;
  for (Index j = 0; j < dim; ++j) {
    VectorXq e = VectorXq::Zero(dim);
    e(j) = 1;
    m.col(j) = multiply(e, ei);
  }
  return m;
}

CompositionAlgebra real_numbers() {
  CompositionAlgebra r;
  r.dim = 1;
  r.split = false;
  r.mult = {{SparseVec{{0, 1}}}};
  r.norm = MatrixXq::Identity(1, 1);
  return r;
}

CompositionAlgebra cayley_dickson(const CompositionAlgebra& a, const Rational& gamma) {
  CompositionAlgebra d;
  d.dim = 2 * a.dim;
  const Index n = a.dim;
  d.mult.assign(static_cast<size_t>(d.dim),
                std::vector<SparseVec>(static_cast<size_t>(d.dim)));
  auto put = [&](Index i, Index j, const VectorXq& lo, const VectorXq& hi) {
    SparseVec entry;
    for (Index k = 0; k < n; ++k)
      if (lo(k) != 0) entry.push_back({k, lo(k)});
    for (Index k = 0; k < n; ++k)
      if (hi(k) != 0) entry.push_back({n + k, hi(k)});
    d.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(entry);
  };
  // (a,b)(c,d) = (ac + gamma conj(d) b, d a + b conj(c))
  for (Index i = 0; i < d.dim; ++i)
    for (Index j = 0; j < d.dim; ++j) {
      VectorXq xa = VectorXq::Zero(n), xb = VectorXq::Zero(n);
      VectorXq yc = VectorXq::Zero(n), yd = VectorXq::Zero(n);
      (i < n ? xa : xb)(i % n) = 1;
      (j < n ? yc : yd)(j % n) = 1;
      VectorXq lo = a.multiply(xa, yc) + gamma * a.multiply(a.conjugate(yd), xb);
      VectorXq hi = a.multiply(yd, xa) + a.multiply(xb, a.conjugate(yc));
      put(i, j, lo, hi);
    }
  d.norm = MatrixXq::Zero(d.dim, d.dim);
  d.norm.topLeftCorner(n, n) = a.norm;
  d.norm.bottomRightCorner(n, n) = -gamma * a.norm;
  d.split = sig_diagonalize(d.norm).positive != d.dim;

  // exact multiplicativity of the norm, extended bilinearly over rational
  // sample combinations of basis pairs
  auto norm_of = [&](const VectorXq& x) { return (x.transpose() * d.norm * x)(0, 0); };
  for (Index i = 0; i < d.dim; ++i)
    for (Index j = 0; j < d.dim; ++j) {
      VectorXq ei = VectorXq::Zero(d.dim), ej = VectorXq::Zero(d.dim);
      ei(i) = 1;
      ej(j) = 1;
      VectorXq x = ei + Rational(1, 2) * ej;
      VectorXq y = ej + Rational(1, 3) * ei;
      if (norm_of(d.multiply(x, y)) != norm_of(x) * norm_of(y))
        throw Error("norm fails to be multiplicative");
    }
  return d;
}

CompositionAlgebra quaternions(bool split) {
  CompositionAlgebra c = cayley_dickson(real_numbers(), -1);
  return cayley_dickson(c, split ? Rational(1) : Rational(-1));
}

CompositionAlgebra octonions(bool split) {
  return cayley_dickson(quaternions(false), split ? Rational(1) : Rational(-1));
}

LieAlgebra derivations(const CompositionAlgebra& a) {
  const Index n = a.dim;
  // D(e_i e_j) = D(e_i) e_j + e_i D(e_j); unknown D has n^2 entries
  MatrixXq constraints = MatrixXq::Zero(n * n * n, n * n);
  std::vector<MatrixXq> left(static_cast<size_t>(n)), right(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    left[static_cast<size_t>(i)] = a.left_mult_basis(i);
    right[static_cast<size_t>(i)] = a.right_mult_basis(i);
  }
  Index row = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k, ++row) {
        // D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k = 0
        for (const auto& [c, v] : a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)])
          constraints(row, k * n + c) += v;
        for (Index r = 0; r < n; ++r) {
          constraints(row, r * n + i) -= right[static_cast<size_t>(j)](k, r);
          constraints(row, r * n + j) -= left[static_cast<size_t>(i)](k, r);
        }
      }
  MatrixXq sols = kernel<Rational>(std::move(constraints));
  std::vector<MatrixXq> basis;
  for (Index c = 0; c < sols.cols(); ++c) {
    MatrixXq d(n, n);
    for (Index r = 0; r < n; ++r)
      for (Index cc = 0; cc < n; ++cc) d(r, cc) = sols(r * n + cc, c);
    basis.push_back(std::move(d));
  }
  return LieAlgebra::from_matrices(std::move(basis),
                                   std::string("der") + (a.split ? "_split" : ""));
}

namespace {

LieAlgebra cut_derivations(const LieAlgebra& der, const MatrixXq& condition,
                           const std::string& name) {
  MatrixXq coeffs = kernel<Rational>(condition);
  std::vector<MatrixXq> basis;
  for (Index c = 0; c < coeffs.cols(); ++c)
    basis.push_back(der.realize(coeffs.col(c)));
  return LieAlgebra::from_matrices(std::move(basis), name);
}

}  // namespace

LieAlgebra derivations_annihilating(const CompositionAlgebra& a, const VectorXq& fixed) {
  LieAlgebra der = derivations(a);
  MatrixXq condition(a.dim, der.dim());
  for (Index c = 0; c < der.dim(); ++c)
    condition.col(c) = der.basis[static_cast<size_t>(c)] * fixed;
  return cut_derivations(der, condition, der.name + "_ann");
}

LieAlgebra derivations_preserving_quaternions(const CompositionAlgebra& a) {
  LieAlgebra der = derivations(a);
  const Index n = a.dim;
  MatrixXq condition(4 * (n - 4), der.dim());
  for (Index c = 0; c < der.dim(); ++c) {
    Index r = 0;
    for (Index i = 0; i < 4; ++i)
      for (Index k = 4; k < n; ++k)
        condition(r++, c) = der.basis[static_cast<size_t>(c)](k, i);
  }
  return cut_derivations(der, condition, der.name + "_quat");
}

} // namespace wsym
