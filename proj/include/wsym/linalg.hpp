#pragma once

#include <optional>
#include <vector>

#include "wsym/rational.hpp"
#include "wsym/signature.hpp"
#include "wsym/errors.hpp"

namespace wsym {

// Exact dense linear algebra over an arbitrary field scalar.  All routines
// use plain Gaussian elimination with first-nonzero pivoting; with an exact
// scalar there is no conditioning question, only coefficient growth.

/// In-place reduced row echelon form.  Returns the pivot columns.
template <typename Scalar>
std::vector<Index> rref_in_place(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = -1;
    for (Index r = row; r < a.rows(); ++r)
      if (a(r, col) != Scalar(0)) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    a.row(row) /= a(row, col);
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      a.row(r) -= a(r, col) * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Index rank_of(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  return static_cast<Index>(rref_in_place(a).size());
}

/// Columns spanning the kernel of a (exact, linearly independent).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
kernel(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Index n = a.cols();
  std::vector<Index> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(n, false);
  for (Index c : pivots) is_pivot[c] = true;

  Mat basis(n, n - static_cast<Index>(pivots.size()));
  Index k = 0;
  for (Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.col(k).setZero();
    basis(free_col, k) = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -a(static_cast<Index>(r), free_col);
    ++k;
  }
  return basis;
}

/// One solution of a x = b, or nullopt when inconsistent.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>
solve(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
      const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Mat aug(a.rows(), a.cols() + 1);
  aug << a, b;
  std::vector<Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x = Vec::Zero(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Index>(r), a.cols());
  return x;
}

/// Exact inverse; throws Singular.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
inverse(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols()) throw Singular("inverse of non-square matrix");
  const Index n = a.rows();
  Mat aug(n, 2 * n);
  aug << a, Mat::Identity(n, n);
  std::vector<Index> pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) != n || pivots.back() != n - 1)
    throw Singular("matrix not invertible");
  return aug.rightCols(n);
}

/// Inertia of a symmetric matrix by exact congruence reduction (Lagrange
/// with symmetric pivoting; a hyperbolic step when every remaining diagonal
/// entry vanishes).  Well defined by Sylvester's law of inertia.
template <typename Scalar>
Signature sig_diagonalize(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s) {
  if (s.rows() != s.cols()) throw NonSymmetric("matrix not square");
  if (s != s.transpose().eval()) throw NonSymmetric("matrix differs from its transpose");

  const Index n = s.rows();
  std::vector<Index> active;
  for (Index i = 0; i < n; ++i) active.push_back(i);
  Signature sig;

  auto eliminate = [&](Index i) {
    for (Index j : active) {
      if (j == i || s(i, j) == Scalar(0)) continue;
      Scalar f = s(i, j) / s(i, i);
      for (Index k : active) s(j, k) -= f * s(i, k);
      for (Index k : active) s(k, j) -= f * s(k, i);
    }
  };

  while (!active.empty()) {
    Index pivot = -1;
    for (Index i : active)
      if (s(i, i) != Scalar(0)) { pivot = i; break; }
    if (pivot < 0) {
      // all diagonal entries vanish; look for a hyperbolic pair
      Index hi = -1, hj = -1;
      for (size_t a = 0; a < active.size() && hi < 0; ++a)
        for (size_t b = a + 1; b < active.size(); ++b)
          if (s(active[a], active[b]) != Scalar(0)) { hi = active[a]; hj = active[b]; break; }
      if (hi < 0) {
        sig.null += static_cast<Index>(active.size());
        break;
      }
      // substitute u = x + y: the (hi,hi) entry becomes 2 s(hi,hj) != 0
      for (Index k : active) s(hi, k) += s(hj, k);
      for (Index k : active) s(k, hi) += s(k, hj);
      continue;
    }
    if (s(pivot, pivot) > Scalar(0)) ++sig.positive; else ++sig.negative;
    eliminate(pivot);
    active.erase(std::find(active.begin(), active.end(), pivot));
  }
  return sig;
}

/// Signature of a form restricted to a subspace: sig(BᵀSB).
template <typename Scalar>
Signature sig_restricted(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& s,
                         const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& basis) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> r = basis.transpose() * s * basis;
  return sig_diagonalize(std::move(r));
}

// Concrete rational instantiations live in linalg.cpp.
extern template std::vector<Index> rref_in_place<Rational>(MatrixXq&);
extern template Index rank_of<Rational>(MatrixXq);
extern template MatrixXq kernel<Rational>(MatrixXq);
extern template std::optional<VectorXq> solve<Rational>(const MatrixXq&, const VectorXq&);
extern template MatrixXq inverse<Rational>(const MatrixXq&);
extern template Signature sig_diagonalize<Rational>(MatrixXq);
extern template Signature sig_restricted<Rational>(const MatrixXq&, const MatrixXq&);

/// Intersection of two column spans.
MatrixXq intersect_spans(const MatrixXq& a, const MatrixXq& b);

/// Coordinates of each column of v in the column span of basis; throws
/// NotClosed when a column falls outside the span.
MatrixXq coordinates_in_span(const MatrixXq& basis, const MatrixXq& v);

} // namespace wsym
