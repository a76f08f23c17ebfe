#include "wsym/linalg.hpp"

namespace wsym {

template std::vector<Index> rref_in_place<Rational>(MatrixXq&);
template Index rank_of<Rational>(MatrixXq);
template MatrixXq kernel<Rational>(MatrixXq);
template std::optional<VectorXq> solve<Rational>(const MatrixXq&, const VectorXq&);
template MatrixXq inverse<Rational>(const MatrixXq&);
template Signature sig_diagonalize<Rational>(MatrixXq);
template Signature sig_restricted<Rational>(const MatrixXq&, const MatrixXq&);

MatrixXq intersect_spans(const MatrixXq& a, const MatrixXq& b) {
  // x in both spans: a u = b v; kernel of [a | -b] gives the coefficients.
  if (a.cols() == 0 || b.cols() == 0) return MatrixXq(a.rows(), 0);
  MatrixXq stacked(a.rows(), a.cols() + b.cols());
  stacked << a, -b;
  MatrixXq null_space = kernel(stacked);
  MatrixXq result = a * null_space.topRows(a.cols());
  // prune dependent columns: pivot columns of the RREF are independent
  MatrixXq copy = result;
  std::vector<Index> pivots = rref_in_place(copy);
  MatrixXq out(a.rows(), static_cast<Index>(pivots.size()));
  for (size_t i = 0; i < pivots.size(); ++i) out.col(static_cast<Index>(i)) = result.col(pivots[i]);
  return out;
}

MatrixXq coordinates_in_span(const MatrixXq& basis, const MatrixXq& v) {
  MatrixXq aug(basis.rows(), basis.cols() + v.cols());
  aug << basis, v;
  std::vector<Index> pivots = rref_in_place(aug);
  for (Index p : pivots)
    if (p >= basis.cols()) throw NotClosed("vector outside span");
  MatrixXq coords = MatrixXq::Zero(basis.cols(), v.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    coords.row(pivots[r]) = aug.block(static_cast<Index>(r), basis.cols(), 1, v.cols());
  return coords;
}

} // namespace wsym
