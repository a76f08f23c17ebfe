#pragma once

#include <string>
#include <vector>

#include "wsym/rational.hpp"
#include "wsym/linalg.hpp"
#include "wsym/signature.hpp"

namespace wsym {

/// Complex matrix with exact rational real/imaginary parts.
struct CMat {
  MatrixXq re, im;

  CMat() = default;
  CMat(MatrixXq r, MatrixXq i) : re(std::move(r)), im(std::move(i)) {}
  static CMat real(MatrixXq r) {
    MatrixXq z = MatrixXq::Zero(r.rows(), r.cols());
    return CMat(std::move(r), std::move(z));
  }
  static CMat imag(MatrixXq i) {
    MatrixXq z = MatrixXq::Zero(i.rows(), i.cols());
    return CMat(std::move(z), std::move(i));
  }
  Index rows() const { return re.rows(); }
  Index cols() const { return re.cols(); }
  CMat operator*(const CMat& o) const {
    return CMat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  CMat operator-(const CMat& o) const { return CMat(re - o.re, im - o.im); }
  CMat operator+(const CMat& o) const { return CMat(re + o.re, im + o.im); }
  CMat times_i() const { return CMat(-im, re); }
};

/// Entrywise realification: a+bi becomes [[a,-b],[b,a]].
MatrixXq realified(const CMat& m);

using SparseVec = std::vector<std::pair<Index, Rational>>;  // sorted by index

enum class CentralKind { compact, split };

/// A real Lie algebra presented by a faithful rational matrix realization,
/// with exact structure constants and the Killing form computed from the
/// adjoint representation.
class LieAlgebra {
public:
  std::string name;
  std::vector<MatrixXq> basis;  // all ambient() x ambient()
  MatrixXq killing;             // dim x dim symmetric

  // compactness flags for central directions on which the Killing form
  // vanishes (abelian factors R^+, T, C^*); indices into basis
  std::vector<std::pair<Index, CentralKind>> central_flags;

  /// Compute structure constants by expressing commutators in the basis;
  /// verifies independence, closure, Jacobi and Killing ad-invariance.
  static LieAlgebra from_matrices(std::vector<MatrixXq> basis, std::string name);

  /// Trusted path: structure constants supplied by a construction that
  /// guarantees them (direct sums, realifications); checks optional.
  static LieAlgebra from_structure(std::vector<MatrixXq> basis,
                                   std::vector<SparseVec> table, std::string name,
                                   bool verify_axioms = false);

  /// Zero-dimensional algebra on a given ambient space (SL(1,R) and such).
  static LieAlgebra trivial(Index ambient, std::string name);

  Index dim() const { return static_cast<Index>(basis.size()); }
  Index ambient() const { return basis.empty() ? ambient_ : basis[0].rows(); }

  /// [x_i, x_j] in basis coordinates.
  const SparseVec& bracket_basis(Index i, Index j) const;
  VectorXq bracket(const VectorXq& u, const VectorXq& v) const;
  MatrixXq ad(const VectorXq& u) const;
  MatrixXq ad_basis(Index i) const;

  /// Matrix realization of a coordinate vector.
  MatrixXq realize(const VectorXq& u) const;

  /// Coordinates of ambient matrices in this basis; throws NotClosed when
  /// a matrix is outside the span.
  VectorXq coordinates(const MatrixXq& m) const;

  /// Trace form of the defining realization, tr(x_i x_j).  This is the
  /// documented extension form on central directions where kappa vanishes.
  MatrixXq trace_form() const;

  Signature killing_signature() const { return sig_diagonalize(killing); }
  bool is_abelian() const;

  /// Verify Jacobi, antisymmetry and Killing ad-invariance on all basis
  /// triples; throws on violation.
  void check_axioms() const;

private:
  // flattened (i * dim + j), both orders stored (antisymmetric)
  std::vector<SparseVec> table_;
  Index ambient_ = 0;

  // coordinate solver: entry positions and inverse of the square slice
  std::vector<Index> coord_positions_;
  MatrixXq coord_inverse_;

  void build_coordinate_solver();
  void compute_killing();
  friend LieAlgebra direct_sum(const LieAlgebra&, const LieAlgebra&);
};

/// Block-diagonal direct sum; structure constants are unions, no recheck.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

/// Realification of a complex matrix Lie algebra: real dimension doubles,
/// basis {realified(m), realified(i m)}.
LieAlgebra realify(const std::vector<CMat>& complex_basis, const std::string& name);

/// An involutive automorphism given by its matrix on basis coordinates.
struct Involution {
  MatrixXq matrix;

  static Involution from_conjugation(const LieAlgebra& l, const MatrixXq& s);
  static Involution identity(const LieAlgebra& l);
  void validate(const LieAlgebra& l) const;  // throws NotInvolutive / NotAutomorphism
};

/// Cartan dualization g_u = k + p  ->  g_0 = k + ip along the eigenspaces
/// of sigma.  Requires a compact (negative definite Killing form) input;
/// the result has Killing signature (dim p, dim k, 0).
LieAlgebra dualize(const LieAlgebra& lu, const Involution& sigma);

/// Inverse direction: compact dual of a real form along a Cartan involution
/// theta (fixed set maximally compact).  Same eigenspace construction
/// without the compactness precondition.
LieAlgebra dual_along(const LieAlgebra& l, const Involution& sigma);

/// Realified complexification of m1 via the factor swap on m1 + m1
/// (diagonal/antidiagonal eigenspaces); dim doubles.
LieAlgebra switch_realify(const LieAlgebra& m1);

/// Realified complexification with the inclusion of the real points: the
/// first dim columns of the result's coordinates are x (x) 1.
LieAlgebra complexify(const LieAlgebra& l);

/// Centralizer of a set of coordinate vectors, as coordinate columns.
MatrixXq centralizer(const LieAlgebra& l, const MatrixXq& span);

/// Span of all brackets of a coordinate subspace with itself (one step);
/// iterating to stability gives the derived subalgebra of a closed span.
MatrixXq bracket_span(const LieAlgebra& l, const MatrixXq& span);

/// Rank of a maximal abelian diagonalizable-ish subalgebra located by a
/// generic element centralizer (used for invariant comparisons only).
Index generic_centralizer_rank(const LieAlgebra& l);

} // namespace wsym
