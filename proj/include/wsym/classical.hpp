#pragma once

#include <vector>

#include "wsym/lie_algebra.hpp"

namespace wsym {

enum class Series {
  sl_R, sl_C, sl_H, su, so, so_C, so_star, sp_R, sp_C, sp_pq, u,
  gl_prime_C, abelian_R, abelian_T, abelian_C
};

struct FormSpec {
  Series series;
  std::vector<int> params;  // (n) or (p,q)
};

/// The named real form as a rational matrix algebra.  Complex and
/// quaternionic entries are realified through the fixed conventions
/// i -> [[0,-1],[1,0]] per entry and H -> M_2(C) -> M_4(R); indefinite
/// unitary forms are diag(I_p, -I_q).
LieAlgebra classical(const FormSpec& spec);
LieAlgebra classical(Series s, std::vector<int> params);

// --- building blocks shared with the case constructors ---------------------

enum class Field { R, C, H };

/// Ambient real size of an n x n matrix over the field.
Index realified_size(Index n, Field k);

/// Real basis of M_n(K) realified (matrix units times the field units).
std::vector<MatrixXq> matrix_units(Index n, Field k);

/// Realified right-multiplication operators by the field units i (and j for
/// H) on K^n; commuting with them characterizes K-linearity.
std::vector<MatrixXq> right_unit_operators(Index n, Field k);

struct AlgebraCut {
  std::vector<MatrixXq> preserve_form;   // X^T F + F X = 0
  std::vector<MatrixXq> commute_with;    // [X, A] = 0
  std::vector<MatrixXq> trace_against;   // tr(X T) = 0
};

/// Exact solution of the cut constraints inside the span; deterministic
/// basis order (kernel of the stacked constraint system).
std::vector<MatrixXq> cut_span(const std::vector<MatrixXq>& span, const AlgebraCut& cut);

/// Hermitian diag(signs) realified over the field (the standard form the
/// indefinite series preserve).
MatrixXq hermitian_diag(const std::vector<int>& signs, Field k);

/// The skew form of so*(2n): blockdiag of left-multiplication by j.
MatrixXq so_star_form(Index n);

/// Realified complex structure (left mult by i) on C^n; also the symplectic
/// J of sp(n,R) is sp_form(n).
MatrixXq complex_structure(Index n);
MatrixXq sp_form(Index n);  // [[0, I], [-I, 0]]

/// Place an ambient block at a diagonal offset inside a larger ambient.
MatrixXq embed_block(const MatrixXq& m, Index big, Index offset);

/// Realified q e_ab for a quaternion unit q in {1, i, j, k} (unit 0..3),
/// inside n x n quaternionic matrices (real size 4n).
MatrixXq quaternion_unit_entry(Index n, Index a, Index b, int unit);

/// sign helper: (+1)^p (-1)^q
std::vector<int> signs_pq(int p, int q);

} // namespace wsym
