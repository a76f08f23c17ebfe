#include "wsym/lie_algebra.hpp"
#include "wsym/errors.hpp"

#include <algorithm>
#include <map>

namespace wsym {

MatrixXq realified(const CMat& m) {
  const Index r = m.rows(), c = m.cols();
  MatrixXq out = MatrixXq::Zero(2 * r, 2 * c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) {
      out(2 * i, 2 * j) = m.re(i, j);
      out(2 * i + 1, 2 * j + 1) = m.re(i, j);
      out(2 * i, 2 * j + 1) = -m.im(i, j);
      out(2 * i + 1, 2 * j) = m.im(i, j);
    }
  return out;
}

namespace {

using Row = SparseVec;

struct Sp {
  Index n = 0;
  std::vector<Row> row;
};

Sp sparse_of(const MatrixXq& m) {
  Sp s;
  s.n = m.rows();
  s.row.resize(static_cast<size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.row[static_cast<size_t>(i)].push_back({j, m(i, j)});
  return s;
}

// scratch-based sparse accumulator over a flat index space
struct Accum {
  std::vector<Rational> val;
  std::vector<Index> touched;
  explicit Accum(Index size) : val(static_cast<size_t>(size), Rational(0)) {}
  void add(Index i, const Rational& v) {
    if (val[static_cast<size_t>(i)] == 0 && v != 0) touched.push_back(i);
    val[static_cast<size_t>(i)] += v;
  }
  SparseVec take() {
    std::sort(touched.begin(), touched.end());
    SparseVec out;
    for (Index i : touched) {
      if (val[static_cast<size_t>(i)] != 0) out.push_back({i, val[static_cast<size_t>(i)]});
      val[static_cast<size_t>(i)] = 0;
    }
    touched.clear();
    return out;
  }
};

// vectorized commutator [a, b] as sparse flat entries (row * n + col)
SparseVec sparse_commutator(const Sp& a, const Sp& b, Accum& scratch) {
  const Index n = a.n;
  for (Index r = 0; r < n; ++r)
    for (const auto& [k, v] : a.row[static_cast<size_t>(r)])
      for (const auto& [c, w] : b.row[static_cast<size_t>(k)])
        scratch.add(r * n + c, v * w);
  for (Index r = 0; r < n; ++r)
    for (const auto& [k, v] : b.row[static_cast<size_t>(r)])
      for (const auto& [c, w] : a.row[static_cast<size_t>(k)])
        scratch.add(r * n + c, -(v * w));
  return scratch.take();
}

SparseVec sparse_vec_of(const MatrixXq& m) {
  SparseVec out;
  const Index n = m.cols();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < n; ++j)
      if (m(i, j) != 0) out.push_back({i * n + j, m(i, j)});
  return out;
}

const Rational kZero(0);

const Rational& coeff_of(const SparseVec& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const auto& p, Index x) { return p.first < x; });
  if (it != v.end() && it->first == i) return it->second;
  return kZero;
}

}  // namespace

void LieAlgebra::build_coordinate_solver() {
  const Index d = dim();
  if (d == 0) return;
  const Index n = ambient();
  MatrixXq stacked(d, n * n);  // vectorized basis as rows
  for (Index k = 0; k < d; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) stacked(k, i * n + j) = basis[static_cast<size_t>(k)](i, j);
  MatrixXq reduced = stacked;
  coord_positions_ = rref_in_place(reduced);
  if (static_cast<Index>(coord_positions_.size()) != d)
    throw NotIndependent("basis matrices are linearly dependent");
  MatrixXq square(d, d);
  for (Index r = 0; r < d; ++r)
    for (Index k = 0; k < d; ++k) square(r, k) = stacked(k, coord_positions_[static_cast<size_t>(r)]);
  coord_inverse_ = inverse(square);
}

VectorXq LieAlgebra::coordinates(const MatrixXq& m) const {
  const Index d = dim(), n = ambient();
  if (m.rows() != n || m.cols() != n) throw NotClosed("ambient size mismatch");
  VectorXq coords = VectorXq::Zero(d);
  for (Index r = 0; r < d; ++r) {
    const Index pos = coord_positions_[static_cast<size_t>(r)];
    const Rational& v = m(pos / n, pos % n);
    if (v != 0) coords += v * coord_inverse_.col(r);
  }
  // exactness: the combination must reproduce m entirely
  MatrixXq recon = MatrixXq::Zero(n, n);
  for (Index k = 0; k < d; ++k)
    if (coords(k) != 0) recon += coords(k) * basis[static_cast<size_t>(k)];
  if (recon != m) throw NotClosed("matrix outside the span of the basis");
  return coords;
}

const SparseVec& LieAlgebra::bracket_basis(Index i, Index j) const {
  static const SparseVec empty;
  if (i == j) return empty;
  return table_[static_cast<size_t>(i * dim() + j)];
}

VectorXq LieAlgebra::bracket(const VectorXq& u, const VectorXq& v) const {
  const Index d = dim();
  VectorXq out = VectorXq::Zero(d);
  for (Index i = 0; i < d; ++i) {
    if (u(i) == 0) continue;
    for (Index j = 0; j < d; ++j) {
      if (v(j) == 0 || i == j) continue;
      const Rational uivj = u(i) * v(j);
      for (const auto& [k, c] : table_[static_cast<size_t>(i * d + j)]) out(k) += uivj * c;
    }
  }
  return out;
}

MatrixXq LieAlgebra::ad(const VectorXq& u) const {
  const Index d = dim();
  MatrixXq m = MatrixXq::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    if (u(i) == 0) continue;
    for (Index j = 0; j < d; ++j) {
      if (i == j) continue;
      for (const auto& [k, c] : table_[static_cast<size_t>(i * d + j)]) m(k, j) += u(i) * c;
    }
  }
  return m;
}

MatrixXq LieAlgebra::ad_basis(Index i) const {
  VectorXq e = VectorXq::Zero(dim());
  e(i) = 1;
  return ad(e);
}

MatrixXq LieAlgebra::realize(const VectorXq& u) const {
  const Index n = ambient();
  MatrixXq m = MatrixXq::Zero(n, n);
  for (Index k = 0; k < dim(); ++k)
    if (u(k) != 0) m += u(k) * basis[static_cast<size_t>(k)];
  return m;
}

MatrixXq LieAlgebra::trace_form() const {
  const Index d = dim();
  std::vector<Sp> sp;
  sp.reserve(static_cast<size_t>(d));
  for (const auto& b : basis) sp.push_back(sparse_of(b));
  MatrixXq t(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j) {
      Rational acc = 0;
      for (Index r = 0; r < ambient(); ++r)
        for (const auto& [k, v] : sp[static_cast<size_t>(i)].row[static_cast<size_t>(r)])
          acc += v * coeff_of(sp[static_cast<size_t>(j)].row[static_cast<size_t>(k)], r);
      t(i, j) = acc;
      t(j, i) = acc;
    }
  return t;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!v.empty()) return false;
  return true;
}

void LieAlgebra::compute_killing() {
  const Index d = dim();
  killing = MatrixXq::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j) {
      // tr(ad x_i ad x_j) = sum_k <[x_i, [x_j, x_k]], e_k*>
      Rational acc = 0;
      for (Index k = 0; k < d; ++k) {
        const SparseVec& jk = bracket_basis(j, k);
        for (const auto& [l, c] : jk) acc += c * coeff_of(bracket_basis(i, l), k);
      }
      killing(i, j) = acc;
      killing(j, i) = acc;
    }
}

void LieAlgebra::check_axioms() const {
  const Index d = dim();
  // Jacobi on all triples i < j < k
  Accum acc(d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      const SparseVec& ij = table_[static_cast<size_t>(i * d + j)];
      for (Index k = j + 1; k < d; ++k) {
        for (const auto& [l, c] : ij)
          for (const auto& [m, w] : bracket_basis(l, k)) acc.add(m, c * w);
        for (const auto& [l, c] : bracket_basis(j, k))
          for (const auto& [m, w] : bracket_basis(l, i)) acc.add(m, c * w);
        for (const auto& [l, c] : bracket_basis(k, i))
          for (const auto& [m, w] : bracket_basis(l, j)) acc.add(m, c * w);
        if (!acc.take().empty()) throw Error("Jacobi identity fails at triple");
      }
    }
  // kappa([x,y],z) + kappa(y,[x,z]) = 0
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = j; k < d; ++k) {
        Rational s = 0;
        for (const auto& [l, c] : bracket_basis(i, j)) s += c * killing(l, k);
        for (const auto& [l, c] : bracket_basis(i, k)) s += c * killing(j, l);
        if (s != 0) throw Error("Killing form is not ad-invariant");
      }
}

LieAlgebra LieAlgebra::from_matrices(std::vector<MatrixXq> basis_in, std::string name) {
  LieAlgebra l;
  l.name = std::move(name);
  l.basis = std::move(basis_in);
  if (!l.basis.empty()) l.ambient_ = l.basis[0].rows();
  const Index d = l.dim();
  for (const auto& b : l.basis)
    if (b.rows() != l.ambient() || b.cols() != l.ambient())
      throw Error("basis matrices must be square of equal size");
  l.build_coordinate_solver();

  const Index n = l.ambient();
  std::vector<Sp> sp;
  sp.reserve(static_cast<size_t>(d));
  std::vector<SparseVec> vecs(static_cast<size_t>(d));
  for (Index k = 0; k < d; ++k) {
    sp.push_back(sparse_of(l.basis[static_cast<size_t>(k)]));
    vecs[static_cast<size_t>(k)] = sparse_vec_of(l.basis[static_cast<size_t>(k)]);
  }

  l.table_.assign(static_cast<size_t>(d) * static_cast<size_t>(d), {});
  Accum mat_scratch(n * n), check_scratch(n * n), coord_scratch(d);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      SparseVec comm = sparse_commutator(sp[static_cast<size_t>(i)], sp[static_cast<size_t>(j)], mat_scratch);
      // coordinates via the precomputed pivot slice
      for (Index r = 0; r < d; ++r) {
        const Rational& v = coeff_of(comm, l.coord_positions_[static_cast<size_t>(r)]);
        if (v == 0) continue;
        for (Index k = 0; k < d; ++k)
          if (l.coord_inverse_(k, r) != 0) coord_scratch.add(k, v * l.coord_inverse_(k, r));
      }
      SparseVec coords = coord_scratch.take();
      // exact closure check
      for (const auto& [k, v] : coords)
        for (const auto& [pos, w] : vecs[static_cast<size_t>(k)]) check_scratch.add(pos, v * w);
      if (check_scratch.take() != comm)
        throw NotClosed("[" + l.name + "] commutator leaves the span at pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      SparseVec neg;
      for (const auto& [k, v] : coords) neg.push_back({k, -v});
      l.table_[static_cast<size_t>(j * d + i)] = std::move(neg);
      l.table_[static_cast<size_t>(i * d + j)] = std::move(coords);
    }

  l.compute_killing();
  l.check_axioms();
  return l;
}

LieAlgebra LieAlgebra::from_structure(std::vector<MatrixXq> basis_in,
                                      std::vector<SparseVec> table, std::string name,
                                      bool verify_axioms) {
  LieAlgebra l;
  l.name = std::move(name);
  l.basis = std::move(basis_in);
  l.table_ = std::move(table);
  if (!l.basis.empty()) l.ambient_ = l.basis[0].rows();
  l.build_coordinate_solver();
  l.compute_killing();
  if (verify_axioms) l.check_axioms();
  return l;
}

LieAlgebra LieAlgebra::trivial(Index ambient, std::string name) {
  LieAlgebra l;
  l.name = std::move(name);
  l.ambient_ = ambient;
  l.killing = MatrixXq(0, 0);
  return l;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const Index na = a.ambient(), nb = b.ambient(), n = na + nb;
  const Index da = a.dim(), db = b.dim(), d = da + db;
  std::vector<MatrixXq> basis;
  basis.reserve(static_cast<size_t>(d));
  for (const auto& m : a.basis) {
    MatrixXq e = MatrixXq::Zero(n, n);
    e.topLeftCorner(na, na) = m;
    basis.push_back(std::move(e));
  }
  for (const auto& m : b.basis) {
    MatrixXq e = MatrixXq::Zero(n, n);
    e.bottomRightCorner(nb, nb) = m;
    basis.push_back(std::move(e));
  }
  std::vector<SparseVec> table(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      if (i != j) table[static_cast<size_t>(i * d + j)] = a.bracket_basis(i, j);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j) {
      if (i == j) continue;
      SparseVec shifted;
      for (const auto& [k, v] : b.bracket_basis(i, j)) shifted.push_back({k + da, v});
      table[static_cast<size_t>((i + da) * d + (j + da))] = std::move(shifted);
    }
  LieAlgebra l = LieAlgebra::from_structure(std::move(basis), std::move(table),
                                            a.name + "+" + b.name);
  l.ambient_ = n;
  for (const auto& [idx, kind] : a.central_flags) l.central_flags.push_back({idx, kind});
  for (const auto& [idx, kind] : b.central_flags) l.central_flags.push_back({idx + da, kind});
  return l;
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
  if (parts.empty()) throw Error("empty direct sum");
  LieAlgebra acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

LieAlgebra realify(const std::vector<CMat>& complex_basis, const std::string& name) {
  std::vector<MatrixXq> basis;
  basis.reserve(complex_basis.size() * 2);
  for (const auto& m : complex_basis) basis.push_back(realified(m));
  for (const auto& m : complex_basis) basis.push_back(realified(m.times_i()));
  return LieAlgebra::from_matrices(std::move(basis), name);
}

Involution Involution::identity(const LieAlgebra& l) {
  return {MatrixXq::Identity(l.dim(), l.dim())};
}

Involution Involution::from_conjugation(const LieAlgebra& l, const MatrixXq& s) {
  const MatrixXq s_inv = inverse(s);
  MatrixXq m(l.dim(), l.dim());
  for (Index k = 0; k < l.dim(); ++k)
    m.col(k) = l.coordinates(s * l.basis[static_cast<size_t>(k)] * s_inv);
  Involution sigma{std::move(m)};
  sigma.validate(l);
  return sigma;
}

void Involution::validate(const LieAlgebra& l) const {
  const Index d = l.dim();
  if (matrix.rows() != d || matrix.cols() != d) throw NotInvolutive("size mismatch");
  if (matrix * matrix != MatrixXq::Identity(d, d)) throw NotInvolutive("square is not identity");
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      VectorXq lhs = l.bracket(matrix.col(i), matrix.col(j));
      VectorXq rhs = VectorXq::Zero(d);
      for (const auto& [k, c] : l.bracket_basis(i, j)) rhs += c * matrix.col(k);
      if (lhs != rhs) throw NotAutomorphism("involution does not respect the bracket");
    }
}

namespace {

// shared eigenspace construction for dualize / dual_along
LieAlgebra dual_construct(const LieAlgebra& l, const Involution& sigma, const char* tag) {
  const Index d = l.dim();
  const MatrixXq id = MatrixXq::Identity(d, d);
  MatrixXq k_part = kernel<Rational>(sigma.matrix - id);
  MatrixXq p_part = kernel<Rational>(sigma.matrix + id);
  if (k_part.cols() + p_part.cols() != d)
    throw NotInvolutive("eigenspaces do not fill the algebra");

  std::vector<MatrixXq> basis;
  basis.reserve(static_cast<size_t>(d));
  for (Index c = 0; c < k_part.cols(); ++c)
    basis.push_back(realified(CMat::real(l.realize(k_part.col(c)))));
  for (Index c = 0; c < p_part.cols(); ++c)
    basis.push_back(realified(CMat::imag(l.realize(p_part.col(c)))));
  LieAlgebra out = LieAlgebra::from_matrices(std::move(basis), l.name + tag);

  // carry central compactness flags through: a flagged direction u lands in
  // k (kind preserved) or in ip (kind toggles)
  MatrixXq all(d, k_part.cols() + p_part.cols());
  all << k_part, p_part;
  for (const auto& [idx, kind] : l.central_flags) {
    VectorXq e = VectorXq::Zero(d);
    e(idx) = 1;
    VectorXq coords = *solve<Rational>(all, e);
    for (Index c = 0; c < all.cols(); ++c) {
      if (coords(c) == 0) continue;
      const bool in_k = c < k_part.cols();
      CentralKind kk = kind;
      if (!in_k) kk = (kind == CentralKind::compact) ? CentralKind::split : CentralKind::compact;
      out.central_flags.push_back({c, kk});
    }
  }
  return out;
}

}  // namespace

LieAlgebra dualize(const LieAlgebra& lu, const Involution& sigma) {
  Signature s = lu.killing_signature();
  if (s.positive != 0 || s.null != 0)
    throw NotCompact("Killing form not negative definite");
  sigma.validate(lu);
  LieAlgebra out = dual_construct(lu, sigma, "*");
  return out;
}

LieAlgebra dual_along(const LieAlgebra& l, const Involution& sigma) {
  sigma.validate(l);
  return dual_construct(l, sigma, "~");
}

LieAlgebra switch_realify(const LieAlgebra& m1) {
  const LieAlgebra doubled = direct_sum(m1, m1);
  const Index d = m1.dim();
  MatrixXq swap = MatrixXq::Zero(2 * d, 2 * d);
  swap.topRightCorner(d, d) = MatrixXq::Identity(d, d);
  swap.bottomLeftCorner(d, d) = MatrixXq::Identity(d, d);
  LieAlgebra out = dual_along(doubled, Involution{std::move(swap)});
  out.name = m1.name + "_C";
  return out;
}

LieAlgebra complexify(const LieAlgebra& l) {
  std::vector<CMat> cb;
  cb.reserve(l.basis.size());
  for (const auto& m : l.basis) cb.push_back(CMat::real(m));
  LieAlgebra out = realify(cb, l.name + "_C");
  for (const auto& [idx, kind] : l.central_flags) {
    out.central_flags.push_back({idx, kind});
    out.central_flags.push_back(
        {idx + l.dim(), kind == CentralKind::compact ? CentralKind::split : CentralKind::compact});
  }
  return out;
}

MatrixXq centralizer(const LieAlgebra& l, const MatrixXq& span) {
  const Index d = l.dim();
  MatrixXq stacked(d * span.cols(), d);
  for (Index c = 0; c < span.cols(); ++c)
    stacked.middleRows(c * d, d) = l.ad(span.col(c));
  return kernel<Rational>(std::move(stacked));
}

MatrixXq bracket_span(const LieAlgebra& l, const MatrixXq& span) {
  const Index k = span.cols();
  MatrixXq all(l.dim(), k * (k - 1) / 2);
  Index col = 0;
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) all.col(col++) = l.bracket(span.col(i), span.col(j));
  MatrixXq copy = all;
  std::vector<Index> pivots = rref_in_place(copy);
  MatrixXq out(l.dim(), static_cast<Index>(pivots.size()));
  for (size_t i = 0; i < pivots.size(); ++i) out.col(static_cast<Index>(i)) = all.col(pivots[i]);
  return out;
}

Index generic_centralizer_rank(const LieAlgebra& l) {
  VectorXq u(l.dim());
  for (Index i = 0; i < l.dim(); ++i) u(i) = Rational(1, 1 + i);
  return l.dim() - rank_of<Rational>(l.ad(u));
}

} // namespace wsym
