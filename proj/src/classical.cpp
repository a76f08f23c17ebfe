#include "wsym/classical.hpp"
#include "wsym/errors.hpp"

namespace wsym {

namespace {

// quaternion units as complex 2x2: 1, i, j, k
CMat quat_unit_c2(int u) {
  MatrixXq re = MatrixXq::Zero(2, 2), im = MatrixXq::Zero(2, 2);
  switch (u) {
    case 0: re(0, 0) = 1; re(1, 1) = 1; break;
    case 1: im(0, 0) = 1; im(1, 1) = -1; break;
    case 2: re(0, 1) = 1; re(1, 0) = -1; break;
    case 3: im(0, 1) = 1; im(1, 0) = 1; break;
    default: throw BadParams("quaternion unit");
  }
  return CMat(std::move(re), std::move(im));
}

// q * e_ab over H as a realified 4n x 4n matrix
MatrixXq quat_entry(Index n, Index a, Index b, int unit) {
  CMat c(MatrixXq::Zero(2 * n, 2 * n), MatrixXq::Zero(2 * n, 2 * n));
  CMat q = quat_unit_c2(unit);
  c.re.block(2 * a, 2 * b, 2, 2) = q.re;
  c.im.block(2 * a, 2 * b, 2, 2) = q.im;
  return realified(c);
}

MatrixXq complex_entry(Index n, Index a, Index b, bool imaginary) {
  MatrixXq re = MatrixXq::Zero(n, n), im = MatrixXq::Zero(n, n);
  (imaginary ? im : re)(a, b) = 1;
  return realified(CMat(std::move(re), std::move(im)));
}

}  // namespace

Index realified_size(Index n, Field k) {
  switch (k) {
    case Field::R: return n;
    case Field::C: return 2 * n;
    case Field::H: return 4 * n;
  }
  return n;
}

std::vector<MatrixXq> matrix_units(Index n, Field k) {
  std::vector<MatrixXq> units;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      switch (k) {
        case Field::R: {
          MatrixXq e = MatrixXq::Zero(n, n);
          e(a, b) = 1;
          units.push_back(std::move(e));
          break;
        }
        case Field::C:
          units.push_back(complex_entry(n, a, b, false));
          units.push_back(complex_entry(n, a, b, true));
          break;
        case Field::H:
          for (int u = 0; u < 4; ++u) units.push_back(quat_entry(n, a, b, u));
          break;
      }
    }
  return units;
}

std::vector<MatrixXq> right_unit_operators(Index n, Field k) {
  // operators whose commutant inside real matrices is exactly the K-linear
  // ones; for H the right action is computed as the commutant of the
  // realified left unit action on a single coordinate block
  std::vector<MatrixXq> ops;
  if (k == Field::R) return ops;
  if (k == Field::C) {
    ops.push_back(complex_structure(n));
    return ops;
  }
  const MatrixXq li = quat_entry(1, 0, 0, 1);
  const MatrixXq lj = quat_entry(1, 0, 0, 2);
  MatrixXq constraints(32, 16);
  for (Index c = 0; c < 16; ++c) {
    MatrixXq x = MatrixXq::Zero(4, 4);
    x(c / 4, c % 4) = 1;
    MatrixXq ci = x * li - li * x, cj = x * lj - lj * x;
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) {
        constraints(i * 4 + j, c) = ci(i, j);
        constraints(16 + i * 4 + j, c) = cj(i, j);
      }
  }
  MatrixXq comm = kernel<Rational>(std::move(constraints));  // the right H-action
  for (Index v = 0; v < comm.cols(); ++v) {
    MatrixXq block = MatrixXq::Zero(4, 4);
    for (Index c = 0; c < 16; ++c) block(c / 4, c % 4) = comm(c, v);
    MatrixXq op = MatrixXq::Zero(4 * n, 4 * n);
    for (Index a = 0; a < n; ++a) op.block(4 * a, 4 * a, 4, 4) = block;
    ops.push_back(std::move(op));
  }
  return ops;
}

std::vector<MatrixXq> cut_span(const std::vector<MatrixXq>& span, const AlgebraCut& cut) {
  if (span.empty()) return {};
  const Index n = span[0].rows();
  const Index m = static_cast<Index>(span.size());
  std::vector<VectorXq> columns;
  columns.reserve(static_cast<size_t>(m));
  const Index form_rows = static_cast<Index>(cut.preserve_form.size()) * n * n;
  const Index comm_rows = static_cast<Index>(cut.commute_with.size()) * n * n;
  const Index tr_rows = static_cast<Index>(cut.trace_against.size());
  MatrixXq constraints(form_rows + comm_rows + tr_rows, m);
  for (Index c = 0; c < m; ++c) {
    const MatrixXq& x = span[static_cast<size_t>(c)];
    Index r = 0;
    for (const auto& f : cut.preserve_form) {
      MatrixXq v = x.transpose() * f + f * x;
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) constraints(r++, c) = v(i, j);
    }
    for (const auto& a : cut.commute_with) {
      MatrixXq v = x * a - a * x;
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) constraints(r++, c) = v(i, j);
    }
    for (const auto& t : cut.trace_against) constraints(r++, c) = (x * t).trace();
  }
  MatrixXq coeffs = kernel<Rational>(std::move(constraints));
  std::vector<MatrixXq> out;
  for (Index c = 0; c < coeffs.cols(); ++c) {
    MatrixXq acc = MatrixXq::Zero(n, n);
    for (Index k = 0; k < m; ++k)
      if (coeffs(k, c) != 0) acc += coeffs(k, c) * span[static_cast<size_t>(k)];
    out.push_back(std::move(acc));
  }
  return out;
}

MatrixXq hermitian_diag(const std::vector<int>& signs, Field k) {
  const Index n = static_cast<Index>(signs.size());
  const Index scale = realified_size(1, k);
  MatrixXq f = MatrixXq::Zero(n * scale, n * scale);
  for (Index a = 0; a < n; ++a)
    for (Index s = 0; s < scale; ++s)
      f(a * scale + s, a * scale + s) = signs[static_cast<size_t>(a)];
  return f;
}

MatrixXq so_star_form(Index n) {
  // blockdiag of realified left multiplication by j
  MatrixXq f = MatrixXq::Zero(4 * n, 4 * n);
  const MatrixXq j = quat_entry(1, 0, 0, 2);
  for (Index a = 0; a < n; ++a) f.block(4 * a, 4 * a, 4, 4) = j;
  return f;
}

MatrixXq complex_structure(Index n) {
  MatrixXq j = MatrixXq::Zero(2 * n, 2 * n);
  for (Index a = 0; a < n; ++a) {
    j(2 * a, 2 * a + 1) = -1;
    j(2 * a + 1, 2 * a) = 1;
  }
  return j;
}

MatrixXq sp_form(Index n) {
  MatrixXq j = MatrixXq::Zero(2 * n, 2 * n);
  for (Index a = 0; a < n; ++a) {
    j(a, n + a) = 1;
    j(n + a, a) = -1;
  }
  return j;
}

MatrixXq quaternion_unit_entry(Index n, Index a, Index b, int unit) {
  return quat_entry(n, a, b, unit);
}

MatrixXq embed_block(const MatrixXq& m, Index big, Index offset) {
  MatrixXq out = MatrixXq::Zero(big, big);
  out.block(offset, offset, m.rows(), m.cols()) = m;
  return out;
}

std::vector<int> signs_pq(int p, int q) {
  std::vector<int> s;
  for (int i = 0; i < p; ++i) s.push_back(1);
  for (int i = 0; i < q; ++i) s.push_back(-1);
  return s;
}

namespace {

std::string pq_name(const std::string& head, const std::vector<int>& params) {
  std::string s = head + "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

LieAlgebra algebra_or_trivial(std::vector<MatrixXq> span, Index ambient, std::string name) {
  if (span.empty()) return LieAlgebra::trivial(ambient, std::move(name));
  return LieAlgebra::from_matrices(std::move(span), std::move(name));
}

LieAlgebra build_su(const std::vector<int>& signs, bool with_center, const std::string& name) {
  const Index n = static_cast<Index>(signs.size());
  AlgebraCut cut;
  cut.preserve_form = {hermitian_diag(signs, Field::C)};
  if (!with_center) {
    // complex trace zero: both real and imaginary parts
    cut.trace_against = {MatrixXq::Identity(2 * n, 2 * n), complex_structure(n)};
  }
  return algebra_or_trivial(cut_span(matrix_units(n, Field::C), cut), 2 * n, name);
}

LieAlgebra build_sp_pq(const std::vector<int>& signs, const std::string& name) {
  const Index n = static_cast<Index>(signs.size());
  AlgebraCut cut;
  cut.preserve_form = {hermitian_diag(signs, Field::H)};
  return LieAlgebra::from_matrices(cut_span(matrix_units(n, Field::H), cut), name);
}

}  // namespace

LieAlgebra classical(Series s, std::vector<int> params) { return classical(FormSpec{s, std::move(params)}); }

LieAlgebra classical(const FormSpec& spec) {
  const auto& par = spec.params;
  auto need = [&](size_t count) {
    if (par.size() != count) throw BadParams("wrong parameter count");
    for (int v : par)
      if (v < 0) throw BadParams("negative parameter");
  };
  switch (spec.series) {
    case Series::sl_R: {
      need(1);
      const Index n = par[0];
      if (n < 1) throw BadParams("sl(n,R) needs n >= 1");
      AlgebraCut cut;
      cut.trace_against = {MatrixXq::Identity(n, n)};
      return algebra_or_trivial(cut_span(matrix_units(n, Field::R), cut), n,
                                pq_name("sl_R", par));
    }
    case Series::su: {
      need(2);
      if (par[0] + par[1] < 1) throw BadParams("su(p,q) needs p+q >= 1");
      return build_su(signs_pq(par[0], par[1]), false, pq_name("su", par));
    }
    case Series::u: {
      need(2);
      if (par[0] + par[1] < 1) throw BadParams("u(p,q) needs p+q >= 1");
      return build_su(signs_pq(par[0], par[1]), true, pq_name("u", par));
    }
    case Series::so: {
      need(2);
      if (par[0] + par[1] < 2) throw BadParams("so(p,q) needs p+q >= 2");
      AlgebraCut cut;
      cut.preserve_form = {hermitian_diag(signs_pq(par[0], par[1]), Field::R)};
      return LieAlgebra::from_matrices(
          cut_span(matrix_units(par[0] + par[1], Field::R), cut), pq_name("so", par));
    }
    case Series::sp_R: {
      need(1);
      const Index n = par[0];
      if (n < 1) throw BadParams("sp(n,R) needs n >= 1");
      AlgebraCut cut;
      cut.preserve_form = {sp_form(n)};
      return LieAlgebra::from_matrices(cut_span(matrix_units(2 * n, Field::R), cut),
                                       pq_name("sp_R", par));
    }
    case Series::sp_pq: {
      need(2);
      if (par[0] + par[1] < 1) throw BadParams("sp(p,q) needs p+q >= 1");
      return build_sp_pq(signs_pq(par[0], par[1]), pq_name("sp", par));
    }
    case Series::sl_H: {
      need(1);
      const Index n = par[0];
      if (n < 1) throw BadParams("sl(n,H) needs n >= 1");
      AlgebraCut cut;
      cut.trace_against = {MatrixXq::Identity(4 * n, 4 * n)};
      return LieAlgebra::from_matrices(cut_span(matrix_units(n, Field::H), cut),
                                       pq_name("sl_H", par));
    }
    case Series::so_star: {
      need(1);
      const Index n = par[0];
      if (n < 2) throw BadParams("so*(2n) needs n >= 2");
      AlgebraCut cut;
      cut.preserve_form = {so_star_form(n)};
      return LieAlgebra::from_matrices(cut_span(matrix_units(n, Field::H), cut),
                                       "so*(" + std::to_string(2 * n) + ")");
    }
    case Series::sl_C: {
      need(1);
      LieAlgebra l = complexify(classical(Series::su, {par[0], 0}));
      l.name = pq_name("sl_C", par);
      return l;
    }
    case Series::so_C: {
      need(1);
      LieAlgebra l = complexify(classical(Series::so, {par[0], 0}));
      l.name = pq_name("so_C", par);
      return l;
    }
    case Series::sp_C: {
      need(1);
      LieAlgebra l = complexify(classical(Series::sp_pq, {par[0], 0}));
      l.name = pq_name("sp_C", par);
      return l;
    }
    case Series::gl_prime_C: {
      need(1);
      const Index n = par[0];
      LieAlgebra sl = classical(Series::sl_C, {par[0]});
      std::vector<MatrixXq> basis = sl.basis;
      // |det| = 1 adds the rotation i I but not the dilation
      basis.push_back(realified(CMat::imag(MatrixXq::Identity(2 * n, 2 * n))));
      LieAlgebra l = LieAlgebra::from_matrices(std::move(basis), pq_name("gl'_C", par));
      l.central_flags.push_back({l.dim() - 1, CentralKind::compact});
      return l;
    }
    case Series::abelian_R: {
      need(0);
      MatrixXq m(1, 1);
      m(0, 0) = 1;
      LieAlgebra l = LieAlgebra::from_matrices({m}, "R+");
      l.central_flags.push_back({0, CentralKind::split});
      return l;
    }
    case Series::abelian_T: {
      need(0);
      MatrixXq m = MatrixXq::Zero(2, 2);
      m(0, 1) = -1;
      m(1, 0) = 1;
      LieAlgebra l = LieAlgebra::from_matrices({m}, "T");
      l.central_flags.push_back({0, CentralKind::compact});
      return l;
    }
    case Series::abelian_C: {
      need(0);
      MatrixXq rot = MatrixXq::Zero(2, 2), dil = MatrixXq::Identity(2, 2);
      rot(0, 1) = -1;
      rot(1, 0) = 1;
      LieAlgebra l = LieAlgebra::from_matrices({dil, rot}, "C*");
      l.central_flags.push_back({0, CentralKind::split});
      l.central_flags.push_back({1, CentralKind::compact});
      return l;
    }
  }
  throw BadParams("unknown series");
}

} // namespace wsym
