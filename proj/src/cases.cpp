#include "wsym/cases.hpp"
#include "wsym/classical.hpp"
#include "wsym/errors.hpp"
#include "wsym/octonion.hpp"
#include "wsym/spin_chain.hpp"

#include <functional>

namespace wsym {

namespace {

int get(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ParamsOutOfRange("missing parameter " + key);
  return it->second;
}

int get_or(const Params& p, const std::string& key, int fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void cap(int v, int lo, int hi, const std::string& what) {
  if (v < lo || v > hi) throw ParamsOutOfRange(what + "=" + std::to_string(v));
}

// --- generic building blocks ----------------------------------------------

LieAlgebra su_pattern(const std::vector<int>& signs, bool with_center, std::string name) {
  const Index n = static_cast<Index>(signs.size());
  AlgebraCut cut;
  cut.preserve_form = {hermitian_diag(signs, Field::C)};
  if (!with_center)
    cut.trace_against = {MatrixXq::Identity(2 * n, 2 * n), complex_structure(n)};
  std::vector<MatrixXq> basis = cut_span(matrix_units(n, Field::C), cut);
  if (basis.empty()) return LieAlgebra::trivial(2 * n, std::move(name));
  return LieAlgebra::from_matrices(std::move(basis), std::move(name));
}

std::vector<MatrixXq> su_pattern_mats(const std::vector<int>& signs) {
  const Index n = static_cast<Index>(signs.size());
  AlgebraCut cut;
  cut.preserve_form = {hermitian_diag(signs, Field::C)};
  cut.trace_against = {MatrixXq::Identity(2 * n, 2 * n), complex_structure(n)};
  return cut_span(matrix_units(n, Field::C), cut);
}

LieAlgebra so_of_form(const MatrixXq& f, std::string name) {
  AlgebraCut cut;
  cut.preserve_form = {f};
  return LieAlgebra::from_matrices(cut_span(matrix_units(f.rows(), Field::R), cut),
                                   std::move(name));
}

std::vector<MatrixXq> so_pattern_mats(const std::vector<int>& signs) {
  AlgebraCut cut;
  cut.preserve_form = {hermitian_diag(signs, Field::R)};
  return cut_span(matrix_units(static_cast<Index>(signs.size()), Field::R), cut);
}

LieAlgebra sp_pattern(const std::vector<int>& signs, std::string name) {
  AlgebraCut cut;
  cut.preserve_form = {hermitian_diag(signs, Field::H)};
  std::vector<MatrixXq> basis =
      cut_span(matrix_units(static_cast<Index>(signs.size()), Field::H), cut);
  if (basis.empty())
    return LieAlgebra::trivial(4 * static_cast<Index>(signs.size()), std::move(name));
  return LieAlgebra::from_matrices(std::move(basis), std::move(name));
}

std::vector<MatrixXq> sp_pattern_mats(const std::vector<int>& signs) {
  AlgebraCut cut;
  cut.preserve_form = {hermitian_diag(signs, Field::H)};
  return cut_span(matrix_units(static_cast<Index>(signs.size()), Field::H), cut);
}

std::vector<MatrixXq> sp_real_mats(Index n) {
  AlgebraCut cut;
  cut.preserve_form = {sp_form(n)};
  return cut_span(matrix_units(2 * n, Field::R), cut);
}

MatrixXq embed_coords(const MatrixXq& m, Index big, const std::vector<Index>& coords) {
  MatrixXq out = MatrixXq::Zero(big, big);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out(coords[static_cast<size_t>(i)], coords[static_cast<size_t>(j)]) = m(i, j);
  return out;
}

// product of factor algebras with placement helpers
struct Product {
  std::vector<LieAlgebra> factors;
  std::vector<Index> offsets;
  Index total = 0;

  explicit Product(std::vector<LieAlgebra> fs) : factors(std::move(fs)) {
    for (const auto& f : factors) {
      offsets.push_back(total);
      total += f.ambient();
    }
  }
  LieAlgebra g() const { return direct_sum(factors); }
  MatrixXq place(size_t f, const MatrixXq& m) const {
    return embed_block(m, total, offsets[f]);
  }
};

// realified complexification of g0 plus h-matrix lifting helpers
struct ComplexLift {
  LieAlgebra gc;
  MatrixXq one(const MatrixXq& m) const { return realified(CMat::real(m)); }
  MatrixXq i(const MatrixXq& m) const { return realified(CMat::imag(m)); }
  std::vector<MatrixXq> both(const std::vector<MatrixXq>& ms) const {
    std::vector<MatrixXq> out;
    for (const auto& m : ms) out.push_back(one(m));
    for (const auto& m : ms) out.push_back(i(m));
    return out;
  }
};

ComplexLift complex_lift(const LieAlgebra& g0) {
  ComplexLift lift;
  lift.gc = complexify(g0);
  return lift;
}

EmbeddedPair finish(LieAlgebra g, std::vector<MatrixXq> h_mats, std::string h_name,
                    std::string display) {
  EmbeddedPair pair = make_pair(std::move(g), h_mats, std::move(h_name));
  pair.display_name = std::move(display);
  return pair;
}

// central directions of the requested kinds from the centralizer of h in g:
// kappa-positive generators are split, kappa-negative compact
std::vector<MatrixXq> central_generators(const LieAlgebra& g,
                                         const std::vector<MatrixXq>& h_mats,
                                         int want_split, int want_compact) {
  MatrixXq h_coords(g.dim(), static_cast<Index>(h_mats.size()));
  for (size_t c = 0; c < h_mats.size(); ++c)
    h_coords.col(static_cast<Index>(c)) = g.coordinates(h_mats[c]);
  MatrixXq cen = centralizer(g, h_coords);
  MatrixXq kc = cen.transpose() * g.killing * cen;
  const Index n = cen.cols();
  MatrixXq basis = MatrixXq::Identity(n, n);
  MatrixXq s = kc;
  std::vector<Index> active;
  for (Index i = 0; i < n; ++i) active.push_back(i);
  std::vector<std::pair<VectorXq, int>> lines;
  while (!active.empty()) {
    Index piv = -1;
    for (Index i : active)
      if (s(i, i) != 0) { piv = i; break; }
    if (piv < 0) break;
    lines.push_back({basis.col(piv), s(piv, piv) > 0 ? 1 : -1});
    for (Index j : active) {
      if (j == piv || s(piv, j) == 0) continue;
      Rational f = s(piv, j) / s(piv, piv);
      basis.col(j) -= f * basis.col(piv);
      for (Index k : active) s(j, k) -= f * s(piv, k);
      for (Index k : active) s(k, j) -= f * s(k, piv);
    }
    active.erase(std::find(active.begin(), active.end(), piv));
  }
  std::vector<MatrixXq> out;
  for (const auto& [coords, sign] : lines) {
    if (sign > 0 && want_split > 0) {
      --want_split;
      out.push_back(g.realize(cen * coords));
    } else if (sign < 0 && want_compact > 0) {
      --want_compact;
      out.push_back(g.realize(cen * coords));
    }
  }
  if (want_split > 0 || want_compact > 0)
    throw NotConstructible("requested central directions not found in the centralizer");
  return out;
}

// su(2) basis as the quaternion units i, j, k in the 2x2 complex model
std::vector<MatrixXq> su2_unit_mats() {
  std::vector<MatrixXq> out;
  for (int u = 1; u <= 3; ++u) out.push_back(quaternion_unit_entry(1, 0, 0, u));
  return out;
}

// sl(2,R) images matching the bracket relations of the unit triple
// (u1, u2, u3) -> (E - F, H, -(E + F))
std::vector<MatrixXq> sl2_real_unit_images() {
  MatrixXq h(2, 2), e(2, 2), f(2, 2);
  h << 1, 0, 0, -1;
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  return {e - f, h, -(e + f)};
}

// complex 2x2 matrices as quaternionic entries (units 1 and i only)
MatrixXq complex_to_quat(const CMat& m, Index n) {
  MatrixXq out = MatrixXq::Zero(4 * n, 4 * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (m.re(a, b) != 0) out += m.re(a, b) * quaternion_unit_entry(n, a, b, 0);
      if (m.im(a, b) != 0) out += m.im(a, b) * quaternion_unit_entry(n, a, b, 1);
    }
  return out;
}

// sp(n,R)-type subalgebra of su(n,n): cut by a complex bilinear form, the
// right sign variant identified by the dimension count
std::vector<MatrixXq> sp_real_in_su_nn(Index n, const std::vector<MatrixXq>& su_span) {
  const Index big = su_span[0].rows() / 2;  // complex size
  for (int variant = 0; variant < 2; ++variant) {
    MatrixXq omega = MatrixXq::Zero(big, big);
    for (Index a = 0; a < n; ++a) {
      omega(a, n + a) = 1;
      omega(n + a, a) = variant == 0 ? -1 : 1;
    }
    AlgebraCut cut;
    cut.preserve_form = {realified(CMat::real(omega))};
    std::vector<MatrixXq> sub = cut_span(su_span, cut);
    if (static_cast<Index>(sub.size()) == 2 * n * n + n) return sub;
  }
  throw NotConstructible("sp(n,R) inside su(n,n) not located");
}

// Minkowski realization of realified sl(2,C) matrices: x . h = x h + h x^T
// on the realified hermitian 2x2 basis {I, s1, s2, s3}
std::vector<MatrixXq> minkowski_sl2c(const std::vector<MatrixXq>& realified_sl2c) {
  std::vector<CMat> herm;
  {
    MatrixXq z = MatrixXq::Zero(2, 2);
    MatrixXq re = MatrixXq::Identity(2, 2);
    herm.push_back(CMat(re, z));
    re = z; re(0, 1) = 1; re(1, 0) = 1;
    herm.push_back(CMat(re, z));
    MatrixXq im = z; im(0, 1) = -1; im(1, 0) = 1;
    herm.push_back(CMat(z, im));
    re = z; re(0, 0) = 1; re(1, 1) = -1;
    herm.push_back(CMat(re, z));
  }
  std::vector<MatrixXq> herm_real;
  for (const auto& h : herm) herm_real.push_back(realified(h));
  MatrixXq span(16, 4);
  for (int k = 0; k < 4; ++k)
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) span(i * 4 + j, k) = herm_real[static_cast<size_t>(k)](i, j);
  std::vector<MatrixXq> out;
  for (const MatrixXq& x : realified_sl2c) {
    MatrixXq rho(4, 4);
    for (int k = 0; k < 4; ++k) {
      MatrixXq moved = x * herm_real[static_cast<size_t>(k)] +
                       herm_real[static_cast<size_t>(k)] * x.transpose();
      VectorXq v(16);
      for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j) v(i * 4 + j) = moved(i, j);
      auto sol = solve(span, v);
      if (!sol) throw NotConstructible("hermitian action left the span");
      rho.col(k) = *sol;
    }
    out.push_back(std::move(rho));
  }
  return out;
}

std::vector<int> pat(int plus, int minus) { return signs_pq(plus, minus); }

}  // namespace

// ---------------------------------------------------------------------------
// cases 1..12 (G simple)

namespace {

EmbeddedPair case1(const std::string& member, const Params& par) {
  const int m = get(par, "m"), n = get(par, "n");
  cap(m, 1, 4, "m");
  cap(n, 1, 4, "n");
  if (m <= n) throw ParamsOutOfRange("case 1 needs m > n >= 1");
  if (member == "i") {
    LieAlgebra g0 = classical(Series::su, {m + n, 0});
    std::vector<MatrixXq> h0;
    for (const auto& x : su_pattern_mats(pat(m, 0))) h0.push_back(embed_block(x, 2 * (m + n), 0));
    for (const auto& x : su_pattern_mats(pat(n, 0))) h0.push_back(embed_block(x, 2 * (m + n), 2 * m));
    ComplexLift lift = complex_lift(g0);
    return finish(lift.gc, lift.both(h0), "sl+sl",
                  "SL(" + std::to_string(m + n) + ";C)/[SL(" + std::to_string(m) +
                      ";C) x SL(" + std::to_string(n) + ";C)]");
  }
  if (member == "ii") {
    LieAlgebra g = classical(Series::sl_R, {m + n});
    std::vector<MatrixXq> h;
    for (const auto& x : classical(Series::sl_R, {m}).basis) h.push_back(embed_block(x, m + n, 0));
    if (n >= 2)
      for (const auto& x : classical(Series::sl_R, {n}).basis)
        h.push_back(embed_block(x, m + n, m));
    return finish(std::move(g), std::move(h), "sl+sl",
                  "SL(" + std::to_string(m + n) + ";R)/[SL(" + std::to_string(m) +
                      ";R) x SL(" + std::to_string(n) + ";R)]");
  }
  if (member == "iii") {
    if (m % 2 || n % 2) throw ParamsOutOfRange("case 1 (iii) needs even m, n");
    const int mp = m / 2, np = n / 2;
    LieAlgebra g = classical(Series::sl_H, {mp + np});
    std::vector<MatrixXq> h;
    for (const auto& x : classical(Series::sl_H, {mp}).basis)
      h.push_back(embed_block(x, 4 * (mp + np), 0));
    for (const auto& x : classical(Series::sl_H, {np}).basis)
      h.push_back(embed_block(x, 4 * (mp + np), 4 * mp));
    return finish(std::move(g), std::move(h), "sl+sl",
                  "SL(" + std::to_string(mp + np) + ";H)/[SL(" + std::to_string(mp) +
                      ";H) x SL(" + std::to_string(np) + ";H)]");
  }
  if (member == "iv") {
    const int k = get_or(par, "k", 0), l = get_or(par, "l", 0);
    cap(k, 0, m, "k");
    cap(l, 0, n, "l");
    std::vector<int> signs = pat(m - k, k);
    for (int s : pat(l, n - l)) signs.push_back(s);
    LieAlgebra g = su_pattern(signs, false, "su-ambient");
    std::vector<MatrixXq> h;
    const Index big = 2 * (m + n);
    for (const auto& x : su_pattern_mats(pat(m - k, k))) h.push_back(embed_block(x, big, 0));
    for (const auto& x : su_pattern_mats(pat(l, n - l))) h.push_back(embed_block(x, big, 2 * m));
    return finish(std::move(g), std::move(h), "su+su",
                  "SU(" + std::to_string(m - k + l) + "," + std::to_string(n - l + k) +
                      ")/[SU(" + std::to_string(m - k) + "," + std::to_string(k) + ") x SU(" +
                      std::to_string(l) + "," + std::to_string(n - l) + ")]");
  }
  throw UnknownMember("case 1 member " + member);
}

EmbeddedPair case2(const std::string& member, const Params& par) {
  const int n = get(par, "n");
  cap(n, 2, 5, "n");
  if (member == "i") {
    LieAlgebra g0 = classical(Series::so, {2 * n, 0});
    std::vector<MatrixXq> h0 = su_pattern_mats(pat(n, 0));
    ComplexLift lift = complex_lift(g0);
    return finish(lift.gc, lift.both(h0), "sl(n;C)",
                  "SO(" + std::to_string(2 * n) + ";C)/SL(" + std::to_string(n) + ";C)");
  }
  if (member == "ii") {
    const int k = get_or(par, "k", n), l = get_or(par, "l", 0);
    if (k + l != n) throw ParamsOutOfRange("case 2 (ii) needs k + l = n");
    LieAlgebra g = classical(Series::so_star, {n});
    MatrixXq z = MatrixXq::Zero(4 * n, 4 * n);
    for (int a = 0; a < n; ++a)
      z += Rational(a < k ? 1 : -1) * quaternion_unit_entry(n, a, a, 2);
    MatrixXq cen = centralizer(g, g.coordinates(z));
    MatrixXq der = bracket_span(g, cen);
    std::vector<MatrixXq> h;
    for (Index c = 0; c < der.cols(); ++c) h.push_back(g.realize(der.col(c)));
    return finish(std::move(g), std::move(h), "su(k,l)",
                  "SO*(" + std::to_string(2 * n) + ")/SU(" + std::to_string(k) + "," +
                      std::to_string(l) + ")");
  }
  if (member == "iii") {
    const int k = get_or(par, "k", n), l = get_or(par, "l", 0);
    if (k + l != n) throw ParamsOutOfRange("case 2 (iii) needs k + l = n");
    std::vector<int> doubled;
    for (int s : pat(k, l)) {
      doubled.push_back(s);
      doubled.push_back(s);
    }
    LieAlgebra g = so_of_form(hermitian_diag(doubled, Field::R), "so-ambient");
    std::vector<MatrixXq> h = su_pattern_mats(pat(k, l));
    return finish(std::move(g), std::move(h), "su(k,l)",
                  "SO(" + std::to_string(2 * k) + "," + std::to_string(2 * l) + ")/SU(" +
                      std::to_string(k) + "," + std::to_string(l) + ")");
  }
  if (member == "iv") {
    MatrixXq f = MatrixXq::Zero(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
      f(a, n + a) = 1;
      f(n + a, a) = 1;
    }
    LieAlgebra g = so_of_form(f, "so(n,n)");
    std::vector<MatrixXq> h;
    for (const auto& x : classical(Series::sl_R, {n}).basis) {
      MatrixXq e = MatrixXq::Zero(2 * n, 2 * n);
      e.topLeftCorner(n, n) = x;
      e.bottomRightCorner(n, n) = -x.transpose();
      h.push_back(std::move(e));
    }
    return finish(std::move(g), std::move(h), "sl(n;R)",
                  "SO(" + std::to_string(n) + "," + std::to_string(n) + ")/SL(" +
                      std::to_string(n) + ";R)");
  }
  throw UnknownMember("case 2 member " + member);
}

EmbeddedPair case45(const std::string& member, const Params& par, bool with_center) {
  const int n = get(par, "n");
  cap(n, 1, 3, "n");
  const Index N = 2 * n + 1;
  if (member == "i") {
    LieAlgebra g0 = classical(Series::su, {static_cast<int>(N), 0});
    std::vector<MatrixXq> h0;
    for (const auto& x : sp_pattern_mats(pat(n, 0))) h0.push_back(embed_block(x, 2 * N, 0));
    ComplexLift lift = complex_lift(g0);
    std::vector<MatrixXq> h = lift.both(h0);
    if (with_center) {
      MatrixXq z = MatrixXq::Identity(N, N);
      z(N - 1, N - 1) = -2 * n;
      MatrixXq z0 = realified(CMat::imag(z));
      h.push_back(lift.one(z0));
      h.push_back(lift.i(z0));
    }
    return finish(lift.gc, std::move(h), "sp(n;C)",
                  "SL(" + std::to_string(N) + ";C)/[Sp(" + std::to_string(n) + ";C)" +
                      (with_center ? " x C*]" : ")"));
  }
  if (member == "ii") {
    LieAlgebra g = classical(Series::sl_R, {static_cast<int>(N)});
    std::vector<MatrixXq> h;
    for (const auto& x : sp_real_mats(n)) h.push_back(embed_block(x, N, 0));
    if (with_center) {
      MatrixXq z = MatrixXq::Identity(N, N);
      z(N - 1, N - 1) = -2 * n;
      h.push_back(std::move(z));
    }
    return finish(std::move(g), std::move(h), "sp(n;R)",
                  "SL(" + std::to_string(N) + ";R)/[Sp(" + std::to_string(n) + ";R)" +
                      (with_center ? " x R+]" : ")"));
  }
  if (member == "iii") {
    std::vector<int> signs = pat(n, n);
    signs.push_back(1);
    LieAlgebra g = su_pattern(signs, false, "su(n+1,n)");
    std::vector<MatrixXq> block;
    for (const auto& x : su_pattern_mats(pat(n, n)))
      block.push_back(embed_block(x, 2 * (2 * n + 1), 0));
    std::vector<MatrixXq> h = sp_real_in_su_nn(n, block);
    if (with_center) {
      auto z = central_generators(g, h, 1, 0);
      h.insert(h.end(), z.begin(), z.end());
    }
    return finish(std::move(g), std::move(h), "sp(n;R)",
                  "SU(" + std::to_string(n + 1) + "," + std::to_string(n) + ")/[Sp(" +
                      std::to_string(n) + ";R)" + (with_center ? " x R+]" : ")"));
  }
  if (member == "iv") {
    const int l = get_or(par, "l", 0);
    cap(l, 0, n, "l");
    std::vector<int> signs;
    for (int s : pat(n - l, l)) {
      signs.push_back(s);
      signs.push_back(s);
    }
    signs.push_back(1);
    LieAlgebra g = su_pattern(signs, false, "su-ambient");
    std::vector<MatrixXq> h;
    for (const auto& x : sp_pattern_mats(pat(n - l, l)))
      h.push_back(embed_block(x, 2 * (2 * n + 1), 0));
    if (with_center) {
      auto z = central_generators(g, h, 0, 1);
      h.insert(h.end(), z.begin(), z.end());
    }
    return finish(std::move(g), std::move(h), "sp(n-l,l)",
                  "SU(" + std::to_string(2 * n + 1 - 2 * l) + "," + std::to_string(2 * l) +
                      ")/[Sp(" + std::to_string(n - l) + "," + std::to_string(l) + ")" +
                      (with_center ? " x U(1)]" : ")"));
  }
  throw UnknownMember("case 4/5 member " + member);
}

EmbeddedPair case6(const std::string& member, const Params&) {
  if (member == "ii" || member == "iii") {
    SpinEmbedding e = g2_in_spin7(member == "iii");
    EmbeddedPair pair;
    pair.g = e.ambient;
    pair.h = e.sub;
    pair.inclusion = e.inclusion;
    pair.display_name = member == "iii" ? "Spin(3,4)/G2*" : "Spin(7)/G2";
    return pair;
  }
  if (member == "i") {
    SpinEmbedding e = g2_in_spin7(false);
    ComplexLift lift = complex_lift(e.ambient);
    return finish(lift.gc, lift.both(e.sub.basis), "g2(C)", "Spin(7;C)/G2(C)");
  }
  throw UnknownMember("case 6 member " + member);
}

EmbeddedPair case7(const std::string& member, const Params&) {
  if (member == "ii") {
    CompositionAlgebra o = octonions(false);
    LieAlgebra g = derivations(o);
    VectorXq e1 = VectorXq::Zero(8);
    e1(1) = 1;
    LieAlgebra h = derivations_annihilating(o, e1);
    return finish(std::move(g), h.basis, "su(3)", "G2/SU(3)");
  }
  if (member == "iii" || member == "iv") {
    CompositionAlgebra o = octonions(true);
    LieAlgebra g = derivations(o);
    VectorXq v = VectorXq::Zero(8);
    v(member == "iii" ? 1 : 4) = 1;  // norm +1 unit vs norm -1 unit
    LieAlgebra h = derivations_annihilating(o, v);
    return finish(std::move(g), h.basis, member == "iii" ? "su(1,2)" : "sl(3;R)",
                  member == "iii" ? "G2*/SU(1,2)" : "G2*/SL(3;R)");
  }
  if (member == "i") {
    CompositionAlgebra o = octonions(false);
    LieAlgebra g0 = derivations(o);
    VectorXq e1 = VectorXq::Zero(8);
    e1(1) = 1;
    LieAlgebra h0 = derivations_annihilating(o, e1);
    ComplexLift lift = complex_lift(g0);
    return finish(lift.gc, lift.both(h0.basis), "sl(3;C)", "G2(C)/SL(3;C)");
  }
  throw UnknownMember("case 7 member " + member);
}

EmbeddedPair case89(int case_no, const std::string& member, const Params&) {
  const bool with_so2 = (case_no == 8);
  struct Spec {
    bool split;
    std::vector<int> extra;
    std::string display;
  };
  std::map<std::string, Spec> specs;
  if (case_no == 8) {
    specs["ii"] = {false, {1, 1}, "SO(10)/[Spin(7) x SO(2)]"};
    specs["iii"] = {false, {1, -1}, "SO(9,1)/[Spin(7) x SO(1,1)]"};
    specs["iv"] = {false, {-1, -1}, "SO(8,2)/[Spin(7) x SO(2)]"};
    specs["v"] = {true, {1, 1}, "SO(6,4)/[Spin(4,3) x SO(2)]"};
    specs["vi"] = {true, {1, -1}, "SO(5,5)/[Spin(3,4) x SO(1,1)]"};
  } else {
    specs["ii"] = {false, {1}, "SO(9)/Spin(7)"};
    specs["iii"] = {false, {-1}, "SO(8,1)/Spin(7)"};
    specs["iv"] = {true, {1}, "SO(5,4)/Spin(3,4)"};
  }
  if (member == "i") {
    Spec spec = specs["ii"];
    std::vector<int> signs(8, 1);
    for (int s : spec.extra) signs.push_back(std::abs(s));
    LieAlgebra g0 = so_of_form(hermitian_diag(signs, Field::R), "so-ambient");
    const Index big = static_cast<Index>(signs.size());
    std::vector<MatrixXq> h0;
    for (const auto& x : spin7_spinor_rep(false).basis) h0.push_back(embed_block(x, big, 0));
    if (with_so2) {
      MatrixXq r = MatrixXq::Zero(big, big);
      r(8, 9) = -1;
      r(9, 8) = 1;
      h0.push_back(std::move(r));
    }
    ComplexLift lift = complex_lift(g0);
    return finish(lift.gc, lift.both(h0), "spin(7;C)",
                  case_no == 8 ? "SO(10;C)/[Spin(7;C) x SO(2;C)]" : "SO(9;C)/Spin(7;C)");
  }
  auto it = specs.find(member);
  if (it == specs.end())
    throw UnknownMember("case " + std::to_string(case_no) + " member " + member);
  const Spec& spec = it->second;
  LieAlgebra biv = spin7_spinor_rep(spec.split);
  std::vector<int> signs;
  if (!spec.split)
    signs.assign(8, 1);
  else
    signs = {1, 1, 1, 1, -1, -1, -1, -1};  // split octonion norm in the CD basis
  for (int s : spec.extra) signs.push_back(s);
  const Index big = static_cast<Index>(signs.size());
  LieAlgebra g = so_of_form(hermitian_diag(signs, Field::R), "so-ambient");
  std::vector<MatrixXq> h;
  for (const auto& x : biv.basis) h.push_back(embed_block(x, big, 0));
  if (with_so2) {
    MatrixXq r = MatrixXq::Zero(big, big);
    if (spec.extra[0] == spec.extra[1]) {
      r(8, 9) = -1;
      r(9, 8) = 1;
    } else {
      r(8, 9) = 1;
      r(9, 8) = 1;
    }
    h.push_back(std::move(r));
  }
  return finish(std::move(g), std::move(h), "spin-block", spec.display);
}

EmbeddedPair case10(const std::string& member, const Params&) {
  struct Spec {
    bool split;
    int extra;
    std::string display;
  };
  std::map<std::string, Spec> specs = {
      {"ii", {false, 1, "Spin(8)/G2"}},
      {"iii", {false, -1, "Spin(7,1)/G2"}},
      {"iv", {true, 1, "Spin(4,4)/G2*"}},
      {"v", {true, -1, "Spin(3,5)/G2*"}},
  };
  if (member == "i") {
    LieAlgebra g0 = classical(Series::so, {8, 0});
    LieAlgebra h0 = derivations(octonions(false));
    ComplexLift lift = complex_lift(g0);
    return finish(lift.gc, lift.both(h0.basis), "g2(C)", "Spin(8;C)/G2(C)");
  }
  auto it = specs.find(member);
  if (it == specs.end()) throw UnknownMember("case 10 member " + member);
  const Spec& spec = it->second;
  // derivations kill the unit octonion coordinate, so the sign of the form
  // there is free; the imaginary part carries the norm signature
  std::vector<int> signs;
  signs.push_back(spec.extra);
  if (!spec.split)
    signs.insert(signs.end(), 7, 1);
  else {
    signs.insert(signs.end(), 3, 1);
    signs.insert(signs.end(), 4, -1);
  }
  LieAlgebra h0 = derivations(octonions(spec.split));
  LieAlgebra g = so_of_form(hermitian_diag(signs, Field::R), "so-ambient");
  return finish(std::move(g), h0.basis, spec.split ? "g2*" : "g2", spec.display);
}

EmbeddedPair case11(const std::string& member, const Params& par) {
  const int n = get(par, "n");
  cap(n, 2, 4, "n");
  if (member == "i") {
    LieAlgebra g0 = so_of_form(MatrixXq::Identity(2 * n + 1, 2 * n + 1), "so-ambient");
    std::vector<MatrixXq> h0;
    for (const auto& x : su_pattern_mats(pat(n, 0))) h0.push_back(embed_block(x, 2 * n + 1, 0));
    h0.push_back(embed_block(realified(CMat::imag(MatrixXq::Identity(n, n))), 2 * n + 1, 0));
    ComplexLift lift = complex_lift(g0);
    return finish(lift.gc, lift.both(h0), "gl(n;C)",
                  "SO(" + std::to_string(2 * n + 1) + ";C)/GL(" + std::to_string(n) + ";C)");
  }
  if (member == "ii" || member == "iii") {
    const int k = get_or(par, "k", 0);
    cap(k, 0, n, "k");
    std::vector<int> signs;
    for (int s : pat(n - k, k)) {
      signs.push_back(s);
      signs.push_back(s);
    }
    signs.push_back(member == "ii" ? 1 : -1);
    LieAlgebra g = so_of_form(hermitian_diag(signs, Field::R), "so-ambient");
    const Index big = 2 * n + 1;
    std::vector<MatrixXq> h;
    for (const auto& x : su_pattern_mats(pat(n - k, k))) h.push_back(embed_block(x, big, 0));
    h.push_back(embed_block(realified(CMat::imag(MatrixXq::Identity(n, n))), big, 0));
    const int p = member == "ii" ? 2 * (n - k) + 1 : 2 * (n - k);
    const int q = member == "ii" ? 2 * k : 2 * k + 1;
    return finish(std::move(g), std::move(h), "u(n-k,k)",
                  "SO(" + std::to_string(p) + "," + std::to_string(q) + ")/U(" +
                      std::to_string(n - k) + "," + std::to_string(k) + ")");
  }
  if (member == "iv") {
    MatrixXq f = MatrixXq::Zero(2 * n + 1, 2 * n + 1);
    for (int a = 0; a < n; ++a) {
      f(a, n + a) = 1;
      f(n + a, a) = 1;
    }
    f(2 * n, 2 * n) = -1;
    LieAlgebra g = so_of_form(f, "so(n,n+1)");
    std::vector<MatrixXq> h;
    for (const auto& x : matrix_units(n, Field::R)) {
      MatrixXq e = MatrixXq::Zero(2 * n + 1, 2 * n + 1);
      e.topLeftCorner(n, n) = x;
      e.block(n, n, n, n) = -x.transpose();
      h.push_back(std::move(e));
    }
    return finish(std::move(g), std::move(h), "gl(n;R)",
                  "SO(" + std::to_string(n) + "," + std::to_string(n + 1) + ")/GL(" +
                      std::to_string(n) + ";R)");
  }
  throw UnknownMember("case 11 member " + member);
}

EmbeddedPair case12(const std::string& member, const Params& par) {
  const int n = get(par, "n");
  cap(n, 2, 4, "n");
  if (member == "i") {
    LieAlgebra g0 = classical(Series::sp_pq, {n, 0});
    std::vector<MatrixXq> h0;
    for (const auto& x : sp_pattern_mats(pat(n - 1, 0))) h0.push_back(embed_block(x, 4 * n, 0));
    ComplexLift lift = complex_lift(g0);
    std::vector<MatrixXq> h = lift.both(h0);
    MatrixXq z = quaternion_unit_entry(n, n - 1, n - 1, 1);
    h.push_back(lift.one(z));
    h.push_back(lift.i(z));
    return finish(lift.gc, std::move(h), "sp(n-1;C)+gl(1;C)",
                  "Sp(" + std::to_string(n) + ";C)/[Sp(" + std::to_string(n - 1) +
                      ";C) x GL(1;C)]");
  }
  if (member == "ii" || member == "iii") {
    const int k = get_or(par, "k", 0);
    std::vector<int> blockpat;
    std::string disp;
    if (member == "ii") {
      cap(k, 0, n - 1, "k");
      blockpat = pat(n - 1 - k, k);
      disp = "Sp(" + std::to_string(n - k) + "," + std::to_string(k) + ")/[Sp(" +
             std::to_string(n - 1 - k) + "," + std::to_string(k) + ") x U(1)]";
    } else {
      cap(k, 1, n, "k");
      blockpat = pat(n - k, k - 1);
      disp = "Sp(" + std::to_string(n - k) + "," + std::to_string(k) + ")/[Sp(" +
             std::to_string(n - k) + "," + std::to_string(k - 1) + ") x U(1)]";
    }
    std::vector<int> signs = blockpat;
    signs.push_back(member == "ii" ? 1 : -1);
    LieAlgebra g = sp_pattern(signs, "sp-ambient");
    std::vector<MatrixXq> h;
    for (const auto& x : sp_pattern_mats(blockpat)) h.push_back(embed_block(x, 4 * n, 0));
    h.push_back(quaternion_unit_entry(n, n - 1, n - 1, 1));
    return finish(std::move(g), std::move(h), "sp+u(1)", disp);
  }
  if (member == "iv" || member == "v") {
    LieAlgebra g = LieAlgebra::from_matrices(sp_real_mats(n), "sp(n;R)");
    std::vector<Index> coords;
    for (int a = 0; a < n - 1; ++a) coords.push_back(a);
    for (int a = 0; a < n - 1; ++a) coords.push_back(n + a);
    std::vector<MatrixXq> h;
    for (const auto& x : sp_real_mats(n - 1)) h.push_back(embed_coords(x, 2 * n, coords));
    MatrixXq z = MatrixXq::Zero(2 * n, 2 * n);
    if (member == "iv") {
      z(n - 1, n - 1) = 1;
      z(2 * n - 1, 2 * n - 1) = -1;
    } else {
      z(n - 1, 2 * n - 1) = 1;
      z(2 * n - 1, n - 1) = -1;
    }
    h.push_back(std::move(z));
    return finish(std::move(g), std::move(h), member == "iv" ? "sp+gl(1;R)" : "sp+u(1)",
                  "Sp(" + std::to_string(n) + ";R)/[Sp(" + std::to_string(n - 1) +
                      ";R) x " + (member == "iv" ? "GL(1;R)]" : "U(1)]"));
  }
  throw UnknownMember("case 12 member " + member);
}

}  // namespace
}  // namespace wsym

#include "cases_products.inc"
