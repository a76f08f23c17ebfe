#include "wsym/clifford.hpp"
#include "wsym/errors.hpp"
#include "wsym/octonion.hpp"
#include "wsym/poly.hpp"

#include <map>

namespace wsym {

namespace {

MatrixXq kron(const MatrixXq& a, const MatrixXq& b) {
  MatrixXq out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixXq sigma3() {
  MatrixXq m = MatrixXq::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  return m;
}
MatrixXq sigma1() {
  MatrixXq m = MatrixXq::Zero(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  return m;
}
MatrixXq rot2() {
  MatrixXq m = MatrixXq::Zero(2, 2);
  m(0, 1) = 1;
  m(1, 0) = -1;
  return m;
}

void check_relations(const CliffordData& c) {
  const Index n = c.rep_dim();
  for (size_t i = 0; i < c.gamma.size(); ++i)
    for (size_t j = i; j < c.gamma.size(); ++j) {
      MatrixXq anti = c.gamma[i] * c.gamma[j] + c.gamma[j] * c.gamma[i];
      MatrixXq expect = MatrixXq::Zero(n, n);
      if (i == j)
        expect = (static_cast<int>(i) < c.p ? Rational(2) : Rational(-2)) *
                 MatrixXq::Identity(n, n);
      if (anti != expect) throw Error("Clifford anticommutation fails");
    }
}

CliffordData octonion_gammas(bool split) {
  CompositionAlgebra o = octonions(split);
  CliffordData c;
  // imaginary units: squares -N(e_i); for split octonions order the
  // positive-square generators (e_4..e_7) first
  std::vector<Index> order;
  if (split) {
    for (Index i = 4; i < 8; ++i) order.push_back(i);
    for (Index i = 1; i < 4; ++i) order.push_back(i);
    c.p = 4;
    c.q = 3;
  } else {
    for (Index i = 1; i < 8; ++i) order.push_back(i);
    c.p = 0;
    c.q = 7;
  }
  for (Index i : order) c.gamma.push_back(o.left_mult_basis(i));
  return c;
}

// smallest-size construction found by shortest-path search over exact
// rules, seeded by the small base cases and the octonion models
struct Builder {
  std::map<std::pair<int, int>, CliffordData> memo;

  const CliffordData& get(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    CliffordData c = build(p, q);
    check_relations(c);
    return memo.emplace(key, std::move(c)).first->second;
  }

  static CliffordData subset(const CliffordData& big, int p, int q) {
    CliffordData c;
    c.p = p;
    c.q = q;
    for (int i = big.p - p; i < big.p; ++i) c.gamma.push_back(big.gamma[static_cast<size_t>(i)]);
    for (int i = big.p; i < big.p + q; ++i) c.gamma.push_back(big.gamma[static_cast<size_t>(i)]);
    return c;
  }

  CliffordData seed_case(int p, int q) {
    CliffordData c;
    c.p = p;
    c.q = q;
    if (p == 0 && q == 0) return c;
    if (p == 1 && q == 0) { c.gamma = {MatrixXq::Identity(1, 1)}; return c; }
    if (p == 0 && q == 1) { c.gamma = {rot2()}; return c; }
    if (p == 2 && q == 0) { c.gamma = {sigma3(), sigma1()}; return c; }
    if (p == 0 && q == 2) {
      CompositionAlgebra h = quaternions(false);
      c.gamma = {h.left_mult_basis(1), h.left_mult_basis(2)};
      return c;
    }
    if (p <= 0 && q <= 7) return subset(octonion_gammas(false), p, q);
    if (p <= 4 && q <= 3) return subset(octonion_gammas(true), p, q);
    throw Error("not a seed case");
  }

  // forward rules on (p, q) with the size factor
  struct Step { int p, q; long size; int rule; int sp, sq; };

  CliffordData build(int target_p, int target_q) {
    // Dijkstra over states, size as the cost
    std::map<std::pair<int, int>, std::pair<long, std::tuple<int, int, int>>> best;
    auto push_seed = [&](int p, int q, long size) {
      auto key = std::make_pair(p, q);
      auto it = best.find(key);
      if (it == best.end() || it->second.first > size)
        best[key] = {size, {-1, 0, 0}};
    };
    for (int q = 0; q <= 7; ++q) push_seed(0, q, q == 0 ? 1 : (q <= 2 ? (q == 1 ? 2 : 4) : 8));
    push_seed(1, 0, 1);
    push_seed(2, 0, 2);
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 3; ++q)
        if (p + q > 0) push_seed(p, q, p <= 2 && q == 0 ? (p == 1 ? 1 : 2) : 8);

    bool changed = true;
    auto relax = [&](int p, int q, long size, int rule, int sp, int sq) {
      if (p < 0 || q < 0 || p + q > 9) return;
      auto key = std::make_pair(p, q);
      auto it = best.find(key);
      if (it == best.end() || it->second.first > size) {
        best[key] = {size, {rule, sp, sq}};
        changed = true;
      }
    };
    while (changed) {
      changed = false;
      for (const auto& [state, info] : std::map(best)) {
        auto [p, q] = state;
        long size = info.first;
        relax(p + 1, q + 1, size * 2, 0, p, q);  // A
        relax(q + 2, p, size * 2, 1, p, q);      // B
        relax(q, p + 2, size * 4, 2, p, q);      // C
        if (p >= 1) relax(1 + q, p - 1, size, 3, p, q);   // D
      }
    }

    auto it = best.find({target_p, target_q});
    if (it == best.end()) throw Error("no clifford construction found");
    auto [rule, sp, sq] = it->second.second;
    if (rule == -1) return seed_case(target_p, target_q);

    const CliffordData& base = get(sp, sq);
    const Index m = base.rep_dim();
    MatrixXq id = MatrixXq::Identity(m, m);
    CliffordData c;
    c.p = target_p;
    c.q = target_q;
    switch (rule) {
      case 0:  // A: one +1, base, one -1
        c.gamma.push_back(kron(sigma1(), id));
        for (const auto& g : base.gamma) c.gamma.push_back(kron(sigma3(), g));
        c.gamma.push_back(kron(rot2(), id));
        break;
      case 1:  // B: two new +1 gens, base signs flipped
        c.gamma.push_back(kron(sigma3(), id));
        c.gamma.push_back(kron(sigma1(), id));
        for (int i = base.p + base.q - 1; i >= 0; --i)
          c.gamma.push_back(kron(rot2(), base.gamma[static_cast<size_t>(i)]));
        break;
      case 2: {  // C: two new -1 gens, base signs flipped
        CompositionAlgebra h = quaternions(false);
        MatrixXq li = h.left_mult_basis(1), lj = h.left_mult_basis(2), lk = h.left_mult_basis(3);
        for (int i = base.p + base.q - 1; i >= base.p; --i)
          c.gamma.push_back(kron(lk, base.gamma[static_cast<size_t>(i)]));
        // flipped base negatives become positives and go first; then the
        // two new negatives; then flipped positives
        std::vector<MatrixXq> negs = {kron(li, id), kron(lj, id)};
        for (int i = 0; i < base.p; ++i)
          negs.push_back(kron(lk, base.gamma[static_cast<size_t>(i)]));
        for (auto& g : negs) c.gamma.push_back(std::move(g));
        break;
      }
      case 3: {  // D: delta_1 = gamma_1 (+1), delta_i = gamma_1 gamma_i
        const MatrixXq& g1 = base.gamma[0];
        c.gamma.push_back(g1);
        for (int i = base.p; i < base.p + base.q; ++i)
          c.gamma.push_back(g1 * base.gamma[static_cast<size_t>(i)]);  // flips to +1
        for (int i = 1; i < base.p; ++i)
          c.gamma.push_back(g1 * base.gamma[static_cast<size_t>(i)]);  // flips to -1
        break;
      }
    }
    return c;
  }
};

}  // namespace

CliffordData clifford(int p, int q) {
  if (p < 0 || q < 0) throw BadParams("negative signature");
  if (p + q > 9) throw DimensionCap("p + q must be at most 9");
  static Builder builder;
  return builder.get(p, q);
}

SpinAlgebra spin_algebra(int p, int q) {
  SpinAlgebra out;
  out.cliff = clifford(p, q);
  const int n = p + q;
  const Index m = out.cliff.rep_dim();
  std::vector<MatrixXq> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      basis.push_back(out.cliff.gamma[static_cast<size_t>(i)] *
                      out.cliff.gamma[static_cast<size_t>(j)] * Rational(1, 2));
  if (basis.empty()) {
    out.algebra = LieAlgebra::trivial(m, "spin(" + std::to_string(p) + "," + std::to_string(q) + ")");
    return out;
  }
  out.algebra = LieAlgebra::from_matrices(
      std::move(basis), "spin(" + std::to_string(p) + "," + std::to_string(q) + ")");

  // vector action: [x, gamma(v)] = gamma(rho(x) v), solved exactly per
  // basis element; residual must vanish (double cover correspondence)
  MatrixXq gamma_span(m * m, n);
  for (int k = 0; k < n; ++k) {
    const MatrixXq& g = out.cliff.gamma[static_cast<size_t>(k)];
    for (Index r = 0; r < m; ++r)
      for (Index c = 0; c < m; ++c) gamma_span(r * m + c, k) = g(r, c);
  }
  for (Index b = 0; b < out.algebra.dim(); ++b) {
    const MatrixXq& x = out.algebra.basis[static_cast<size_t>(b)];
    MatrixXq rho(n, n);
    for (int k = 0; k < n; ++k) {
      MatrixXq comm = x * out.cliff.gamma[static_cast<size_t>(k)] -
                      out.cliff.gamma[static_cast<size_t>(k)] * x;
      VectorXq vec(m * m);
      for (Index r = 0; r < m; ++r)
        for (Index c = 0; c < m; ++c) vec(r * m + c) = comm(r, c);
      auto sol = solve(gamma_span, vec);
      if (!sol) throw Error("bivector commutator leaves the gamma span");
      rho.col(k) = *sol;
    }
    out.vector_action.push_back(std::move(rho));
  }
  return out;
}

MatrixXq submodule_span(const std::vector<MatrixXq>& action, const VectorXq& seed) {
  const Index n = seed.size();
  MatrixXq span(n, 1);
  span.col(0) = seed;
  MatrixXq reduced = span;
  std::vector<Index> pivots = rref_in_place(reduced);
  bool grew = true;
  while (grew) {
    grew = false;
    const Index cur = span.cols();
    for (const auto& a : action) {
      for (Index c = 0; c < cur; ++c) {
        VectorXq v = a * span.col(c);
        MatrixXq test(n, span.cols() + 1);
        test << span, v;
        MatrixXq copy = test;
        if (static_cast<Index>(rref_in_place(copy).size()) > span.cols()) {
          span = std::move(test);
          grew = true;
        }
      }
    }
  }
  return span;
}

std::vector<MatrixXq> commutant_basis(const std::vector<MatrixXq>& action) {
  if (action.empty()) throw Error("commutant of empty action");
  const Index n = action[0].rows();
  // incremental kernel: only the first generator sees the full unknown count
  MatrixXq basis = MatrixXq::Identity(n * n, n * n);
  for (const auto& a : action) {
    if (basis.cols() == 0) break;
    MatrixXq constraint(n * n, basis.cols());
    for (Index c = 0; c < basis.cols(); ++c) {
      MatrixXq x(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) x(i, j) = basis(i * n + j, c);
      MatrixXq v = a * x - x * a;
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) constraint(i * n + j, c) = v(i, j);
    }
    basis = basis * kernel<Rational>(std::move(constraint));
  }
  std::vector<MatrixXq> out;
  for (Index c = 0; c < basis.cols(); ++c) {
    MatrixXq x(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) x(i, j) = basis(i * n + j, c);
    out.push_back(std::move(x));
  }
  return out;
}

Index commutant_dimension(const std::vector<MatrixXq>& action) {
  return static_cast<Index>(commutant_basis(action).size());
}

MatrixXq minimal_invariant_subspace(const std::vector<MatrixXq>& action) {
  if (action.empty()) throw Error("empty action");
  const Index n = action[0].rows();
  MatrixXq space = MatrixXq::Identity(n, n);
  std::vector<MatrixXq> current = action;
  while (true) {
    const Index d = space.cols();
    std::vector<MatrixXq> comm = commutant_basis(current);
    if (comm.size() <= 1) return space;  // scalars only: absolutely irreducible

    // candidate commutant elements whose minimal polynomial may factor
    // rationally: basis, pairwise sums and products, then seeded combos
    std::vector<MatrixXq> candidates;
    for (const auto& c : comm) candidates.push_back(c);
    for (size_t i = 0; i < comm.size(); ++i)
      for (size_t j = i + 1; j < comm.size(); ++j) {
        candidates.push_back(comm[i] + comm[j]);
        candidates.push_back(comm[i] * comm[j]);
      }
    for (int seed = 0; seed < 8; ++seed) {
      MatrixXq generic = MatrixXq::Zero(d, d);
      for (size_t t = 0; t < comm.size(); ++t)
        generic += Rational(1, 1 + (seed + 1) * static_cast<long>(t)) * comm[t];
      candidates.push_back(std::move(generic));
    }

    MatrixXq found(d, 0);
    for (const MatrixXq& c : candidates) {
      Poly f = min_poly(c);
      Factorization fac;
      try {
        fac = factor_le2(f);
      } catch (const IrreducibleDegreeTooHigh&) {
        continue;
      }
      if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1) continue;
      // kernel of the first irreducible factor is a proper invariant subspace
      MatrixXq w = kernel<Rational>(eval_at(fac.factors[0].factor, c));
      if (w.cols() == 0 || w.cols() == d) continue;
      found = std::move(w);
      break;
    }
    if (found.cols() == 0) return space;  // commutant acts as a division algebra

    std::vector<MatrixXq> restricted;
    for (const auto& a : current)
      restricted.push_back(coordinates_in_span(found, a * found));
    space = space * found;
    current = std::move(restricted);
  }
}

} // namespace wsym
