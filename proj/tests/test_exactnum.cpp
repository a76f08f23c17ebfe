#include <doctest.h>

#include <random>

#include "wsym/linalg.hpp"
#include "wsym/poly.hpp"

using namespace wsym;

namespace {

MatrixXq from_longs(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  MatrixXq m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// random unimodular integer matrix: product of elementary shears
MatrixXq random_unimodular(Index n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  MatrixXq p = MatrixXq::Identity(n, n);
  for (int step = 0; step < 6; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    MatrixXq e = MatrixXq::Identity(n, n);
    e(i, j) = coef(rng);
    p = p * e;
  }
  return p;
}

}  // namespace

TEST_CASE("sig_diagonalize on stated forms") {
  CHECK(sig_diagonalize<Rational>(MatrixXq::Identity(3, 3)) == Signature{3, 0, 0});

  MatrixXq d = MatrixXq::Zero(3, 3);
  d(0, 0) = 2; d(1, 1) = -5; d(2, 2) = 0;
  CHECK(sig_diagonalize(d) == Signature{1, 1, 1});

  // Killing Gram of sl(2,R) in basis {H,E,F}; frozen from the float
  // eigenvalue sign-count oracle in test_properties
  MatrixXq killing = from_longs({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
  CHECK(sig_diagonalize(killing) == Signature{2, 1, 0});

  MatrixXq ns = from_longs({{0, 1}, {0, 0}});
  CHECK_THROWS_AS(sig_diagonalize(ns), NonSymmetric);
}

TEST_CASE("sig_diagonalize is congruence invariant (Sylvester)") {
  std::mt19937 rng(20240811);
  std::vector<MatrixXq> forms = {
      MatrixXq::Identity(4, 4),
      from_longs({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}),
      from_longs({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}),
      from_longs({{2, 1, 0, 0}, {1, -3, 1, 0}, {0, 1, 0, 2}, {0, 0, 2, 0}}),
  };
  for (const MatrixXq& s : forms) {
    const Signature expected = sig_diagonalize(s);
    for (int trial = 0; trial < 100; ++trial) {
      MatrixXq p = random_unimodular(s.rows(), rng);
      CHECK(sig_diagonalize<Rational>(p.transpose() * s * p) == expected);
    }
  }
}

TEST_CASE("null count equals corank") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    MatrixXq a(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) a(i, j) = entry(rng);
    MatrixXq s = a + a.transpose();
    CHECK(sig_diagonalize(s).null == 4 - rank_of(s));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel<Rational>(MatrixXq::Zero(2, 2)).cols() == 2);
  CHECK(kernel<Rational>(MatrixXq::Identity(3, 3)).cols() == 0);

  MatrixXq a = from_longs({{1, 2}, {2, 4}});
  MatrixXq k = kernel(a);
  REQUIRE(k.cols() == 1);
  CHECK(a * k == MatrixXq::Zero(2, 1));
  // proportional to (2, -1)
  CHECK(k(0, 0) * Rational(-1) == k(1, 0) * Rational(2));
}

TEST_CASE("solve and inverse") {
  MatrixXq a = from_longs({{2, 1}, {1, 1}});
  VectorXq b(2);
  b << 3, 2;
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  CHECK(a * inverse(a) == MatrixXq::Identity(2, 2));

  MatrixXq sing = from_longs({{1, 1}, {1, 1}});
  VectorXq c(2);
  c << 1, 0;
  CHECK_FALSE(solve(sing, c).has_value());
  CHECK_THROWS_AS(inverse(sing), Singular);
}

TEST_CASE("min_poly") {
  CHECK(min_poly(MatrixXq::Identity(3, 3)) == Poly{-1, 1});

  MatrixXq rot = from_longs({{0, -1}, {1, 0}});
  CHECK(min_poly(rot) == Poly{1, 0, 1});

  MatrixXq nil = from_longs({{0, 1}, {0, 0}});
  CHECK(min_poly(nil) == Poly{0, 0, 1});
}

TEST_CASE("factor_le2 on stated examples") {
  // x^2 - 1
  auto f = factor_le2(Poly{-1, 0, 1});
  CHECK(f.factors.size() == 2);
  // x^2 + 1 irreducible
  auto g = factor_le2(Poly{1, 0, 1});
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].factor == Poly{1, 0, 1});
  // x^3 - x
  auto h = factor_le2(Poly{0, -1, 0, 1});
  CHECK(h.factors.size() == 3);
}

TEST_CASE("factor_le2 products reproduce the input exactly") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    // random product of linear and irreducible quadratic factors
    Poly f{Rational(1 + (trial % 3))};
    std::uniform_int_distribution<int> count(1, 4);
    int parts = count(rng);
    for (int i = 0; i < parts; ++i) {
      if (rng() % 2) {
        f = f * Poly{Rational(entry(rng)), Rational(1)};
      } else {
        int b = entry(rng);
        // x^2 + bx + c with discriminant < 0 is irreducible
        int c = (b * b) / 4 + 1 + (entry(rng) > 0 ? 1 : 0);
        f = f * Poly{Rational(c), Rational(b), Rational(1)};
      }
    }
    auto fac = factor_le2(f);
    Poly prod = Poly::constant(fac.unit);
    for (const auto& [p, m] : fac.factors)
      for (int i = 0; i < m; ++i) prod = prod * p;
    CHECK(prod == f);
    for (const auto& [p, m] : fac.factors) {
      CHECK(p.degree() <= 2);
      CHECK(p.degree() >= 1);
      if (p.degree() == 2) {
        // irreducible: negative discriminant or no rational root
        Rational disc = p.c[1] * p.c[1] - 4 * p.c[0];
        bool has_root = false;
        for (const auto& [q, mm] : factor_le2(p).factors) has_root |= (q.degree() == 1);
        CHECK(!has_root);
        (void)disc;
      }
    }
  }
}

TEST_CASE("factor_le2 splits products of distinct irreducible quadratics") {
  Poly f = Poly{1, 0, 1} * Poly{2, 0, 1};  // (x^2+1)(x^2+2)
  auto fac = factor_le2(f);
  CHECK(fac.factors.size() == 2);

  Poly g = Poly{1, 1, 1} * Poly{3, -2, 1} * Poly{5, 0, 1};
  auto gac = factor_le2(g);
  CHECK(gac.factors.size() == 3);
}

TEST_CASE("factor_le2 throws on irreducible cubic") {
  // x^3 - 2 has no rational root and no quadratic factor over Q
  CHECK_THROWS_AS(factor_le2(Poly{-2, 0, 0, 1}), IrreducibleDegreeTooHigh);
  // x^3 + x + 1 likewise
  CHECK_THROWS_AS(factor_le2(Poly{1, 1, 0, 1}), IrreducibleDegreeTooHigh);
}

TEST_CASE("primary_decomposition") {
  auto spaces = primary_decomposition(MatrixXq::Identity(3, 3));
  REQUIRE(spaces.size() == 1);
  CHECK(spaces[0].cols() == 3);

  MatrixXq d = MatrixXq::Zero(2, 2);
  d(0, 0) = 1; d(1, 1) = 2;
  auto two = primary_decomposition(d);
  REQUIRE(two.size() == 2);
  CHECK(two[0].cols() == 1);
  CHECK(two[1].cols() == 1);

  MatrixXq rot = from_longs({{0, -1}, {1, 0}});
  auto one = primary_decomposition(rot);
  REQUIRE(one.size() == 1);
  CHECK(one[0].cols() == 2);
}

TEST_CASE("primary subspaces are invariant and fill the space") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 15; ++trial) {
    MatrixXq a(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) a(i, j) = entry(rng);
    std::vector<MatrixXq> spaces;
    try {
      spaces = primary_decomposition(a);
    } catch (const IrreducibleDegreeTooHigh&) {
      continue;  // legitimately outside the supported factor degrees
    }
    Index total = 0;
    for (const auto& w : spaces) {
      total += w.cols();
      // invariance: columns of a*w stay inside span(w)
      MatrixXq aug(4, w.cols() + w.cols());
      CHECK_NOTHROW(coordinates_in_span(w, a * w));
    }
    CHECK(total == 4);
  }
}
