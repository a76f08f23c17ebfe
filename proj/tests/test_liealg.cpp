#include <doctest.h>

#include "wsym/classical.hpp"
#include "wsym/lie_algebra.hpp"

using namespace wsym;

namespace {

MatrixXq mat2(long a, long b, long c, long d) {
  MatrixXq m(2, 2);
  m << a, b, c, d;
  return m;
}

// {H, E, F} of trace-zero 2x2 real matrices
std::vector<MatrixXq> sl2_basis() {
  return {mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)};
}

Signature killing_sig(const LieAlgebra& l) { return l.killing_signature(); }

}  // namespace

TEST_CASE("from_matrices on sl(2,R)") {
  LieAlgebra sl2 = LieAlgebra::from_matrices(sl2_basis(), "sl2");
  CHECK(sl2.dim() == 3);
  // kappa in {H,E,F} order: diag-ish [[8,0,0],[0,0,4],[0,4,0]]
  MatrixXq expected(3, 3);
  expected << 8, 0, 0, 0, 0, 4, 0, 4, 0;
  CHECK(sl2.killing == expected);
  CHECK(killing_sig(sl2) == Signature{2, 1, 0});
}

TEST_CASE("from_matrices abelian and solvable examples") {
  MatrixXq d(1, 1);
  d(0, 0) = 3;
  LieAlgebra ab = LieAlgebra::from_matrices({d}, "ab");
  CHECK(ab.dim() == 1);
  CHECK(ab.killing == MatrixXq::Zero(1, 1));
  CHECK(ab.is_abelian());

  // {E, H}: [H, E] = 2E, solvable; kappa has signature (1,0,1)
  LieAlgebra solv = LieAlgebra::from_matrices({mat2(0, 1, 0, 0), mat2(1, 0, 0, -1)}, "solv");
  CHECK(solv.dim() == 2);
  CHECK(killing_sig(solv) == Signature{1, 0, 1});
}

TEST_CASE("from_matrices rejects bad bases") {
  // not closed: {E, F} alone ([E,F] = H outside)
  CHECK_THROWS_AS(LieAlgebra::from_matrices({mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)}, "open"),
                  NotClosed);
  // dependent
  CHECK_THROWS_AS(LieAlgebra::from_matrices({mat2(0, 1, 0, 0), mat2(0, 2, 0, 0)}, "dep"),
                  NotIndependent);
}

TEST_CASE("classical dimensions and Killing signatures") {
  struct Row {
    Series s;
    std::vector<int> par;
    Index dim;
    Signature sig;
  };
  // dim and signature laws of the series: noncompact count minus the
  // maximal compact subalgebra
  std::vector<Row> rows = {
      {Series::sl_R, {2}, 3, {2, 1, 0}},
      {Series::sl_R, {3}, 8, {5, 3, 0}},
      {Series::su, {2, 0}, 3, {0, 3, 0}},
      {Series::su, {3, 0}, 8, {0, 8, 0}},
      {Series::su, {2, 1}, 8, {4, 4, 0}},
      {Series::so, {3, 0}, 3, {0, 3, 0}},
      {Series::so, {2, 1}, 3, {2, 1, 0}},
      {Series::so, {4, 0}, 6, {0, 6, 0}},
      {Series::so, {2, 2}, 6, {4, 2, 0}},
      {Series::so, {5, 0}, 10, {0, 10, 0}},
      {Series::sp_R, {2}, 10, {6, 4, 0}},
      {Series::sp_pq, {1, 0}, 3, {0, 3, 0}},
      {Series::sp_pq, {1, 1}, 10, {4, 6, 0}},
      {Series::sp_pq, {2, 0}, 10, {0, 10, 0}},
      {Series::sl_H, {1}, 3, {0, 3, 0}},
      {Series::sl_H, {2}, 15, {5, 10, 0}},
      {Series::so_star, {3}, 15, {6, 9, 0}},
      {Series::u, {2, 0}, 4, {0, 3, 1}},
  };
  for (const auto& row : rows) {
    LieAlgebra l = classical(row.s, row.par);
    INFO(l.name);
    CHECK(l.dim() == row.dim);
    CHECK(killing_sig(l) == row.sig);
  }
}

TEST_CASE("classical(sl_R,2) matches the paper's group manifold signature") {
  CHECK(killing_sig(classical(Series::sl_R, {2})) == Signature{2, 1, 0});
}

TEST_CASE("complex series realify with p = q") {
  LieAlgebra slc = classical(Series::sl_C, {2});
  CHECK(slc.dim() == 6);
  CHECK(killing_sig(slc) == Signature{3, 3, 0});

  LieAlgebra soc = classical(Series::so_C, {2});
  CHECK(soc.dim() == 2);
  CHECK(soc.is_abelian());
  CHECK(killing_sig(soc) == Signature{0, 0, 2});

  LieAlgebra spc = classical(Series::sp_C, {1});
  CHECK(spc.dim() == 6);
  CHECK(killing_sig(spc) == Signature{3, 3, 0});
}

TEST_CASE("realify of an explicit complex basis") {
  // sl(2,C) from complex matrices
  std::vector<CMat> cb;
  for (const auto& m : {mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)})
    cb.push_back(CMat::real(m));
  LieAlgebra l = realify(cb, "sl2C");
  CHECK(l.dim() == 6);
  CHECK(killing_sig(l) == Signature{3, 3, 0});
}

TEST_CASE("abelian series carry compactness flags") {
  LieAlgebra r = classical(Series::abelian_R, {});
  CHECK(r.dim() == 1);
  CHECK(r.central_flags.size() == 1);
  CHECK(r.central_flags[0].second == CentralKind::split);
  CHECK(r.trace_form()(0, 0) > 0);

  LieAlgebra t = classical(Series::abelian_T, {});
  CHECK(t.central_flags[0].second == CentralKind::compact);
  CHECK(t.trace_form()(0, 0) < 0);

  LieAlgebra c = classical(Series::abelian_C, {});
  CHECK(c.dim() == 2);
  CHECK(c.killing == MatrixXq::Zero(2, 2));
}

TEST_CASE("dualize su(2)") {
  LieAlgebra su2 = classical(Series::su, {2, 0});

  // identity involution returns a compact algebra again
  LieAlgebra same = dualize(su2, Involution::identity(su2));
  CHECK(same.dim() == 3);
  CHECK(killing_sig(same) == Signature{0, 3, 0});

  // Ad diag(1,-1) (realified) gives sl(2,R) type
  MatrixXq s = MatrixXq::Zero(4, 4);
  s(0, 0) = 1; s(1, 1) = 1; s(2, 2) = -1; s(3, 3) = -1;
  LieAlgebra dual = dualize(su2, Involution::from_conjugation(su2, s));
  CHECK(dual.dim() == 3);
  CHECK(killing_sig(dual) == Signature{2, 1, 0});
}

TEST_CASE("dualize su(3) by complex conjugation gives sl(3,R) type") {
  LieAlgebra su3 = classical(Series::su, {3, 0});
  // complex conjugation on realified matrices: conjugation by diag(1,-1,...)
  // acts entrywise as a+bi -> a-bi
  MatrixXq c = MatrixXq::Zero(6, 6);
  for (Index i = 0; i < 3; ++i) {
    c(2 * i, 2 * i) = 1;
    c(2 * i + 1, 2 * i + 1) = -1;
  }
  Involution sigma = Involution::from_conjugation(su3, c);
  LieAlgebra dual = dualize(su3, sigma);
  CHECK(dual.dim() == 8);
  CHECK(killing_sig(dual) == Signature{5, 3, 0});
}

TEST_CASE("dualize requires a compact form") {
  LieAlgebra sl2 = LieAlgebra::from_matrices(sl2_basis(), "sl2");
  CHECK_THROWS_AS(dualize(sl2, Involution::identity(sl2)), NotCompact);
}

TEST_CASE("switch_realify") {
  LieAlgebra su2 = classical(Series::su, {2, 0});
  LieAlgebra sw = switch_realify(su2);
  CHECK(sw.dim() == 6);
  CHECK(killing_sig(sw) == Signature{3, 3, 0});

  LieAlgebra ab = classical(Series::abelian_R, {});
  LieAlgebra sab = switch_realify(ab);
  CHECK(sab.dim() == 2);
  CHECK(sab.killing == MatrixXq::Zero(2, 2));
}

TEST_CASE("switch_realify agrees with the realified complexification") {
  for (auto spec : {FormSpec{Series::su, {2, 0}}, FormSpec{Series::so, {3, 0}},
                    FormSpec{Series::sp_pq, {1, 0}}}) {
    LieAlgebra l = classical(spec);
    LieAlgebra a = switch_realify(l);
    LieAlgebra b = complexify(l);
    CHECK(a.dim() == b.dim());
    CHECK(killing_sig(a) == killing_sig(b));
    CHECK(generic_centralizer_rank(a) == generic_centralizer_rank(b));
  }
}

TEST_CASE("direct sums") {
  LieAlgebra su2 = classical(Series::su, {2, 0});
  LieAlgebra so21 = classical(Series::so, {2, 1});
  LieAlgebra sum = direct_sum(su2, so21);
  CHECK(sum.dim() == 6);
  CHECK(killing_sig(sum) == Signature{2, 4, 0});
  CHECK_NOTHROW(sum.check_axioms());
}

TEST_CASE("centralizer and bracket_span") {
  LieAlgebra su2 = classical(Series::su, {2, 0});
  // centralizer of a regular element is 1-dimensional (rank 1)
  MatrixXq reg(su2.dim(), 1);
  for (Index i = 0; i < su2.dim(); ++i) reg(i, 0) = Rational(1, i + 1);
  CHECK(centralizer(su2, reg).cols() == 1);
  // derived algebra of su(2) is everything
  MatrixXq id = MatrixXq::Identity(su2.dim(), su2.dim());
  CHECK(bracket_span(su2, id).cols() == 3);
}
