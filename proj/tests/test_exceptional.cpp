#include <doctest.h>

#include "wsym/classical.hpp"
#include "wsym/clifford.hpp"
#include "wsym/octonion.hpp"
#include "wsym/spin_chain.hpp"

using namespace wsym;

namespace {

// kappa-orthocomplement of the embedded subalgebra inside the ambient
MatrixXq complement_of(const SpinEmbedding& e) {
  return kernel<Rational>(e.inclusion.transpose() * e.ambient.killing);
}

}  // namespace

TEST_CASE("octonion norms") {
  CHECK(sig_diagonalize(octonions(false).norm) == Signature{8, 0, 0});
  CHECK(sig_diagonalize(octonions(true).norm) == Signature{4, 4, 0});

  CompositionAlgebra o = octonions(false);
  VectorXq e1 = VectorXq::Zero(8);
  e1(1) = 1;
  VectorXq sq = o.multiply(e1, e1);
  VectorXq expect = VectorXq::Zero(8);
  expect(0) = -1;
  CHECK(sq == expect);
}

TEST_CASE("derivation algebras of the composition algebras") {
  LieAlgebra g2 = derivations(octonions(false));
  CHECK(g2.dim() == 14);
  CHECK(g2.killing_signature() == Signature{0, 14, 0});

  LieAlgebra g2s = derivations(octonions(true));
  CHECK(g2s.dim() == 14);
  CHECK(g2s.killing_signature() == Signature{8, 6, 0});

  LieAlgebra derh = derivations(quaternions(false));
  CHECK(derh.dim() == 3);
  CHECK(derh.killing_signature() == Signature{0, 3, 0});
}

TEST_CASE("subalgebras of G2 by annihilation") {
  CompositionAlgebra o = octonions(false);
  VectorXq e1 = VectorXq::Zero(8);
  e1(1) = 1;
  LieAlgebra su3 = derivations_annihilating(o, e1);
  CHECK(su3.dim() == 8);
  CHECK(su3.killing_signature() == Signature{0, 8, 0});

  CompositionAlgebra os = octonions(true);
  // compact-type imaginary unit (norm +1) gives su(1,2)
  VectorXq c = VectorXq::Zero(8);
  c(1) = 1;
  LieAlgebra su12 = derivations_annihilating(os, c);
  CHECK(su12.dim() == 8);
  CHECK(su12.killing_signature() == Signature{4, 4, 0});
  // split-type unit (norm -1) gives sl(3,R)
  VectorXq s = VectorXq::Zero(8);
  s(4) = 1;
  LieAlgebra sl3 = derivations_annihilating(os, s);
  CHECK(sl3.dim() == 8);
  CHECK(sl3.killing_signature() == Signature{5, 3, 0});

  LieAlgebra so4 = derivations_preserving_quaternions(o);
  CHECK(so4.dim() == 6);
  CHECK(so4.killing_signature() == Signature{0, 6, 0});
}

TEST_CASE("clifford relations and representation sizes") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {0, 7}, {4, 3}, {7, 0}, {2, 0}, {0, 2}, {3, 2}, {5, 4}, {9, 0}, {4, 4}}) {
    CliffordData c = clifford(p, q);  // relations asserted internally
    CHECK(c.gamma.size() == static_cast<size_t>(p + q));
  }
  CHECK(clifford(0, 7).rep_dim() == 8);
  CHECK(clifford(4, 3).rep_dim() == 8);
  CHECK(clifford(9, 0).rep_dim() == 16);
  CHECK_THROWS_AS(clifford(6, 4), DimensionCap);
}

TEST_CASE("spin algebras match the classical orthogonal forms") {
  SpinAlgebra s70 = spin_algebra(7, 0);
  CHECK(s70.algebra.dim() == 21);
  CHECK(s70.algebra.killing_signature() == Signature{0, 21, 0});

  SpinAlgebra s34 = spin_algebra(3, 4);
  CHECK(s34.algebra.dim() == 21);
  CHECK(s34.algebra.killing_signature() == Signature{12, 9, 0});
  CHECK(s34.algebra.killing_signature() ==
        classical(Series::so, {3, 4}).killing_signature());

  SpinAlgebra s20 = spin_algebra(2, 0);
  CHECK(s20.algebra.dim() == 1);
  CHECK(s20.algebra.is_abelian());
}

TEST_CASE("spinor representation restricts to 8 real dimensions for spin(7)") {
  SpinAlgebra s = spin_algebra(7, 0);
  CHECK(s.cliff.rep_dim() == 16);
  MatrixXq sub = minimal_invariant_subspace(s.algebra.basis);
  CHECK(sub.cols() == 8);
  // the restriction is a faithful 8-dimensional spin(7) representation
  std::vector<MatrixXq> restricted;
  for (const auto& a : s.algebra.basis) restricted.push_back(coordinates_in_span(sub, a * sub));
  LieAlgebra spin7 = LieAlgebra::from_matrices(restricted, "spin7_8");
  CHECK(spin7.dim() == 21);
  CHECK(spin7.killing_signature() == Signature{0, 21, 0});
}

TEST_CASE("vector action intertwines exactly") {
  SpinAlgebra s = spin_algebra(3, 2);
  REQUIRE(s.vector_action.size() == static_cast<size_t>(s.algebra.dim()));
  // the vector action preserves the diagonal form diag(I_p, -I_q)
  MatrixXq f = hermitian_diag(signs_pq(3, 2), Field::R);
  for (const auto& v : s.vector_action)
    CHECK(v.transpose() * f + f * v == MatrixXq::Zero(5, 5));
  // and is a homomorphism onto so(3,2) invariants
  LieAlgebra vec = LieAlgebra::from_matrices(s.vector_action, "vec32");
  CHECK(vec.dim() == 10);
  CHECK(vec.killing_signature() == classical(Series::so, {3, 2}).killing_signature());
}

TEST_CASE("g2_in_spin7 compact") {
  SpinEmbedding e = g2_in_spin7(false);
  CHECK(e.ambient.dim() == 21);
  CHECK(e.sub.dim() == 14);
  CHECK(e.sub.killing_signature() == Signature{0, 14, 0});

  MatrixXq comp = complement_of(e);
  REQUIRE(comp.cols() == 7);
  CHECK(sig_restricted(e.ambient.killing, comp) == Signature{0, 7, 0});

  // complement is ad(g2)-invariant
  for (Index c = 0; c < e.sub.dim(); ++c) {
    MatrixXq moved = e.ambient.ad(e.inclusion.col(c)) * comp;
    CHECK_NOTHROW(coordinates_in_span(comp, moved));
  }
}

TEST_CASE("g2_in_spin7 split") {
  SpinEmbedding e = g2_in_spin7(true);
  CHECK(e.sub.dim() == 14);
  CHECK(e.sub.killing_signature() == Signature{8, 6, 0});
  MatrixXq comp = complement_of(e);
  REQUIRE(comp.cols() == 7);
  Signature sig = sig_restricted(e.ambient.killing, comp);
  bool ok = (sig == Signature{4, 3, 0}) || (sig == Signature{3, 4, 0});
  CHECK(ok);
}

TEST_CASE("inclusion maps are exact homomorphisms") {
  for (SpinEmbedding e : {g2_in_spin7(false), spin7_in_so8("S2")}) {
    for (Index i = 0; i < e.sub.dim(); ++i)
      for (Index j = i + 1; j < e.sub.dim(); ++j) {
        VectorXq lhs = e.ambient.bracket(e.inclusion.col(i), e.inclusion.col(j));
        VectorXq rhs = VectorXq::Zero(e.ambient.dim());
        for (const auto& [k, c] : e.sub.bracket_basis(i, j)) rhs += c * e.inclusion.col(k);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("triality classes in so(8)") {
  SpinEmbedding s2 = spin7_in_so8("S2");
  SpinEmbedding s3 = spin7_in_so8("S3");
  SpinEmbedding vec = so7_vector_in_so8();
  CHECK(s2.sub.dim() == 21);
  CHECK(s3.sub.dim() == 21);
  CHECK(vec.sub.dim() == 21);

  // complement of S2 inside so(8): 7-dimensional, definite
  MatrixXq comp = complement_of(s2);
  REQUIRE(comp.cols() == 7);
  CHECK(sig_restricted(s2.ambient.killing, comp) == Signature{0, 7, 0});

  // pairwise intersections have dimension 14 (the G2 inside)
  MatrixXq i23 = intersect_spans(s2.inclusion, s3.inclusion);
  MatrixXq i2v = intersect_spans(s2.inclusion, vec.inclusion);
  MatrixXq i3v = intersect_spans(s3.inclusion, vec.inclusion);
  CHECK(i23.cols() == 14);
  CHECK(i2v.cols() == 14);
  CHECK(i3v.cols() == 14);

  // the defining representation separates the classes: 7+1 for the vector
  // class (commutant dim 2), irreducible for S2/S3 (commutant dim 1)
  CHECK(commutant_dimension(vec.sub.basis) == 2);
  CHECK(commutant_dimension(s2.sub.basis) == 1);
  CHECK(commutant_dimension(s3.sub.basis) == 1);
}

TEST_CASE("derivations arise as the S2/S3 intersection") {
  SpinEmbedding s2 = spin7_in_so8("S2");
  SpinEmbedding s3 = spin7_in_so8("S3");
  MatrixXq inter = intersect_spans(s2.inclusion, s3.inclusion);
  std::vector<MatrixXq> basis;
  for (Index c = 0; c < inter.cols(); ++c)
    basis.push_back(s2.ambient.realize(inter.col(c)));
  LieAlgebra g2 = LieAlgebra::from_matrices(std::move(basis), "g2_cap");
  CHECK(g2.dim() == 14);
  CHECK(g2.killing_signature() == Signature{0, 14, 0});
}
