#include <doctest.h>

#include "wsym/classical.hpp"
#include "wsym/homogeneous.hpp"
#include "wsym/spin_chain.hpp"

using namespace wsym;

namespace {

EmbeddedPair su2_over_u1() {
  LieAlgebra g = classical(Series::su, {2, 0});
  MatrixXq z = MatrixXq::Zero(2, 2);
  z(0, 0) = 1;
  z(1, 1) = -1;
  return make_pair(std::move(g), {realified(CMat::imag(z))}, "u1");
}

EmbeddedPair sl3_over_sl2() {
  LieAlgebra g = classical(Series::sl_R, {3});
  std::vector<MatrixXq> h;
  for (const auto& m : classical(Series::sl_R, {2}).basis)
    h.push_back(embed_block(m, 3, 0));
  return make_pair(std::move(g), h, "sl2");
}

EmbeddedPair su21_over_su2() {
  LieAlgebra g = classical(Series::su, {2, 1});
  std::vector<MatrixXq> h;
  for (const auto& m : classical(Series::su, {2, 0}).basis)
    h.push_back(embed_block(m, 6, 0));
  return make_pair(std::move(g), h, "su2");
}

std::vector<SigPair> sigs_of(const EmbeddedPair& pair, int seed = 0) {
  ReductiveSplit split = orthocomplement(pair);
  auto summands = metric_summands(split, seed);
  auto out = summand_signatures(summands);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("orthocomplement of the 2-sphere pair") {
  ReductiveSplit split = orthocomplement(su2_over_u1());
  CHECK(split.dim_m() == 2);
  CHECK(sig_diagonalize(split.killing_m) == Signature{0, 2, 0});
  CHECK(invariant_forms(split).size() == 1);
  // kappa(h, m) = 0 on all pairs is the definition of m; spot check
  CHECK(split.pair.inclusion.transpose() * split.pair.g.killing * split.m_basis ==
        MatrixXq::Zero(1, 2));
}

namespace {

// independent oracle: solve the invariance system over all symmetric-form
// unknowns directly, with no block splitting
Index invariant_forms_bruteforce(const ReductiveSplit& split) {
  const Index m = split.dim_m();
  const Index s = m * (m + 1) / 2;
  auto unpack = [&](const VectorXq& v) {
    MatrixXq t(m, m);
    Index idx = 0;
    for (Index i = 0; i < m; ++i)
      for (Index j = i; j < m; ++j) {
        t(i, j) = v(idx);
        t(j, i) = v(idx);
        ++idx;
      }
    return t;
  };
  MatrixXq constraints(static_cast<Index>(split.isotropy.size()) * m * m, s);
  for (Index c = 0; c < s; ++c) {
    VectorXq unit = VectorXq::Zero(s);
    unit(c) = 1;
    MatrixXq t = unpack(unit);
    Index row = 0;
    for (const auto& rho : split.isotropy) {
      MatrixXq v = rho.transpose() * t + t * rho;
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) constraints(row++, c) = v(i, j);
    }
  }
  return s - rank_of(std::move(constraints));
}

}  // namespace

TEST_CASE("sl(3,R) over sl(2,R)") {
  EmbeddedPair pair = sl3_over_sl2();
  ReductiveSplit split = orthocomplement(pair);
  CHECK(split.dim_m() == 5);
  // frozen from the brute-force kernel-dimension oracle below: the paired
  // 2+2 block admits one symmetric pairing, plus the center line
  CHECK(invariant_forms(split).size() == 2);
  CHECK(invariant_forms_bruteforce(split) == 2);

  auto summands = metric_summands(split);
  auto sigs = summand_signatures(summands);
  std::sort(sigs.begin(), sigs.end());
  CHECK(sigs == std::vector<SigPair>{{1, 0}, {2, 2}});

  SignatureSet adm = admissible_signatures(summands);
  CHECK(adm.signatures == std::vector<SigPair>{{2, 3}, {3, 2}});
  CHECK(adm.canonical == SigPair{3, 2});

  auto special = special_filter(adm);
  REQUIRE(special.size() == 1);
  CHECK(special[0].first == SigPair{3, 2});
  CHECK(special[0].second == SpecialClass::translorentz);
}

TEST_CASE("su(2,1) over su(2)") {
  auto sigs = sigs_of(su21_over_su2());
  CHECK(sigs == std::vector<SigPair>{{0, 1}, {4, 0}});

  SignatureSet adm = admissible_signatures(std::vector<SigPair>{{0, 1}, {4, 0}});
  CHECK(adm.signatures == std::vector<SigPair>{{0, 5}, {1, 4}, {4, 1}, {5, 0}});
  CHECK(adm.canonical == SigPair{5, 0});
}

TEST_CASE("trivial isotropy leaves all symmetric forms") {
  LieAlgebra g = classical(Series::su, {2, 0});
  EmbeddedPair pair = make_pair(std::move(g), {}, "0");
  ReductiveSplit split = orthocomplement(pair);
  CHECK(split.dim_m() == 3);
  CHECK(invariant_forms(split).size() == 6);  // d(d+1)/2
}

TEST_CASE("spin(7) over g2 gives the seven-sphere summand") {
  SpinEmbedding e = g2_in_spin7(false);
  EmbeddedPair pair;
  pair.g = e.ambient;
  pair.h = e.sub;
  pair.inclusion = e.inclusion;
  auto sigs = sigs_of(pair);
  CHECK(sigs == std::vector<SigPair>{{0, 7}});
  SignatureSet adm = admissible_signatures(std::vector<SigPair>{{0, 7}});
  CHECK(adm.canonical == SigPair{7, 0});
  auto special = special_filter(adm);
  REQUIRE(special.size() == 1);
  CHECK(special[0].second == SpecialClass::riemannian);
}

TEST_CASE("seed independence of summand multisets") {
  for (int seed : {1, 2, 3}) {
    CHECK(sigs_of(sl3_over_sl2(), seed) == sigs_of(sl3_over_sl2(), 0));
    CHECK(sigs_of(su21_over_su2(), seed) == sigs_of(su21_over_su2(), 0));
  }
}

TEST_CASE("admissible sets are swap closed and divide 2^k") {
  SignatureSet adm = admissible_signatures(std::vector<SigPair>{{2, 2}, {1, 0}, {0, 3}});
  for (const SigPair& s : adm.signatures) {
    CHECK(std::count(adm.signatures.begin(), adm.signatures.end(), s.swapped()) == 1);
  }
  CHECK((8 % adm.signatures.size()) == 0);
}

TEST_CASE("unfold_compose concatenates") {
  MetricSummand a{MatrixXq::Identity(7, 7), {0, 7}, ""};
  MetricSummand b{MatrixXq::Identity(2, 2), {0, 2}, ""};
  auto combined = unfold_compose({{a}, {b}});
  REQUIRE(combined.size() == 2);
  SignatureSet adm = admissible_signatures(combined);
  CHECK(adm.canonical == SigPair{9, 0});
  CHECK(unfold_compose({{a}, {}}).size() == 1);
}

TEST_CASE("check_intermediate on the spin chain") {
  // spin(7) inside so(8) inside so(9)
  SpinEmbedding s2 = spin7_in_so8("S2");
  LieAlgebra so9 = classical(Series::so, {9, 0});
  std::vector<MatrixXq> spin7_in_9, so8_in_9;
  for (const auto& m : s2.sub.basis) spin7_in_9.push_back(embed_block(m, 9, 0));
  for (const auto& m : s2.ambient.basis) so8_in_9.push_back(embed_block(m, 9, 0));
  EmbeddedPair pair = make_pair(so9, spin7_in_9, "spin7");
  EmbeddedPair inter = make_pair(so9, so8_in_9, "so8");
  IntermediateReport rep = check_intermediate(pair, inter);
  CHECK(rep.fiber_dim == 7);
  CHECK(rep.base_dim == 8);
  CHECK(rep.fiber_sig == Signature{0, 7, 0});
  CHECK(rep.base_sig == Signature{0, 8, 0});

  // h = k: zero fiber
  IntermediateReport same = check_intermediate(inter, inter);
  CHECK(same.fiber_dim == 0);
  CHECK(same.base_dim == 8);

  // not nested
  CHECK_THROWS_AS(check_intermediate(inter, pair), NotNested);
}

TEST_CASE("check_intermediate on the quaternionic chain") {
  // sp(2)+u(1) inside sp(2)+sp(1) inside sp(3): fiber is the 2-sphere
  LieAlgebra sp3 = classical(Series::sp_pq, {3, 0});
  const Index n = sp3.ambient();
  std::vector<MatrixXq> h_mats, k_mats;
  for (const auto& m : classical(Series::sp_pq, {2, 0}).basis) {
    h_mats.push_back(embed_block(m, n, 0));
    k_mats.push_back(embed_block(m, n, 0));
  }
  for (const auto& m : classical(Series::sp_pq, {1, 0}).basis)
    k_mats.push_back(embed_block(m, n, 8));
  // u(1) inside the last sp(1) slot: left multiplication by i
  h_mats.push_back(embed_block(quaternion_unit_entry(1, 0, 0, 1), n, 8));
  EmbeddedPair pair = make_pair(sp3, h_mats, "sp2+u1");
  EmbeddedPair inter = make_pair(sp3, k_mats, "sp2+sp1");
  IntermediateReport rep = check_intermediate(pair, inter);
  CHECK(rep.fiber_dim == 2);
  CHECK(rep.base_dim == 8);
}
