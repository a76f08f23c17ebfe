#pragma once

#include <map>
#include <string>
#include <vector>

#include "wsym/lie_algebra.hpp"

namespace wsym {

/// A reductive subalgebra h inside g with the exact inclusion in g
/// coordinates: the algebra-level model of the coset space G/H.
struct EmbeddedPair {
  LieAlgebra g;
  LieAlgebra h;
  MatrixXq inclusion;  // dim_g x dim_h, injective homomorphism
  std::string case_id;     // "1".."21", "symmetric", "custom"
  std::string member_label;
  std::map<std::string, int> params;
  std::string display_name;
};

/// Build a pair from ambient matrices of the subalgebra (validated: the
/// matrices must be independent, closed, and inside the span of g).
EmbeddedPair make_pair(LieAlgebra g, const std::vector<MatrixXq>& h_matrices,
                       std::string h_name = "h");

/// Tangent model: m is the Killing orthocomplement of h, [h, m] stays in m,
/// and the isotropy matrices give the h action on m.
struct ReductiveSplit {
  EmbeddedPair pair;
  MatrixXq m_basis;                // dim_g x dim_m
  MatrixXq killing_m;              // kappa_g restricted to m
  MatrixXq killing_h;              // kappa_g restricted to h
  std::vector<MatrixXq> isotropy;  // dim_m x dim_m per h generator

  Index dim_m() const { return m_basis.cols(); }
};

/// Throws DegenerateOnSubalgebra when kappa_g|h is degenerate.
ReductiveSplit orthocomplement(const EmbeddedPair& pair);

/// Basis of the ad(h)-invariant symmetric bilinear forms on m (exact; block
/// solve after splitting m along Casimir-type invariant operators).  Always
/// contains kappa|m.
std::vector<MatrixXq> invariant_forms(const ReductiveSplit& split);

/// An invariant, Killing-nondegenerate, minimal tangent summand.
struct MetricSummand {
  MatrixXq subspace;  // columns in m coordinates
  SigPair sig;        // kappa signature, null count zero
  std::string label;
};

/// Metric-irreducible decomposition via primary decomposition of
/// (kappa|m)^{-1} T for a deterministic generic invariant form T
/// (coefficients 1/(1+(seed+1) t); eight retry seeds).  Propagates
/// IrreducibleDegreeTooHigh only after all seeds fail.
std::vector<MetricSummand> metric_summands(const ReductiveSplit& split, int seed = 0);

/// All achievable metric signatures: one sign choice per summand.
struct SignatureSet {
  std::vector<SigPair> signatures;  // sorted, deduplicated, swap closed
  SigPair canonical;                // maximal p representative
};

SignatureSet admissible_signatures(const std::vector<MetricSummand>& summands);
SignatureSet admissible_signatures(const std::vector<SigPair>& summands);

enum class SpecialClass { riemannian, lorentz, translorentz };
std::string to_string(SpecialClass c);

/// Classify the canonical-orientation members (p >= q) with q <= 2.
std::vector<std::pair<SigPair, SpecialClass>> special_filter(const SignatureSet& sigs);

/// Concatenation of factor/fiber summand lists (riemannian unfolding and
/// product composition).
std::vector<MetricSummand> unfold_compose(const std::vector<std::vector<MetricSummand>>& parts);
std::vector<SigPair> summand_signatures(const std::vector<MetricSummand>& summands);

/// Totally geodesic intermediate check: h inside k inside g, with m split
/// kappa-orthogonally into the k-complement (base) and the h-complement
/// inside k (fiber).
struct IntermediateReport {
  Index fiber_dim = 0;
  Index base_dim = 0;
  Signature fiber_sig, base_sig;
};
IntermediateReport check_intermediate(const EmbeddedPair& pair, const EmbeddedPair& inter);

} // namespace wsym
