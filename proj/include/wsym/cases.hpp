#pragma once

#include "wsym/homogeneous.hpp"

namespace wsym {

using Params = std::map<std::string, int>;

/// Concrete embedded pair for a family member of the classification:
/// case_id "1".."20" with the member labels of the paper families, or
/// "symmetric" with a named builder.  Block embeddings for the classical
/// cases, spin/octonion embeddings routed through the exceptional chain,
/// switch-lemma members as realified complexifications.
/// Throws UnknownMember / ParamsOutOfRange / NotConstructible.
EmbeddedPair case_constructor(const std::string& case_id, const std::string& member,
                              const Params& params);

/// Folded product with an explicit central lattice: factor pairs must have
/// one-dimensional h-centers; each lattice column gives one surviving
/// central direction (coordinates across the factor centers).
EmbeddedPair case21_constructor(const std::vector<EmbeddedPair>& factors,
                                const MatrixXq& central_lattice);

/// Named symmetric-space builders backing the Berger rows of the tables.
EmbeddedPair symmetric_space(const std::string& name, const Params& params);
std::vector<std::string> symmetric_names();

/// Members available per case (paper labels "i".."x").
std::vector<std::string> case_members(const std::string& case_id);

} // namespace wsym
