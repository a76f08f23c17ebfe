#pragma once

#include <string>
#include <tuple>
#include <vector>
#include <algorithm>
#include <Eigen/Core>

namespace wsym {

/// Inertia (p, q, z) of a symmetric bilinear form: counts of positive,
/// negative and null directions.
struct Signature {
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  Eigen::Index null = 0;

  Eigen::Index dim() const { return positive + negative + null; }
  bool nondegenerate() const { return null == 0; }
  bool definite() const { return null == 0 && (positive == 0 || negative == 0); }

  Signature swapped() const { return {negative, positive, null}; }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& a, const Signature& b) {
    return std::tie(a.positive, a.negative, a.null) <=>
           std::tie(b.positive, b.negative, b.null);
  }

  std::string str() const {
    std::string s = "(" + std::to_string(positive) + "," + std::to_string(negative);
    if (null != 0) s += "," + std::to_string(null);
    return s + ")";
  }
};

/// A (p,q) pair with no null part; the currency of the signature tables.
struct SigPair {
  Eigen::Index p = 0;
  Eigen::Index q = 0;

  SigPair() = default;
  SigPair(Eigen::Index p_, Eigen::Index q_) : p(p_), q(q_) {}
  explicit SigPair(const Signature& s) : p(s.positive), q(s.negative) {}

  Eigen::Index dim() const { return p + q; }
  SigPair swapped() const { return {q, p}; }
  SigPair operator+(const SigPair& o) const { return {p + o.p, q + o.q}; }

  friend bool operator==(const SigPair&, const SigPair&) = default;
  friend auto operator<=>(const SigPair& a, const SigPair& b) {
    return std::tie(a.p, a.q) <=> std::tie(b.p, b.q);
  }

  std::string str() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

inline std::string multiset_str(std::vector<SigPair> v) {
  std::sort(v.begin(), v.end());
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + "}";
}

} // namespace wsym
