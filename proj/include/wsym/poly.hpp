#pragma once

#include <vector>

#include "wsym/rational.hpp"
#include "wsym/linalg.hpp"

namespace wsym {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first.  The zero polynomial has an empty coefficient vector.
struct Poly {
  std::vector<Rational> c;

  Poly() = default;
  Poly(std::initializer_list<Rational> init) : c(init) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly{Rational(0), Rational(1)}; }
  static Poly constant(const Rational& v) { return v == 0 ? Poly() : Poly{v}; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Rational& leading() const { return c.back(); }

  Rational eval(const Rational& v) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rational& s) const;
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str() const;
};

/// Quotient and remainder of Euclidean division.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic gcd

struct PolyFactor {
  Poly factor;       // monic irreducible over Q, degree 1 or 2
  int multiplicity;
};

/// Factor f into monic irreducible factors of degree <= 2 plus the leading
/// unit: f = unit * prod factor^multiplicity.  Square-free decomposition,
/// then rational root extraction by the divisor bound on the primitive
/// integer polynomial, then quadratic factor extraction by solving for
/// rational (b, c) with x^2+bx+c dividing the remainder.
/// Throws IrreducibleDegreeTooHigh when a residual factor of degree >= 3
/// has no factor of degree <= 2.
struct Factorization {
  Rational unit;
  std::vector<PolyFactor> factors;
};
Factorization factor_le2(const Poly& f);

/// Monic minimal polynomial of a square matrix (first linear dependence
/// among its powers).
Poly min_poly(const MatrixXq& a);

/// Evaluate p at a square matrix.
MatrixXq eval_at(const Poly& p, const MatrixXq& a);

/// Primary decomposition of an endomorphism: one invariant subspace
/// ker(p_i(A)^{k_i}) per irreducible factor of the minimal polynomial.
/// Dimensions add up to the ambient dimension and the subspaces intersect
/// trivially.  Propagates IrreducibleDegreeTooHigh from factor_le2.
std::vector<MatrixXq> primary_decomposition(const MatrixXq& a);

/// Divisors of n (both signs excluded; positive divisors only).  Factors n
/// by trial division and Pollard rho.  Used by the rational root search.
std::vector<Integer> positive_divisors(Integer n);

} // namespace wsym
