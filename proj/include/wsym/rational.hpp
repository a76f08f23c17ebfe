#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace wsym {

// Exact scalar types.  Every quantity in the engine is a rational number;
// mpq keeps numerator/denominator coprime with positive denominator.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index    = Eigen::Index;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline int sign_of(const Rational& x) { return x.sign(); }

inline Integer numerator_of(const Rational& x) { return numerator(x); }
inline Integer denominator_of(const Rational& x) { return denominator(x); }

inline Rational frac(long num, long den = 1) { return Rational(num, den); }

} // namespace wsym
