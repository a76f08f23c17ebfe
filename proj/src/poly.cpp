#include "wsym/poly.hpp"
#include "wsym/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>

namespace wsym {

Rational Poly::eval(const Rational& v) const {
  Rational r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * v + *it;
  return r;
}

Poly Poly::derivative() const {
  if (c.size() <= 1) return {};
  std::vector<Rational> d(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  const Rational lead = r.c.back();
  for (auto& x : r.c) x /= lead;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return {};
  Poly r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += c[i].str();
    if (i > 0) s += "*x^" + std::to_string(i);
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  Poly rem = a;
  if (rem.degree() < b.degree()) return {Poly(), rem};
  std::vector<Rational> q(rem.degree() - b.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational f = rem.leading() / b.leading();
    q[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i)
      rem.c[i + static_cast<size_t>(shift)] -= f * b.c[i];
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// integer factorization support for the rational root search

namespace {

Integer pollard_rho(const Integer& n) {
  // Brent's cycle variant with deterministic restarts
  for (Integer c = 1; ; ++c) {
    Integer x = 2, y = 2, d = 1;
    Integer ys = y;
    const int m = 64;
    Integer q = 1;
    long r = 1;
    while (d == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < r && d == 1) {
        ys = y;
        for (long i = 0; i < std::min<long>(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        d = boost::multiprecision::gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        d = boost::multiprecision::gcd(abs(x - ys), n);
      }
    }
    if (d != n) return d;
  }
}

void factor_integer(Integer n, std::map<Integer, int>& out) {
  if (n < 0) n = -n;
  for (Integer p : {Integer(2), Integer(3), Integer(5)})
    while (n % p == 0) { ++out[p]; n /= p; }
  for (Integer p = 7; p * p <= n && p < 100000; p += 2)
    while (n % p == 0) { ++out[p]; n /= p; }
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 32)) { ++out[n]; return; }
  Integer d = pollard_rho(n);
  factor_integer(d, out);
  factor_integer(n / d, out);
}

}  // namespace

std::vector<Integer> positive_divisors(Integer n) {
  if (n == 0) throw Error("divisors of zero");
  std::map<Integer, int> pf;
  factor_integer(n, pf);
  std::vector<Integer> divs = {Integer(1)};
  for (const auto& [p, e] : pf) {
    const size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      if (divs.size() > 400000) throw Error("divisor count overflow in root search");
    }
  }
  return divs;
}

// ---------------------------------------------------------------------------
// rational roots

namespace {

// primitive integer coefficients of a rational polynomial (positive leading)
std::vector<Integer> primitive_integer(const Poly& f) {
  Integer den_lcm = 1;
  for (const auto& x : f.c)
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(x));
  std::vector<Integer> out(f.c.size());
  Integer content = 0;
  for (size_t i = 0; i < f.c.size(); ++i) {
    out[i] = Integer(numerator(f.c[i]) * (den_lcm / denominator(f.c[i])));
    content = boost::multiprecision::gcd(content, out[i]);
  }
  if (content != 0)
    for (auto& x : out) x /= content;
  if (out.back() < 0)
    for (auto& x : out) x = -x;
  return out;
}

// all rational roots of a square-free polynomial, by the divisor bound
std::vector<Rational> rational_roots(const Poly& f) {
  std::vector<Rational> roots;
  Poly g = f;
  while (!g.is_zero() && g.c.front() == 0) {  // strip all powers of x
    if (roots.empty()) roots.push_back(Rational(0));
    g.c.erase(g.c.begin());
    g.trim();
  }
  if (g.degree() < 1) return roots;
  std::vector<Integer> ic = primitive_integer(g);
  const Integer a0 = ic.front(), an = ic.back();
  std::vector<Integer> ps = positive_divisors(a0);
  std::vector<Integer> qs = positive_divisors(an);
  for (const Integer& p : ps)
    for (const Integer& q : qs) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      for (int s : {1, -1}) {
        Rational cand(p * s, q);
        if (g.eval(cand) == 0) roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// quadratic factor extraction: find monic x^2 + bx + c dividing g (monic,
// square-free, no rational roots) by eliminating c with a resultant

struct BiPoly {
  // exponents (i, j) of b^i c^j
  std::map<std::pair<int, int>, Rational> t;

  void add_term(int i, int j, const Rational& v) {
    if (v == 0) return;
    auto& slot = t[{i, j}];
    slot += v;
    if (slot == 0) t.erase({i, j});
  }
  BiPoly times_b() const {
    BiPoly r;
    for (const auto& [k, v] : t) r.t[{k.first + 1, k.second}] = v;
    return r;
  }
  BiPoly times_c() const {
    BiPoly r;
    for (const auto& [k, v] : t) r.t[{k.first, k.second + 1}] = v;
    return r;
  }
  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [k, v] : r.t) v = -v;
    return r;
  }
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, v] : b.t) r.add_term(k.first, k.second, v);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  BiPoly scaled(const Rational& s) const {
    BiPoly r;
    if (s == 0) return r;
    for (const auto& [k, v] : t) r.t[k] = v * s;
    return r;
  }
  int deg_b() const {
    int d = 0;
    for (const auto& [k, v] : t) d = std::max(d, k.first);
    return d;
  }
  int deg_c() const {
    int d = 0;
    for (const auto& [k, v] : t) d = std::max(d, k.second);
    return d;
  }
  // specialize b = b0; result as polynomial in c
  Poly at_b(const Rational& b0) const {
    std::vector<Rational> coeffs(static_cast<size_t>(deg_c()) + 1, Rational(0));
    for (const auto& [k, v] : t) {
      Rational bp = 1;
      for (int i = 0; i < k.first; ++i) bp *= b0;
      coeffs[static_cast<size_t>(k.second)] += v * bp;
    }
    return Poly(std::move(coeffs));
  }
};

Rational resultant(Poly f, Poly g) {
  if (f.is_zero() || g.is_zero()) return 0;
  Rational acc = 1;
  bool flip = false;
  while (true) {
    if (f.degree() < g.degree()) {
      if ((f.degree() % 2) == 1 && (g.degree() % 2) == 1) flip = !flip;
      std::swap(f, g);
    }
    if (g.degree() == 0) {
      Rational r = 1;
      for (int i = 0; i < f.degree(); ++i) r *= g.c[0];
      acc *= r;
      break;
    }
    Poly r = divmod(f, g).second;
    if (r.is_zero()) return 0;
    Rational lc = g.leading();
    Rational pw = 1;
    for (int i = 0; i < f.degree() - r.degree(); ++i) pw *= lc;
    acc *= pw;
    if ((f.degree() % 2) == 1 && (g.degree() % 2) == 1) flip = !flip;
    f = std::move(g);
    g = std::move(r);
  }
  return flip ? -acc : acc;
}

Poly lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Poly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    Poly li{ys[i]};
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * Poly{-xs[j], Rational(1)};
      li = li * (Rational(1) / (xs[i] - xs[j]));
    }
    acc = acc + li;
  }
  return acc;
}

// one monic quadratic factor of g, or nullopt
std::optional<Poly> quadratic_factor(const Poly& g) {
  const int n = g.degree();
  // reduce x^k modulo x^2 + b x + c: x^k = alpha_k x + beta_k
  std::vector<BiPoly> alpha(static_cast<size_t>(n) + 1), beta(static_cast<size_t>(n) + 1);
  beta[0].add_term(0, 0, 1);   // x^0 = 1
  alpha[1].add_term(0, 0, 1);  // x^1 = x
  for (int k = 1; k < n; ++k) {
    alpha[k + 1] = beta[k] - alpha[k].times_b();
    beta[k + 1] = -alpha[k].times_c();
  }
  BiPoly r1, r0;
  for (int k = 0; k <= n; ++k) {
    r1 = r1 + alpha[k].scaled(g.c[static_cast<size_t>(k)]);
    r0 = r0 + beta[k].scaled(g.c[static_cast<size_t>(k)]);
  }

  const int deg_bound = r1.deg_c() * r0.deg_b() + r0.deg_c() * r1.deg_b() + 1;
  std::vector<Rational> xs, ys;
  for (int k = 0; static_cast<int>(xs.size()) < deg_bound + 1; ++k) {
    Rational b0 = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k / 2 + 1));
    xs.push_back(b0);
    ys.push_back(resultant(r1.at_b(b0), r0.at_b(b0)));
  }
  Poly res_b = lagrange_interpolate(xs, ys);
  if (res_b.is_zero())
    throw Error("identically vanishing resultant in quadratic factor search");

  for (const Rational& b0 : rational_roots(res_b * (Rational(1) / res_b.leading()))) {
    Poly common = gcd(r1.at_b(b0), r0.at_b(b0));
    for (const Rational& c0 : rational_roots(common)) {
      Poly q{c0, b0, Rational(1)};
      auto [quot, rem] = divmod(g, q);
      (void)quot;
      if (rem.is_zero()) return q;
    }
  }
  return std::nullopt;
}

}  // namespace

Factorization factor_le2(const Poly& f) {
  Factorization out;
  if (f.is_zero()) {
    out.unit = 0;
    return out;
  }
  out.unit = f.leading();
  Poly mono = f.monic();
  if (mono.degree() == 0) return out;

  // square-free part, then linear factors, then quadratics
  Poly sqfree = divmod(mono, gcd(mono, mono.derivative())).first.monic();

  std::vector<Poly> irreducibles;
  for (const Rational& r : rational_roots(sqfree)) {
    irreducibles.push_back(Poly{-r, Rational(1)});
    sqfree = divmod(sqfree, irreducibles.back()).first;
  }
  while (sqfree.degree() >= 2) {
    if (sqfree.degree() == 2) {
      irreducibles.push_back(sqfree.monic());
      sqfree = Poly{Rational(1)};
      break;
    }
    std::optional<Poly> q = quadratic_factor(sqfree);
    if (!q) throw IrreducibleDegreeTooHigh("residual degree " + std::to_string(sqfree.degree()));
    irreducibles.push_back(*q);
    sqfree = divmod(sqfree, *q).first.monic();
  }
  if (sqfree.degree() >= 1)
    throw IrreducibleDegreeTooHigh("unfactored residual of degree " +
                                   std::to_string(sqfree.degree()));

  for (const Poly& p : irreducibles) {
    int mult = 0;
    Poly rem = mono;
    while (true) {
      auto [quot, r] = divmod(rem, p);
      if (!r.is_zero()) break;
      rem = quot;
      ++mult;
    }
    out.factors.push_back({p, mult});
  }

  // exactness check: the product must reproduce the input
  Poly prod = Poly::constant(out.unit);
  for (const auto& [p, m] : out.factors)
    for (int i = 0; i < m; ++i) prod = prod * p;
  if (!(prod == f)) throw Error("factorization does not reproduce input");
  return out;
}

Poly min_poly(const MatrixXq& a) {
  if (a.rows() != a.cols()) throw Error("min_poly of non-square matrix");
  const Index n = a.rows();
  const Index nn = n * n;

  // incremental row echelon over the vectorized powers of a
  struct EchelonEntry {
    VectorXq vec;               // reduced vector
    Index pivot;                // first nonzero index
    std::vector<Rational> expr; // expression in terms of original powers
  };
  std::vector<EchelonEntry> basis;

  MatrixXq power = MatrixXq::Identity(n, n);
  for (Index k = 0;; ++k) {
    VectorXq v(nn);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v(i * n + j) = power(i, j);
    std::vector<Rational> expr(static_cast<size_t>(k) + 1, Rational(0));
    expr[static_cast<size_t>(k)] = 1;

    for (const auto& e : basis) {
      const Rational f = v(e.pivot);
      if (f == 0) continue;
      v -= f * e.vec;
      for (size_t i = 0; i < e.expr.size(); ++i) expr[i] -= f * e.expr[i];
    }
    Index pivot = -1;
    for (Index i = 0; i < nn; ++i)
      if (v(i) != 0) { pivot = i; break; }
    if (pivot < 0) {
      // x^k = -sum expr_i x^i (i < k) after normalizing expr[k] stays 1
      std::vector<Rational> coeffs(expr.begin(), expr.end());
      return Poly(std::move(coeffs)).monic();
    }
    const Rational lead = v(pivot);
    v /= lead;
    for (auto& x : expr) x /= lead;
    basis.push_back({std::move(v), pivot, std::move(expr)});
    power = power * a;
  }
}

MatrixXq eval_at(const Poly& p, const MatrixXq& a) {
  const Index n = a.rows();
  MatrixXq r = MatrixXq::Zero(n, n);
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    r = r * a;
    for (Index i = 0; i < n; ++i) r(i, i) += *it;
  }
  return r;
}

std::vector<MatrixXq> primary_decomposition(const MatrixXq& a) {
  const Index n = a.rows();
  Factorization fac = factor_le2(min_poly(a));
  std::vector<MatrixXq> spaces;
  Index total = 0;
  for (const auto& [p, mult] : fac.factors) {
    Poly pk = Poly{Rational(1)};
    for (int i = 0; i < mult; ++i) pk = pk * p;
    spaces.push_back(kernel(eval_at(pk, a)));
    total += spaces.back().cols();
  }
  if (total != n) throw Error("primary decomposition dimensions do not add up");
  return spaces;
}

} // namespace wsym
