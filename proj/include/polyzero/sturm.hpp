#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "polyzero/polynomial.hpp"
#include "polyzero/rational.hpp"

namespace polyzero {

/// Count of strict sign alternations among nonzero coefficients. Bounds the
/// positive-root count from above and matches it mod 2.
inline int sign_variations(const ExactPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sign_variations: zero polynomial");
  int count = 0;
  int last = 0;
  for (const Rat& c : p.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Retry signal: a root-counting endpoint landed exactly on a root.
struct endpoint_root_error : std::runtime_error {
  explicit endpoint_root_error(const Rat& x)
      : std::runtime_error("interval endpoint is a root: " + to_frac_string(x)), endpoint(x) {}
  Rat endpoint;
};

namespace detail {

// Integer polynomials as ascending mpz coefficient vectors.

inline void int_poly_trim(std::vector<Int>& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

inline std::vector<Int> to_int_poly(const ExactPoly& p) {
  const ExactPoly q = integer_clear_denominators(p);
  std::vector<Int> v;
  v.reserve(q.coeffs().size());
  for (const Rat& c : q.coeffs()) v.push_back(c.get_num());
  return v;
}

/// Positive content (gcd of coefficients); zero polynomial has content 0.
inline Int int_poly_content(const std::vector<Int>& v) {
  Int g(0);
  for (const Int& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides by the positive content; sign pattern is unchanged.
inline void int_poly_make_primitive(std::vector<Int>& v) {
  int_poly_trim(v);
  if (v.empty()) return;
  const Int g = int_poly_content(v);
  if (g <= 1) return;
  for (Int& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

inline std::vector<Int> int_poly_derivative(const std::vector<Int>& v) {
  if (v.size() <= 1) return {};
  std::vector<Int> d(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i) d[i - 1] = v[i] * static_cast<long>(i);
  return d;
}

/// Pseudo-remainder of a by b scaled so the result is a POSITIVE rational
/// multiple of rem(a, b); sign evaluations are therefore interchangeable.
inline std::vector<Int> pseudo_rem_pos(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (b.empty()) throw std::logic_error("pseudo_rem_pos: zero divisor");
  const int db = static_cast<int>(b.size()) - 1;
  std::vector<Int> r = a;
  int_poly_trim(r);
  int e = static_cast<int>(r.size()) - 1 - db + 1;
  const Int& lcb = b.back();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const int shift = dr - db;
    const Int lead = r.back();
    for (Int& c : r) c *= lcb;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(shift + j)] -= lead * b[static_cast<std::size_t>(j)];
    int_poly_trim(r);
    --e;
  }
  for (; e > 0; --e)
    for (Int& c : r) c *= lcb;
  // Total multiplier applied is lcb^(delta+1); flip when that is negative.
  const int delta_plus1 = static_cast<int>(a.size()) - 1 - db + 1;
  if (sgn(lcb) < 0 && delta_plus1 % 2 != 0)
    for (Int& c : r) c = -c;
  return r;
}

/// Sign of the integer polynomial at the rational point num/den (den > 0),
/// via homogeneous Horner so everything stays integral.
inline int int_poly_sign_at(const std::vector<Int>& c, const Int& num, const Int& den) {
  if (c.empty()) return 0;
  Int v = c.back();
  Int dp(1);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp *= den;
    v = v * num + c[i] * dp;
  }
  return sgn(v);
}

inline int int_poly_sign_at(const std::vector<Int>& c, const Rat& x) {
  return int_poly_sign_at(c, x.get_num(), x.get_den());
}

}  // namespace detail

/// Signed-remainder chain with every element replaced by a positive rational
/// multiple (primitive integer form), so sign-variation counts match the
/// textbook chain exactly while coefficient growth stays controlled.
class SturmChain {
 public:
  explicit SturmChain(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    std::vector<Int> p0 = detail::to_int_poly(p);
    detail::int_poly_make_primitive(p0);
    chain_.push_back(std::move(p0));
    if (chain_[0].size() <= 1) return;
    std::vector<Int> p1 = detail::int_poly_derivative(chain_[0]);
    detail::int_poly_make_primitive(p1);
    chain_.push_back(std::move(p1));
    while (chain_.back().size() > 1) {
      std::vector<Int> r = detail::pseudo_rem_pos(chain_[chain_.size() - 2], chain_.back());
      if (r.empty()) break;
      for (Int& c : r) c = -c;
      detail::int_poly_make_primitive(r);
      chain_.push_back(std::move(r));
    }
  }

  /// Sign of the underlying polynomial at x.
  int sign_at(const Rat& x) const { return detail::int_poly_sign_at(chain_[0], x); }

  bool is_root(const Rat& x) const { return sign_at(x) == 0; }

  int variations_at(const Rat& x) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
      const int s = detail::int_poly_sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  int variations_at_pos_inf() const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
      if (q.empty()) continue;
      const int s = sgn(q.back());
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  int variations_at_neg_inf() const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
      if (q.empty()) continue;
      int s = sgn(q.back());
      if ((q.size() - 1) % 2 != 0) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Number of distinct real roots in (lo, hi). Endpoints must not be roots;
  /// a violation raises endpoint_root_error as a retry signal.
  int count_open(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("count_open: lo < hi required");
    if (sign_at(lo) == 0) throw endpoint_root_error(lo);
    if (sign_at(hi) == 0) throw endpoint_root_error(hi);
    return variations_at(lo) - variations_at(hi);
  }

  /// Number of distinct real roots on the whole line.
  int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

  const std::vector<std::vector<Int>>& elements() const { return chain_; }

 private:
  std::vector<std::vector<Int>> chain_;
};

/// Exact count of distinct real roots of squarefree p in (lo, hi].
/// Endpoint roots raise endpoint_root_error (callers usually want
/// count_roots_in below, which deflates them instead).
inline int sturm_count(const ExactPoly& p, const Rat& lo, const Rat& hi) {
  const SturmChain chain(p);
  int n = chain.count_open(lo, hi);
  return n;
}

/// Primitive-remainder gcd of p and p'; constant iff p is squarefree.
inline ExactPoly poly_gcd_with_derivative(const ExactPoly& p) {
  if (p.is_zero() || p.degree() < 1) return ExactPoly::constant(Rat(1));
  std::vector<Int> a = detail::to_int_poly(p);
  detail::int_poly_make_primitive(a);
  std::vector<Int> b = detail::int_poly_derivative(a);
  detail::int_poly_make_primitive(b);
  while (!b.empty()) {
    std::vector<Int> r = detail::pseudo_rem_pos(a, b);
    detail::int_poly_make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rat> c;
  c.reserve(a.size());
  for (const Int& v : a) c.emplace_back(v);
  return ExactPoly(std::move(c));
}

inline bool is_squarefree(const ExactPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() < 1) return true;
  return poly_gcd_with_derivative(p).degree() == 0;
}

/// p divided by gcd(p, p'): same distinct roots, all simple.
inline ExactPoly squarefree_part(const ExactPoly& p) {
  if (p.is_zero() || p.degree() < 1) return p;
  const ExactPoly g = poly_gcd_with_derivative(p);
  if (g.degree() == 0) return p;
  auto [q, r] = divrem(p, g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: inexact gcd division");
  return q;
}

/// 1 + max |c_i| / |c_deg|: every complex root has modulus strictly below.
inline Rat cauchy_root_bound(const ExactPoly& p) {
  if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("cauchy_root_bound: nonconstant required");
  const Rat lead = rat_abs(p.leading());
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    const Rat a = rat_abs(p.coeff(static_cast<std::size_t>(i)));
    if (a > m) m = a;
  }
  return Rat(1 + m / lead);
}

/// Distinct-root count of p on an interval with chosen endpoint inclusion.
/// Endpoint roots are handled exactly by synthetic-division deflation.
inline int count_roots_in(const ExactPoly& p, const Rat& lo, const Rat& hi,
                          bool include_lo, bool include_hi) {
  if (!(lo < hi)) throw std::invalid_argument("count_roots_in: lo < hi required");
  if (p.is_zero()) throw std::invalid_argument("count_roots_in: zero polynomial");
  if (p.degree() == 0) return 0;
  ExactPoly q = squarefree_part(p);
  const bool lo_root = sgn(q.evaluate(lo)) == 0;
  const bool hi_root = sgn(q.evaluate(hi)) == 0;
  if (lo_root) q = deflate_root(q, lo);
  if (hi_root && !q.is_zero() && q.degree() >= 1 && sgn(q.evaluate(hi)) == 0)
    q = deflate_root(q, hi);
  int inner = 0;
  if (!q.is_zero() && q.degree() >= 1) inner = SturmChain(q).count_open(lo, hi);
  return inner + (include_lo && lo_root ? 1 : 0) + (include_hi && hi_root ? 1 : 0);
}

}  // namespace polyzero
