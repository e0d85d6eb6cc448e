#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyzero/rational.hpp"

namespace polyzero {

/// Dense univariate polynomial, coefficients stored by ascending power.
/// The zero polynomial is the empty coefficient list; its degree is an
/// error to query. No trailing zero coefficients are ever stored.
template <class T>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

  static Poly monomial(int deg, T lead) {
    if (deg < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<T> c(static_cast<std::size_t>(deg) + 1, T(0));
    c.back() = std::move(lead);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  int degree() const {
    if (c_.empty()) throw std::logic_error("degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }

  /// Coefficient of x^i; zero beyond the degree.
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  std::span<const T> coeffs() const { return c_; }

  const T& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  /// Horner evaluation; exact when T is exact.
  T evaluate(const T& x) const {
    T r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = T(r * x + *it);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(c_[i] * T(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  /// Formal antiderivative with the constant of integration fixed to -1,
  /// the convention every integral family here is built on.
  Poly antiderivative_minus_one() const {
    std::vector<T> a(c_.size() + 1);
    a[0] = T(-1);
    for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = T(c_[i] / T(static_cast<long>(i + 1)));
    return Poly(std::move(a));
  }

  /// Substitutes x -> -x: roots of the result are negatives of roots of *this.
  Poly reflect() const {
    std::vector<T> r(c_);
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = T(-r[i]);
    return Poly(std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> s(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) s[i] = T(s[i] + a.c_[i]);
    for (std::size_t i = 0; i < b.c_.size(); ++i) s[i] = T(s[i] + b.c_[i]);
    return Poly(std::move(s));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> s(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) s[i] = T(s[i] + a.c_[i]);
    for (std::size_t i = 0; i < b.c_.size(); ++i) s[i] = T(s[i] - b.c_[i]);
    return Poly(std::move(s));
  }

  friend Poly operator-(const Poly& a) { return Poly::constant(T(-1)) * a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> s(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) s[i + j] = T(s[i + j] + a.c_[i] * b.c_[j]);
    return Poly(std::move(s));
  }

  friend Poly operator*(const T& k, const Poly& a) {
    std::vector<T> s(a.c_);
    for (auto& v : s) v = T(v * k);
    return Poly(std::move(s));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using ExactPoly = Poly<Rat>;

inline ExactPoly poly_from_coeffs(std::initializer_list<long> asc) {
  std::vector<Rat> c;
  c.reserve(asc.size());
  for (long v : asc) c.emplace_back(v);
  return ExactPoly(std::move(c));
}

inline ExactPoly poly_pow(const ExactPoly& base, unsigned e) {
  ExactPoly r = ExactPoly::constant(Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

/// Multiplies by the positive lcm of coefficient denominators; the root set
/// (and the sign of every evaluation) is unchanged.
inline ExactPoly integer_clear_denominators(const ExactPoly& p) {
  Int l(1);
  for (const Rat& c : p.coeffs()) {
    Int g;
    mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    l = g;
  }
  return Rat(l) * p;
}

/// Exact quotient and remainder over the rationals; b must be nonzero.
inline std::pair<ExactPoly, ExactPoly> divrem(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.is_zero() || a.degree() < db) return {ExactPoly(), ExactPoly(std::move(rem))};
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (rem.size() <= ui || sgn(rem[ui]) == 0) continue;
    const Rat q(rem[ui] / b.leading());
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

/// Divides out a known rational root by synthetic division.
inline ExactPoly deflate_root(const ExactPoly& p, const Rat& root) {
  if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("deflate_root: degree < 1");
  const int n = p.degree();
  std::vector<Rat> q(static_cast<std::size_t>(n), Rat(0));
  Rat carry = p.coeff(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    q[static_cast<std::size_t>(i)] = carry;
    carry = Rat(p.coeff(static_cast<std::size_t>(i)) + carry * root);
  }
  if (sgn(carry) != 0) throw std::invalid_argument("deflate_root: not a root");
  return ExactPoly(std::move(q));
}

inline nlohmann::ordered_json poly_to_json(const ExactPoly& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(to_frac_string(c));
  return nlohmann::ordered_json{{"coeffs", std::move(coeffs)}};
}

inline ExactPoly poly_from_json(const nlohmann::json& j) {
  std::vector<Rat> c;
  for (const auto& v : j.at("coeffs")) c.push_back(rat_from_frac_string(v.get<std::string>()));
  return ExactPoly(std::move(c));
}

inline std::string poly_to_string(const ExactPoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat c = p.coeff(static_cast<std::size_t>(i));
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) out += "-";
    const Rat a = rat_abs(c);
    const bool unit = (a == 1) && i > 0;
    if (!unit) out += to_frac_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace polyzero
