#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "polyzero/polynomial.hpp"
#include "polyzero/rational.hpp"
#include "polyzero/real_roots.hpp"

namespace polyzero {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// All complex roots of one polynomial in float precision, sorted by
/// descending modulus, with per-root relative residuals. `converged` is
/// honest: callers must never trust an unconverged set.
struct ComplexRootSet {
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;
  bool converged = false;
  int iterations = 0;
};

namespace detail {

/// Monic double coefficients c_0..c_{n-1} (the leading 1 is implicit).
/// Denominators are cleared exactly first so huge-denominator families
/// normalize without float blowup.
inline std::vector<double> monic_double_coeffs(const ExactPoly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("monic_double_coeffs: degree >= 1 required");
  const ExactPoly q = integer_clear_denominators(p);
  const int n = q.degree();
  std::vector<double> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rat r(q.coeff(static_cast<std::size_t>(i)) / q.leading());
    c[static_cast<std::size_t>(i)] = to_double(r);
    if (!std::isfinite(c[static_cast<std::size_t>(i)]))
      throw std::domain_error("monic_double_coeffs: coefficient overflows double");
  }
  return c;
}

inline std::complex<double> eval_monic(const std::vector<double>& c,
                                       const std::complex<double>& z) {
  std::complex<double> v(1.0, 0.0);
  for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
  return v;
}

inline std::complex<double> eval_monic_derivative(const std::vector<double>& c,
                                                  const std::complex<double>& z) {
  const std::size_t n = c.size();
  std::complex<double> v(static_cast<double>(n), 0.0);
  for (std::size_t i = n; i-- > 1;) v = v * z + static_cast<double>(i) * c[i];
  return v;
}

/// |p(z)| / (sum_i |c_i| |z|^i): relative backward-error style residual.
inline double residual_monic(const std::vector<double>& c, const std::complex<double>& z) {
  const double az = std::abs(z);
  double scale = 0.0;
  double pw = 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    scale += std::abs(c[i]) * pw;
    pw *= az;
  }
  scale += pw;  // the monic leading term
  const double num = std::abs(eval_monic(c, z));
  if (num == 0.0) return 0.0;
  return num / std::max(scale, 1e-300);
}

}  // namespace detail

/// Simultaneous Newton-like iteration converging to all roots at once.
/// Initial guesses sit on a circle of radius given by the Cauchy bound with
/// deterministically seeded phase jitter, so runs are reproducible.
inline ComplexRootSet all_roots(const ExactPoly& p, int max_iter = 400,
                                double residual_tol = 1e-12,
                                std::uint64_t seed = kDefaultSeed) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("all_roots: degree >= 1 required");
  if (p.degree() > 200) throw std::domain_error("all_roots: degree cap 200 exceeded");
  const std::vector<double> c = detail::monic_double_coeffs(p);
  const std::size_t n = c.size();

  ComplexRootSet out;
  out.roots.resize(n);
  out.residuals.assign(n, 0.0);

  if (n == 1) {
    out.roots[0] = std::complex<double>(-c[0], 0.0);
    out.converged = true;
    out.iterations = 0;
    return out;
  }

  double maxc = 0.0;
  for (double v : c) maxc = std::max(maxc, std::abs(v));
  const double radius = 1.0 + maxc;

  std::mt19937_64 rng(seed);
  const auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);  // [0,1)
  };
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    const double theta =
        two_pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n) + 0.41 +
        (unit() - 0.5) * (two_pi / (4.0 * static_cast<double>(n)));
    out.roots[i] = std::polar(0.75 * radius, theta);
  }

  int it = 0;
  for (; it < max_iter; ++it) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::complex<double> zi = out.roots[i];
      const std::complex<double> pv = detail::eval_monic(c, zi);
      const std::complex<double> dv = detail::eval_monic_derivative(c, zi);
      std::complex<double> newton;
      if (std::abs(dv) == 0.0) {
        newton = std::complex<double>(1e-8, 1e-8);
      } else {
        newton = pv / dv;
      }
      std::complex<double> repulsion(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::complex<double> d = zi - out.roots[j];
        if (std::abs(d) == 0.0) {
          repulsion += 1e12;
          continue;
        }
        repulsion += 1.0 / d;
      }
      const std::complex<double> denom = 1.0 - newton * repulsion;
      const std::complex<double> w = std::abs(denom) < 1e-300 ? newton : newton / denom;
      out.roots[i] = zi - w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(zi)));
    }
    if (worst < 1e-16) {
      ++it;
      break;
    }
  }
  out.iterations = it;

  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    out.residuals[i] = detail::residual_monic(c, out.roots[i]);
    ok = ok && out.residuals[i] <= residual_tol;
  }
  out.converged = ok;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&out](std::size_t a, std::size_t b) {
    const double ma = std::abs(out.roots[a]);
    const double mb = std::abs(out.roots[b]);
    if (ma != mb) return ma > mb;
    if (out.roots[a].real() != out.roots[b].real()) return out.roots[a].real() > out.roots[b].real();
    return out.roots[a].imag() > out.roots[b].imag();
  });
  std::vector<std::complex<double>> rs(n);
  std::vector<double> res(n);
  for (std::size_t i = 0; i < n; ++i) {
    rs[i] = out.roots[order[i]];
    res[i] = out.residuals[order[i]];
  }
  out.roots = std::move(rs);
  out.residuals = std::move(res);
  return out;
}

/// Relative error of prod(roots) against (-1)^n c_0 / c_n.
inline double vieta_product_rel_error(const ExactPoly& p, const ComplexRootSet& rs) {
  const int n = p.degree();
  std::complex<double> prod(1.0, 0.0);
  for (const auto& z : rs.roots) prod *= z;
  double expect = to_double(Rat(p.coeff(0) / p.leading()));
  if (n % 2 != 0) expect = -expect;
  const double scale = std::max(1.0, std::abs(expect));
  return std::abs(prod - expect) / scale;
}

/// Relative error of sum(roots) against -c_{n-1} / c_n.
inline double vieta_sum_rel_error(const ExactPoly& p, const ComplexRootSet& rs) {
  const int n = p.degree();
  std::complex<double> sum(0.0, 0.0);
  for (const auto& z : rs.roots) sum += z;
  const double expect = -to_double(Rat(p.coeff(static_cast<std::size_t>(n - 1)) / p.leading()));
  const double scale = std::max(1.0, std::abs(expect));
  return std::abs(sum - expect) / scale;
}

struct ModulusBoundReport {
  bool ok = false;
  std::size_t dominant_index = 0;
  double dominant = 0.0;
  double max_other_modulus = 0.0;
  double margin = 0.0;
};

/// Checks that every root other than the certified dominant one has modulus
/// strictly below it. Exactly one float root must match the dominant
/// enclosure within slack; ambiguity throws (tolerances are misconfigured).
inline ModulusBoundReport check_modulus_bound(const ComplexRootSet& rs, const RootRecord& dominant,
                                              double slack = 1e-6) {
  if (!rs.converged) throw std::invalid_argument("check_modulus_bound: unconverged root set");
  const double dom = to_double(dominant.approx);
  const double tol = slack + to_double(dominant.interval.width());
  std::vector<std::size_t> matches;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (std::abs(rs.roots[i] - std::complex<double>(dom, 0.0)) <= tol) matches.push_back(i);
  }
  if (matches.size() != 1)
    throw std::domain_error("check_modulus_bound: dominant root match count is " +
                            std::to_string(matches.size()));
  ModulusBoundReport rep;
  rep.dominant_index = matches[0];
  rep.dominant = dom;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (i == matches[0]) continue;
    rep.max_other_modulus = std::max(rep.max_other_modulus, std::abs(rs.roots[i]));
  }
  rep.margin = dom - rep.max_other_modulus;
  rep.ok = rs.roots.size() == 1 || rep.max_other_modulus < dom;
  return rep;
}

/// Convenience overload computing the root set itself, deterministically.
inline ModulusBoundReport check_modulus_bound(const ExactPoly& p, const RootRecord& dominant,
                                              double slack = 1e-6,
                                              std::uint64_t seed = kDefaultSeed) {
  return check_modulus_bound(all_roots(p, 400, 1e-12, seed), dominant, slack);
}

}  // namespace polyzero
