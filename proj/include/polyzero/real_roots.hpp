#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyzero/families.hpp"
#include "polyzero/polynomial.hpp"
#include "polyzero/rational.hpp"
#include "polyzero/sturm.hpp"

namespace polyzero {

/// Interval certified to contain exactly one real root of its polynomial.
/// Endpoint signs are signs of the polynomial there; both 0 with lo == hi
/// marks an exactly-known rational root (width-zero enclosure).
struct IsolatingInterval {
  Rat lo;
  Rat hi;
  int sign_lo = 0;
  int sign_hi = 0;

  bool exact() const { return sign_lo == 0 && sign_hi == 0; }
  Rat width() const { return Rat(hi - lo); }
  Rat midpoint() const { return exact() ? lo : Rat((lo + hi) / 2); }
};

/// One refined real root: optional family tag, certified enclosure, and a
/// rational approximation (the enclosure midpoint) within `tol`.
struct RootRecord {
  std::optional<FamilySpec> spec;
  IsolatingInterval interval;
  Rat approx;
  Rat tol;
};

inline nlohmann::ordered_json root_record_to_json(const RootRecord& r, int frac_digits = 18) {
  nlohmann::ordered_json j;
  if (r.spec) j["spec"] = spec_to_json(*r.spec);
  j["lo"] = to_frac_string(r.interval.lo);
  j["hi"] = to_frac_string(r.interval.hi);
  j["approx_decimal"] = to_decimal_string(r.approx, frac_digits);
  j["tol"] = to_frac_string(r.tol);
  return j;
}

/// A root enclosure that can be bisected on demand. Holds the primitive
/// integer form of the (squarefree) polynomial for fast exact sign queries.
class RefinableRoot {
 public:
  RefinableRoot(const ExactPoly& p, IsolatingInterval iv) : iv_(std::move(iv)) {
    if (p.is_zero() || p.degree() < 1)
      throw std::invalid_argument("RefinableRoot: nonconstant polynomial required");
    ip_ = detail::to_int_poly(p);
    detail::int_poly_make_primitive(ip_);
    if (iv_.exact()) {
      if (detail::int_poly_sign_at(ip_, iv_.lo) != 0)
        throw std::invalid_argument("RefinableRoot: claimed exact root is not a root");
      iv_.hi = iv_.lo;
      return;
    }
    iv_.sign_lo = detail::int_poly_sign_at(ip_, iv_.lo);
    iv_.sign_hi = detail::int_poly_sign_at(ip_, iv_.hi);
    if (iv_.sign_lo == 0 || iv_.sign_hi == 0 || iv_.sign_lo == iv_.sign_hi)
      throw std::invalid_argument("RefinableRoot: interval is not sign-isolating");
  }

  const IsolatingInterval& interval() const { return iv_; }
  bool exact() const { return iv_.exact(); }
  Rat width() const { return iv_.width(); }
  Rat midpoint() const { return iv_.midpoint(); }

  void bisect() {
    if (iv_.exact()) return;
    const Rat mid = iv_.midpoint();
    const int s = detail::int_poly_sign_at(ip_, mid);
    if (s == 0) {
      iv_ = IsolatingInterval{mid, mid, 0, 0};
    } else if (s == iv_.sign_lo) {
      iv_.lo = mid;
    } else {
      iv_.hi = mid;
      iv_.sign_hi = s;
    }
  }

  void refine_to(const Rat& tol) {
    if (sgn(tol) <= 0) throw std::invalid_argument("refine_to: tol > 0 required");
    while (!iv_.exact() && iv_.width() > tol) bisect();
  }

  RootRecord record(const Rat& tol, std::optional<FamilySpec> spec = std::nullopt) {
    refine_to(tol);
    return RootRecord{std::move(spec), iv_, iv_.midpoint(), tol};
  }

 private:
  std::vector<Int> ip_;
  IsolatingInterval iv_;
};

enum class RootOrder { less, equal, greater };

/// Orders two certified roots by adaptive refinement until the enclosures
/// are disjoint. Returns nullopt if max_bisections is exhausted (callers
/// treat that as an unresolved comparison, never as an answer).
inline std::optional<RootOrder> compare_roots(RefinableRoot& a, RefinableRoot& b,
                                              int max_bisections = 2048) {
  for (int step = 0; step <= max_bisections; ++step) {
    const IsolatingInterval& ia = a.interval();
    const IsolatingInterval& ib = b.interval();
    if (ia.exact() && ib.exact()) {
      if (ia.lo < ib.lo) return RootOrder::less;
      if (ia.lo > ib.lo) return RootOrder::greater;
      return RootOrder::equal;
    }
    if (ia.hi < ib.lo || (ia.hi == ib.lo && !(ia.exact() && ib.exact()))) return RootOrder::less;
    if (ib.hi < ia.lo || (ib.hi == ia.lo && !(ia.exact() && ib.exact()))) return RootOrder::greater;
    if (a.width() >= b.width()) a.bisect();
    else b.bisect();
  }
  return std::nullopt;
}

/// Compares |root_a - t| against |root_b - t| via exact interval hulls,
/// refining until the hulls separate. nullopt when unresolved.
inline std::optional<bool> abs_gap_less(RefinableRoot& a, RefinableRoot& b, const Rat& t,
                                        int max_bisections = 2048) {
  const auto abs_hull = [&t](const IsolatingInterval& iv) {
    const Rat lo(iv.lo - t);
    const Rat hi(iv.hi - t);
    if (sgn(lo) >= 0) return std::pair<Rat, Rat>(lo, hi);
    if (sgn(hi) <= 0) return std::pair<Rat, Rat>(Rat(-hi), Rat(-lo));
    return std::pair<Rat, Rat>(Rat(0), std::max(Rat(-lo), hi));
  };
  for (int step = 0; step <= max_bisections; ++step) {
    const auto [alo, ahi] = abs_hull(a.interval());
    const auto [blo, bhi] = abs_hull(b.interval());
    if (ahi < blo) return true;
    if (bhi < alo) return false;
    if (a.width() >= b.width() && !a.exact()) a.bisect();
    else if (!b.exact()) b.bisect();
    else if (!a.exact()) a.bisect();
    else return std::nullopt;
  }
  return std::nullopt;
}

/// Shared machinery for isolating the real roots of one polynomial: the
/// squarefree part, its Sturm chain, and the Cauchy bound, built once.
class IsolationContext {
 public:
  explicit IsolationContext(const ExactPoly& p)
      : sf_(squarefree_part(p)), chain_(sf_), bound_(cauchy_root_bound(sf_)) {
    if (p.is_zero() || p.degree() < 1)
      throw std::invalid_argument("IsolationContext: nonconstant polynomial required");
  }

  const ExactPoly& squarefree() const { return sf_; }
  const SturmChain& chain() const { return chain_; }
  const Rat& bound() const { return bound_; }

  int count_open(const Rat& lo, const Rat& hi) const { return chain_.count_open(lo, hi); }
  int count_all() const { return chain_.count_all(); }

  /// Disjoint isolating intervals, one per distinct root in (lo, hi).
  /// Endpoints must not be roots.
  std::vector<IsolatingInterval> isolate_in(const Rat& lo, const Rat& hi) const {
    struct Node {
      Rat lo, hi;
      int vlo, vhi, slo, shi;
    };
    const int slo = chain_.sign_at(lo);
    const int shi = chain_.sign_at(hi);
    if (slo == 0) throw endpoint_root_error(lo);
    if (shi == 0) throw endpoint_root_error(hi);
    std::vector<IsolatingInterval> out;
    std::vector<Node> stack{{lo, hi, chain_.variations_at(lo), chain_.variations_at(hi), slo, shi}};
    while (!stack.empty()) {
      Node n = std::move(stack.back());
      stack.pop_back();
      const int c = n.vlo - n.vhi;
      if (c <= 0) continue;
      if (c == 1) {
        out.push_back(IsolatingInterval{n.lo, n.hi, n.slo, n.shi});
        continue;
      }
      // Split at the midpoint, stepping aside if it happens to be a root.
      Rat mid((n.lo + n.hi) / 2);
      Rat step((n.hi - n.lo) / 4);
      int smid = chain_.sign_at(mid);
      while (smid == 0) {
        mid += step;
        step /= 2;
        smid = chain_.sign_at(mid);
      }
      const int vmid = chain_.variations_at(mid);
      stack.push_back(Node{n.lo, mid, n.vlo, vmid, n.slo, smid});
      stack.push_back(Node{mid, n.hi, vmid, n.vhi, smid, n.shi});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
    separate_touching(out);
    return out;
  }

  std::vector<IsolatingInterval> isolate_all() const { return isolate_in(-bound_, bound_); }

 private:
  void separate_touching(std::vector<IsolatingInterval>& ivs) const {
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      while (ivs[i - 1].hi == ivs[i].lo) {
        IsolatingInterval& left = ivs[i - 1];
        const Rat mid = left.midpoint();
        const int s = chain_.sign_at(mid);
        if (s == 0) {
          left = IsolatingInterval{mid, mid, 0, 0};
          break;
        }
        if (s == left.sign_lo) left.lo = mid;
        else {
          left.hi = mid;
          left.sign_hi = s;
        }
      }
    }
  }

  ExactPoly sf_;
  SturmChain chain_;
  Rat bound_;
};

/// Disjoint isolating intervals, one per distinct real root of p.
inline std::vector<IsolatingInterval> isolate_real_roots(const ExactPoly& p) {
  return IsolationContext(p).isolate_all();
}

/// Bisection refinement of a certified interval down to `tol`, tracking
/// signs exactly. The returned enclosure still contains exactly one root.
inline RootRecord refine_root(const ExactPoly& p, const IsolatingInterval& iv, const Rat& tol,
                              std::optional<FamilySpec> spec = std::nullopt) {
  RefinableRoot r(squarefree_part(p), iv);
  return r.record(tol, std::move(spec));
}

/// The roots of p split by sign. p(0) must be nonzero.
struct SignedRoots {
  std::vector<IsolatingInterval> negative;
  std::vector<IsolatingInterval> positive;
};

inline SignedRoots isolate_signed_roots(const IsolationContext& ctx) {
  if (ctx.chain().sign_at(Rat(0)) == 0)
    throw std::invalid_argument("isolate_signed_roots: zero is a root");
  SignedRoots out;
  out.negative = ctx.isolate_in(-ctx.bound(), Rat(0));
  out.positive = ctx.isolate_in(Rat(0), ctx.bound());
  return out;
}

/// The unique positive root of p, as a refinable enclosure; throws if the
/// positive-root count is not exactly one.
inline RefinableRoot unique_positive_root(const IsolationContext& ctx) {
  const auto pos = ctx.isolate_in(Rat(0), ctx.bound());
  if (pos.size() != 1)
    throw std::domain_error("unique_positive_root: positive-root count is " +
                            std::to_string(pos.size()));
  return RefinableRoot(ctx.squarefree(), pos[0]);
}

inline RefinableRoot unique_negative_root(const IsolationContext& ctx) {
  const auto neg = ctx.isolate_in(-ctx.bound(), Rat(0));
  if (neg.size() != 1)
    throw std::domain_error("unique_negative_root: negative-root count is " +
                            std::to_string(neg.size()));
  return RefinableRoot(ctx.squarefree(), neg[0]);
}

}  // namespace polyzero
