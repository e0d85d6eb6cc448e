#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polyzero/polynomial.hpp"
#include "polyzero/rational.hpp"

namespace polyzero {

// The four polynomial families:
//   F_k          = x^k - x^{k-1} - ... - x - 1          (degree k)
//   D_j (order l) = l-th derivative of F_{j+l}           (degree j)
//   I_j          = antiderivative of F_j, constant -1    (degree j+1)
//   H_k (depth l) = (l+2)-fold antiderivative of F_{k-l-1}, constant -1
//                   at every stage                       (degree k+1)
enum class Family { F, D, I, H };

inline char family_letter(Family f) {
  switch (f) {
    case Family::F: return 'F';
    case Family::D: return 'D';
    case Family::I: return 'I';
    case Family::H: return 'H';
  }
  throw std::logic_error("bad family");
}

inline Family family_from_letter(char c) {
  switch (c) {
    case 'F': return Family::F;
    case 'D': return Family::D;
    case 'I': return Family::I;
    case 'H': return Family::H;
    default: throw std::invalid_argument(std::string("unknown family: ") + c);
  }
}

/// Parameter block naming one family member. `l` is the derivative order
/// for D and the integral depth for H; it is ignored for F and I.
struct FamilySpec {
  Family family = Family::F;
  int k = 1;
  int l = 0;

  void validate() const {
    switch (family) {
      case Family::F:
        if (k < 1) throw std::invalid_argument("F requires k >= 1");
        break;
      case Family::D:
        if (l < 1) throw std::invalid_argument("D requires l >= 1");
        if (k <= l) throw std::invalid_argument("D requires k > l");
        break;
      case Family::I:
        if (k < 1) throw std::invalid_argument("I requires k >= 1");
        break;
      case Family::H:
        // Depth parameter admits l = -1, which coincides with the first
        // integral I_k.
        if (l < -1 || l + 1 >= k) throw std::invalid_argument("H requires 0 <= l+1 < k");
        break;
    }
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline nlohmann::ordered_json spec_to_json(const FamilySpec& s) {
  return nlohmann::ordered_json{
      {"family", std::string(1, family_letter(s.family))}, {"k", s.k}, {"l", s.l}};
}

inline FamilySpec spec_from_json(const nlohmann::json& j) {
  FamilySpec s;
  const std::string fam = j.at("family").get<std::string>();
  if (fam.size() != 1) throw std::invalid_argument("bad family string: " + fam);
  s.family = family_from_letter(fam[0]);
  s.k = j.at("k").get<int>();
  s.l = j.value("l", 0);
  s.validate();
  return s;
}

/// F_k(x) = x^k - sum_{t<k} x^t; leading coefficient 1, all lower -1.
inline ExactPoly make_F(int k) {
  if (k < 1) throw std::invalid_argument("make_F: k >= 1 required");
  std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(-1));
  c.back() = Rat(1);
  return ExactPoly(std::move(c));
}

/// Degree-j polynomial equal to the l-th derivative of F_{j+l}, built from
/// the closed form l!*(binom(j+l,l) x^j - sum_{t<j} binom(t+l,l) x^t).
/// D_0 = l!.
inline ExactPoly make_D(int j, int l) {
  if (j < 0) throw std::invalid_argument("make_D: j >= 0 required");
  if (l < 1) throw std::invalid_argument("make_D: l >= 1 required");
  const Rat lf(factorial(static_cast<unsigned long>(l)));
  if (j == 0) return ExactPoly::constant(lf);
  std::vector<Rat> c(static_cast<std::size_t>(j) + 1);
  for (int t = 0; t < j; ++t)
    c[static_cast<std::size_t>(t)] =
        Rat(-lf * Rat(binomial(static_cast<unsigned long>(t + l), static_cast<unsigned long>(l))));
  c.back() = Rat(lf * Rat(binomial(static_cast<unsigned long>(j + l), static_cast<unsigned long>(l))));
  return ExactPoly(std::move(c));
}

/// Numerator of the rational closed form of the l-th derivative of F_k:
/// make_D(k-l, l) * (x-1)^{l+1}, computed by exact multiplication.
inline ExactPoly make_D_numerator(int k, int l) {
  if (l < 1 || k <= l) throw std::invalid_argument("make_D_numerator: k > l >= 1 required");
  return make_D(k - l, l) * poly_pow(poly_from_coeffs({-1, 1}), static_cast<unsigned>(l + 1));
}

/// I_j = antiderivative of F_j with constant -1 (degree j+1).
inline ExactPoly make_I(int j) {
  if (j < 1) throw std::invalid_argument("make_I: j >= 1 required");
  return make_F(j).antiderivative_minus_one();
}

/// H_k = (l+2)-fold antiderivative of F_{k-l-1}, constant -1 at each stage
/// (degree k+1). l = -1 coincides with make_I(k).
inline ExactPoly make_H(int k, int l) {
  if (l < -1 || l + 1 >= k) throw std::invalid_argument("make_H: 0 <= l+1 < k required");
  ExactPoly p = make_F(k - l - 1);
  for (int i = 0; i < l + 2; ++i) p = p.antiderivative_minus_one();
  return p;
}

/// The explicit display of H_k:
///   x^{k+1}/((l+2)! binom(k+1,l+2))
///   - sum_{t=l+2}^{k} x^t/((l+2)! binom(t,l+2))
///   - sum_{s=0}^{l+1} x^s/s!
/// Used as an independent construction route against make_H.
inline ExactPoly make_H_closed_form(int k, int l) {
  if (l < -1 || l + 1 >= k) throw std::invalid_argument("make_H_closed_form: 0 <= l+1 < k required");
  const unsigned long d = static_cast<unsigned long>(l + 2);
  const Rat dfac(factorial(d));
  std::vector<Rat> c(static_cast<std::size_t>(k) + 2, Rat(0));
  for (int s = 0; s <= l + 1; ++s)
    c[static_cast<std::size_t>(s)] = Rat(Rat(-1) / Rat(factorial(static_cast<unsigned long>(s))));
  for (int t = l + 2; t <= k; ++t)
    c[static_cast<std::size_t>(t)] =
        Rat(Rat(-1) / (dfac * Rat(binomial(static_cast<unsigned long>(t), d))));
  c.back() = Rat(Rat(1) / (dfac * Rat(binomial(static_cast<unsigned long>(k) + 1, d))));
  return ExactPoly(std::move(c));
}

inline ExactPoly make_family(const FamilySpec& s) {
  s.validate();
  switch (s.family) {
    case Family::F: return make_F(s.k);
    case Family::D: return make_D(s.k - s.l, s.l);
    case Family::I: return make_I(s.k);
    case Family::H: return make_H(s.k, s.l);
  }
  throw std::logic_error("bad family");
}

/// Order-k recurrence sequence: each term is the sum of the previous k,
/// seeded 1, 1, 2, 4, ..., 2^{k-2}.
struct BigIntSequence {
  int order = 2;
  std::vector<Int> terms;
};

inline BigIntSequence g_sequence(int k, int count) {
  if (k < 2) throw std::invalid_argument("g_sequence: k >= 2 required");
  if (count < 1) throw std::invalid_argument("g_sequence: count >= 1 required");
  BigIntSequence seq;
  seq.order = k;
  seq.terms.reserve(static_cast<std::size_t>(count));
  for (int t = 1; t <= count; ++t) {
    if (t == 1) {
      seq.terms.emplace_back(1);
    } else if (t <= k) {
      seq.terms.push_back(int_pow(2, static_cast<unsigned long>(t - 2)));
    } else {
      Int s(0);
      for (int i = 1; i <= k; ++i) s += seq.terms[static_cast<std::size_t>(t - 1 - i)];
      seq.terms.push_back(std::move(s));
    }
  }
  return seq;
}

/// Ratio of successive terms, as float. Diagnostic only: for growing l the
/// ratio approaches the positive root of F_k.
inline double g_ratio(int k, int l) {
  if (l < 1) throw std::invalid_argument("g_ratio: l >= 1 required");
  const BigIntSequence seq = g_sequence(k, l + 1);
  return to_double(make_rat(seq.terms[static_cast<std::size_t>(l)],
                            seq.terms[static_cast<std::size_t>(l - 1)]));
}

/// Checks the three-way reciprocal-sum identity exactly:
///   (c^{-2(n+1)} - 1)/(1+c)
///     = c^{-(n+2)} sum_{i=1}^{n+1} binom(n+i,2i-1) (1-c)^{2i-1} c^{-(i-1)}
///     = sum_{s=1}^{2(n+1)} (-1)^s c^{-s}.
inline bool check_identity_1_2(const Rat& c, int n) {
  if (n < 0) throw std::invalid_argument("check_identity_1_2: n >= 0 required");
  if (sgn(c) == 0 || c == Rat(-1)) throw std::invalid_argument("check_identity_1_2: c must avoid 0 and -1");
  const long m = 2L * (n + 1);
  const Rat lhs((rat_pow(c, -m) - 1) / (Rat(1) + c));
  Rat mid(0);
  const Rat one_minus_c(Rat(1) - c);
  for (int i = 1; i <= n + 1; ++i) {
    Rat term(Rat(binomial(static_cast<unsigned long>(n + i), static_cast<unsigned long>(2 * i - 1))) *
             rat_pow(one_minus_c, 2L * i - 1) * rat_pow(c, -(i - 1L)));
    mid += term;
  }
  mid *= rat_pow(c, -(n + 2L));
  Rat rhs(0);
  for (long s = 1; s <= m; ++s) rhs += Rat(s % 2 == 0 ? 1 : -1) * rat_pow(c, -s);
  return lhs == mid && mid == rhs;
}

/// The c -> -1 limit of the identity above, as an exact integer statement:
///   2(n+1) = sum_{i=1}^{n+1} binom(n+i,2i-1) 2^{2i-1} (-1)^{n+i+1}.
inline bool check_polya_limit_identity(int n) {
  if (n < 0) throw std::invalid_argument("check_polya_limit_identity: n >= 0 required");
  Int rhs(0);
  for (int i = 1; i <= n + 1; ++i) {
    Int term(binomial(static_cast<unsigned long>(n + i), static_cast<unsigned long>(2 * i - 1)) *
             int_pow(2, static_cast<unsigned long>(2 * i - 1)));
    if ((n + i + 1) % 2 != 0) term = -term;
    rhs += term;
  }
  return rhs == Int(2 * (n + 1));
}

/// Which sign variant of the numerator coefficient recurrence holds when
/// stepping the derivative order from l to l+1 (same k). The closed-form
/// numerator is N_l = sum_{t=0}^{l+1} (-1)^t a_t x^{k+1-t} + (-1)^l l!;
/// calculus gives b_t = a_t(k-l-t) [+ or -] a_{t-1}(k+2-t) plus endpoint
/// rules b_0 = a_0(k-l), b_{l+2} = a_{l+1}(k-l). Both variants are tested.
struct DNumeratorRecurrenceCheck {
  bool form_consistent = false;  // numerators have the stated shape
  bool plus_variant = false;
  bool minus_variant = false;
  bool endpoints = false;
};

inline DNumeratorRecurrenceCheck check_d_numerator_recurrence(int k, int l) {
  if (l < 1 || k <= l + 1) throw std::invalid_argument("check_d_numerator_recurrence: k > l+1 >= 2 required");
  const auto extract = [k](const ExactPoly& num, int level) {
    // a_t = (-1)^t * coeff(x^{k+1-t}), t = 0..level+1; constant must be
    // (-1)^level level!; everything between must vanish.
    std::vector<Rat> a(static_cast<std::size_t>(level) + 2);
    bool ok = num.degree() == k + 1;
    for (int t = 0; t <= level + 1 && ok; ++t) {
      Rat v = num.coeff(static_cast<std::size_t>(k + 1 - t));
      a[static_cast<std::size_t>(t)] = (t % 2 == 0) ? v : Rat(-v);
    }
    for (int i = 1; i < k - level && ok; ++i)
      ok = sgn(num.coeff(static_cast<std::size_t>(i))) == 0;
    Rat expect_const(factorial(static_cast<unsigned long>(level)));
    if (level % 2 != 0) expect_const = -expect_const;
    ok = ok && num.coeff(0) == expect_const;
    return std::pair<bool, std::vector<Rat>>(ok, std::move(a));
  };
  const auto [ok_a, a] = extract(make_D_numerator(k, l), l);
  const auto [ok_b, b] = extract(make_D_numerator(k, l + 1), l + 1);
  DNumeratorRecurrenceCheck out;
  out.form_consistent = ok_a && ok_b;
  if (!out.form_consistent) return out;
  bool plus = true, minus = true;
  for (int t = 1; t <= l + 1; ++t) {
    const Rat lhs = b[static_cast<std::size_t>(t)];
    const Rat base(a[static_cast<std::size_t>(t)] * Rat(k - l - t));
    const Rat cross(a[static_cast<std::size_t>(t - 1)] * Rat(k + 2 - t));
    plus = plus && lhs == Rat(base + cross);
    minus = minus && lhs == Rat(base - cross);
  }
  out.plus_variant = plus;
  out.minus_variant = minus;
  out.endpoints = b[0] == Rat(a[0] * Rat(k - l)) &&
                  b[static_cast<std::size_t>(l + 2)] ==
                      Rat(a[static_cast<std::size_t>(l + 1)] * Rat(k - l));
  return out;
}

}  // namespace polyzero
