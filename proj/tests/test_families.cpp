#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "polyzero/families.hpp"
#include "polyzero/polynomial.hpp"

using namespace polyzero;

namespace {

ExactPoly iterated_derivative(ExactPoly p, int times) {
  for (int i = 0; i < times; ++i) p = p.derivative();
  return p;
}

// Independent memoized evaluation of the order-k sequence, straight from the
// defining recurrence.
Int g_oracle(int k, int t, std::map<std::pair<int, int>, Int>& memo) {
  if (t == 1) return Int(1);
  if (t <= k) return int_pow(2, static_cast<unsigned long>(t - 2));
  const auto key = std::make_pair(k, t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Int s(0);
  for (int i = 1; i <= k; ++i) s += g_oracle(k, t - i, memo);
  memo[key] = s;
  return s;
}

}  // namespace

TEST_CASE("make_F instantiation") {
  CHECK(make_F(1) == poly_from_coeffs({-1, 1}));
  CHECK(make_F(2) == poly_from_coeffs({-1, -1, 1}));
  CHECK(make_F(5) == poly_from_coeffs({-1, -1, -1, -1, -1, 1}));
  CHECK_THROWS_AS(make_F(0), std::invalid_argument);
}

TEST_CASE("make_D closed form equals iterated derivative") {
  CHECK(make_D(0, 3) == ExactPoly::constant(Rat(6)));
  CHECK(make_D(2, 1) == poly_from_coeffs({-1, -2, 3}));
  CHECK(make_D(2, 1).evaluate(Rat(1)) == Rat(0));
  CHECK(make_D(3, 2).evaluate(Rat(1)) == Rat(0));
  for (int k = 2; k <= 30; ++k)
    for (int l = 1; l < k; ++l)
      CHECK(make_D(k - l, l) == iterated_derivative(make_F(k), l));
}

TEST_CASE("make_D_numerator") {
  CHECK(make_D_numerator(4, 1) == poly_from_coeffs({-1, 0, 0, 8, -11, 4}));
  CHECK(make_D_numerator(3, 1) == poly_from_coeffs({-1, 0, 6, -8, 3}));
  SECTION("division by (x-1)^{l+1} recovers the derivative polynomial exactly") {
    for (const auto& [k, l] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {9, 1}, {10, 4}}) {
      const ExactPoly pow = poly_pow(poly_from_coeffs({-1, 1}), static_cast<unsigned>(l + 1));
      const auto [q, r] = divrem(make_D_numerator(k, l), pow);
      CHECK(r.is_zero());
      CHECK(q == make_D(k - l, l));
    }
  }
  SECTION("an extra power of (x-1) divides exactly when the derivative polynomial vanishes at 1") {
    for (const auto& [k, l] :
         std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {9, 1}, {3, 1}, {10, 4}}) {
      const ExactPoly pow = poly_pow(poly_from_coeffs({-1, 1}), static_cast<unsigned>(l + 2));
      const auto [q, r] = divrem(make_D_numerator(k, l), pow);
      const bool vanishes = sgn(make_D(k - l, l).evaluate(Rat(1))) == 0;
      CHECK(r.is_zero() == vanishes);
    }
  }
}

TEST_CASE("make_I instantiation") {
  CHECK(make_I(1) == ExactPoly(std::vector<Rat>{Rat(-1), Rat(-1), make_rat(1, 2)}));
  CHECK(make_I(5).evaluate(Rat(-2)) == make_rat(221, 15));
  CHECK(make_I(1).evaluate(Rat(3)) == make_rat(1, 2));
  CHECK(make_I(5).degree() == 6);
  CHECK_THROWS_AS(make_I(0), std::invalid_argument);
}

TEST_CASE("make_H construction routes agree") {
  CHECK(make_H(5, -1) == make_I(5));
  CHECK(iterated_derivative(make_H(4, 0), 2) == make_F(3));
  CHECK(make_H(4, 1).evaluate(Rat(5)) == make_rat(-319, 24));
  CHECK_THROWS_AS(make_H(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_H(4, -2), std::invalid_argument);
  SECTION("explicit display matches the iterated antiderivative") {
    for (int k = 2; k <= 25; ++k)
      for (int l = -1; l + 1 < k && l <= 6; ++l)
        CHECK(make_H(k, l) == make_H_closed_form(k, l));
  }
  SECTION("(l+2)-fold derivative returns the base polynomial") {
    for (int k = 2; k <= 25; ++k)
      for (int l = -1; l + 1 < k && l <= 6; ++l)
        CHECK(iterated_derivative(make_H(k, l), l + 2) == make_F(k - l - 1));
  }
}

TEST_CASE("g_sequence") {
  const auto fib = g_sequence(2, 6);
  CHECK(fib.terms == std::vector<Int>{1, 1, 2, 3, 5, 8});
  CHECK(g_sequence(3, 3).terms == std::vector<Int>{1, 1, 2});
  const auto g4 = g_sequence(4, 7);
  CHECK(g4.terms == std::vector<Int>{1, 1, 2, 4, 8, 15, 29});
  SECTION("matches the memoized oracle and satisfies the recurrence") {
    std::map<std::pair<int, int>, Int> memo;
    for (int k = 2; k <= 6; ++k) {
      const auto seq = g_sequence(k, 40);
      for (int t = 1; t <= 40; ++t)
        CHECK(seq.terms[static_cast<std::size_t>(t - 1)] == g_oracle(k, t, memo));
      for (int t = k + 1; t <= 40; ++t) {
        Int s(0);
        for (int i = 1; i <= k; ++i) s += seq.terms[static_cast<std::size_t>(t - 1 - i)];
        CHECK(seq.terms[static_cast<std::size_t>(t - 1)] == s);
      }
    }
  }
  CHECK_THROWS_AS(g_sequence(1, 5), std::invalid_argument);
}

TEST_CASE("g_ratio approaches the dominant root") {
  CHECK(g_ratio(2, 1) == 1.0);
  CHECK(std::abs(g_ratio(2, 96) - 1.6180339887498949) < 1e-9);
  CHECK(std::abs(g_ratio(3, 96) - 1.8392867552141612) < 1e-9);
}

TEST_CASE("reciprocal-sum identity holds exactly") {
  CHECK(check_identity_1_2(Rat(2), 0));
  CHECK(check_identity_1_2(Rat(1), 5));
  CHECK(check_identity_1_2(Rat(-3), 3));
  CHECK_THROWS_AS(check_identity_1_2(Rat(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(check_identity_1_2(Rat(-1), 1), std::invalid_argument);
  SECTION("seeded random rationals") {
    std::mt19937_64 rng(0x5EED);
    int tried = 0;
    while (tried < 25) {
      const long num = static_cast<long>(rng() % 101) - 50;
      const long den = static_cast<long>(rng() % 50) + 1;
      const Rat c = make_rat(num, den);
      if (sgn(c) == 0 || c == Rat(-1)) continue;
      ++tried;
      for (int n = 0; n <= 8; ++n) CHECK(check_identity_1_2(c, n));
    }
  }
}

TEST_CASE("limit identity at c -> -1") {
  CHECK(check_polya_limit_identity(0));
  CHECK(check_polya_limit_identity(1));
  CHECK(check_polya_limit_identity(10));
  for (int n = 0; n <= 20; ++n) CHECK(check_polya_limit_identity(n));
}

TEST_CASE("numerator coefficient recurrence: plus variant is the consistent one") {
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{7, 2}, {9, 3}, {6, 1}, {12, 4}}) {
    const auto chk = check_d_numerator_recurrence(k, l);
    CHECK(chk.form_consistent);
    CHECK(chk.plus_variant);
    CHECK_FALSE(chk.minus_variant);
    CHECK(chk.endpoints);
  }
}

TEST_CASE("family spec validation and json") {
  FamilySpec d{Family::D, 7, 2};
  d.validate();
  const auto j = spec_to_json(d);
  CHECK(j.dump() == R"({"family":"D","k":7,"l":2})");
  CHECK(spec_from_json(j) == d);
  CHECK_THROWS_AS(FamilySpec(Family::D, 2, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec(Family::H, 4, 4).validate(), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec(Family::F, 0, 0).validate(), std::invalid_argument);
  CHECK(make_family(FamilySpec{Family::D, 7, 2}) == make_D(5, 2));
  CHECK(make_family(FamilySpec{Family::H, 7, 1}) == make_H(7, 1));
}
