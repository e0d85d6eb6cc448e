#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "polyzero/complex_roots.hpp"
#include "polyzero/families.hpp"
#include "polyzero/real_roots.hpp"

using namespace polyzero;

TEST_CASE("simultaneous iteration on small knowns") {
  SECTION("quadratic with golden-ratio roots") {
    const auto rs = all_roots(make_F(2));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.converged);
    CHECK(std::abs(rs.roots[0] - std::complex<double>(1.6180339887498949, 0.0)) < 1e-12);
    CHECK(std::abs(rs.roots[1] - std::complex<double>(-0.6180339887498949, 0.0)) < 1e-12);
    for (double r : rs.residuals) CHECK(r < 1e-12);
  }
  SECTION("factored form") {
    const auto rs = all_roots(poly_from_coeffs({-1, 0, 1}));
    REQUIRE(rs.roots.size() == 2);
    CHECK(std::abs(rs.roots[0] - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(rs.roots[1] - std::complex<double>(-1.0, 0.0)) < 1e-12);
  }
  SECTION("degree five: exactly one root outside the unit disk, real, in (1,2)") {
    const auto rs = all_roots(make_F(5));
    REQUIRE(rs.roots.size() == 5);
    CHECK(rs.converged);
    int outside = 0;
    for (const auto& z : rs.roots)
      if (std::abs(z) > 1.0) ++outside;
    CHECK(outside == 1);
    CHECK(std::abs(rs.roots[0].imag()) < 1e-10);  // sorted by modulus: first is dominant
    CHECK(rs.roots[0].real() > 1.0);
    CHECK(rs.roots[0].real() < 2.0);
  }
  SECTION("linear") {
    const auto rs = all_roots(make_F(1));
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0] == std::complex<double>(1.0, 0.0));
  }
}

TEST_CASE("determinism under a fixed seed") {
  const auto a = all_roots(make_I(9), 400, 1e-12, kDefaultSeed);
  const auto b = all_roots(make_I(9), 400, 1e-12, kDefaultSeed);
  REQUIRE(a.roots.size() == b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i] == b.roots[i]);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("convergence flag is honest") {
  const auto rs = all_roots(make_F(12), 1, 1e-12);
  CHECK_FALSE(rs.converged);
}

TEST_CASE("vieta sums and products") {
  for (int k = 2; k <= 12; ++k) {
    const auto rs = all_roots(make_F(k));
    CHECK(rs.converged);
    CHECK(vieta_product_rel_error(make_F(k), rs) < 1e-6);
    CHECK(vieta_sum_rel_error(make_F(k), rs) < 1e-6);
  }
  for (int k = 2; k <= 10; ++k) {
    const auto rs = all_roots(make_I(k));
    CHECK(rs.converged);
    CHECK(vieta_product_rel_error(make_I(k), rs) < 1e-6);
    CHECK(vieta_sum_rel_error(make_I(k), rs) < 1e-6);
  }
}

TEST_CASE("agreement with the companion-matrix oracle up to degree 8") {
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 15) {
    const int deg = 2 + static_cast<int>(rng() % 7);
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = Rat(static_cast<long>(rng() % 19) - 9);
    if (sgn(c.back()) == 0) c.back() = Rat(2);
    const ExactPoly p{std::vector<Rat>(c)};
    if (squarefree_part(p).degree() != deg) continue;  // keep roots simple for matching
    ++done;
    const auto rs = all_roots(p);
    CHECK(rs.converged);
    CHECK(test::best_matching_max_distance(rs.roots, test::companion_roots(p)) < 1e-7);
  }
  for (const ExactPoly& p : {make_F(7), make_I(6), make_D(6, 2), make_H(6, 1)}) {
    const auto rs = all_roots(p);
    CHECK(rs.converged);
    CHECK(test::best_matching_max_distance(rs.roots, test::companion_roots(p)) < 1e-7);
  }
}

TEST_CASE("the one root outside the unit disk stays real across the family") {
  for (int k = 2; k <= 30; ++k) {
    const auto rs = all_roots(make_F(k));
    REQUIRE(rs.converged);
    int outside = 0;
    for (const auto& z : rs.roots) {
      if (std::abs(z) > 1.0) {
        ++outside;
        CHECK(std::abs(z.imag()) < 1e-8);
      }
    }
    CHECK(outside == 1);
  }
}

TEST_CASE("modulus bound against the certified dominant root") {
  const auto check_family = [](const ExactPoly& p, std::optional<FamilySpec> spec) {
    IsolationContext ctx(p);
    RefinableRoot dom = unique_positive_root(ctx);
    RootRecord rec = dom.record(make_rat(1, 1000000000000L), spec);
    const auto rs = all_roots(p);
    REQUIRE(rs.converged);
    const auto rep = check_modulus_bound(rs, rec);
    CHECK(rep.ok);
    CHECK(rep.margin > 0.0);
  };
  check_family(make_F(10), FamilySpec{Family::F, 10, 0});
  check_family(make_I(9), FamilySpec{Family::I, 9, 0});
  check_family(make_D(8, 2), FamilySpec{Family::D, 10, 2});
  check_family(make_H(9, 1), FamilySpec{Family::H, 9, 1});
  SECTION("ambiguous dominant match is an error") {
    // Two roots within the matching slack of each other.
    const ExactPoly p = poly_from_coeffs({-2, 1}) *
                        ExactPoly(std::vector<Rat>{Rat(-2) - make_rat(1, 1000000000), Rat(1)});
    IsolationContext ctx(p);
    auto ivs = ctx.isolate_all();
    REQUIRE(ivs.size() == 2);
    RefinableRoot dom(ctx.squarefree(), ivs[1]);
    RootRecord rec = dom.record(make_rat(1, 1000000000000L));
    const auto rs = all_roots(p);
    REQUIRE(rs.converged);
    CHECK_THROWS_AS(check_modulus_bound(rs, rec), std::domain_error);
  }
  SECTION("unconverged sets are refused") {
    const auto rs = all_roots(make_F(12), 1, 1e-12);
    IsolationContext ctx(make_F(12));
    RefinableRoot dom = unique_positive_root(ctx);
    RootRecord rec = dom.record(make_rat(1, 1000000000000L));
    CHECK_THROWS_AS(check_modulus_bound(rs, rec), std::invalid_argument);
  }
}

TEST_CASE("degree caps and domain errors") {
  CHECK_THROWS_AS(all_roots(ExactPoly::constant(Rat(3))), std::invalid_argument);
  CHECK_THROWS_AS(all_roots(ExactPoly()), std::invalid_argument);
}
