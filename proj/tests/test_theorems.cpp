#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "polyzero/theorems.hpp"

using namespace polyzero;

namespace {

const VerificationReport& find_report(const std::vector<VerificationReport>& v,
                                      const std::string& id) {
  for (const auto& r : v)
    if (r.claim_id == id) return r;
  FAIL("missing claim " + id);
  return v.front();
}

}  // namespace

TEST_CASE("crossing abscissas") {
  SECTION("derivative family: rational crossing and exact factor vanish") {
    const auto cp = crossing_points(Family::D, 6, 2);
    REQUIRE(cp.positive.has_value());
    CHECK(*cp.positive == make_rat(3, 2));
    const ExactPoly diff = make_D(6, 2) - make_D(5, 2);
    CHECK(sgn(diff.evaluate(*cp.positive)) == 0);
    REQUIRE(cp.negative.has_value());
    CHECK(cp.negative->residual < 1e-10);
    // The (k, k-2) difference factors exactly through the quadratic.
    const ExactPoly q = detail::consecutive_pair_quadratic(Family::D, 6, 2);
    const ExactPoly shifted = ExactPoly::monomial(4, Rat(1)) * q;
    const ExactPoly diff2 = make_D(6, 2) - make_D(4, 2);
    const Rat scale(diff2.leading() / shifted.leading());
    CHECK(diff2 == scale * shifted);
  }
  SECTION("first integral: the k=17 pivot value") {
    const auto cp = crossing_points(Family::I, 17, 0);
    REQUIRE(cp.negative.has_value());
    CHECK(cp.negative->value < -1.0);
    CHECK(cp.negative->value > -2.0);
    const double v = first_integral_at_negative_crossing(17);
    CHECK(v < 0.0);
    CHECK(std::abs(v - (-0.0337812682)) < 1e-8);
  }
  SECTION("higher integrals: crossing hits k+1 at the diagonal start") {
    for (int l = 0; l <= 2; ++l) {
      const auto cp = crossing_points(Family::H, l + 3, l);
      REQUIRE(cp.positive.has_value());
      CHECK(*cp.positive == Rat(l + 4));
    }
    const ExactPoly q = detail::consecutive_pair_quadratic(Family::H, 9, 1);
    const ExactPoly diff = make_H(9, 1) - make_H(7, 1);
    const ExactPoly shifted = ExactPoly::monomial(8, Rat(1)) * q;
    const Rat scale(diff.leading() / shifted.leading());
    CHECK(diff == scale * shifted);
  }
  SECTION("base family: consecutive crossing is the limit value itself") {
    CHECK(*crossing_points(Family::F, 9, 0).positive == Rat(2));
  }
  SECTION("parameter validation") {
    CHECK_THROWS_AS(crossing_points(Family::D, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(crossing_points(Family::H, 3, 1), std::invalid_argument);
  }
  SECTION("crossing-map slopes at zero") {
    CHECK(negative_crossing_slope_fd(Family::D, 1) > 0.0);
    CHECK(std::abs(negative_crossing_slope_fd(Family::D, 3) - 3.0) < 1e-4);
    CHECK(std::abs(negative_crossing_slope_fd(Family::H, 1) - (-6.0)) < 1e-5);
    CHECK(negative_crossing_slope_fd(Family::I, 0) < 0.0);
  }
}

TEST_CASE("table claim verifies at the acceptance range") {
  const auto reports = verify_table1(12);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == ClaimStatus::pass);
  CHECK(reports[0].witnesses.size() == 18);
  CHECK_THROWS_AS(verify_table1(2), std::invalid_argument);
}

TEST_CASE("special-value claim") {
  const auto reports = verify_special_values();
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == ClaimStatus::pass);
}

TEST_CASE("derivative-family claims at reduced scale") {
  const auto reports = verify_derivative_theorem(2, 14);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    INFO(r.claim_id);
    CHECK(r.status == ClaimStatus::pass);
  }
  const auto& item4 = find_report(reports, "thm1.item4");
  REQUIRE(item4.discovered_threshold.has_value());
  CHECK(*item4.discovered_threshold == 2);
  CHECK_THROWS_AS(verify_derivative_theorem(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_derivative_theorem(1, 2), std::invalid_argument);
}

TEST_CASE("first-integral claims discover the odd pivot 17") {
  const auto reports = verify_first_integral_theorem(24);
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) {
    INFO(r.claim_id);
    CHECK(r.status == ClaimStatus::pass);
  }
  const auto& item4 = find_report(reports, "thm2.item4");
  REQUIRE(item4.discovered_threshold.has_value());
  CHECK(*item4.discovered_threshold == 17);
  CHECK_THROWS_AS(verify_first_integral_theorem(10), std::invalid_argument);
}

TEST_CASE("bound-and-limit claim") {
  const auto reports =
      verify_integral_bound_and_limit(24, {Rat(0), make_rat(1, 2), make_rat(-9, 10)});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == ClaimStatus::pass);
  CHECK_THROWS_AS(verify_integral_bound_and_limit(24, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("higher-integral claims discover the odd threshold 7") {
  for (int l : {0, 1}) {
    const auto reports = verify_general_integral_theorem(l, 16);
    REQUIRE(reports.size() == 5);
    for (const auto& r : reports) {
      INFO("l=" << l << " " << r.claim_id);
      CHECK(r.status == ClaimStatus::pass);
    }
    const auto& item5 = find_report(reports, "thm3.item5");
    REQUIRE(item5.discovered_threshold.has_value());
    CHECK(*item5.discovered_threshold == 7);
    bool has_minimality = false;
    for (const auto& w : item5.witnesses)
      has_minimality = has_minimality || w.param.find("minimality") != std::string::npos;
    CHECK(has_minimality);
  }
  const auto diag = verify_pmon_diagonal(16);
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].status == ClaimStatus::pass);
}

TEST_CASE("identity and ratio claims") {
  const auto ids = verify_identities(kDefaultSeed, 30, 8, 12);
  REQUIRE(ids.size() == 2);
  CHECK(ids[0].status == ClaimStatus::pass);
  CHECK(ids[1].status == ClaimStatus::pass);
  const auto ratios = verify_g_ratio_limit(4, 128);
  REQUIRE(ratios.size() == 1);
  CHECK(ratios[0].status == ClaimStatus::pass);
}

TEST_CASE("complex-bound claims at reduced scale") {
  const auto reports = verify_complex_bounds(10, 2, 10, 8, 1);
  std::set<std::string> ids;
  for (const auto& r : reports) {
    INFO(r.claim_id);
    CHECK(r.status == ClaimStatus::pass);
    ids.insert(r.claim_id);
  }
  CHECK(ids == std::set<std::string>{"complex.bound.F", "complex.unitdisk.F", "complex.bound.D",
                                     "complex.bound.I", "complex.bound.H"});
}

TEST_CASE("the full suite covers every required claim id") {
  VerifySettings s;
  s.table1_k_max = 6;
  s.thm1_l = {1};
  s.thm1_j_max = 10;
  s.thm2_k_max = 20;
  s.bound_k_max = 12;
  s.thm3_l = {0};
  s.thm3_k_max = 10;
  s.complex_f_k_max = 6;
  s.complex_d_l_max = 1;
  s.complex_max_degree = 6;
  s.complex_i_k_max = 6;
  s.complex_h_l_max = 0;
  std::set<std::string> produced;
  for (const auto& g : claim_groups())
    for (const auto& r : run_claim_group(g, s)) produced.insert(r.claim_id);
  for (const auto& id : required_claim_ids()) {
    INFO(id);
    CHECK(produced.count(id) == 1);
  }
}

TEST_CASE("report json shape and determinism") {
  const auto a = verify_table1(5);
  const auto b = verify_table1(5);
  CHECK(report_to_json(a[0]).dump() == report_to_json(b[0]).dump());
  const auto j = report_to_json(a[0]);
  CHECK(j.contains("claim_id"));
  CHECK(j.contains("paper_anchor"));
  CHECK(j.contains("params"));
  CHECK(j.contains("status"));
  CHECK(j.contains("discovered_threshold"));
  CHECK(j.contains("witnesses"));
  CHECK(j.contains("notes"));
  const VerificationReport round = report_from_json(j);
  CHECK(report_to_json(round).dump() == j.dump());
}
