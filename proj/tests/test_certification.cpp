#include <doctest.h>

#include <cmath>

#include "medeig/certification.hpp"
#include "medeig/generators.hpp"

using namespace medeig;

namespace {

double eps0(int d) { return std::sqrt(static_cast<double>(d - 1)); }
double eps1(int d) { return eps0(d) + 1.0 / (d + eps0(d)); }

// Independent route to the regime delta: bisection on the (monotone) map
// delta -> alpha(delta)*(eps1-eps0).
double delta_by_bisection(int d, double target) {
  double lo = eps0(d) + 1e-9, hi = d - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2.0;
    if (alpha_delta(d, mid) * (eps1(d) - eps0(d)) < target)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2.0;
}

}  // namespace

TEST_CASE("alpha(delta) basics") {
  CHECK_THROWS_AS(alpha_delta(75, 1.0), std::domain_error);
  CHECK_THROWS_AS(alpha_delta(75, 80.0), std::domain_error);
  // diverges toward the right endpoint
  CHECK(alpha_delta(75, 75.0 - 1e-9) > 1e9);
}

TEST_CASE("regime delta solves the defining equation (bisection cross-check)") {
  for (int d : {75, 100, 139}) {
    const double delta = delta_for_regime(d);
    CHECK(std::abs(alpha_delta(d, delta) * (eps1(d) - eps0(d)) - 0.25) <= 1e-9);
    CHECK(std::abs(delta - delta_by_bisection(d, 0.25)) <= 1e-6);
  }
  for (int d : {140, 200}) {
    const double delta = delta_for_regime(d);
    CHECK(std::abs(alpha_delta(d, delta) * (eps1(d) - eps0(d)) - 0.2) <= 1e-9);
    CHECK(std::abs(delta - delta_by_bisection(d, 0.2)) <= 1e-6);
  }
  CHECK(std::abs(delta_for_regime(75) - 26.5538069) <= 1e-6);
  CHECK_THROWS_AS(delta_for_regime(74), std::domain_error);
}

TEST_CASE("delta constraints across the range") {
  for (int d = 75; d <= 300; ++d) {
    const double delta = delta_for_regime(d);
    const double e0 = eps0(d);
    CHECK(delta > e0);
    CHECK(delta < d);
    CHECK(alpha_delta(d, delta) * (eps1(d) - e0) >= 0.2 - 1e-12);
    CHECK(delta - e0 >= std::sqrt(2.0) - 1e-12);
    if (d >= 140) CHECK(delta - e0 >= d / 3.0 - 1e-9);
  }
}

TEST_CASE("objective_full limit conventions and factor collapse") {
  const int d = 75;
  const double delta = delta_for_regime(d);
  const double e0 = eps0(d), e1 = eps1(d);

  CHECK(objective_full(d, delta, e0, 0.5, 0.0, 0.0) == 0.0);

  // y = z = 0, eps = eps1, x = 1/2 collapses to an elementary expression
  const double expected = std::sqrt(2.0 * e0) * ((e0 + e1) / (2.0 * e0)) * std::sqrt(e1 - e0);
  CHECK(std::abs(objective_full(d, delta, e1, 0.5, 0.0, 0.0) - expected) <= 1e-12 * expected);

  CHECK_THROWS_AS(objective_full(d, delta, e0 - 0.1, 0.5, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(objective_full(d, delta, e0, 0.4, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(objective_full(d, delta, e0, 0.5, 0.6, 0.0), std::domain_error);
  CHECK_THROWS_AS(objective_full(d, delta, e0, 0.5, 0.0, 1.0), std::domain_error);
}

TEST_CASE("stagewise substitution chain reproduces the closed form") {
  for (int d : {75, 100, 140}) {
    const double delta = delta_for_regime(d);
    const double e0 = eps0(d), e1 = eps1(d);
    const double ae = alpha_delta(d, delta) * (e1 - e0);

    auto second_function = [&](double y, double z) {
      return std::pow(2.0 * e0, 0.5 + y + z) * ((e0 + e1) / (2.0 * e0)) *
             std::sqrt((e1 - e0) / (y + 1.0)) * std::pow(ae / (y + 1.0), y / 2.0) *
             std::pow(d - e0, z);
    };
    auto third_function = [&](double z) {
      return (e0 + e1) * std::sqrt((e1 - e0) / (1.5 - z)) *
             std::pow(ae / (1.5 - z), 0.25 - z / 2.0) * std::pow(d - e0, z);
    };

    // stage 2: eps at its maximizer (y*eps0 + eps1)/(y+1), x = 1/2
    const double z_cap = 1.0 / ((delta - e0) * (delta - e0));
    for (double z : {0.0, z_cap / 2.0, z_cap}) {
      for (double y : {0.0, 0.1, 0.25, 0.49}) {
        if (y > 0.5 - z) continue;
        const double eps_star = (y * e0 + e1) / (y + 1.0);
        const double full = objective_full(d, delta, eps_star, 0.5, y, z);
        const double stage = second_function(y, z);
        CHECK(std::abs(full - stage) <= 1e-10 * stage);
      }
      // stage 3: y = 1/2 - z
      const double stage3 = third_function(z);
      const double stage2 = second_function(0.5 - z, z);
      CHECK(std::abs(stage2 - stage3) <= 1e-10 * stage3);
    }

    // stage 4: z = z*
    const CertificationRecord r = objective_closed_form(d);
    CHECK(std::abs(third_function(r.z_star) - r.objective) <= 1e-10 * r.objective);

    // and the stagewise maximizer plugged into the full objective agrees
    const double z = r.z_star, y = 0.5 - z;
    const double eps_star = (y * e0 + e1) / (y + 1.0);
    const double full = objective_full(d, delta, eps_star, 0.5, y, z);
    CHECK(std::abs(full - r.objective) <= 1e-10 * r.objective);
  }
}

TEST_CASE("certification range 75..139 certifies, margins pinned") {
  const auto records = certify_range(75, 139);
  REQUIRE(records.size() == 65);
  double min_margin = 1.0;
  for (const auto& r : records) {
    CHECK(r.certified);
    CHECK(r.constraint_ok);
    CHECK(r.margin > 0.0);
    min_margin = std::min(min_margin, r.margin);
  }
  // regression pins, computed once from this implementation
  CHECK(std::abs(records[0].objective - 0.999516408198976) <= 1e-9);
  CHECK(min_margin > 1.08e-4);
  CHECK(min_margin < 1.09e-4);  // attained at d = 139

  const auto single = certify_range(75, 75);
  CHECK(single.size() == 1);
  CHECK_THROWS_AS(certify_range(74, 80), std::domain_error);
  CHECK_THROWS_AS(certify_range(80, 75), std::domain_error);

  // far side of regime 2 stays certified
  CHECK(objective_closed_form(1000000).certified);

  const auto regime2 = certify_range(140, 200);
  CHECK(regime2.size() == 61);
  for (const auto& r : regime2) {
    CHECK(r.regime == 2);
    CHECK(r.certified);
  }
}

TEST_CASE("asymptotic three-factor chain") {
  for (int d : {140, 141, 200, 10000}) {
    const AsymptoticFactors f = certify_asymptotic(d);
    CHECK(f.ok);
    CHECK(f.factor_ratio <= 2.0 + 1.0 / 444.0 + 1e-12);
    CHECK(f.factor_z <= 1.0 / (2.0 + 1.0 / 40.0) + 1e-12);
    CHECK(f.factor_exp <= 111.0 / 110.0 + 1e-12);
    CHECK(f.product <= 889.0 / 891.0 + 1e-12);
    CHECK(f.product < 1.0);
    CHECK(f.zstar_ok);
  }
  CHECK(certify_asymptotic(140).z_star <= 1.0 / 2000.0);
  CHECK_THROWS_AS(certify_asymptotic(139), std::domain_error);
}

TEST_CASE("grid oracle stays below the closed form") {
  const int d = 75;
  const CertificationRecord r = objective_closed_form(d);
  const GridOracleResult g = grid_oracle(d, r.delta, 60);
  CHECK(g.below_one);
  CHECK(g.x_decrease_verified);
  CHECK(g.arg_x == 0.5);
  CHECK(g.max_value <= r.objective + 10.0 / 60.0);
  CHECK(g.max_value <= r.objective + 1e-9);  // stagewise max dominates the grid
  // the grid argmax sits at the stagewise maximizer
  CHECK(std::abs(g.arg_z - r.z_star) <= 0.5 / 60.0 + 1e-12);
  CHECK(std::abs(g.arg_y - (0.5 - r.z_star)) <= 0.5 / 60.0 + 1e-12);
  CHECK_THROWS_AS(grid_oracle(75, r.delta, 10), std::domain_error);
  CHECK_THROWS_AS(grid_oracle(60, 20.0, 60), std::domain_error);
}

TEST_CASE("monotonicity lemma suite") {
  for (int d = 75; d <= 200; ++d) {
    const auto checks = monotonicity_lemmas(d);
    REQUIRE(checks.size() == 5);
    for (const auto& c : checks) {
      CHECK(c.applicable);
      CHECK(c.condition_ok);
      CHECK(c.holds);
    }
  }
  // below d = 75 the two delta-dependent lemmas are gated off
  const auto low = monotonicity_lemmas(3);
  REQUIRE(low.size() == 5);
  CHECK(low[0].applicable);
  CHECK(low[1].applicable);
  CHECK(low[2].applicable);
  CHECK_FALSE(low[3].applicable);
  CHECK_FALSE(low[4].applicable);
  CHECK_THROWS_AS(monotonicity_lemmas(2), std::domain_error);
}

TEST_CASE("proof diagnostics on concrete graphs") {
  const Graph h = projective_plane_incidence(2);
  const ProofDiagnostics dh = proof_diagnostics(h, 3, 2.0);
  CHECK(dh.size_i == 2);
  CHECK(dh.size_j == 1);
  CHECK(dh.size_k == 0);
  CHECK(dh.size_l == 1);
  const double ab = std::exp(dh.log_a + dh.log_bj + dh.log_bk + dh.log_bl);
  CHECK(std::abs(ab - 49.0) <= 1e-6);

  const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  const ProofDiagnostics dk = proof_diagnostics(k3, 3, 2.0);
  CHECK(dk.size_i == 3);
  CHECK(std::abs(std::exp(dk.log_a + dk.log_bj + dk.log_bk + dk.log_bl) - 2.0) <= 1e-6);

  const Graph e4 = empty_graph(4);
  const ProofDiagnostics de = proof_diagnostics(e4, 3, 2.0);
  CHECK(de.size_i == 4);
  CHECK(std::abs(std::exp(de.log_a + de.log_bj + de.log_bk + de.log_bl) - 16.0) <= 1e-6);

  for (const auto& diag : {dh, dk, de})
    for (const auto& c : diag.checks) {
      if (c.applicable) CHECK(c.holds);
      if (c.name == "J_at_least_half" || c.name == "A_estimate" || c.name == "B_J_estimate") {
        CHECK_FALSE(c.applicable);
        CHECK(c.notes.find("contradiction hypothesis") != std::string::npos);
      }
    }

  CHECK_THROWS_AS(proof_diagnostics(h, 3, 1.0), std::domain_error);
  CHECK_THROWS_AS(proof_diagnostics(projective_plane_incidence(3), 3, 2.0),
                  std::invalid_argument);  // max degree 4 > 3
}
