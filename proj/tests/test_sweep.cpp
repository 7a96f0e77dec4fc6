#include <doctest.h>

#include <cmath>
#include <sstream>

#include "scatterbound/config.hpp"
#include "scatterbound/sweep.hpp"

using namespace scatterbound;

namespace {

ScenarioConfig barrier_config() {
  ScenarioConfig c;
  c.potential = PotentialSpec::square_barrier(1, 1);
  c.comparison = PotentialSpec::free();
  c.energy_list = {3.0, 1.5, 2.0};
  return c;
}

std::string csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

}  // namespace

TEST_CASE("sandwich predicate") {
  CHECK(sandwich_holds(0.9, 0.8, 0.95, true));
  CHECK(sandwich_holds(0.9, 0.8, 0.5, false));
  CHECK(sandwich_holds(0.8 - 5e-7, 0.8, 0.9, true));
  CHECK(!sandwich_holds(0.8 - 2e-6, 0.8, 0.9, true));
  CHECK(!sandwich_holds(0.96, 0.8, 0.95, true));
}

TEST_CASE("barrier sweep against the free comparison") {
  const auto rows = run_sweep(barrier_config());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].E == 1.5);
  CHECK(rows[2].E == 3.0);
  for (const auto& r : rows) {
    CHECK(r.status == "ok");
    CHECK(r.sandwich_ok);
    CHECK(r.T_lower <= r.T_exact);
  }
  CHECK(exit_code(rows) == kExitOk);
}

TEST_CASE("potential equal to the comparison collapses every row") {
  auto c = barrier_config();
  c.comparison = c.potential;
  for (const auto& r : run_sweep(c)) {
    CHECK(r.theta_bound == 0.0);
    CHECK(std::abs(r.T_lower - r.T_exact) < 1e-8);
    CHECK(std::abs(r.T_upper - r.T_exact) < 1e-8);
  }
}

TEST_CASE("failed rows are recorded, not fatal") {
  auto c = barrier_config();
  c.comparison = PotentialSpec::square_barrier(2.0, 1.0);
  c.energy_list = {2.0, 3.0};  // E = V0 of the comparison is degenerate
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].status != "ok");
  CHECK(rows[1].status == "ok");
  CHECK(exit_code(rows) == kExitNumerical);
}

TEST_CASE("violations take precedence in the exit code") {
  std::vector<SweepRow> rows(2);
  rows[0].sandwich_ok = true;
  rows[1].sandwich_ok = false;
  CHECK(exit_code(rows) == kExitViolation);
}

TEST_CASE("parallel sweep output is identical and deterministic") {
  auto c = barrier_config();
  c.potential = PotentialSpec::gaussian(1, 1);
  c.energy_list.clear();
  c.energy_range = EnergyRange{1.1, 4.0, 12};
  const std::string serial = csv(run_sweep(c, 1));
  CHECK(csv(run_sweep(c, 4)) == serial);
  CHECK(csv(run_sweep(c, 3)) == serial);
}

TEST_CASE("csv layout") {
  const std::string text = csv(run_sweep(barrier_config()));
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "E,T_exact,T0,theta_bound,T_lower,T_upper,upper_valid,alpha_abs,beta_abs,alpha_upper,alpha_lower,"
        "sandwich_ok,status");
  std::string first;
  std::getline(is, first);
  CHECK(first.rfind("1.5,0.", 0) == 0);
}

TEST_CASE("bounds mode needs no exact solve") {
  auto c = barrier_config();
  const auto rows = run_bounds(c);
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(rows[1].report.theta_bound - 1.0 / (2.0 * std::sqrt(2.0))) < 1e-9);
  CHECK(exit_code(rows) == kExitOk);
}

TEST_CASE("perturbation mode") {
  ScenarioConfig c;
  c.comparison = PotentialSpec::square_barrier(1, 1);
  c.potential = PotentialSpec::shifted(c.comparison, PotentialSpec::gaussian(1.0, 0.3, 0.2), 1.0);
  c.energy_list = {2.0};
  c.quad_tol = 1e-13;
  c.solver.rel_tol = 1e-13;
  c.solver.abs_tol = 1e-16;

  SUBCASE("ladder scaling") {
    c.epsilon_ladder = {0.02, 0.01, 0.005};
    const auto rows = run_perturb(c);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].b_ratio == 0.0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].b_ratio >= 6.0);
      CHECK(rows[i].b_ratio <= 10.0);
      CHECK(rows[i].dT_ratio >= 3.5);
      CHECK(rows[i].dT_ratio <= 4.5);
    }
    for (const auto& r : rows) CHECK(std::abs(r.dT_exact) <= r.dT_bound);
    CHECK(exit_code(rows) == kExitOk);
  }
  SUBCASE("zero ladder") {
    c.epsilon_ladder = {0.0};
    const auto rows = run_perturb(c);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].b_born_abs == 0.0);
    CHECK(rows[0].dT_est == 0.0);
    CHECK(rows[0].dT_exact == 0.0);
    CHECK(rows[0].dT_bound == 0.0);
  }
  SUBCASE("reflectionless comparison") {
    c.comparison = PotentialSpec::free();
    c.potential = PotentialSpec::shifted(c.comparison, PotentialSpec::square_barrier(1, 1, 0.5), 1.0);
    c.energy_list = {1.0};
    c.epsilon_ladder = {0.02, 0.01};
    const auto rows = run_perturb(c);
    for (const auto& r : rows) {
      CHECK(r.dT_est == 0.0);
      CHECK(r.dT_exact != 0.0);
      CHECK(std::abs(r.dT_exact) < 4.0 * r.epsilon * r.epsilon);
    }
    CHECK(rows[0].dT_exact / rows[1].dT_exact == doctest::Approx(4.0).epsilon(0.05));
  }
  SUBCASE("missing ladder or unshifted potential") {
    CHECK_THROWS_AS(run_perturb(c), ConfigError);
    c.epsilon_ladder = {0.01};
    c.potential = PotentialSpec::gaussian(1, 1);
    CHECK_THROWS_AS(run_perturb(c), ConfigError);
  }
}

TEST_CASE("solve report") {
  const std::string text = solve_report_json(barrier_config(), 2.0);
  CHECK(text.find("\"sandwich_ok\": true") != std::string::npos);
  CHECK(text.find("\"theta_bound\"") != std::string::npos);
}
