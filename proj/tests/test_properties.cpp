#include <doctest.h>

#include <cmath>
#include <random>

#include "scatterbound/bounds.hpp"
#include "scatterbound/refsolutions.hpp"
#include "scatterbound/solver.hpp"
#include "scatterbound/sweep.hpp"

using namespace scatterbound;

namespace {

struct RandomCase {
  PotentialSpec potential;
  PotentialSpec comparison;
  double energy;
};

RandomCase draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> height(-1.5, 2.5), width(0.2, 2.0), center(-0.5, 0.5),
      energy(0.3, 4.0), kind(0.0, 1.0);
  const double h = height(rng), w = width(rng), c = center(rng);
  const PotentialSpec potential =
      kind(rng) < 0.5 ? PotentialSpec::gaussian(h, 0.5 * w, c) : PotentialSpec::square_barrier(h, w, c);
  double e = energy(rng);
  if (h < 0.0) e = std::max(e, 0.2);
  double hc = height(rng);
  // Keep clear of the degenerate E = V0 comparison.
  if (std::abs(hc - e) < 0.05) hc += 0.1;
  const PotentialSpec comparison =
      kind(rng) < 0.4 ? PotentialSpec::free() : PotentialSpec::square_barrier(hc, width(rng), center(rng));
  return {potential, comparison, e};
}

}  // namespace

TEST_CASE("random potentials: flux, method equivalence and sandwich") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 25; ++i) {
    const auto rc = draw(rng);
    CAPTURE(i);
    CAPTURE(rc.energy);
    const ComparisonSolution comparison(rc.comparison, rc.energy);
    const auto ab = solve_ab_system(rc.potential, comparison);
    double worst = 0.0;
    for (const auto& s : ab.trajectory) worst = std::max(worst, std::abs(std::norm(s.a) - std::norm(s.b) - 1.0));
    CHECK(worst < 1e-7);

    const double t = solve_direct(rc.potential, rc.energy).T;
    CHECK(std::abs(compose_bogoliubov(comparison, ab.final_state).T - t) <= 1e-6 * t);

    const double tb = theta_bound(rc.potential, comparison, rc.energy, 1e-10);
    const auto b = bogoliubov_bounds(tb, comparison);
    CHECK(sandwich_holds(t, b.T_lower, b.T_upper, b.upper_valid));
    CHECK(std::abs(ab.final_state.a) <= b.alpha_upper * (1.0 + 1e-9));
  }
}

TEST_CASE("bounds are monotone in theta_bound and bracket T0") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double T0 = 0.01 + 0.99 * u(rng);
    const double theta0 = theta0_from_T0(T0);
    const double t1 = 2.0 * u(rng), t2 = t1 + 0.5 * u(rng);
    const auto b1 = bogoliubov_bounds_from_theta0(t1, theta0);
    const auto b2 = bogoliubov_bounds_from_theta0(t2, theta0);
    CHECK(b2.T_lower <= b1.T_lower);
    CHECK(b1.T_lower <= T0 * (1.0 + 1e-15));
    CHECK(b1.T_upper >= T0 * (1.0 - 1e-15));
    if (b1.upper_valid && b2.upper_valid) CHECK(b2.T_upper >= b1.T_upper);
    CHECK(b1.alpha_upper * b1.alpha_upper - b1.beta_upper * b1.beta_upper == doctest::Approx(1.0));
    CHECK(b1.alpha_lower * b1.alpha_lower - b1.beta_lower * b1.beta_lower == doctest::Approx(1.0));
  }
}

TEST_CASE("algebraic and hyperbolic forms agree at random points") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double T0 = 1e-3 + (1.0 - 1e-3) * u(rng);
    const double tb = 4.0 * u(rng);
    const auto a = transmission_bounds_algebraic(tb, T0);
    const auto h = bogoliubov_bounds_from_theta0(tb, theta0_from_T0(T0));
    CHECK(std::abs(a.T_lower - h.T_lower) < 1e-12);
    CHECK(a.upper_valid == h.upper_valid);
    CHECK(std::abs(a.T_upper - h.T_upper) < 1e-12);
  }
}
