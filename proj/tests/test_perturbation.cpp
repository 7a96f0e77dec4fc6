#include <doctest.h>

#include <cmath>
#include <functional>

#include "scatterbound/perturbation.hpp"
#include "scatterbound/refsolutions.hpp"
#include "scatterbound/solver.hpp"

using namespace scatterbound;
using doctest::Approx;

namespace {

SolverSettings tight() {
  SolverSettings s;
  s.rel_tol = 1e-13;
  s.abs_tol = 1e-16;
  return s;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("zero shift gives zero first-order quantities") {
  const auto c = square_barrier_comparison(1.0, 1.0, 2.0);
  const auto bump = PotentialSpec::gaussian(1.0, 0.3, 0.2);
  CHECK(distorted_born_b(c, bump, 0.0, 1e-12) == complex(0.0, 0.0));
  CHECK(delta_T_bound(c, bump, 0.0, 1e-12) == 0.0);
  CHECK(delta_N_bound(c, bump, 0.0, 1e-12) == 0.0);
  CHECK(delta_T_first_order(c, complex(0.0, 0.0)) == 0.0);
}

TEST_CASE("reflectionless comparison has no first-order change in T") {
  const auto c = free_comparison(1.0);
  CHECK(delta_T_first_order(c, complex(0.3, 0.2)) == 0.0);
  CHECK(delta_T_bound(c, PotentialSpec::square_barrier(1, 1, 0.5), 0.01, 1e-12) == 0.0);
  CHECK(delta_N_bound(c, PotentialSpec::square_barrier(1, 1, 0.5), 0.01, 1e-12) == 0.0);
}

TEST_CASE("distorted Born b converges at third order") {
  const auto c = free_comparison(1.0);
  const auto bump = PotentialSpec::square_barrier(1.0, 0.1);
  double prev = 0.0;
  for (double eps : {0.02, 0.01, 0.005}) {
    const complex bt = distorted_born_b(c, bump, eps, 1e-14, tight());
    const auto exact = solve_ab_system(PotentialSpec::shifted(c.spec(), bump, eps), c, tight());
    const double err = std::abs(std::abs(bt) - std::abs(exact.final_state.b));
    CHECK(std::abs(bt) <= 0.5 * eps * shift_weight_integral(c, bump, 1e-14));
    if (prev > 0.0) {
      CHECK(prev / err >= 6.0);
      CHECK(prev / err <= 10.0);
    }
    prev = err;
  }
}

TEST_CASE("first-order delta T converges at second order and is bounded") {
  const auto c = square_barrier_comparison(1.0, 1.0, 2.0);
  const auto bump = PotentialSpec::gaussian(1.0, 0.3, 0.2);
  double prev = 0.0;
  for (double eps : {0.02, 0.01, 0.005}) {
    const auto est = first_order_estimates(c, bump, eps, 1e-14, tight());
    const double t = solve_direct(PotentialSpec::shifted(c.spec(), bump, eps), 2.0, tight()).T;
    const double err = std::abs((t - c.T0()) - est.delta_T_est);
    CHECK(std::abs(t - c.T0()) <= est.delta_T_bound);
    if (prev > 0.0) {
      CHECK(prev / err >= 3.5);
      CHECK(prev / err <= 4.5);
    }
    prev = err;
  }
}

TEST_CASE("delta T bound for a unit bump on [0, 1]") {
  const auto c = square_barrier_comparison(1.0, 1.0, 2.0);
  const auto bump = PotentialSpec::square_barrier(1.0, 1.0, 0.5);
  const double weight = simpson([&](double x) { return std::norm(c.psi0(x)); }, 0.0, 0.5) +
                        simpson([&](double x) { return std::norm(c.psi0(x)); }, 0.5, 1.0);
  const double bound = delta_T_bound(c, bump, 0.01, 1e-13);
  CHECK(bound == Approx(0.01 * c.T0() * std::sqrt(1.0 - c.T0()) * weight).epsilon(1e-10));
  const double t = solve_direct(PotentialSpec::shifted(c.spec(), bump, 0.01), 2.0).T;
  CHECK(std::abs(t - c.T0()) <= bound);
}

TEST_CASE("delta N bound for the step comparison") {
  const auto c = step_comparison(0.75, 1.0);
  const auto bump = PotentialSpec::square_barrier(1.0, 0.5, -1.0);
  const double weight = simpson([&](double x) { return std::norm(c.psi0(x)); }, -1.25, -0.75);
  CHECK(delta_N_bound(c, bump, 0.01, 1e-13) == Approx(0.01 * 0.375 * weight).epsilon(1e-10));
}

TEST_CASE("b from b tilde undoes the phase") {
  const auto c = free_comparison(1.0);
  const auto bump = PotentialSpec::square_barrier(1.0, 0.1);
  const complex bt = distorted_born_b(c, bump, 0.01, 1e-13);
  const complex b = b_from_tilde(c, bump, 0.01, bt, 1e-13);
  CHECK(std::abs(b) == Approx(std::abs(bt)).epsilon(1e-14));
  const auto exact = solve_ab_system(PotentialSpec::shifted(c.spec(), bump, 0.01), c, tight());
  CHECK(std::abs(b - exact.final_state.b) < 1e-5 * std::abs(exact.final_state.b));
}

TEST_CASE("shift must be localized") {
  const auto c = free_comparison(1.0);
  CHECK_THROWS_AS(distorted_born_b(c, PotentialSpec::step(0.0, 0.1), 0.01, 1e-12), DomainError);
}
