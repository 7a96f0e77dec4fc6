#include <doctest.h>

#include <cmath>

#include "scatterbound/refsolutions.hpp"
#include "scatterbound/solver.hpp"

using namespace scatterbound;
using doctest::Approx;

namespace {

// Five-point central difference.
complex derivative(const ComparisonSolution& c, double x, double h = 1e-3) {
  return (-c.psi0(x + 2 * h) + 8.0 * c.psi0(x + h) - 8.0 * c.psi0(x - h) + c.psi0(x - 2 * h)) /
         (12.0 * h);
}

double closed_square_T(double v0, double l, double e) {
  if (e > v0) {
    const double s = std::sin(std::sqrt(e - v0) * l);
    return 1.0 / (1.0 + v0 * v0 * s * s / (4.0 * e * (e - v0)));
  }
  const double s = std::sinh(std::sqrt(v0 - e) * l);
  return 1.0 / (1.0 + v0 * v0 * s * s / (4.0 * e * (v0 - e)));
}

}  // namespace

TEST_CASE("free comparison") {
  const auto c1 = free_comparison(1.0);
  for (double x : {-3.0, 0.0, 0.7, 12.0}) CHECK(std::norm(c1.psi0(x)) == Approx(1.0).epsilon(1e-14));

  const auto c4 = free_comparison(4.0);
  CHECK(std::norm(c4.psi0(0.4)) == Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(c4.alpha0() - complex(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(c4.beta0()) < 1e-14);

  const auto c2 = free_comparison(2.0);
  CHECK(std::abs(flux(c2.psi0(0.3), derivative(c2, 0.3)) - 1.0) < 1e-10);
  CHECK_THROWS_AS(free_comparison(0.0), DomainError);
}

TEST_CASE("square barrier comparison matches the closed-form transmission") {
  const auto c = square_barrier_comparison(1.0, 1.0, 2.0);
  CHECK(c.T0() == Approx(closed_square_T(1.0, 1.0, 2.0)).epsilon(1e-13));
  CHECK(c.T0() == Approx(0.9186877068827067).epsilon(1e-13));
  CHECK(std::norm(c.alpha0()) - std::norm(c.beta0()) == Approx(1.0).epsilon(1e-13));

  const auto under = square_barrier_comparison(2.0, 1.0, 1.0);
  CHECK(under.T0() == Approx(0.4199743416140261).epsilon(1e-13));

  const auto weak = square_barrier_comparison(1e-9, 1.0, 2.0);
  CHECK(std::abs(weak.alpha0() - complex(1.0, 0.0)) < 1e-8);
  CHECK(std::abs(weak.beta0()) < 1e-8);
  CHECK(weak.T0() == Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(square_barrier_comparison(2.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(square_barrier_comparison(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("comparison wavefunction is continuous, has unit flux and solves the equation") {
  for (const auto& c : {square_barrier_comparison(1.0, 1.0, 2.0), square_barrier_comparison(2.0, 1.0, 1.0),
                        step_comparison(0.75, 1.0), delta_comparison(1.0, 1.0)}) {
    for (double edge : c.interfaces()) {
      CHECK(std::abs(c.psi0(edge - 1e-12) - c.psi0(edge + 1e-12)) < 1e-10);
    }
    for (double x : {-2.0, -0.2, 0.1, 0.45, 3.0}) {
      CHECK(flux(c.psi0(x), c.dpsi0(x)) == Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(derivative(c, x, 1e-4) - c.dpsi0(x)) < 1e-7);
    }
  }
  // psi0'' + k0^2 psi0 = 0 inside the barrier.
  const auto c = square_barrier_comparison(1.0, 1.0, 2.0);
  const double h = 1e-3, x = 0.1;
  const complex d2 = (c.psi0(x + h) - 2.0 * c.psi0(x) + c.psi0(x - h)) / (h * h);
  CHECK(std::abs(d2 + c.k0_squared(x) * c.psi0(x)) < 1e-6);
}

TEST_CASE("left asymptote is a unit-flux incoming wave") {
  const auto c = step_comparison(0.75, 1.0);
  const double x = -5.0;
  CHECK(std::abs(c.psi0(x) - std::exp(complex(0.0, x))) < 1e-13);
}

TEST_CASE("delta comparison") {
  const auto c = delta_comparison(1.0, 1.0);
  CHECK(c.T0() == Approx(0.8).epsilon(1e-14));
  CHECK(std::abs(c.beta0()) == Approx(0.5).epsilon(1e-14));
  const auto none = delta_comparison(0.0, 1.0);
  CHECK(none.T0() == Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(none.beta0()) < 1e-14);
  // psi0' jumps by lambda psi0 across the delta.
  CHECK(std::abs((c.dpsi0(1e-12) - c.dpsi0(-1e-12)) - 1.0 * c.psi0(0.0)) < 1e-9);
}

TEST_CASE("step comparison") {
  const auto flat = step_comparison(0.0, 1.0);
  const auto free = free_comparison(1.0);
  CHECK(std::abs(flat.alpha0() - free.alpha0()) < 1e-14);
  CHECK(std::abs(flat.psi0(0.7) - free.psi0(0.7)) < 1e-14);

  const auto c = step_comparison(0.75, 1.0);
  CHECK(c.T0() == Approx(8.0 / 9.0).epsilon(1e-14));
  CHECK(std::norm(c.alpha0()) - std::norm(c.beta0()) == Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(step_comparison(1.0, 1.0), DomainError);
}

TEST_CASE("only piecewise-constant comparisons are accepted") {
  CHECK_THROWS_AS(ComparisonSolution(PotentialSpec::gaussian(1.0, 1.0), 2.0), DomainError);
  CHECK_NOTHROW(ComparisonSolution(
      PotentialSpec::shifted(PotentialSpec::step(0, 0.5), PotentialSpec::square_barrier(1, 1, 1), 1.0), 2.0));
}
