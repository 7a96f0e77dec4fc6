#include <doctest.h>

#include <cmath>
#include <limits>

#include "scatterbound/domain.hpp"

using namespace scatterbound;
using doctest::Approx;

TEST_CASE("square barrier values inside and outside") {
  const auto v = PotentialSpec::square_barrier(1.0, 1.0);
  CHECK(evaluate_potential(v, 0.0) == 1.0);
  CHECK(evaluate_potential(v, 10.0) == 0.0);
  CHECK(evaluate_potential(v, -10.0) == 0.0);
  CHECK(evaluate_potential(v, 0.5) == 1.0);
  CHECK(evaluate_potential(v, 0.5000001) == 0.0);
}

TEST_CASE("gaussian definition") {
  const auto v = PotentialSpec::gaussian(1.0, 1.0);
  CHECK(evaluate_potential(v, 1.0) == Approx(0.6065306597126334).epsilon(1e-15));
  CHECK(evaluate_potential(PotentialSpec::gaussian(2.0, 0.5, 1.0), 1.0) == 2.0);
}

TEST_CASE("step and tabulated potentials") {
  const auto s = PotentialSpec::step(0.0, 0.5);
  CHECK(evaluate_potential(s, -1.0) == 0.0);
  CHECK(evaluate_potential(s, 1.0) == 0.5);
  CHECK(s.v_minus_inf() == 0.0);
  CHECK(s.v_plus_inf() == 0.5);

  const auto t = PotentialSpec::tabulated({-1, 0, 1}, {0, 1, 0}, 0, 0);
  CHECK(evaluate_potential(t, 0.5) == Approx(0.5));
  CHECK(evaluate_potential(t, -0.25) == Approx(0.75));
  CHECK(evaluate_potential(t, 3.0) == 0.0);
  CHECK_THROWS_AS(PotentialSpec::tabulated({0, 1}, {0}, 0, 0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::tabulated({1, 0}, {0, 0}, 0, 0), DomainError);
}

TEST_CASE("delta potentials are point masses") {
  const auto d = PotentialSpec::delta(1.5, 0.25);
  CHECK(d.regular_value(0.25) == 0.0);
  const auto masses = d.point_masses();
  REQUIRE(masses.size() == 1);
  CHECK(masses[0].position == 0.25);
  CHECK(masses[0].weight == 1.5);
  CHECK_THROWS_AS(evaluate_potential(d, 0.0), DomainError);

  const auto merged = PotentialSpec::shifted(PotentialSpec::delta(1.0), PotentialSpec::delta(2.0), 0.5);
  REQUIRE(merged.point_masses().size() == 1);
  CHECK(merged.point_masses()[0].weight == Approx(2.0));
}

TEST_CASE("shifted potential combines values and asymptotes") {
  const auto base = PotentialSpec::step(0.0, 0.5);
  const auto bump = PotentialSpec::gaussian(1.0, 0.5);
  const auto v = PotentialSpec::shifted(base, bump, 0.1);
  CHECK(evaluate_potential(v, 0.0) == Approx(0.5 + 0.1));
  CHECK(v.v_plus_inf() == 0.5);
  CHECK(v.base() == base);
  CHECK(v.shift() == bump);
  CHECK(v.epsilon() == 0.1);
  CHECK_THROWS_AS(PotentialSpec::free().base(), DomainError);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(PotentialSpec::square_barrier(1.0, -1.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::gaussian(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(PotentialSpec::square_barrier(std::nan(""), 1.0), DomainError);
  CHECK_THROWS_AS(evaluate_potential(PotentialSpec::free(), std::numeric_limits<double>::infinity()),
                  DomainError);
}

TEST_CASE("kind names round-trip") {
  for (auto k : {PotentialKind::free, PotentialKind::step, PotentialKind::square_barrier,
                 PotentialKind::delta, PotentialKind::gaussian, PotentialKind::tabulated,
                 PotentialKind::shifted}) {
    CHECK(potential_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(potential_kind_from_string("lorentzian"), DomainError);
}

TEST_CASE("wave number profile") {
  const auto free = wave_number_profile(PotentialSpec::free(), 2.0);
  CHECK(free.k_squared(0.3) == 2.0);
  CHECK(free.k_minus_inf() == Approx(std::sqrt(2.0)));
  CHECK(free.k_plus_inf() == Approx(std::sqrt(2.0)));

  const auto sq = wave_number_profile(PotentialSpec::square_barrier(1, 1), 2.0);
  CHECK(sq.k_squared(0.0) == 1.0);
  CHECK(sq.k_squared(3.0) == 2.0);

  const auto st = wave_number_profile(PotentialSpec::step(0.0, 0.5), 1.0);
  CHECK(st.k_minus_inf() == Approx(1.0));
  CHECK(st.k_plus_inf() == Approx(std::sqrt(0.5)));

  CHECK_THROWS_AS(wave_number_profile(PotentialSpec::step(0.0, 0.5), 0.5), DomainError);
  CHECK_THROWS_AS(wave_number_profile(PotentialSpec::free(), 0.0), DomainError);
  CHECK_THROWS_WITH_AS(wave_number_profile(PotentialSpec::free(), -1.0),
                       doctest::Contains("no open scattering channel"), DomainError);
}

TEST_CASE("scatter result from bogoliubov coefficients") {
  const auto r = ScatterResult::from_bogoliubov({1.25, 0.0}, {0.0, 0.75});
  CHECK(r.T == Approx(0.64));
  CHECK(r.R == Approx(0.36));
}
