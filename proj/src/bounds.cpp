#include "scatterbound/bounds.hpp"

#include <cmath>
#include <map>

#include "scatterbound/quadrature.hpp"

namespace scatterbound {

namespace {

double sech2(double x) {
  const double c = std::cosh(x);
  return 1.0 / (c * c);
}

}  // namespace

double theta_bound(const PotentialSpec& spec, const ComparisonSolution& comparison,
                   double energy, double quad_tol, const SolverSettings& settings) {
  if (energy != comparison.energy()) {
    throw DomainError("theta_bound: comparison was built for a different energy");
  }
  const double tol = settings.asymptote_tol * std::max(1.0, std::abs(energy));
  if (std::abs(spec.v_minus_inf() - comparison.spec().v_minus_inf()) > tol ||
      std::abs(spec.v_plus_inf() - comparison.spec().v_plus_inf()) > tol) {
    throw DomainError("theta_bound: comparison must share the asymptotes of the full potential");
  }
  const PotentialSpec& ref = comparison.spec();
  auto shift = [&](double x) { return ref.regular_value(x) - spec.regular_value(x); };
  const Domain domain =
      split_at_sign_changes(shift, truncate_domain(spec, &ref, energy, settings));

  auto integrand = [&](double x) {
    return 0.5 * std::abs(shift(x)) *
           std::norm(comparison.psi0(x));
  };
  double total = integrate_over_domain(integrand, domain, quad_tol);

  std::map<double, double> net;
  for (const auto& m : spec.point_masses()) net[m.position] += m.weight;
  for (const auto& m : ref.point_masses()) net[m.position] -= m.weight;
  for (const auto& [pos, w] : net) {
    total += 0.5 * std::abs(w) * std::norm(comparison.psi0(pos));
  }
  return total;
}

double theta0_from_T0(double T0) {
  if (!(T0 > 0.0 && T0 <= 1.0)) throw DomainError("T0 must lie in (0, 1]");
  return std::asinh(std::sqrt((1.0 - T0) / T0));
}

BoundReport bogoliubov_bounds_from_theta0(double theta_bound, double theta0) {
  if (!(theta_bound >= 0.0)) throw DomainError("theta_bound must be non-negative");
  BoundReport r;
  r.theta_bound = theta_bound;
  r.theta0 = theta0;
  r.alpha_upper = std::cosh(theta0 + theta_bound);
  r.beta_upper = std::sinh(theta0 + theta_bound);
  r.T_lower = sech2(theta0 + theta_bound);
  r.lower_nontrivial = theta_bound < theta0;
  r.alpha_lower = r.lower_nontrivial ? std::cosh(theta0 - theta_bound) : 1.0;
  r.beta_lower = r.lower_nontrivial ? std::sinh(theta0 - theta_bound) : 0.0;
  r.upper_valid = theta_bound <= theta0;
  r.T_upper = r.upper_valid ? sech2(theta0 - theta_bound) : 1.0;
  return r;
}

BoundReport bogoliubov_bounds(double theta_bound, const ComparisonSolution& comparison) {
  return bogoliubov_bounds_from_theta0(theta_bound, std::asinh(std::abs(comparison.beta0())));
}

TransmissionBounds transmission_bounds_algebraic(double theta_bound, double T0) {
  if (!(T0 > 0.0 && T0 <= 1.0)) throw DomainError("T0 must lie in (0, 1]");
  if (!(theta_bound >= 0.0)) throw DomainError("theta_bound must be non-negative");
  const double c = std::cosh(theta_bound);
  const double s = std::sinh(theta_bound);
  const double r = std::sqrt(1.0 - T0);
  TransmissionBounds out;
  const double plus = c + r * s;
  out.T_lower = T0 / (plus * plus);
  // A positive denominator alone is not enough: for tanh(tb) > sqrt(1 - T0) the
  // squared form equals sech^2(tb - Theta0), which is not an upper bound.
  out.upper_valid = std::tanh(theta_bound) <= r;
  if (out.upper_valid) {
    const double minus = c - r * s;
    out.T_upper = T0 / (minus * minus);
  } else {
    out.T_upper = 1.0;
  }
  return out;
}

double case1_bound(const PotentialSpec& spec, double energy, double quad_tol,
                   const SolverSettings& settings) {
  const double tol = settings.asymptote_tol * std::max(1.0, std::abs(energy));
  if (std::abs(spec.v_minus_inf() - spec.v_plus_inf()) > tol) {
    throw DomainError("case1_bound requires equal asymptotes");
  }
  const ComparisonSolution free(PotentialSpec::free(spec.v_minus_inf()), energy);
  return bogoliubov_bounds(theta_bound(spec, free, energy, quad_tol, settings), free).alpha_upper;
}

}  // namespace scatterbound
