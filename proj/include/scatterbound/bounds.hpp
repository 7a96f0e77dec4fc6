#pragma once

#include "scatterbound/refsolutions.hpp"
#include "scatterbound/solver.hpp"

namespace scatterbound {

/// Upper and lower bounds on |alpha|, |beta| and T relative to a comparison problem.
struct BoundReport {
  double theta_bound = 0.0;
  double theta0 = 0.0;
  double alpha_upper = 1.0;
  double beta_upper = 0.0;
  double alpha_lower = 1.0;
  double beta_lower = 0.0;
  double T_lower = 1.0;
  double T_upper = 1.0;
  /// theta_bound <= theta0: the sech^2(theta0 - theta_bound) upper bound on T exists.
  bool upper_valid = true;
  /// theta_bound < theta0: the lower bounds on |alpha|, |beta| beat the trivial ones.
  bool lower_nontrivial = false;
};

/// (1/2) int |k^2 - k0^2| |psi0|^2 dx, plus (1/2)|w| |psi0(x_w)|^2 for every point mass w
/// of V - V0. `energy` must match the comparison energy.
double theta_bound(const PotentialSpec& spec, const ComparisonSolution& comparison,
                   double energy, double quad_tol, const SolverSettings& settings = {});

/// Theta0 = arccosh(1/sqrt(T0)), written as asinh(sqrt((1 - T0)/T0)) to stay
/// accurate as T0 -> 1.
double theta0_from_T0(double T0);

BoundReport bogoliubov_bounds(double theta_bound, const ComparisonSolution& comparison);

/// Same bounds from Theta0 alone (|alpha0| = cosh Theta0, |beta0| = sinh Theta0).
BoundReport bogoliubov_bounds_from_theta0(double theta_bound, double theta0);

struct TransmissionBounds {
  double T_lower = 1.0;
  double T_upper = 1.0;
  bool upper_valid = true;
};

/// T0 / [cosh tb +- sqrt(1 - T0) sinh tb]^2. The upper form is reported only when
/// tanh(tb) <= sqrt(1 - T0), i.e. tb <= Theta0; otherwise T_upper = 1 and
/// upper_valid = false.
TransmissionBounds transmission_bounds_algebraic(double theta_bound, double T0);

/// cosh{(1/2k0) int |k^2 - k0^2| dx} for a potential with equal asymptotes,
/// using the free comparison at the asymptotic level.
double case1_bound(const PotentialSpec& spec, double energy, double quad_tol,
                   const SolverSettings& settings = {});

}  // namespace scatterbound
