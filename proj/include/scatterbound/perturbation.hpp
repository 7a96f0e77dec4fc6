#pragma once

#include "scatterbound/refsolutions.hpp"
#include "scatterbound/solver.hpp"

namespace scatterbound {

// Small shifts V = V0 + epsilon * dV. In k^2 language k^2 = k0^2 + epsilon * dv with
// dv = -dV; `delta_v` arguments below are always the potential shift dV.

struct PerturbationResult {
  double epsilon = 0.0;
  complex b_tilde{0.0, 0.0};         // distorted-Born estimate of b~(inf)
  complex b_infinity_est{0.0, 0.0};  // b(inf) = b~(inf) exp(-(i/2) eps int dv |psi0|^2)
  double b_abs_bound = 0.0;
  double delta_T_est = 0.0;
  double delta_T_bound = 0.0;
  double delta_N_bound = 0.0;
};

/// b~(inf) = -(i eps / 2) int dv psi0^2 exp(+i eps int_{-inf}^x dv |psi0|^2) dx.
/// The running phase and the outer integral are advanced together as one ODE so
/// both see the same nodes.
complex distorted_born_b(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                         double epsilon, double quad_tol, const SolverSettings& settings = {});

/// Converts b~(inf) back to b(inf) by undoing the explicit phase.
complex b_from_tilde(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                     double epsilon, complex b_tilde, double quad_tol,
                     const SolverSettings& settings = {});

/// int |dv| |psi0|^2 dx, point masses included.
double shift_weight_integral(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                             double quad_tol, const SolverSettings& settings = {});

/// -T0 * 2 Re{beta0* b(inf) / alpha0}.
double delta_T_first_order(const ComparisonSolution& comparison, complex b_inf);

/// eps * T0 * sqrt(1 - T0) * int |dv| |psi0|^2 dx.
double delta_T_bound(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                     double epsilon, double quad_tol, const SolverSettings& settings = {});

/// eps * sqrt(N0 (N0 + 1)) * int |dv| |psi0|^2 dx with N0 = |beta0|^2.
double delta_N_bound(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                     double epsilon, double quad_tol, const SolverSettings& settings = {});

/// All first-order quantities for one epsilon.
PerturbationResult first_order_estimates(const ComparisonSolution& comparison,
                                         const PotentialSpec& delta_v, double epsilon,
                                         double quad_tol, const SolverSettings& settings = {});

}  // namespace scatterbound
