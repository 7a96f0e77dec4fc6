#pragma once

#include <utility>
#include <vector>

#include "scatterbound/domain.hpp"
#include "scatterbound/refsolutions.hpp"

namespace scatterbound {

struct SolverSettings {
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  /// Truncation threshold, relative to max(1, |E|).
  double asymptote_tol = 1e-12;
  double domain_pad = 1.0;
  long max_steps = 5'000'000;
  /// Spacing of stored trajectory nodes for the (a, b) system.
  double node_spacing = 5e-4;

  void validate() const;
  bool operator==(const SolverSettings&) const = default;
};

/// Position-dependent Bogoliubov pair.
struct AmplitudeState {
  double x = 0.0;
  complex a{1.0, 0.0};
  complex b{0.0, 0.0};
};

struct PhaseState {
  double x = 0.0;
  double theta = 0.0;
  double delta = 0.0;  // phi_a - phi_b + 2 phi_0, unwrapped
  double phi_a = 0.0;
  double phi_b = 0.0;
  double phi0 = 0.0;
};

struct AbSolution {
  AmplitudeState final_state;
  std::vector<AmplitudeState> trajectory;
};

/// Finite window [lo, hi] standing in for (-inf, +inf).
struct Domain {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> breakpoints;  // interior, sorted, unique
};

/// Chooses the truncation window for `spec` (and optionally a comparison spec)
/// and checks that V has reached its asymptotes at both edges.
Domain truncate_domain(const PotentialSpec& spec, const PotentialSpec* comparison_spec,
                       double energy, const SolverSettings& settings);

/// Im{psi* psi'}.
double flux(complex psi, complex dpsi);

/// Integrates psi'' = -k^2 psi from the left edge with psi = exp(i k_- x)/sqrt(k_-)
/// and reads off alpha, beta at the right edge.
ScatterResult solve_direct(const PotentialSpec& spec, double energy,
                           const SolverSettings& settings = {});

/// Integrates the first-order system for (a, b) relative to `comparison`, starting
/// from (1, 0) at the left edge. Point masses in V - V0 are applied as exact jumps;
/// the trajectory then holds two nodes at the same x (before and after).
AbSolution solve_ab_system(const PotentialSpec& spec, const ComparisonSolution& comparison,
                           const SolverSettings& settings = {});

/// alpha = alpha0 a + beta0* b, beta = beta0 a + alpha0* b.
ScatterResult compose_bogoliubov(const ComparisonSolution& comparison,
                                 const AmplitudeState& final_state);

/// psi = a psi0 + b psi0*, psi' = a psi0' + b psi0*'.
std::pair<complex, complex> reconstruct_wavefunction(const ComparisonSolution& comparison,
                                                     const AmplitudeState& state);

/// Theta, unwrapped phases and the nett phase at every trajectory node.
std::vector<PhaseState> phase_trajectory(const std::vector<AmplitudeState>& trajectory,
                                         const ComparisonSolution& comparison);

/// Running value of (1/2) int_{-inf}^{x} [k^2 - k0^2] |psi0|^2 sin(Delta) dx by the
/// trapezoid rule over the nodes, with one-sided values at discontinuities.
std::vector<double> theta_running_integral(const std::vector<PhaseState>& phases,
                                           const ComparisonSolution& comparison,
                                           const PotentialSpec& spec);

/// Max residual of the nett-phase equation
///   Delta' = [k^2 - k0^2]|psi0|^2 + 2 phi0' + [k^2 - k0^2]|psi0|^2 coth(2 Theta) cos(Delta)
/// by central differences, over nodes with sinh(2 Theta) > 1e-3 whose stencil does not
/// straddle a discontinuity. Throws NumericalError with fewer than 3 usable nodes.
double nett_phase_residual(const std::vector<PhaseState>& phases,
                           const ComparisonSolution& comparison, const PotentialSpec& spec);

/// Same stencil, with the coupling written as 1/sinh(2 Theta) instead of coth(2 Theta).
/// Kept to quantify how far the solved trajectory is from that form.
double nett_phase_residual_csch(const std::vector<PhaseState>& phases,
                                const ComparisonSolution& comparison,
                                const PotentialSpec& spec);

}  // namespace scatterbound
