#include "scatterbound/perturbation.hpp"

#include <cmath>

#include "integrator.hpp"
#include "scatterbound/quadrature.hpp"

namespace scatterbound {

namespace {

constexpr complex I{0.0, 1.0};

void require_localized(const PotentialSpec& delta_v) {
  if (delta_v.v_minus_inf() != 0.0 || delta_v.v_plus_inf() != 0.0) {
    throw DomainError("potential shift must vanish at both infinities");
  }
}

struct BornIntegrals {
  double phase = 0.0;  // eps int dv |psi0|^2
  complex b_tilde{0.0, 0.0};
};

BornIntegrals born_integrals(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                             double epsilon, double tol, const SolverSettings& settings) {
  require_localized(delta_v);
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  BornIntegrals out;
  if (epsilon == 0.0) return out;

  const Domain domain =
      truncate_domain(delta_v, &comparison.spec(), comparison.energy(), settings);
  std::vector<double> edges{domain.lo};
  edges.insert(edges.end(), domain.breakpoints.begin(), domain.breakpoints.end());
  edges.push_back(domain.hi);

  using State3 = std::array<double, 3>;
  double seg_lo = domain.lo, seg_hi = domain.hi;
  auto rhs = [&](const State3& s, State3& ds, double x) {
    x = std::clamp(x, seg_lo, seg_hi);
    const double dv = -delta_v.regular_value(x);
    if (dv == 0.0) {
      ds = {0.0, 0.0, 0.0};
      return;
    }
    const complex p0 = comparison.psi0(x);
    const complex db = -0.5 * I * epsilon * dv * p0 * p0 * std::exp(I * s[0]);
    ds = {epsilon * dv * std::norm(p0), db.real(), db.imag()};
  };

  State3 y{0.0, 0.0, 0.0};
  detail::StepBudget budget{0, settings.max_steps};
  double dt = 1e-3;
  const auto masses = delta_v.point_masses();
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double s0 = edges[i];
    const double s1 = edges[i + 1];
    seg_lo = s0 + std::min(1e-10 * std::max(1.0, std::abs(s0)), 1e-3 * (s1 - s0));
    seg_hi = s1 - std::min(1e-10 * std::max(1.0, std::abs(s1)), 1e-3 * (s1 - s0));
    detail::integrate_segment(rhs, y, s0, s1, dt, s1 - s0, tol, tol, budget);
    for (const auto& m : masses) {
      if (m.position != s1) continue;
      const double dv = -m.weight;
      const complex p0 = comparison.psi0(s1);
      const double jump = epsilon * dv * std::norm(p0);
      const complex db = -0.5 * I * epsilon * dv * p0 * p0 * std::exp(I * (y[0] + 0.5 * jump));
      y = {y[0] + jump, y[1] + db.real(), y[2] + db.imag()};
    }
  }
  out.phase = y[0];
  out.b_tilde = {y[1], y[2]};
  return out;
}

}  // namespace

complex distorted_born_b(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                         double epsilon, double quad_tol, const SolverSettings& settings) {
  return born_integrals(comparison, delta_v, epsilon, quad_tol, settings).b_tilde;
}

complex b_from_tilde(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                     double epsilon, complex b_tilde, double quad_tol,
                     const SolverSettings& settings) {
  const double phase = born_integrals(comparison, delta_v, epsilon, quad_tol, settings).phase;
  return b_tilde * std::exp(-0.5 * I * phase);
}

double shift_weight_integral(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                             double quad_tol, const SolverSettings& settings) {
  require_localized(delta_v);
  const Domain domain = split_at_sign_changes(
      [&](double x) { return delta_v.regular_value(x); },
      truncate_domain(delta_v, &comparison.spec(), comparison.energy(), settings));
  auto integrand = [&](double x) {
    return std::abs(delta_v.regular_value(x)) * std::norm(comparison.psi0(x));
  };
  double total = integrate_over_domain(integrand, domain, quad_tol);
  for (const auto& m : delta_v.point_masses()) {
    total += std::abs(m.weight) * std::norm(comparison.psi0(m.position));
  }
  return total;
}

double delta_T_first_order(const ComparisonSolution& comparison, complex b_inf) {
  const complex ratio = std::conj(comparison.beta0()) * b_inf / comparison.alpha0();
  return -comparison.T0() * 2.0 * ratio.real();
}

double delta_T_bound(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                     double epsilon, double quad_tol, const SolverSettings& settings) {
  const double T0 = comparison.T0();
  if (!(T0 > 0.0 && T0 <= 1.0 + 1e-12)) throw DomainError("T0 must lie in (0, 1]");
  const double reflect = std::sqrt(std::max(0.0, 1.0 - T0));
  if (epsilon == 0.0 || reflect == 0.0) return 0.0;
  return std::abs(epsilon) * T0 * reflect *
         shift_weight_integral(comparison, delta_v, quad_tol, settings);
}

double delta_N_bound(const ComparisonSolution& comparison, const PotentialSpec& delta_v,
                     double epsilon, double quad_tol, const SolverSettings& settings) {
  const double n0 = std::norm(comparison.beta0());
  if (epsilon == 0.0 || n0 == 0.0) return 0.0;
  return std::abs(epsilon) * std::sqrt(n0 * (n0 + 1.0)) *
         shift_weight_integral(comparison, delta_v, quad_tol, settings);
}

PerturbationResult first_order_estimates(const ComparisonSolution& comparison,
                                         const PotentialSpec& delta_v, double epsilon,
                                         double quad_tol, const SolverSettings& settings) {
  PerturbationResult r;
  r.epsilon = epsilon;
  const BornIntegrals born = born_integrals(comparison, delta_v, epsilon, quad_tol, settings);
  r.b_tilde = born.b_tilde;
  r.b_infinity_est = born.b_tilde * std::exp(-0.5 * I * born.phase);
  const double weight = shift_weight_integral(comparison, delta_v, quad_tol, settings);
  r.b_abs_bound = 0.5 * std::abs(epsilon) * weight;
  r.delta_T_est = delta_T_first_order(comparison, r.b_infinity_est);
  const double T0 = comparison.T0();
  r.delta_T_bound = std::abs(epsilon) * T0 * std::sqrt(std::max(0.0, 1.0 - T0)) * weight;
  const double n0 = std::norm(comparison.beta0());
  r.delta_N_bound = std::abs(epsilon) * std::sqrt(n0 * (n0 + 1.0)) * weight;
  return r;
}

}  // namespace scatterbound
