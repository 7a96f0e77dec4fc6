#include "scatterbound/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "integrator.hpp"

namespace scatterbound {

namespace {

constexpr complex I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

using State4 = std::array<double, 4>;

void unpack(const State4& s, complex& u, complex& v) {
  u = {s[0], s[1]};
  v = {s[2], s[3]};
}

void pack(State4& s, complex u, complex v) {
  s = {u.real(), u.imag(), v.real(), v.imag()};
}

std::vector<double> segment_edges(const Domain& domain) {
  std::vector<double> edges;
  edges.push_back(domain.lo);
  for (double b : domain.breakpoints) edges.push_back(b);
  edges.push_back(domain.hi);
  return edges;
}

// Point masses of V - V0, merged by position.
std::vector<PointMass> net_point_masses(const PotentialSpec& spec, const PotentialSpec& ref) {
  std::map<double, double> merged;
  for (const auto& m : spec.point_masses()) merged[m.position] += m.weight;
  for (const auto& m : ref.point_masses()) merged[m.position] -= m.weight;
  std::vector<PointMass> out;
  for (const auto& [pos, w] : merged) {
    if (w != 0.0) out.push_back({pos, w});
  }
  return out;
}

double weight_at(const std::vector<PointMass>& masses, double x) {
  double w = 0.0;
  for (const auto& m : masses) {
    if (m.position == x) w += m.weight;
  }
  return w;
}

// Nearest-branch continuation of an angle.
double unwrap_next(double previous, double raw, double x) {
  double jump = std::remainder(raw - previous, 2.0 * kPi);
  if (std::abs(jump) > 0.75 * kPi) {
    throw NumericalError("phase jump near x = " + std::to_string(x) +
                         " is not resolved; increase the node density");
  }
  return previous + jump;
}

// One-sided evaluation inside an interval [left, right].
double inward(double x, double toward) {
  const double nudge = std::min(1e-10 * std::max(1.0, std::abs(x)), 1e-3 * std::abs(toward - x));
  return toward > x ? x + nudge : x - nudge;
}

void check_matching_asymptotes(const PotentialSpec& spec, const PotentialSpec& ref, double tol) {
  if (std::abs(spec.v_minus_inf() - ref.v_minus_inf()) > tol ||
      std::abs(spec.v_plus_inf() - ref.v_plus_inf()) > tol) {
    throw DomainError("comparison potential must share the asymptotes of the full potential");
  }
}

}  // namespace

void SolverSettings::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(asymptote_tol > 0.0) || !(node_spacing > 0.0)) {
    throw DomainError("solver tolerances and node spacing must be positive");
  }
  if (!(domain_pad >= 0.0)) throw DomainError("domain_pad must be non-negative");
  if (max_steps <= 0) throw DomainError("max_steps must be positive");
}

Domain truncate_domain(const PotentialSpec& spec, const PotentialSpec* comparison_spec,
                       double energy, const SolverSettings& settings) {
  settings.validate();
  const double tol = settings.asymptote_tol * std::max(1.0, std::abs(energy));

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  std::vector<double> breaks;
  auto absorb = [&](const PotentialSpec& s) {
    const auto [slo, shi] = s.support(tol);
    if (slo <= shi) {
      lo = std::min(lo, slo);
      hi = std::max(hi, shi);
    }
    for (double b : s.breakpoints()) {
      breaks.push_back(b);
      lo = std::min(lo, b);
      hi = std::max(hi, b);
    }
  };
  absorb(spec);
  if (comparison_spec) absorb(*comparison_spec);
  if (lo > hi) lo = hi = 0.0;

  Domain d;
  d.lo = lo - settings.domain_pad;
  d.hi = hi + settings.domain_pad;
  if (!(d.hi > d.lo)) {
    // Nothing to resolve; keep a unit window so trajectories are not empty.
    d.lo -= 0.5;
    d.hi += 0.5;
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  for (double b : breaks) {
    if (b > d.lo && b < d.hi) d.breakpoints.push_back(b);
  }

  auto check_edges = [&](const PotentialSpec& s) {
    if (std::abs(s.regular_value(d.lo) - s.v_minus_inf()) >= tol ||
        std::abs(s.regular_value(d.hi) - s.v_plus_inf()) >= tol) {
      throw NumericalError("domain truncation failed: potential is not flat at the window edges");
    }
  };
  check_edges(spec);
  if (comparison_spec) check_edges(*comparison_spec);
  return d;
}

double flux(complex psi, complex dpsi) { return (std::conj(psi) * dpsi).imag(); }

ScatterResult solve_direct(const PotentialSpec& spec, double energy,
                           const SolverSettings& settings) {
  const WaveNumberProfile profile(spec, energy);
  const Domain domain = truncate_domain(spec, nullptr, energy, settings);
  const auto masses = spec.point_masses();
  const double k_minus = profile.k_minus_inf();
  const double k_plus = profile.k_plus_inf();

  complex psi = std::exp(I * k_minus * domain.lo) / std::sqrt(k_minus);
  complex dpsi = I * k_minus * psi;
  State4 y;
  pack(y, psi, dpsi);

  double seg_lo = domain.lo, seg_hi = domain.hi;
  auto rhs = [&](const State4& s, State4& ds, double x) {
    const double k2 = profile.k_squared(std::clamp(x, seg_lo, seg_hi));
    ds = {s[2], s[3], -k2 * s[0], -k2 * s[1]};
  };

  detail::StepBudget budget{0, settings.max_steps};
  const auto edges = segment_edges(domain);
  double dt = 1e-3;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    seg_lo = inward(edges[i], edges[i + 1]);
    seg_hi = inward(edges[i + 1], edges[i]);
    detail::integrate_segment(rhs, y, edges[i], edges[i + 1], dt, edges[i + 1] - edges[i],
                              settings.abs_tol, settings.rel_tol, budget);
    const double w = weight_at(masses, edges[i + 1]);
    if (w != 0.0) {
      unpack(y, psi, dpsi);
      pack(y, psi, dpsi + w * psi);
    }
  }
  unpack(y, psi, dpsi);

  const double x = domain.hi;
  const complex ratio = dpsi / (I * k_plus);
  const complex alpha = 0.5 * std::sqrt(k_plus) * std::exp(-I * k_plus * x) * (psi + ratio);
  const complex beta = 0.5 * std::sqrt(k_plus) * std::exp(I * k_plus * x) * (psi - ratio);
  return ScatterResult::from_bogoliubov(alpha, beta);
}

AbSolution solve_ab_system(const PotentialSpec& spec, const ComparisonSolution& comparison,
                           const SolverSettings& settings) {
  const double energy = comparison.energy();
  const WaveNumberProfile profile(spec, energy);
  const double tol = settings.asymptote_tol * std::max(1.0, std::abs(energy));
  check_matching_asymptotes(spec, comparison.spec(), tol);
  const Domain domain = truncate_domain(spec, &comparison.spec(), energy, settings);
  const auto masses = net_point_masses(spec, comparison.spec());

  double seg_lo = domain.lo, seg_hi = domain.hi;
  auto rhs = [&](const State4& s, State4& ds, double x) {
    x = std::clamp(x, seg_lo, seg_hi);
    const double shift = profile.k_squared(x) - comparison.k0_squared(x);
    if (shift == 0.0) {
      ds = {0.0, 0.0, 0.0, 0.0};
      return;
    }
    complex a, b;
    unpack(s, a, b);
    const complex p0 = comparison.psi0(x);
    const double rho0 = std::norm(p0);
    const complex sq = p0 * p0;
    const complex half_shift = 0.5 * I * shift;
    const complex da = half_shift * (a * rho0 + b * std::conj(sq));
    const complex db = -half_shift * (a * sq + b * rho0);
    ds = {da.real(), da.imag(), db.real(), db.imag()};
  };

  AbSolution out;
  State4 y;
  pack(y, complex(1.0, 0.0), complex(0.0, 0.0));
  out.trajectory.push_back({domain.lo, {1.0, 0.0}, {0.0, 0.0}});

  detail::StepBudget budget{0, settings.max_steps};
  const auto edges = segment_edges(domain);
  double dt = settings.node_spacing;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double s0 = edges[i];
    const double s1 = edges[i + 1];
    seg_lo = inward(s0, s1);
    seg_hi = inward(s1, s0);
    const auto n = static_cast<long>(std::max(1.0, std::ceil((s1 - s0) / settings.node_spacing)));
    const double h = (s1 - s0) / static_cast<double>(n);
    double x = s0;
    for (long j = 1; j <= n; ++j) {
      const double next = j == n ? s1 : s0 + h * static_cast<double>(j);
      detail::integrate_segment(rhs, y, x, next, dt, h, settings.abs_tol, settings.rel_tol,
                                budget);
      x = next;
      complex a, b;
      unpack(y, a, b);
      out.trajectory.push_back({x, a, b});
    }
    const double w = weight_at(masses, s1);
    if (w != 0.0) {
      // V - V0 has -w delta(x - s1) in k^2; the coupling matrix is nilpotent,
      // so the jump is exactly (I + c M).
      complex a, b;
      unpack(y, a, b);
      const complex p0 = comparison.psi0(s1);
      const double rho0 = std::norm(p0);
      const complex sq = p0 * p0;
      const complex c = 0.5 * I * (-w);
      const complex a_new = a + c * (a * rho0 + b * std::conj(sq));
      const complex b_new = b - c * (a * sq + b * rho0);
      pack(y, a_new, b_new);
      out.trajectory.push_back({s1, a_new, b_new});
    }
  }
  out.final_state = out.trajectory.back();
  return out;
}

ScatterResult compose_bogoliubov(const ComparisonSolution& comparison,
                                 const AmplitudeState& final_state) {
  const complex alpha0 = comparison.alpha0();
  const complex beta0 = comparison.beta0();
  const complex alpha = alpha0 * final_state.a + std::conj(beta0) * final_state.b;
  const complex beta = beta0 * final_state.a + std::conj(alpha0) * final_state.b;
  return ScatterResult::from_bogoliubov(alpha, beta);
}

std::pair<complex, complex> reconstruct_wavefunction(const ComparisonSolution& comparison,
                                                     const AmplitudeState& state) {
  const complex p0 = comparison.psi0(state.x);
  const complex dp0 = comparison.dpsi0(state.x);
  return {state.a * p0 + state.b * std::conj(p0), state.a * dp0 + state.b * std::conj(dp0)};
}

std::vector<PhaseState> phase_trajectory(const std::vector<AmplitudeState>& trajectory,
                                         const ComparisonSolution& comparison) {
  std::vector<PhaseState> out(trajectory.size());
  if (trajectory.empty()) return out;

  // Delta is undefined while b is exactly zero; those leading nodes inherit the
  // first defined value (the coupling vanishes there, so nothing depends on it).
  std::size_t first_defined = trajectory.size();
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    if (trajectory[i].b != complex(0.0, 0.0)) {
      first_defined = i;
      break;
    }
  }

  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const auto& s = trajectory[i];
    const complex p0 = comparison.psi0(s.x);
    PhaseState& ps = out[i];
    ps.x = s.x;
    ps.theta = std::asinh(std::abs(s.b));
    const double raw_a = std::arg(s.a);
    const double raw_0 = std::arg(p0);
    if (i == 0) {
      ps.phi_a = raw_a;
      ps.phi0 = raw_0;
    } else {
      ps.phi_a = unwrap_next(out[i - 1].phi_a, raw_a, s.x);
      ps.phi0 = unwrap_next(out[i - 1].phi0, raw_0, s.x);
    }
  }

  if (first_defined == trajectory.size()) {
    for (auto& ps : out) ps.phi_b = ps.phi_a + 2.0 * ps.phi0;
    return out;
  }

  for (std::size_t i = first_defined; i < trajectory.size(); ++i) {
    const auto& s = trajectory[i];
    const complex p0 = comparison.psi0(s.x);
    const double raw = std::arg(s.a * std::conj(s.b) * p0 * p0);
    if (i == first_defined) {
      // Pick the representative consistent with the unwrapped phi_a and phi0.
      const double phi_b = std::arg(s.b);
      const double guess = out[i].phi_a - phi_b + 2.0 * out[i].phi0;
      out[i].delta = guess + std::remainder(raw - guess, 2.0 * kPi);
    } else if (s.b == complex(0.0, 0.0)) {
      out[i].delta = out[i - 1].delta;
    } else {
      out[i].delta = unwrap_next(out[i - 1].delta, raw, s.x);
    }
  }
  for (std::size_t i = 0; i < first_defined; ++i) out[i].delta = out[first_defined].delta;
  for (auto& ps : out) ps.phi_b = ps.phi_a + 2.0 * ps.phi0 - ps.delta;
  return out;
}

std::vector<double> theta_running_integral(const std::vector<PhaseState>& phases,
                                           const ComparisonSolution& comparison,
                                           const PotentialSpec& spec) {
  const WaveNumberProfile profile(spec, comparison.energy());
  auto integrand = [&](double x, double delta) {
    const double shift = profile.k_squared(x) - comparison.k0_squared(x);
    return 0.5 * shift * std::norm(comparison.psi0(x)) * std::sin(delta);
  };

  std::vector<double> running(phases.size(), 0.0);
  if (phases.empty()) return running;
  running[0] = phases[0].theta;
  for (std::size_t i = 0; i + 1 < phases.size(); ++i) {
    const auto& p = phases[i];
    const auto& q = phases[i + 1];
    const double dx = q.x - p.x;
    if (dx == 0.0) {
      // Point-mass jump: taken from the trajectory.
      running[i + 1] = running[i] + (q.theta - p.theta);
      continue;
    }
    const double fl = integrand(inward(p.x, q.x), p.delta);
    const double fr = integrand(inward(q.x, p.x), q.delta);
    running[i + 1] = running[i] + 0.5 * dx * (fl + fr);
  }
  return running;
}

namespace {

template <class Coupling>
double nett_phase_residual_impl(const std::vector<PhaseState>& phases,
                                const ComparisonSolution& comparison, const PotentialSpec& spec,
                                Coupling coupling) {
  const WaveNumberProfile profile(spec, comparison.energy());
  std::vector<double> breaks = spec.breakpoints();
  const auto& more = comparison.interfaces();
  breaks.insert(breaks.end(), more.begin(), more.end());
  std::sort(breaks.begin(), breaks.end());

  auto straddles = [&](double lo, double hi) {
    auto it = std::lower_bound(breaks.begin(), breaks.end(), lo);
    return it != breaks.end() && *it <= hi;
  };

  double worst = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 1; i + 1 < phases.size(); ++i) {
    const auto& prev = phases[i - 1];
    const auto& cur = phases[i];
    const auto& next = phases[i + 1];
    if (!(prev.x < cur.x && cur.x < next.x)) continue;
    if (straddles(prev.x, next.x)) continue;
    const double s2 = std::sinh(2.0 * cur.theta);
    if (!(s2 > 1e-3)) continue;

    const double ddelta = (next.delta - prev.delta) / (next.x - prev.x);
    const complex p0 = comparison.psi0(cur.x);
    const double rho0 = std::norm(p0);
    const double dphi0 = 1.0 / rho0;  // J0 / |psi0|^2
    const double shift_rho = (profile.k_squared(cur.x) - comparison.k0_squared(cur.x)) * rho0;
    const double predicted =
        shift_rho + 2.0 * dphi0 + shift_rho * coupling(cur.theta) * std::cos(cur.delta);
    worst = std::max(worst, std::abs(ddelta - predicted));
    ++used;
  }
  if (used < 3) {
    throw NumericalError("nett-phase residual: fewer than 3 usable nodes");
  }
  return worst;
}

}  // namespace

double nett_phase_residual(const std::vector<PhaseState>& phases,
                           const ComparisonSolution& comparison, const PotentialSpec& spec) {
  return nett_phase_residual_impl(phases, comparison, spec,
                                  [](double theta) { return 1.0 / std::tanh(2.0 * theta); });
}

double nett_phase_residual_csch(const std::vector<PhaseState>& phases,
                                const ComparisonSolution& comparison,
                                const PotentialSpec& spec) {
  return nett_phase_residual_impl(phases, comparison, spec,
                                  [](double theta) { return 1.0 / std::sinh(2.0 * theta); });
}

}  // namespace scatterbound
