#include "scatterbound/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "scatterbound/perturbation.hpp"
#include "scatterbound/refsolutions.hpp"
#include "scatterbound/solver.hpp"

namespace scatterbound {

namespace {

using nlohmann::json;

template <class Row>
std::vector<Row> parallel_rows(std::size_t count, int jobs,
                               const std::function<Row(std::size_t)>& make_row) {
  std::vector<Row> rows(count);
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) rows[i] = make_row(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) rows[i] = make_row(i);
      });
    }
  }
  return rows;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json complex_json(complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

bool sandwich_holds(double T_exact, double T_lower, double T_upper, bool upper_valid) {
  const double upper = upper_valid ? T_upper : 1.0;
  return T_lower - kSandwichTolerance <= T_exact && T_exact <= upper + kSandwichTolerance;
}

SweepRow sweep_row(const ScenarioConfig& config, double energy) {
  SweepRow row;
  row.E = energy;
  try {
    const ComparisonSolution comparison(config.comparison, energy);
    const ScatterResult exact = solve_direct(config.potential, energy, config.solver);
    const double tb =
        theta_bound(config.potential, comparison, energy, config.quad_tol, config.solver);
    const BoundReport report = bogoliubov_bounds(tb, comparison);
    row.T_exact = exact.T;
    row.T0 = comparison.T0();
    row.theta_bound = tb;
    row.T_lower = report.T_lower;
    row.T_upper = report.T_upper;
    row.upper_valid = report.upper_valid;
    row.alpha_abs = std::abs(exact.alpha);
    row.beta_abs = std::abs(exact.beta);
    row.alpha_upper = report.alpha_upper;
    row.alpha_lower = report.alpha_lower;
    row.sandwich_ok = sandwich_holds(exact.T, report.T_lower, report.T_upper, report.upper_valid);
  } catch (const std::exception& e) {
    row.status = e.what();
    row.sandwich_ok = false;
  }
  return row;
}

BoundsRow bounds_row(const ScenarioConfig& config, double energy) {
  BoundsRow row;
  row.E = energy;
  try {
    const ComparisonSolution comparison(config.comparison, energy);
    const double tb =
        theta_bound(config.potential, comparison, energy, config.quad_tol, config.solver);
    row.T0 = comparison.T0();
    row.report = bogoliubov_bounds(tb, comparison);
  } catch (const std::exception& e) {
    row.status = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config, int jobs) {
  config.validate();
  const auto energies = config.energies();
  return parallel_rows<SweepRow>(energies.size(), jobs,
                                 [&](std::size_t i) { return sweep_row(config, energies[i]); });
}

std::vector<BoundsRow> run_bounds(const ScenarioConfig& config, int jobs) {
  config.validate();
  const auto energies = config.energies();
  return parallel_rows<BoundsRow>(energies.size(), jobs,
                                  [&](std::size_t i) { return bounds_row(config, energies[i]); });
}

std::vector<PerturbRow> run_perturb(const ScenarioConfig& config, int jobs) {
  config.validate();
  if (config.epsilon_ladder.empty()) {
    throw ConfigError("config error at '$.epsilon_ladder': perturb mode needs an epsilon ladder");
  }
  if (config.potential.kind() != PotentialKind::shifted) {
    throw ConfigError("config error at '$.potential': perturb mode needs a shifted potential");
  }
  const PotentialSpec& base = config.potential.base();
  const PotentialSpec& shift = config.potential.shift();
  if (!(config.comparison == base)) {
    throw ConfigError("config error at '$.comparison': must equal the base of the shifted potential");
  }

  const auto energies = config.energies();
  const auto& ladder = config.epsilon_ladder;
  auto rows = parallel_rows<PerturbRow>(
      energies.size() * ladder.size(), jobs, [&](std::size_t idx) {
        PerturbRow row;
        row.E = energies[idx / ladder.size()];
        row.epsilon = ladder[idx % ladder.size()];
        try {
          const ComparisonSolution comparison(base, row.E);
          const auto est =
              first_order_estimates(comparison, shift, row.epsilon, config.quad_tol, config.solver);
          const auto full = PotentialSpec::shifted(base, shift, row.epsilon);
          const auto exact = solve_ab_system(full, comparison, config.solver);
          const ScatterResult composed = compose_bogoliubov(comparison, exact.final_state);
          row.b_born_abs = std::abs(est.b_tilde);
          row.b_exact_abs = std::abs(exact.final_state.b);
          row.b_error = std::abs(row.b_born_abs - row.b_exact_abs);
          row.dT_est = est.delta_T_est;
          row.dT_exact = composed.T - comparison.T0();
          row.dT_error = std::abs(row.dT_exact - row.dT_est);
          row.dT_bound = est.delta_T_bound;
          row.b_abs_bound = est.b_abs_bound;
          row.dN_bound = est.delta_N_bound;
        } catch (const std::exception& e) {
          row.status = e.what();
        }
        return row;
      });

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i % ladder.size() == 0) continue;
    const auto& prev = rows[i - 1];
    auto& cur = rows[i];
    if (cur.b_error > 0.0) cur.b_ratio = prev.b_error / cur.b_error;
    if (cur.dT_error > 0.0) cur.dT_ratio = prev.dT_error / cur.dT_error;
  }
  return rows;
}

int exit_code(const std::vector<SweepRow>& rows) {
  bool failed = false, violated = false;
  for (const auto& r : rows) {
    if (r.status != "ok") {
      failed = true;
    } else if (!r.sandwich_ok) {
      violated = true;
    }
  }
  return violated ? kExitViolation : failed ? kExitNumerical : kExitOk;
}

int exit_code(const std::vector<BoundsRow>& rows) {
  for (const auto& r : rows) {
    if (r.status != "ok") return kExitNumerical;
  }
  return kExitOk;
}

int exit_code(const std::vector<PerturbRow>& rows) {
  bool failed = false, violated = false;
  for (const auto& r : rows) {
    if (r.status != "ok") {
      failed = true;
      continue;
    }
    // First-order estimates can never exceed their own bounds.
    const double slack = 1e-9;
    if (r.b_born_abs > r.b_abs_bound * (1.0 + slack) + 1e-15 ||
        std::abs(r.dT_est) > r.dT_bound * (1.0 + slack) + 1e-15) {
      violated = true;
    }
  }
  return violated ? kExitViolation : failed ? kExitNumerical : kExitOk;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "E,T_exact,T0,theta_bound,T_lower,T_upper,upper_valid,alpha_abs,beta_abs,alpha_upper,"
        "alpha_lower,sandwich_ok,status\n";
  os << std::setprecision(17);
  for (const auto& r : rows) {
    os << r.E << ',' << r.T_exact << ',' << r.T0 << ',' << r.theta_bound << ',' << r.T_lower
       << ',' << r.T_upper << ',' << (r.upper_valid ? "true" : "false") << ',' << r.alpha_abs
       << ',' << r.beta_abs << ',' << r.alpha_upper << ',' << r.alpha_lower << ','
       << (r.sandwich_ok ? "true" : "false") << ',' << quoted(r.status) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<BoundsRow>& rows) {
  os << "E,T0,theta0,theta_bound,T_lower,T_upper,upper_valid,alpha_upper,alpha_lower,"
        "beta_upper,beta_lower,lower_nontrivial,status\n";
  os << std::setprecision(17);
  for (const auto& r : rows) {
    const auto& b = r.report;
    os << r.E << ',' << r.T0 << ',' << b.theta0 << ',' << b.theta_bound << ',' << b.T_lower << ','
       << b.T_upper << ',' << (b.upper_valid ? "true" : "false") << ',' << b.alpha_upper << ','
       << b.alpha_lower << ',' << b.beta_upper << ',' << b.beta_lower << ','
       << (b.lower_nontrivial ? "true" : "false") << ',' << quoted(r.status) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<PerturbRow>& rows) {
  os << "E,epsilon,b_born_abs,b_exact_abs,b_error,b_ratio,dT_est,dT_exact,dT_error,dT_ratio,"
        "dT_bound,b_abs_bound,dN_bound,status\n";
  os << std::setprecision(17);
  for (const auto& r : rows) {
    os << r.E << ',' << r.epsilon << ',' << r.b_born_abs << ',' << r.b_exact_abs << ','
       << r.b_error << ',' << r.b_ratio << ',' << r.dT_est << ',' << r.dT_exact << ','
       << r.dT_error << ',' << r.dT_ratio << ',' << r.dT_bound << ',' << r.b_abs_bound << ','
       << r.dN_bound << ',' << quoted(r.status) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<SweepRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"E", r.E},
                   {"T_exact", r.T_exact},
                   {"T0", r.T0},
                   {"theta_bound", r.theta_bound},
                   {"T_lower", r.T_lower},
                   {"T_upper", r.T_upper},
                   {"upper_valid", r.upper_valid},
                   {"alpha_abs", r.alpha_abs},
                   {"beta_abs", r.beta_abs},
                   {"alpha_upper", r.alpha_upper},
                   {"alpha_lower", r.alpha_lower},
                   {"sandwich_ok", r.sandwich_ok},
                   {"status", r.status}});
  }
  os << out.dump(2) << '\n';
}

void write_json(std::ostream& os, const std::vector<BoundsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    const auto& b = r.report;
    out.push_back({{"E", r.E},
                   {"T0", r.T0},
                   {"theta0", b.theta0},
                   {"theta_bound", b.theta_bound},
                   {"T_lower", b.T_lower},
                   {"T_upper", b.T_upper},
                   {"upper_valid", b.upper_valid},
                   {"alpha_upper", b.alpha_upper},
                   {"alpha_lower", b.alpha_lower},
                   {"beta_upper", b.beta_upper},
                   {"beta_lower", b.beta_lower},
                   {"lower_nontrivial", b.lower_nontrivial},
                   {"status", r.status}});
  }
  os << out.dump(2) << '\n';
}

void write_json(std::ostream& os, const std::vector<PerturbRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"E", r.E},
                   {"epsilon", r.epsilon},
                   {"b_born_abs", r.b_born_abs},
                   {"b_exact_abs", r.b_exact_abs},
                   {"b_error", r.b_error},
                   {"b_ratio", r.b_ratio},
                   {"dT_est", r.dT_est},
                   {"dT_exact", r.dT_exact},
                   {"dT_error", r.dT_error},
                   {"dT_ratio", r.dT_ratio},
                   {"dT_bound", r.dT_bound},
                   {"b_abs_bound", r.b_abs_bound},
                   {"dN_bound", r.dN_bound},
                   {"status", r.status}});
  }
  os << out.dump(2) << '\n';
}

std::string solve_report_json(const ScenarioConfig& config, double energy) {
  const ComparisonSolution comparison(config.comparison, energy);
  const ScatterResult direct = solve_direct(config.potential, energy, config.solver);
  const AbSolution ab = solve_ab_system(config.potential, comparison, config.solver);
  const ScatterResult composed = compose_bogoliubov(comparison, ab.final_state);
  double flux_dev = 0.0;
  for (const auto& s : ab.trajectory) {
    flux_dev = std::max(flux_dev, std::abs(std::norm(s.a) - std::norm(s.b) - 1.0));
  }
  const double tb =
      theta_bound(config.potential, comparison, energy, config.quad_tol, config.solver);
  const BoundReport b = bogoliubov_bounds(tb, comparison);

  json out;
  out["E"] = energy;
  out["direct"] = {{"alpha", complex_json(direct.alpha)},
                   {"beta", complex_json(direct.beta)},
                   {"T", direct.T},
                   {"R", direct.R}};
  out["comparison"] = {{"alpha0", complex_json(comparison.alpha0())},
                       {"beta0", complex_json(comparison.beta0())},
                       {"T0", comparison.T0()}};
  out["ab_system"] = {{"a_inf", complex_json(ab.final_state.a)},
                      {"b_inf", complex_json(ab.final_state.b)},
                      {"alpha", complex_json(composed.alpha)},
                      {"beta", complex_json(composed.beta)},
                      {"T", composed.T},
                      {"max_flux_deviation", flux_dev},
                      {"nodes", ab.trajectory.size()}};
  out["bounds"] = {{"theta_bound", b.theta_bound},
                   {"theta0", b.theta0},
                   {"alpha_upper", b.alpha_upper},
                   {"alpha_lower", b.alpha_lower},
                   {"beta_upper", b.beta_upper},
                   {"beta_lower", b.beta_lower},
                   {"T_lower", b.T_lower},
                   {"T_upper", b.T_upper},
                   {"upper_valid", b.upper_valid},
                   {"lower_nontrivial", b.lower_nontrivial}};
  out["sandwich_ok"] = sandwich_holds(direct.T, b.T_lower, b.T_upper, b.upper_valid);
  return out.dump(2);
}

}  // namespace scatterbound
