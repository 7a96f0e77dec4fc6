#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scatterbound/bounds.hpp"
#include "scatterbound/config.hpp"

namespace scatterbound {

inline constexpr double kSandwichTolerance = 1e-6;

struct SweepRow {
  double E = 0.0;
  double T_exact = 0.0;
  double T0 = 0.0;
  double theta_bound = 0.0;
  double T_lower = 0.0;
  double T_upper = 1.0;
  bool upper_valid = false;
  double alpha_abs = 0.0;
  double beta_abs = 0.0;
  double alpha_upper = 0.0;
  double alpha_lower = 0.0;
  bool sandwich_ok = false;
  std::string status = "ok";
};

struct BoundsRow {
  double E = 0.0;
  double T0 = 0.0;
  BoundReport report;
  std::string status = "ok";
};

struct PerturbRow {
  double E = 0.0;
  double epsilon = 0.0;
  double b_born_abs = 0.0;
  double b_exact_abs = 0.0;
  double b_error = 0.0;
  double b_ratio = 0.0;  // error at previous (larger) epsilon / error here; 0 for the first row
  double dT_est = 0.0;
  double dT_exact = 0.0;
  double dT_error = 0.0;
  double dT_ratio = 0.0;
  double dT_bound = 0.0;
  double b_abs_bound = 0.0;
  double dN_bound = 0.0;
  std::string status = "ok";
};

/// Exit codes shared by the CLI.
enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitNumerical = 2, kExitViolation = 3 };

bool sandwich_holds(double T_exact, double T_lower, double T_upper, bool upper_valid);

SweepRow sweep_row(const ScenarioConfig& config, double energy);
BoundsRow bounds_row(const ScenarioConfig& config, double energy);

/// One row per energy, ascending in E. Rows are computed on `jobs` threads; a
/// failure in one row is recorded in its status and does not abort the sweep.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config, int jobs = 1);
std::vector<BoundsRow> run_bounds(const ScenarioConfig& config, int jobs = 1);

/// Per energy, one row per epsilon of the ladder (ladder order preserved).
/// The potential must be `shifted`; its epsilon is replaced by each ladder value.
std::vector<PerturbRow> run_perturb(const ScenarioConfig& config, int jobs = 1);

int exit_code(const std::vector<SweepRow>& rows);
int exit_code(const std::vector<BoundsRow>& rows);
int exit_code(const std::vector<PerturbRow>& rows);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_csv(std::ostream& os, const std::vector<BoundsRow>& rows);
void write_csv(std::ostream& os, const std::vector<PerturbRow>& rows);
void write_json(std::ostream& os, const std::vector<SweepRow>& rows);
void write_json(std::ostream& os, const std::vector<BoundsRow>& rows);
void write_json(std::ostream& os, const std::vector<PerturbRow>& rows);

/// Full single-energy report (direct and (a, b) solutions, bounds) as JSON text.
std::string solve_report_json(const ScenarioConfig& config, double energy);

}  // namespace scatterbound
