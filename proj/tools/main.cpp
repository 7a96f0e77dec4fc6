#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scatterbound/config.hpp"
#include "scatterbound/sweep.hpp"
#include "scatterbound/verify.hpp"

namespace sb = scatterbound;

namespace {

struct Options {
  std::string config_path;
  std::string output_path;
  std::string format;
  int jobs = 1;
  bool quiet = false;
  std::optional<double> energy;
};

sb::ScenarioConfig load(const Options& opt) {
  if (opt.config_path.empty()) throw sb::ConfigError("--config <path> is required");
  sb::ScenarioConfig config = sb::load_config(opt.config_path);
  if (!opt.output_path.empty()) config.output.path = opt.output_path;
  if (opt.format == "csv") config.output.format = sb::OutputFormat::csv;
  if (opt.format == "json") config.output.format = sb::OutputFormat::json;
  return config;
}

// Writes to the configured path, or stdout when none is set.
template <typename Fn>
void emit(const sb::ScenarioConfig& config, Fn&& write) {
  if (config.output.path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(config.output.path);
  if (!out) throw sb::ConfigError("cannot open output file '" + config.output.path + "'");
  write(out);
}

template <typename Row>
int run_rows(const Options& opt, std::vector<Row> (*runner)(const sb::ScenarioConfig&, int)) {
  const sb::ScenarioConfig config = load(opt);
  const auto rows = runner(config, opt.jobs);
  emit(config, [&](std::ostream& os) {
    if (config.output.format == sb::OutputFormat::json) {
      sb::write_json(os, rows);
    } else {
      sb::write_csv(os, rows);
    }
  });
  const int code = sb::exit_code(rows);
  if (!opt.quiet) {
    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.status != "ok";
    std::cerr << rows.size() << " rows, " << failed << " not ok, exit " << code << '\n';
  }
  return code;
}

int run_solve(const Options& opt) {
  const sb::ScenarioConfig config = load(opt);
  const double energy = opt.energy ? *opt.energy : config.energies().front();
  if (config.output.format == sb::OutputFormat::csv) {
    const std::vector<sb::SweepRow> rows = {sb::sweep_row(config, energy)};
    emit(config, [&](std::ostream& os) { sb::write_csv(os, rows); });
    return sb::exit_code(rows);
  }
  const std::string report = sb::solve_report_json(config, energy);
  emit(config, [&](std::ostream& os) { os << report << '\n'; });
  return nlohmann::json::parse(report).at("sandwich_ok").get<bool>() ? sb::kExitOk
                                                                       : sb::kExitViolation;
}

int run_verify(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream log;
  const auto results = sb::run_verification(&log);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (!opt.output_path.empty()) {
    std::ofstream out(opt.output_path);
    if (!out) throw sb::ConfigError("cannot open output file '" + opt.output_path + "'");
    out << log.str();
  }
  if (!opt.quiet) {
    std::cout << log.str() << (ok ? "all checks passed" : "verification FAILED") << " in "
              << seconds << " s\n";
  }
  return ok ? sb::kExitOk : sb::kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 1D scattering, Bogoliubov-coefficient bounds and distorted-Born estimates"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config", opt.config_path, "scenario JSON file");
    if (needs_config) c->required();
    sub->add_option("--output", opt.output_path, "output file (default stdout)");
    sub->add_option("--format", opt.format, "csv or json (overrides the config)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1, 1024));
    sub->add_flag("--quiet", opt.quiet, "suppress progress messages");
  };

  auto* solve = app.add_subcommand("solve", "full detail at one energy");
  add_common(solve, true);
  solve->add_option("--energy", opt.energy, "energy (default: lowest configured energy)");
  auto* sweep = app.add_subcommand("sweep", "exact T and bounds over the energy grid");
  add_common(sweep, true);
  auto* bounds = app.add_subcommand("bounds", "bounds only, no exact solve");
  add_common(bounds, true);
  auto* perturb = app.add_subcommand("perturb", "distorted-Born estimates over the epsilon ladder");
  add_common(perturb, true);
  auto* verify = app.add_subcommand("verify", "run the built-in acceptance corpus");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? sb::kExitOk : sb::kExitConfig;
  }

  try {
    if (*solve) return run_solve(opt);
    if (*sweep) return run_rows<sb::SweepRow>(opt, &sb::run_sweep);
    if (*bounds) return run_rows<sb::BoundsRow>(opt, &sb::run_bounds);
    if (*perturb) return run_rows<sb::PerturbRow>(opt, &sb::run_perturb);
    return run_verify(opt);
  } catch (const sb::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sb::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return sb::kExitNumerical;
  }
}
