#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scatterbound/domain.hpp"
#include "scatterbound/solver.hpp"

namespace scatterbound {

/// Malformed or inconsistent scenario configuration.
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class OutputFormat { csv, json };

struct EnergyRange {
  double min = 0.0;
  double max = 0.0;
  long count = 0;
  bool operator==(const EnergyRange&) const = default;
};

struct OutputConfig {
  std::string path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  bool operator==(const OutputConfig&) const = default;
};

/// One scenario: full potential, comparison, energies and numerical settings.
///
/// JSON layout (unknown keys are rejected):
///   { "potential": {...}, "comparison": {...},
///     "energies": {"min": .., "max": .., "count": ..} | [E1, E2, ...],
///     "solver": {"rel_tol", "abs_tol", "asymptote_tol", "domain_pad", "max_steps",
///                "node_spacing"},
///     "quad_tol": .., "epsilon_ladder": [..], "output": {"path": .., "format": "csv"|"json"} }
struct ScenarioConfig {
  PotentialSpec potential = PotentialSpec::free();
  PotentialSpec comparison = PotentialSpec::free();
  std::optional<EnergyRange> energy_range;
  std::vector<double> energy_list;
  SolverSettings solver;
  double quad_tol = 1e-10;
  std::vector<double> epsilon_ladder;
  OutputConfig output;

  /// Energies in ascending order.
  std::vector<double> energies() const;
  void validate() const;

  bool operator==(const ScenarioConfig& other) const;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);
std::string serialize_config(const ScenarioConfig& config);

PotentialSpec parse_potential(const std::string& json_text);
std::string serialize_potential(const PotentialSpec& spec);

}  // namespace scatterbound
