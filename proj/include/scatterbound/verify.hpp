#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scatterbound/domain.hpp"

namespace scatterbound {

struct CorpusCase {
  std::string name;
  PotentialSpec potential;
  double energy;
  /// Piecewise-constant comparison potentials sharing the asymptotes of `potential`.
  std::vector<PotentialSpec> comparisons;
  bool under_barrier = false;
};

/// Built-in verification corpus: barriers, wells, gaussians, steps, a delta and a table.
std::vector<CorpusCase> verification_corpus();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every built-in acceptance check; writes one PASS/FAIL line per check to `log`
/// (if non-null) plus informational lines prefixed with "info".
std::vector<CriterionResult> run_verification(std::ostream* log);

}  // namespace scatterbound
