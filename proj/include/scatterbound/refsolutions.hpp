#pragma once

#include <vector>

#include "scatterbound/domain.hpp"

namespace scatterbound {

/// Exactly solvable comparison problem {psi0, k0^2}.
///
/// psi0 is assembled from plane waves (or real exponentials under a barrier)
/// on each interval where V0 is constant, matched across interfaces and point
/// masses. The phase convention is psi0(x -> -inf) = exp(i k_- x) / sqrt(k_-),
/// so the flux J0 = Im{psi0* psi0'} is exactly 1 and
///   psi0(x -> +inf) = [alpha0 exp(i k_+ x) + beta0 exp(-i k_+ x)] / sqrt(k_+).
/// alpha0 and beta0 depend on that convention; |alpha0|, |beta0| and T0 do not.
class ComparisonSolution {
 public:
  /// Builds the solution for any spec whose regular part is piecewise constant
  /// (free, step, square_barrier, delta, or shifted combinations of those).
  ComparisonSolution(const PotentialSpec& spec, double energy);

  const PotentialSpec& spec() const { return profile_.spec(); }
  const WaveNumberProfile& profile() const { return profile_; }
  double energy() const { return profile_.energy(); }

  complex psi0(double x) const;
  complex dpsi0(double x) const;
  double k0_squared(double x) const { return profile_.k_squared(x); }

  complex alpha0() const { return alpha0_; }
  complex beta0() const { return beta0_; }
  double T0() const { return 1.0 / std::norm(alpha0_); }
  double J0() const { return 1.0; }

  /// Interface positions where psi0' (or psi0'') is discontinuous.
  const std::vector<double>& interfaces() const { return interfaces_; }

 private:
  struct Region {
    double left;    // start of the interval (-inf for the first region)
    double anchor;  // plane waves are written relative to this origin
    complex kappa;
    complex A;
    complex B;
  };

  const Region& region_at(double x) const;

  WaveNumberProfile profile_;
  std::vector<Region> regions_;
  std::vector<double> interfaces_;
  complex alpha0_{1.0, 0.0};
  complex beta0_{0.0, 0.0};
};

ComparisonSolution free_comparison(double energy);
ComparisonSolution square_barrier_comparison(double height, double width, double energy,
                                             double center = 0.0);
ComparisonSolution delta_comparison(double strength, double energy, double center = 0.0);
ComparisonSolution step_comparison(double v_plus, double energy, double center = 0.0);

}  // namespace scatterbound
