#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scatterbound {

using complex = std::complex<double>;

// Natural units throughout: 2m = hbar = 1, so k^2(x) = E - V(x).

/// Input or precondition violation (bad parameters, closed channel, malformed config).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure: truncation, step limits, quadrature, insufficient resolution.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointMass {
  double position = 0.0;
  double weight = 0.0;  // V contains weight * delta(x - position)
};

enum class PotentialKind { free, step, square_barrier, delta, gaussian, tabulated, shifted };

std::string to_string(PotentialKind kind);
PotentialKind potential_kind_from_string(const std::string& name);

/// Analytic description of a one-dimensional potential with finite asymptotes.
///
/// Construct through the named factories; every instance is immutable.
/// `shifted` describes V = V_base + epsilon * V_shift, with the child
/// specs shared between copies.
class PotentialSpec {
 public:
  static PotentialSpec free(double level = 0.0);
  static PotentialSpec step(double v_minus, double v_plus, double center = 0.0);
  static PotentialSpec square_barrier(double height, double width, double center = 0.0);
  static PotentialSpec delta(double strength, double center = 0.0);
  static PotentialSpec gaussian(double height, double sigma, double center = 0.0);
  static PotentialSpec tabulated(std::vector<double> xs, std::vector<double> vs,
                                 double v_minus, double v_plus);
  static PotentialSpec shifted(const PotentialSpec& base, const PotentialSpec& shift,
                               double epsilon);

  PotentialKind kind() const { return kind_; }
  double v_minus_inf() const { return v_minus_; }
  double v_plus_inf() const { return v_plus_; }

  double height() const { return height_; }
  double width() const { return width_; }
  double strength() const { return strength_; }
  double center() const { return center_; }
  double sigma() const { return sigma_; }
  const std::vector<double>& table_x() const { return table_x_; }
  const std::vector<double>& table_v() const { return table_v_; }
  const PotentialSpec& base() const;
  const PotentialSpec& shift() const;
  double epsilon() const { return epsilon_; }

  /// Pointwise (regular) part of V; delta components contribute nothing here.
  double regular_value(double x) const;

  /// Distributional part of V, merged by position.
  std::vector<PointMass> point_masses() const;

  /// Positions where V or its derivative is discontinuous (including point masses).
  std::vector<double> breakpoints() const;

  /// Interval outside of which |V - V_asymptote| < tol. May be empty (lo > hi) for flat kinds.
  std::pair<double, double> support(double tol) const;

  bool operator==(const PotentialSpec& other) const;

 private:
  PotentialSpec() = default;

  PotentialKind kind_ = PotentialKind::free;
  double v_minus_ = 0.0;
  double v_plus_ = 0.0;
  double height_ = 0.0;
  double width_ = 0.0;
  double strength_ = 0.0;
  double center_ = 0.0;
  double sigma_ = 0.0;
  std::vector<double> table_x_;
  std::vector<double> table_v_;
  std::shared_ptr<const PotentialSpec> base_;
  std::shared_ptr<const PotentialSpec> shift_;
  double epsilon_ = 0.0;
};

/// V(x) for every non-delta kind. Throws DomainError for a pure delta spec or non-finite x.
double evaluate_potential(const PotentialSpec& spec, double x);

/// k^2(x) = E - V(x) for one energy.
class WaveNumberProfile {
 public:
  WaveNumberProfile(PotentialSpec spec, double energy);

  double energy() const { return energy_; }
  double k_squared(double x) const { return energy_ - spec_.regular_value(x); }
  double k_minus_inf() const { return k_minus_; }
  double k_plus_inf() const { return k_plus_; }
  const PotentialSpec& spec() const { return spec_; }

 private:
  PotentialSpec spec_;
  double energy_;
  double k_minus_;
  double k_plus_;
};

/// Throws DomainError("no open scattering channel") unless E > max(V(-inf), V(+inf)).
WaveNumberProfile wave_number_profile(const PotentialSpec& spec, double energy);

struct ScatterResult {
  complex alpha{1.0, 0.0};
  complex beta{0.0, 0.0};
  double T = 1.0;
  double R = 0.0;

  static ScatterResult from_bogoliubov(complex alpha, complex beta);
};

}  // namespace scatterbound
