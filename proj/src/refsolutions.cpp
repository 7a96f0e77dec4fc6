#include "scatterbound/refsolutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scatterbound {

namespace {

bool piecewise_constant(const PotentialSpec& spec) {
  switch (spec.kind()) {
    case PotentialKind::free:
    case PotentialKind::step:
    case PotentialKind::square_barrier:
    case PotentialKind::delta:
      return true;
    case PotentialKind::shifted:
      return piecewise_constant(spec.base()) && piecewise_constant(spec.shift());
    case PotentialKind::gaussian:
    case PotentialKind::tabulated:
      return false;
  }
  return false;
}

constexpr complex I{0.0, 1.0};

}  // namespace

ComparisonSolution::ComparisonSolution(const PotentialSpec& spec, double energy)
    : profile_(spec, energy) {
  if (!piecewise_constant(spec)) {
    throw DomainError("comparison potential must be piecewise constant, got " +
                      to_string(spec.kind()));
  }
  interfaces_ = spec.breakpoints();
  const auto masses = spec.point_masses();
  const double k_minus = profile_.k_minus_inf();
  const double k_plus = profile_.k_plus_inf();
  const double scale = std::max(1.0, std::abs(energy));

  regions_.push_back({-std::numeric_limits<double>::infinity(), 0.0, complex(k_minus, 0.0),
                      complex(1.0 / std::sqrt(k_minus), 0.0), complex(0.0, 0.0)});

  for (std::size_t j = 0; j < interfaces_.size(); ++j) {
    const double xj = interfaces_[j];
    const bool last = j + 1 == interfaces_.size();
    const double probe = last ? xj + 1.0 : 0.5 * (xj + interfaces_[j + 1]);
    const double k2 = last ? k_plus * k_plus : profile_.k_squared(probe);
    if (std::abs(k2) < 1e-12 * scale) {
      throw DomainError("degenerate comparison: E equals the local potential value");
    }

    complex psi = psi0(xj);
    complex dpsi = dpsi0(xj);
    for (const auto& m : masses) {
      if (m.position == xj) dpsi += m.weight * psi;
    }

    Region next;
    next.left = xj;
    next.anchor = last ? 0.0 : xj;
    next.kappa = last ? complex(k_plus, 0.0) : std::sqrt(complex(k2, 0.0));
    const complex ep = std::exp(I * next.kappa * (xj - next.anchor));
    const complex em = std::exp(-I * next.kappa * (xj - next.anchor));
    const complex ratio = dpsi / (I * next.kappa);
    next.A = 0.5 * (psi + ratio) / ep;
    next.B = 0.5 * (psi - ratio) / em;
    regions_.push_back(next);
  }

  const Region& tail = regions_.back();
  alpha0_ = tail.A * std::sqrt(k_plus);
  beta0_ = tail.B * std::sqrt(k_plus);
}

const ComparisonSolution::Region& ComparisonSolution::region_at(double x) const {
  auto it = std::upper_bound(regions_.begin() + 1, regions_.end(), x,
                             [](double v, const Region& r) { return v < r.left; });
  return *(it - 1);
}

complex ComparisonSolution::psi0(double x) const {
  const Region& r = region_at(x);
  const complex phase = I * r.kappa * (x - r.anchor);
  return r.A * std::exp(phase) + r.B * std::exp(-phase);
}

complex ComparisonSolution::dpsi0(double x) const {
  const Region& r = region_at(x);
  const complex phase = I * r.kappa * (x - r.anchor);
  return I * r.kappa * (r.A * std::exp(phase) - r.B * std::exp(-phase));
}

ComparisonSolution free_comparison(double energy) {
  if (!(energy > 0.0)) throw DomainError("no open scattering channel: E must be positive");
  return ComparisonSolution(PotentialSpec::free(), energy);
}

ComparisonSolution square_barrier_comparison(double height, double width, double energy,
                                             double center) {
  if (!(energy > 0.0)) throw DomainError("no open scattering channel: E must be positive");
  return ComparisonSolution(PotentialSpec::square_barrier(height, width, center), energy);
}

ComparisonSolution delta_comparison(double strength, double energy, double center) {
  if (!(energy > 0.0)) throw DomainError("no open scattering channel: E must be positive");
  return ComparisonSolution(PotentialSpec::delta(strength, center), energy);
}

ComparisonSolution step_comparison(double v_plus, double energy, double center) {
  return ComparisonSolution(PotentialSpec::step(0.0, v_plus, center), energy);
}

}  // namespace scatterbound
