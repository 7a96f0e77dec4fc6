#include "scatterbound/domain.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace scatterbound {

namespace {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string("non-finite ") + what);
  }
}

}  // namespace

std::string to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::free: return "free";
    case PotentialKind::step: return "step";
    case PotentialKind::square_barrier: return "square_barrier";
    case PotentialKind::delta: return "delta";
    case PotentialKind::gaussian: return "gaussian";
    case PotentialKind::tabulated: return "tabulated";
    case PotentialKind::shifted: return "shifted";
  }
  return "unknown";
}

PotentialKind potential_kind_from_string(const std::string& name) {
  for (auto kind : {PotentialKind::free, PotentialKind::step, PotentialKind::square_barrier,
                    PotentialKind::delta, PotentialKind::gaussian, PotentialKind::tabulated,
                    PotentialKind::shifted}) {
    if (to_string(kind) == name) return kind;
  }
  throw DomainError("unknown potential kind '" + name + "'");
}

PotentialSpec PotentialSpec::free(double level) {
  require_finite(level, "free level");
  PotentialSpec s;
  s.kind_ = PotentialKind::free;
  s.height_ = level;
  s.v_minus_ = s.v_plus_ = level;
  return s;
}

PotentialSpec PotentialSpec::step(double v_minus, double v_plus, double center) {
  require_finite(v_minus, "step v_minus");
  require_finite(v_plus, "step v_plus");
  require_finite(center, "step center");
  PotentialSpec s;
  s.kind_ = PotentialKind::step;
  s.v_minus_ = v_minus;
  s.v_plus_ = v_plus;
  s.center_ = center;
  return s;
}

PotentialSpec PotentialSpec::square_barrier(double height, double width, double center) {
  require_finite(height, "barrier height");
  require_finite(width, "barrier width");
  require_finite(center, "barrier center");
  if (width <= 0.0) throw DomainError("square barrier width must be positive");
  PotentialSpec s;
  s.kind_ = PotentialKind::square_barrier;
  s.height_ = height;
  s.width_ = width;
  s.center_ = center;
  return s;
}

PotentialSpec PotentialSpec::delta(double strength, double center) {
  require_finite(strength, "delta strength");
  require_finite(center, "delta center");
  PotentialSpec s;
  s.kind_ = PotentialKind::delta;
  s.strength_ = strength;
  s.center_ = center;
  return s;
}

PotentialSpec PotentialSpec::gaussian(double height, double sigma, double center) {
  require_finite(height, "gaussian height");
  require_finite(sigma, "gaussian sigma");
  require_finite(center, "gaussian center");
  if (sigma <= 0.0) throw DomainError("gaussian sigma must be positive");
  PotentialSpec s;
  s.kind_ = PotentialKind::gaussian;
  s.height_ = height;
  s.sigma_ = sigma;
  s.center_ = center;
  return s;
}

PotentialSpec PotentialSpec::tabulated(std::vector<double> xs, std::vector<double> vs,
                                       double v_minus, double v_plus) {
  if (xs.size() < 2 || xs.size() != vs.size()) {
    throw DomainError("tabulated potential needs matching x/v arrays with at least 2 nodes");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require_finite(xs[i], "table x");
    require_finite(vs[i], "table v");
    if (i > 0 && !(xs[i] > xs[i - 1])) {
      throw DomainError("tabulated x must be strictly increasing");
    }
  }
  require_finite(v_minus, "table v_minus");
  require_finite(v_plus, "table v_plus");
  PotentialSpec s;
  s.kind_ = PotentialKind::tabulated;
  s.table_x_ = std::move(xs);
  s.table_v_ = std::move(vs);
  s.v_minus_ = v_minus;
  s.v_plus_ = v_plus;
  return s;
}

PotentialSpec PotentialSpec::shifted(const PotentialSpec& base, const PotentialSpec& shift,
                                     double epsilon) {
  require_finite(epsilon, "shift epsilon");
  PotentialSpec s;
  s.kind_ = PotentialKind::shifted;
  s.base_ = std::make_shared<const PotentialSpec>(base);
  s.shift_ = std::make_shared<const PotentialSpec>(shift);
  s.epsilon_ = epsilon;
  s.v_minus_ = base.v_minus_inf() + epsilon * shift.v_minus_inf();
  s.v_plus_ = base.v_plus_inf() + epsilon * shift.v_plus_inf();
  return s;
}

const PotentialSpec& PotentialSpec::base() const {
  if (!base_) throw DomainError("potential is not a shifted spec");
  return *base_;
}

const PotentialSpec& PotentialSpec::shift() const {
  if (!shift_) throw DomainError("potential is not a shifted spec");
  return *shift_;
}

double PotentialSpec::regular_value(double x) const {
  switch (kind_) {
    case PotentialKind::free:
      return height_;
    case PotentialKind::step:
      return x < center_ ? v_minus_ : v_plus_;
    case PotentialKind::square_barrier:
      return std::abs(x - center_) <= 0.5 * width_ ? height_ : 0.0;
    case PotentialKind::delta:
      return 0.0;
    case PotentialKind::gaussian: {
      const double u = (x - center_) / sigma_;
      return height_ * std::exp(-0.5 * u * u);
    }
    case PotentialKind::tabulated: {
      if (x <= table_x_.front()) return x < table_x_.front() ? v_minus_ : table_v_.front();
      if (x >= table_x_.back()) return x > table_x_.back() ? v_plus_ : table_v_.back();
      const auto it = std::upper_bound(table_x_.begin(), table_x_.end(), x);
      const auto i = static_cast<std::size_t>(it - table_x_.begin());
      const double t = (x - table_x_[i - 1]) / (table_x_[i] - table_x_[i - 1]);
      return (1.0 - t) * table_v_[i - 1] + t * table_v_[i];
    }
    case PotentialKind::shifted:
      return base_->regular_value(x) + epsilon_ * shift_->regular_value(x);
  }
  return 0.0;
}

std::vector<PointMass> PotentialSpec::point_masses() const {
  if (kind_ == PotentialKind::delta) {
    if (strength_ == 0.0) return {};
    return {{center_, strength_}};
  }
  if (kind_ != PotentialKind::shifted) return {};
  std::map<double, double> merged;
  for (const auto& m : base_->point_masses()) merged[m.position] += m.weight;
  for (const auto& m : shift_->point_masses()) merged[m.position] += epsilon_ * m.weight;
  std::vector<PointMass> out;
  for (const auto& [pos, w] : merged) {
    if (w != 0.0) out.push_back({pos, w});
  }
  return out;
}

std::vector<double> PotentialSpec::breakpoints() const {
  std::vector<double> out;
  switch (kind_) {
    case PotentialKind::step:
      out = {center_};
      break;
    case PotentialKind::square_barrier:
      out = {center_ - 0.5 * width_, center_ + 0.5 * width_};
      break;
    case PotentialKind::delta:
      out = {center_};
      break;
    case PotentialKind::tabulated:
      out = table_x_;
      break;
    case PotentialKind::shifted: {
      out = base_->breakpoints();
      const auto more = shift_->breakpoints();
      out.insert(out.end(), more.begin(), more.end());
      break;
    }
    case PotentialKind::free:
    case PotentialKind::gaussian:
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<double, double> PotentialSpec::support(double tol) const {
  constexpr std::pair<double, double> empty{1.0, -1.0};
  switch (kind_) {
    case PotentialKind::free:
      return empty;
    case PotentialKind::step:
    case PotentialKind::delta:
      return {center_, center_};
    case PotentialKind::square_barrier:
      return {center_ - 0.5 * width_, center_ + 0.5 * width_};
    case PotentialKind::gaussian: {
      const double h = std::abs(height_);
      if (h <= tol) return {center_, center_};
      const double half = sigma_ * std::sqrt(2.0 * std::log(h / tol));
      return {center_ - half, center_ + half};
    }
    case PotentialKind::tabulated:
      return {table_x_.front(), table_x_.back()};
    case PotentialKind::shifted: {
      auto [lo, hi] = base_->support(0.5 * tol);
      if (epsilon_ != 0.0) {
        const auto [slo, shi] = shift_->support(0.5 * tol / std::abs(epsilon_));
        if (slo <= shi) {
          if (lo > hi) {
            lo = slo;
            hi = shi;
          } else {
            lo = std::min(lo, slo);
            hi = std::max(hi, shi);
          }
        }
      }
      return {lo, hi};
    }
  }
  return empty;
}

bool PotentialSpec::operator==(const PotentialSpec& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == PotentialKind::shifted) {
    return epsilon_ == other.epsilon_ && *base_ == *other.base_ && *shift_ == *other.shift_;
  }
  return v_minus_ == other.v_minus_ && v_plus_ == other.v_plus_ && height_ == other.height_ &&
         width_ == other.width_ && strength_ == other.strength_ && center_ == other.center_ &&
         sigma_ == other.sigma_ && table_x_ == other.table_x_ && table_v_ == other.table_v_;
}

double evaluate_potential(const PotentialSpec& spec, double x) {
  if (spec.kind() == PotentialKind::delta) {
    throw DomainError("delta potentials have no pointwise value; use point_masses()");
  }
  require_finite(x, "position");
  return spec.regular_value(x);
}

WaveNumberProfile::WaveNumberProfile(PotentialSpec spec, double energy)
    : spec_(std::move(spec)), energy_(energy) {
  require_finite(energy, "energy");
  if (!(energy > std::max(spec_.v_minus_inf(), spec_.v_plus_inf()))) {
    throw DomainError("no open scattering channel: E must exceed max(V(-inf), V(+inf))");
  }
  k_minus_ = std::sqrt(energy - spec_.v_minus_inf());
  k_plus_ = std::sqrt(energy - spec_.v_plus_inf());
}

WaveNumberProfile wave_number_profile(const PotentialSpec& spec, double energy) {
  return WaveNumberProfile(spec, energy);
}

ScatterResult ScatterResult::from_bogoliubov(complex alpha, complex beta) {
  ScatterResult r;
  r.alpha = alpha;
  r.beta = beta;
  r.T = 1.0 / std::norm(alpha);
  r.R = 1.0 - r.T;
  return r;
}

}  // namespace scatterbound
