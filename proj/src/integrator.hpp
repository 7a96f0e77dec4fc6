#pragma once

// Adaptive Dormand-Prince 5(4) stepping over [x0, x1] on a real state array.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "scatterbound/domain.hpp"

namespace scatterbound::detail {

struct StepBudget {
  long used = 0;
  long limit = 0;
};

/// Advances `y` from x0 to exactly x1. `dt` carries the step-size suggestion
/// between calls; it is never allowed to exceed `max_dt`.
template <std::size_t N, class Rhs>
void integrate_segment(Rhs&& rhs, std::array<double, N>& y, double x0, double x1, double& dt,
                       double max_dt, double abs_tol, double rel_tol, StepBudget& budget) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, N>;
  if (!(x1 > x0)) return;

  auto stepper = odeint::make_controlled(abs_tol, rel_tol, odeint::runge_kutta_dopri5<State>());
  auto system = [&rhs](const State& s, State& ds, double x) { rhs(s, ds, x); };

  double x = x0;
  dt = std::clamp(dt, 1e-14 * std::max(1.0, std::abs(x1 - x0)), max_dt);
  while (x < x1) {
    if (++budget.used > budget.limit) {
      throw NumericalError("integrator step limit exceeded (" + std::to_string(budget.limit) +
                           " steps)");
    }
    const double remaining = x1 - x;
    const bool final_step = dt >= remaining;
    double h = final_step ? remaining : dt;
    const double suggested = dt;
    const auto result = stepper.try_step(system, y, x, h);
    if (result == odeint::success) {
      if (final_step) {
        x = x1;
        dt = std::min(std::max(h, suggested), max_dt);
      } else {
        dt = std::min(h, max_dt);
      }
    } else {
      dt = h;
      if (dt < 1e-15 * std::max(1.0, std::abs(x))) {
        throw NumericalError("integrator step size underflow at x = " + std::to_string(x));
      }
    }
  }
}

}  // namespace scatterbound::detail
