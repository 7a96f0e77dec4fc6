#include "scatterbound/quadrature.hpp"

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <vector>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

namespace scatterbound {

namespace {

struct Piece {
  double value;
  double error;
  double l1;
};

// Single Gauss-Kronrod 15 panel. Boost reports the error of the rule mapped to
// [-1, 1], so it is rescaled to the actual half-width here.
Piece panel(const std::function<double(double)>& f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0, l1 = 0.0;
  const double value = gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &error, &l1);
  return {value, error * 0.5 * (b - a), l1};
}

}  // namespace

double integrate_over_domain(const std::function<double(double)>& f, const Domain& domain,
                             double tol) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  constexpr int kMaxDepth = 40;
  // Below ~1e-13 relative the estimate is dominated by rounding.
  const double effective = std::max(tol, 1e-13);
  constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();

  std::vector<double> edges{domain.lo};
  edges.insert(edges.end(), domain.breakpoints.begin(), domain.breakpoints.end());
  edges.push_back(domain.hi);
  const double width = domain.hi - domain.lo;
  if (!(width > 0.0)) return 0.0;

  // Coarse pass fixes the absolute scale of the target.
  double scale = 0.0;
  std::vector<Piece> first;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    first.push_back(panel(f, edges[i], edges[i + 1]));
    scale += std::abs(first.back().value);
  }
  const double target = 0.5 * effective * std::max(1.0, scale);

  struct Interval {
    double a, b;
    Piece p;
    int depth;
  };
  double total = 0.0, total_error = 0.0;
  std::vector<Interval> stack;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] > edges[i]) stack.push_back({edges[i], edges[i + 1], first[i], 0});
  }
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    const double allowed =
        std::max(target * (iv.b - iv.a) / width, kRoundoff * iv.p.l1);
    if (iv.p.error <= allowed || iv.depth >= kMaxDepth) {
      total += iv.p.value;
      total_error += iv.p.error;
      continue;
    }
    const double mid = 0.5 * (iv.a + iv.b);
    stack.push_back({iv.a, mid, panel(f, iv.a, mid), iv.depth + 1});
    stack.push_back({mid, iv.b, panel(f, mid, iv.b), iv.depth + 1});
  }
  if (!std::isfinite(total) || total_error > effective * std::max(1.0, std::abs(total))) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "quadrature did not converge (error estimate %.3e)", total_error);
    throw NumericalError(buf);
  }
  return total;
}

Domain split_at_sign_changes(const std::function<double(double)>& g, const Domain& domain,
                             int samples_per_segment) {
  std::vector<double> edges{domain.lo};
  edges.insert(edges.end(), domain.breakpoints.begin(), domain.breakpoints.end());
  edges.push_back(domain.hi);

  Domain out = domain;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i], hi = edges[i + 1];
    if (!(hi > lo)) continue;
    // Stay off the edges: g may jump there.
    const double pad = 1e-9 * (hi - lo);
    const double h = (hi - lo - 2 * pad) / samples_per_segment;
    double x_prev = lo + pad;
    double g_prev = g(x_prev);
    for (int j = 1; j <= samples_per_segment; ++j) {
      const double x = lo + pad + j * h;
      const double gx = g(x);
      if (g_prev != 0.0 && gx != 0.0 && (g_prev < 0.0) != (gx < 0.0)) {
        std::uintmax_t iters = 200;
        const auto [a, b] = boost::math::tools::toms748_solve(
            g, x_prev, x, g_prev, gx, boost::math::tools::eps_tolerance<double>(52), iters);
        out.breakpoints.push_back(0.5 * (a + b));
      }
      x_prev = x;
      g_prev = gx;
    }
  }
  std::sort(out.breakpoints.begin(), out.breakpoints.end());
  return out;
}

}  // namespace scatterbound
