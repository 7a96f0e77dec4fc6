#include "scatterbound/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "scatterbound/bounds.hpp"
#include "scatterbound/perturbation.hpp"
#include "scatterbound/refsolutions.hpp"
#include "scatterbound/solver.hpp"
#include "scatterbound/sweep.hpp"

namespace scatterbound {

namespace {

using P = PotentialSpec;

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);
const double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Entry {
  CorpusCase c;
  double abs_area;  // closed-form int |V - V_inf| dx (point masses included); NaN if n/a
};

std::vector<Entry> corpus_entries() {
  const P free = P::free();
  auto step_plus = [](double vp, const P& extra) { return P::shifted(P::step(0.0, vp), extra, 1.0); };
  return {
      {{"barrier V0=1 L=1 E=1.1", P::square_barrier(1, 1), 1.1, {free, P::square_barrier(0.8, 1.2)}}, 1.0},
      {{"barrier V0=1 L=1 E=2", P::square_barrier(1, 1), 2.0, {free, P::square_barrier(0.9, 1.0)}}, 1.0},
      {{"barrier V0=1 L=1 E=5", P::square_barrier(1, 1), 5.0, {free, P::square_barrier(1.0, 0.8)}}, 1.0},
      {{"barrier V0=2 L=1 E=1", P::square_barrier(2, 1), 1.0, {free, P::square_barrier(1.8, 1.0)}, true}, 2.0},
      {{"barrier V0=2 L=0.5 E=1.5", P::square_barrier(2, 0.5), 1.5, {free, P::square_barrier(2.0, 0.6)}, true}, 1.0},
      {{"barrier V0=3 L=1 c=0.3 E=1", P::square_barrier(3, 1, 0.3), 1.0, {free, P::square_barrier(3.0, 1.0, 0.4)}, true}, 3.0},
      {{"well V0=-1 L=2 E=1.1", P::square_barrier(-1, 2), 1.1, {free, P::square_barrier(-0.9, 2.0)}}, 2.0},
      {{"well V0=-2 L=1 E=3", P::square_barrier(-2, 1), 3.0, {free, P::square_barrier(-2.0, 1.1)}}, 2.0},
      {{"gaussian V0=1 s=1 E=1.1", P::gaussian(1, 1), 1.1, {free, P::square_barrier(0.8, 2.0)}}, kSqrt2Pi},
      {{"gaussian V0=1 s=1 E=2.5", P::gaussian(1, 1), 2.5, {free, P::square_barrier(0.7, 2.0)}}, kSqrt2Pi},
      {{"gaussian V0=2 s=0.5 c=0.3 E=3", P::gaussian(2, 0.5, 0.3), 3.0, {free, P::square_barrier(1.5, 1.0, 0.3)}}, kSqrt2Pi},
      {{"gaussian well V0=-1 s=1 E=1.5", P::gaussian(-1, 1), 1.5, {free, P::square_barrier(-0.7, 2.0)}}, kSqrt2Pi},
      {{"gaussian V0=1.5 s=0.7 E=1", P::gaussian(1.5, 0.7), 1.0, {free, P::square_barrier(1.2, 1.4)}, true}, 1.5 * 0.7 * kSqrt2Pi},
      {{"step 0.5 + gaussian E=1.2", step_plus(0.5, P::gaussian(1, 0.5)), 1.2,
        {P::step(0, 0.5), step_plus(0.5, P::square_barrier(0.8, 1.0))}}, kNaN},
      {{"step 0.75 + gaussian c=1 E=1", step_plus(0.75, P::gaussian(0.5, 0.5, 1)), 1.0,
        {P::step(0, 0.75), step_plus(0.75, P::square_barrier(0.4, 1.0, 1.0))}}, kNaN},
      {{"step 0.5 + barrier c=1 E=2", step_plus(0.5, P::square_barrier(1, 1, 1)), 2.0,
        {P::step(0, 0.5), step_plus(0.5, P::square_barrier(1.0, 1.0, 1.2))}}, kNaN},
      {{"tabulated triangle E=1.5", P::tabulated({-1, 0, 1}, {0, 1, 0}, 0, 0), 1.5, {free, P::square_barrier(0.5, 2.0)}}, 1.0},
      {{"barrier + gaussian bump E=2", P::shifted(P::square_barrier(1, 1), P::gaussian(0.3, 0.2, 0.2), 1.0), 2.0,
        {free, P::square_barrier(1.0, 1.0)}}, 1.0 + 0.3 * 0.2 * kSqrt2Pi},
      {{"double barrier E=1.5", P::shifted(P::square_barrier(1, 0.5, -1), P::square_barrier(1, 0.5, 1), 1.0), 1.5,
        {free, P::square_barrier(1.0, 0.5, -1.0)}}, 1.0},
      {{"delta lambda=1 E=1", P::delta(1), 1.0, {free, P::delta(0.8), P::square_barrier(2.0, 0.5)}}, 1.0},
  };
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

double max_flux_deviation(const AbSolution& ab) {
  double worst = 0.0;
  for (const auto& s : ab.trajectory) {
    worst = std::max(worst, std::abs(std::norm(s.a) - std::norm(s.b) - 1.0));
  }
  return worst;
}

CriterionResult timed(int id, std::string name, const std::function<CriterionResult()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.name = std::move(name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Cases used for the trajectory phase checks: regular potentials, one per family.
std::vector<std::pair<P, P>> phase_cases(std::vector<double>& energies) {
  energies = {2.0, 2.0, 1.1, 1.2, 1.0};
  return {
      {P::square_barrier(1, 1), P::free()},
      {P::gaussian(1, 1), P::free()},
      {P::square_barrier(-1, 2), P::free()},
      {P::shifted(P::step(0, 0.5), P::gaussian(1, 0.5), 1.0), P::step(0, 0.5)},
      {P::square_barrier(2, 1), P::square_barrier(1.8, 1.0)},
  };
}

}  // namespace

std::vector<CorpusCase> verification_corpus() {
  std::vector<CorpusCase> out;
  for (auto& e : corpus_entries()) out.push_back(e.c);
  return out;
}

std::vector<CriterionResult> run_verification(std::ostream* log) {
  const auto entries = corpus_entries();
  const SolverSettings settings;
  const double quad_tol = 1e-13;
  std::vector<CriterionResult> results;
  std::vector<std::string> info;

  results.push_back(timed(1, "flux conservation |a|^2-|b|^2 = 1 along trajectories", [&] {
    double worst = 0.0;
    std::size_t runs = 0;
    for (const auto& e : entries) {
      for (const auto& cmp : e.c.comparisons) {
        const ComparisonSolution comparison(cmp, e.c.energy);
        worst = std::max(worst, max_flux_deviation(solve_ab_system(e.c.potential, comparison, settings)));
        ++runs;
      }
    }
    CriterionResult r;
    r.passed = worst < 1e-7;
    r.detail = "max deviation " + fmt(worst) + " over " + std::to_string(runs) + " trajectories (tol 1e-7)";
    return r;
  }));
  results.back().passed = results.back().passed && results.back().seconds < 10.0;

  results.push_back(timed(2, "method equivalence: direct vs (a,b)+composition", [&] {
    double worst = 0.0;
    int under = 0;
    for (const auto& e : entries) {
      if (e.c.under_barrier) ++under;
      const double t_direct = solve_direct(e.c.potential, e.c.energy, settings).T;
      for (const auto& cmp : e.c.comparisons) {
        const ComparisonSolution comparison(cmp, e.c.energy);
        const auto ab = solve_ab_system(e.c.potential, comparison, settings);
        const double t_ab = compose_bogoliubov(comparison, ab.final_state).T;
        worst = std::max(worst, std::abs(t_ab - t_direct) / t_direct);
      }
    }
    CriterionResult r;
    r.passed = worst < 1e-6 && under >= 3;
    r.detail = "max relative |dT| " + fmt(worst) + " (tol 1e-6), under-barrier cases " +
               std::to_string(under);
    return r;
  }));

  results.push_back(timed(3, "bound sandwich T_lower <= T <= T_upper", [&] {
    int violations = 0, checks = 0, upper_checks = 0;
    for (const auto& e : entries) {
      const double t = solve_direct(e.c.potential, e.c.energy, settings).T;
      for (const auto& cmp : e.c.comparisons) {
        const ComparisonSolution comparison(cmp, e.c.energy);
        double tb = 0.0;
        try {
          tb = theta_bound(e.c.potential, comparison, e.c.energy, quad_tol, settings);
        } catch (const NumericalError& ex) {
          throw NumericalError(e.c.name + ": " + ex.what());
        }
        const BoundReport b = bogoliubov_bounds(tb, comparison);
        ++checks;
        if (b.upper_valid) ++upper_checks;
        if (!sandwich_holds(t, b.T_lower, b.T_upper, b.upper_valid)) ++violations;
      }
    }
    CriterionResult r;
    r.passed = violations == 0;
    r.detail = std::to_string(violations) + " violations in " + std::to_string(checks) +
               " checks (" + std::to_string(upper_checks) + " with a valid upper bound), tol 1e-6";
    return r;
  }));

  results.push_back(timed(4, "equal-asymptote bound with free comparison", [&] {
    double worst = 0.0;
    for (const auto& e : entries) {
      if (std::isnan(e.abs_area)) continue;
      const double k0 = std::sqrt(e.c.energy);
      const double expected = std::cosh(e.abs_area / (2.0 * k0));
      worst = std::max(worst, std::abs(case1_bound(e.c.potential, e.c.energy, quad_tol, settings) - expected));
    }
    // Square barrier V0=1, L=1 at E=2.
    const double a_up = case1_bound(P::square_barrier(1, 1), 2.0, quad_tol, settings);
    const ComparisonSolution free2 = free_comparison(2.0);
    const BoundReport b =
        bogoliubov_bounds(theta_bound(P::square_barrier(1, 1), free2, 2.0, quad_tol, settings), free2);
    const double t_exact = solve_direct(P::square_barrier(1, 1), 2.0, settings).T;
    const double t_closed = 1.0 / (1.0 + std::pow(std::sin(1.0), 2) / (4.0 * 2.0 * 1.0));
    CriterionResult r;
    const double a_closed = std::cosh(1.0 / (2.0 * std::sqrt(2.0)));
    const double t_lower_closed = 1.0 / (a_closed * a_closed);
    // The quoted 5-digit values (1.06317, 0.88465, 0.91876) are rounded loosely; they are
    // held to 1e-4 while the closed forms are held tightly.
    r.passed = worst < 1e-12 && std::abs(a_up - a_closed) < 1e-12 &&
               std::abs(b.T_lower - t_lower_closed) < 1e-12 && std::abs(t_exact - t_closed) < 1e-9 &&
               std::abs(a_up - 1.06317) < 1e-4 && std::abs(b.T_lower - 0.88465) < 1e-4 &&
               std::abs(t_exact - 0.91876) < 1e-4 && b.T_lower <= t_exact;
    std::ostringstream os;
    os << "max |bound - cosh(area/2k0)| " << fmt(worst) << " (tol 1e-12); barrier: alpha_upper "
       << std::setprecision(7) << a_up << ", T_lower " << b.T_lower << ", T " << t_exact;
    r.detail = os.str();
    return r;
  }));

  results.push_back(timed(5, "collapse: potential = comparison", [&] {
    const std::vector<std::pair<P, double>> kinds = {
        {P::free(), 1.5}, {P::square_barrier(1, 1), 2.0}, {P::delta(1), 1.0}, {P::step(0, 0.75), 1.0}};
    double worst_tb = 0.0, worst_t = 0.0;
    bool valid = true;
    for (const auto& [spec, energy] : kinds) {
      const ComparisonSolution comparison(spec, energy);
      const double tb = theta_bound(spec, comparison, energy, quad_tol, settings);
      const BoundReport b = bogoliubov_bounds(tb, comparison);
      worst_tb = std::max(worst_tb, tb);
      worst_t = std::max({worst_t, std::abs(b.T_lower - comparison.T0()),
                          std::abs(b.T_upper - comparison.T0())});
      valid = valid && b.upper_valid;
    }
    CriterionResult r;
    r.passed = worst_tb < 1e-12 && worst_t < 1e-10 && valid;
    r.detail = "max theta_bound " + fmt(worst_tb) + ", max |T_bound - T0| " + fmt(worst_t);
    return r;
  }));

  std::vector<double> phase_energies;
  const auto pcases = phase_cases(phase_energies);
  results.push_back(timed(6, "Theta self-consistency arccosh|a| = running integral", [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < pcases.size(); ++i) {
      const ComparisonSolution comparison(pcases[i].second, phase_energies[i]);
      const auto ab = solve_ab_system(pcases[i].first, comparison, settings);
      const auto phases = phase_trajectory(ab.trajectory, comparison);
      const auto running = theta_running_integral(phases, comparison, pcases[i].first);
      for (std::size_t n = 0; n < phases.size(); ++n) {
        worst = std::max(worst, std::abs(std::acosh(std::abs(ab.trajectory[n].a)) - running[n]));
      }
    }
    CriterionResult r;
    r.passed = worst < 1e-5;
    r.detail = "max deviation " + fmt(worst) + " over 5 cases (tol 1e-5)";
    return r;
  }));

  results.push_back(timed(7, "nett-phase integro-differential residual", [&] {
    double worst = 0.0, worst_csch = 0.0;
    for (std::size_t i = 0; i < pcases.size(); ++i) {
      const ComparisonSolution comparison(pcases[i].second, phase_energies[i]);
      const auto ab = solve_ab_system(pcases[i].first, comparison, settings);
      const auto phases = phase_trajectory(ab.trajectory, comparison);
      worst = std::max(worst, nett_phase_residual(phases, comparison, pcases[i].first));
      worst_csch = std::max(worst_csch, nett_phase_residual_csch(phases, comparison, pcases[i].first));
    }
    info.push_back("nett-phase residual with a 1/sinh(2 Theta) coupling instead of coth(2 Theta): " +
                   fmt(worst_csch));
    CriterionResult r;
    r.passed = worst < 1e-3;
    r.detail = "max residual " + fmt(worst) + " over 5 cases (tol 1e-3, nodes with sinh 2Theta > 1e-3)";
    return r;
  }));

  results.push_back(timed(8, "first-order perturbation: O(eps^3) b, O(eps^2) dT, dominance", [&] {
    SolverSettings tight;
    tight.rel_tol = 1e-13;
    tight.abs_tol = 1e-16;
    const double tight_quad = 1e-14;
    const std::vector<double> ladder = {0.02, 0.01, 0.005};
    struct Pair {
      P base;
      P bump;
      double energy;
    };
    const std::vector<Pair> pairs = {{P::free(), P::square_barrier(1, 1, 0.5), 1.0},
                                     {P::square_barrier(1, 1), P::gaussian(1, 0.3, 0.2), 2.0}};
    bool ok = true;
    std::ostringstream os;
    os << std::setprecision(4);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& pair = pairs[p];
      const ComparisonSolution comparison(pair.base, pair.energy);
      const bool reflecting = std::abs(comparison.beta0()) > 0.0;
      double prev_b = 0.0, prev_t = 0.0;
      for (std::size_t i = 0; i < ladder.size(); ++i) {
        const double eps = ladder[i];
        const auto est = first_order_estimates(comparison, pair.bump, eps, tight_quad, tight);
        const auto ab = solve_ab_system(P::shifted(pair.base, pair.bump, eps), comparison, tight);
        const double dT_exact = compose_bogoliubov(comparison, ab.final_state).T - comparison.T0();
        const double b_err = std::abs(std::abs(est.b_tilde) - std::abs(ab.final_state.b));
        const double t_err = std::abs(dT_exact - est.delta_T_est);
        ok = ok && std::abs(ab.final_state.b) <= est.b_abs_bound;
        if (reflecting) ok = ok && std::abs(dT_exact) <= est.delta_T_bound;
        if (i > 0) {
          const double rb = prev_b / b_err;
          ok = ok && rb >= 6.0 && rb <= 10.0;
          os << "pair" << p + 1 << " eps=" << eps << " b-ratio " << rb;
          if (reflecting) {
            const double rt = prev_t / t_err;
            ok = ok && rt >= 3.5 && rt <= 4.5;
            os << " dT-ratio " << rt;
          }
          os << "; ";
        }
        prev_b = b_err;
        prev_t = t_err;
      }
    }
    CriterionResult r;
    r.passed = ok;
    r.detail = os.str() + "bounds dominate: " + (ok ? "yes" : "check");
    return r;
  }));

  results.push_back(timed(9, "sech^2 and algebraic T0 forms agree on a 50x50 grid", [&] {
    double worst = 0.0;
    int flag_mismatch = 0;
    for (int i = 0; i < 50; ++i) {
      const double tb = 3.0 * i / 49.0;
      for (int j = 1; j <= 50; ++j) {
        const double T0 = j / 50.0;
        const BoundReport b = bogoliubov_bounds_from_theta0(tb, theta0_from_T0(T0));
        const TransmissionBounds a = transmission_bounds_algebraic(tb, T0);
        worst = std::max(worst, std::abs(a.T_lower - b.T_lower));
        if (a.upper_valid != b.upper_valid) {
          ++flag_mismatch;
        } else {
          worst = std::max(worst, std::abs(a.T_upper - b.T_upper));
        }
      }
    }
    CriterionResult r;
    r.passed = worst < 1e-12 && flag_mismatch == 0;
    r.detail = "max difference " + fmt(worst) + " (tol 1e-12), validity mismatches " +
               std::to_string(flag_mismatch);
    return r;
  }));

  if (log) {
    for (const auto& r : results) {
      *log << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail
           << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::defaultfloat
           << '\n';
    }
    for (const auto& line : info) *log << "info " << line << '\n';
  }
  return results;
}

}  // namespace scatterbound
