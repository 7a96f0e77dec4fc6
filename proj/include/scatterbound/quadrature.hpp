#pragma once

#include <functional>

#include "scatterbound/solver.hpp"

namespace scatterbound {

/// Adaptive Gauss-Kronrod integral of `f` over the truncated domain, subdivided at
/// the domain's breakpoints. Throws NumericalError if the error estimate exceeds
/// `tol` (relative to max(1, |result|)).
double integrate_over_domain(const std::function<double(double)>& f, const Domain& domain,
                             double tol);

/// Returns `domain` with extra breakpoints at the sign changes of `g`, located by
/// sampling each segment and refining brackets. Integrands of the form |g| h are
/// smooth between the returned breakpoints.
Domain split_at_sign_changes(const std::function<double(double)>& g, const Domain& domain,
                             int samples_per_segment = 200);

}  // namespace scatterbound
