#pragma once

#include "mrsim/measure.hpp"
#include "mrsim/model.hpp"

namespace mrsim::reflect {

/// H(x, mu) = E_mu[h(x + U)]: the constraint functional of a shifted law.
/// Strictly increasing in x with slope in [m, M] = [h' lower, upper bound],
/// so H(x) = 0 has exactly one root.
double h_functional(double x, const EmpiricalMeasure& mu, const ConstraintSpec& c);

/// Outcome of the per-step projection.
///   g0        nonnegative shift actually applied, max(0, signed root)
///   g0_bar    signed root of H(., mu) when a search ran; 0 when H(0) >= 0
///             short-circuits the search
///   residual  |H| at the returned point (0 for the short-circuit)
///   iterations  bisection count
struct ProjectionResult {
    double g0 = 0.0;
    double g0_bar = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Scale-aware default root tolerance.
double default_tolerance(double h_at_zero, double lower_slope);

/// Signed root of H(., mu): negative when the constraint already holds
/// strictly, positive when mass must be pushed up.  The bi-Lipschitz slope
/// bounds give the initial bracket [-H(0)/m, -H(0)/M] (order depending on
/// sign), and bisection keeps H(hi) >= 0, so the returned upper endpoint
/// never under-projects.
double signed_root(const EmpiricalMeasure& mu, const ConstraintSpec& c, double tol);

/// The nonnegative projection shift: 0 when H(0, mu) >= 0 (no search), the
/// bisection root otherwise.
ProjectionResult project(const EmpiricalMeasure& mu, const ConstraintSpec& c, double tol);
ProjectionResult project(const EmpiricalMeasure& mu, const ConstraintSpec& c);

}  // namespace mrsim::reflect
