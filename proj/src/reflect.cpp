#include "mrsim/reflect.hpp"

#include <cmath>
#include <string>

#include "mrsim/errors.hpp"
#include "mrsim/parallel.hpp"

namespace mrsim::reflect {

namespace {

// E_mu[h(x + U)] with a parallel map and a fixed-order reduction.  The
// scratch buffer keeps the reduction order independent of worker count.
double eval_h(double x, std::span<const double> samples, const ConstraintSpec& c,
              std::vector<double>& scratch) {
    scratch.resize(samples.size());
    parallel::for_each_index(samples.size(),
                             [&](std::size_t i) { scratch[i] = c.eval(x + samples[i]); });
    const double v = pairwise_sum(scratch) / static_cast<double>(samples.size());
    if (!std::isfinite(v))
        throw NumericalError("constraint functional evaluated to a non-finite value at x = " +
                             std::to_string(x));
    return v;
}

struct RootSearch {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Bracketed bisection for H(x) = 0 given H(0).  The slope bounds give the
// enclosure [-H(0)/m, -H(0)/M] (order by sign); the loop keeps H(hi) >= 0 and
// returns hi, so the caller never under-projects.  For identity/affine
// constraints m == M collapses the bracket to the exact root and no
// iteration runs -- that path must not perturb the root, or a closed-form
// reflector would drift by the tolerance every step.
RootSearch bisect(double h0, std::span<const double> samples, const ConstraintSpec& c,
                  double tol, std::vector<double>& scratch) {
    RootSearch out;
    if (h0 == 0.0) return out;

    const double m = c.lower_slope();
    const double M = c.upper_slope();
    double lo = h0 < 0.0 ? -h0 / M : -h0 / m;
    double hi = h0 < 0.0 ? -h0 / m : -h0 / M;

    if (!(hi > lo)) {  // exact-slope family: the bracket is the root
        out.root = hi;
        out.residual = std::fabs(eval_h(hi, samples, c, scratch));
        return out;
    }

    // The analytic bracket encloses the true root; allow rounding noise of
    // the empirical evaluation before widening.
    const double slack = 1e-13 * std::max(1.0, std::fabs(h0) / m);
    int guard = 0;
    while (eval_h(hi, samples, c, scratch) < -slack) {
        hi += std::max(slack, std::fabs(hi) * 1e-12);
        if (++guard > 128)
            throw NumericalError("projection bracket failed to enclose the root from above");
    }
    guard = 0;
    while (eval_h(lo, samples, c, scratch) > slack) {
        lo -= std::max(slack, std::fabs(lo) * 1e-12);
        if (++guard > 128)
            throw NumericalError("projection bracket failed to enclose the root from below");
    }

    // Terminate on a bracket small enough that |H(hi)| <= M * width <= tol.
    const double width_tol = tol / std::max(1.0, M);
    while (hi - lo > width_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
        if (eval_h(mid, samples, c, scratch) >= 0.0)
            hi = mid;
        else
            lo = mid;
        ++out.iterations;
    }
    out.root = hi;
    out.residual = std::fabs(eval_h(hi, samples, c, scratch));
    return out;
}

}  // namespace

double h_functional(double x, const EmpiricalMeasure& mu, const ConstraintSpec& c) {
    std::vector<double> scratch;
    return eval_h(x, mu.samples(), c, scratch);
}

double default_tolerance(double h_at_zero, double lower_slope) {
    return 1e-10 * std::max(1.0, std::fabs(h_at_zero) / lower_slope);
}

double signed_root(const EmpiricalMeasure& mu, const ConstraintSpec& c, double tol) {
    std::vector<double> scratch;
    const double h0 = eval_h(0.0, mu.samples(), c, scratch);
    return bisect(h0, mu.samples(), c, tol, scratch).root;
}

ProjectionResult project(const EmpiricalMeasure& mu, const ConstraintSpec& c, double tol) {
    ProjectionResult out;
    std::vector<double> scratch;
    const double h0 = eval_h(0.0, mu.samples(), c, scratch);
    if (h0 >= 0.0) return out;  // constraint already satisfied: no shift
    const RootSearch rs = bisect(h0, mu.samples(), c, tol, scratch);
    out.g0_bar = rs.root;
    out.g0 = std::max(0.0, rs.root);
    out.residual = rs.residual;
    out.iterations = rs.iterations;
    return out;
}

ProjectionResult project(const EmpiricalMeasure& mu, const ConstraintSpec& c) {
    std::vector<double> scratch;
    const double h0 = eval_h(0.0, mu.samples(), c, scratch);
    if (h0 >= 0.0) return {};
    return project(mu, c, default_tolerance(h0, c.lower_slope()));
}

}  // namespace mrsim::reflect
