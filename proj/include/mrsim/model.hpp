#pragma once

#include <string>

#include "mrsim/measure.hpp"
#include "mrsim/rng.hpp"

namespace mrsim {

/// Constraint function h applied to the law of the state:
///   identity  h(x) = x
///   affine    h(x) = x - c
///   sine      h(x) = x + kappa*sin(x),  |kappa| < 1
/// All three are strictly increasing with slope bounds
///   lower_slope() <= h' <= upper_slope(),
/// which is what makes the root search in the reflection step a bracketed
/// bisection with a guaranteed enclosure.
struct ConstraintSpec {
    enum class Family { identity, affine, sine };
    Family family = Family::identity;
    double param = 0.0;  // c for affine, kappa for sine

    double eval(double x) const;
    double deriv(double x) const;
    double second_deriv(double x) const;

    double lower_slope() const;  // m
    double upper_slope() const;  // M

    /// The unique root of h (h is strictly increasing, so it exists).
    double zero_of_h() const;
};

/// Drift b(x, mu) = theta0 + theta1*x + theta2*mean(mu).
struct DriftSpec {
    double theta0 = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
};

/// Diffusion sigma(x, mu) = eta0 + eta1*x + eta2*mean(mu).  state_free
/// declares that sigma does not read the state (eta1 == 0 is then enforced by
/// validate); some experiments require that structural property.
struct DiffusionSpec {
    double eta0 = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    bool state_free = false;
};

/// Constants of the one-sided dissipativity bound
///   2(x-y)(b(x,mu)-b(y,nu)) + |s(x,mu)-s(y,nu)|^2 <= c1*W2(mu,nu)^2 - c2*|x-y|^2
/// (s = sqrt(noise_scale)*sigma).  `valid` is c2 > c1 >= 0, the regime in
/// which the synchronous coupling contracts at rate c2 - c1.
struct DissipativityBounds {
    double c1 = 0.0;
    double c2 = 0.0;
    bool valid = false;
};

/// Complete parametric model: coefficients, noise scaling, constraint and
/// initial law.  noise_scale enters the dynamics as sqrt(noise_scale)*sigma,
/// so it is the small-noise parameter (0 switches the noise off exactly).
struct CoefficientSpec {
    DriftSpec drift;
    DiffusionSpec diffusion;
    double noise_scale = 1.0;
    ConstraintSpec constraint;
    rng::InitialLawSpec initial;

    double drift_eval(double x, double mean_mu) const {
        return drift.theta0 + drift.theta1 * x + drift.theta2 * mean_mu;
    }
    /// Raw sigma, without the noise_scale factor.
    double sigma_eval(double x, double mean_mu) const {
        return diffusion.eta0 + diffusion.eta1 * x + diffusion.eta2 * mean_mu;
    }

    /// Joint Lipschitz constant of (b, sigma) in (x, mean).
    double lipschitz_bound() const;

    DissipativityBounds dissipativity() const;
};

/// Structural checks a model must pass for the Harnack experiments:
///   log_mode requires sigma to depend on x only (eta2 == 0);
///   shift_mode requires sigma to be state-free (eta1 == 0).
enum class HarnackMode { log_mode, shift_mode };

/// Diagnostics produced by validate().
struct ModelDiagnostics {
    double lipschitz = 0.0;
    double lower_slope = 0.0;  // m of h
    double upper_slope = 0.0;  // M of h
    DissipativityBounds dissipativity;
    double initial_mean_h = 0.0;    // 1e4-draw estimate of E[h(xi)]
    bool initial_flagged = false;   // true when that estimate is negative
};

/// Full validation: finite parameters, |kappa| < 1, well-formed initial law,
/// state_free consistency.  Returns the derived constants and an estimate of
/// E[h(xi)] (flagged when negative: the initial ensemble will be projected).
ModelDiagnostics validate(const CoefficientSpec& spec, const std::string& path = "model");

/// Minimum of |sqrt(noise_scale)*sigma| over a uniform grid on [-box, box]
/// (log mode scans the state argument, shift mode the mean argument).
/// Throws ConfigError when the mode's structural requirement fails or the
/// minimum is not strictly positive (the Harnack bounds need an invertible
/// diffusion).
double harnack_sigma_min(const CoefficientSpec& spec, HarnackMode mode, double box = 10.0);

}  // namespace mrsim
