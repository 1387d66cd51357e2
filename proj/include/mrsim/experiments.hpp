#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrsim/model.hpp"
#include "mrsim/scheme.hpp"

namespace mrsim::experiments {

/// One (x, y) point of a convergence/stability table.
struct RatePoint {
    double x = 0.0;
    double y = 0.0;
};

struct RateTable {
    std::vector<RatePoint> rows;
};

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares line through (log x, log y).  Requires at least two rows,
/// strictly positive finite coordinates and non-degenerate x values.
LogLogFit fit_loglog_slope(const RateTable& table);

/// Largest increment ratio |K_t - K_s| / sqrt(t - s) over all grid pairs:
/// the 1/2-Hoelder statistic of the reflection path.
double holder_half_statistic(const PathRecord& record);

/// ---- propagation of chaos -------------------------------------------------

struct ChaosParams {
    std::vector<std::size_t> sizes;
    std::size_t n_ref = 0;
    std::size_t tracked = 256;  // particles compared per size
};

/// For each n, couple the n-particle system to an n_ref-particle reference
/// through shared noise streams and report
///   y(n) = average over tracked particles j of sup_t |X_j^(n) - X_j^(ref)|^2.
RateTable chaos_experiment(const CoefficientSpec& model, const TimeGrid& grid,
                           const ChaosParams& params, std::uint64_t seed);

/// ---- stability tables (all under shared noise) ----------------------------

/// y(delta) = E_n[sup_t |X^(x0+delta) - X^(x0)|^2] for point initial laws.
RateTable stability_initial(const CoefficientSpec& model, const TimeGrid& grid,
                            double base_point, const std::vector<double>& deltas,
                            std::size_t n, std::uint64_t seed);

struct CoeffPerturbation {
    bool drift = true;      // theta0 += lambda
    bool diffusion = true;  // eta0 += lambda
};

/// y(lambda) for the model with constant-shifted coefficients.
RateTable stability_coeffs(const CoefficientSpec& model, const TimeGrid& grid,
                           const std::vector<double>& lambdas, const CoeffPerturbation& pert,
                           std::size_t n, std::uint64_t seed);

struct DriverLevel {
    double label = 0.0;  // x value of the table row
    DriverSpec driver;
};

/// y(level) = E_n[sup_t |X^(driver) - X^(canonical)|^2].
RateTable stability_driver(const CoefficientSpec& model, const TimeGrid& grid,
                           const std::vector<DriverLevel>& levels, std::size_t n,
                           std::uint64_t seed);

/// y(eps) = E_n[sup_t |X^(eps) - psi|^2] against the zero-noise flow psi.
/// Requires a point initial law (psi must start where the particles start).
RateTable small_noise(const CoefficientSpec& model, const TimeGrid& grid,
                      const std::vector<double>& eps_list, std::size_t n, std::uint64_t seed);

/// ---- controlled skeletons --------------------------------------------------

struct WeakControlRow {
    double freq = 0.0;
    double sup_error = 0.0;  // sup_t |Y^(u_f) - Y^0|
    double action = 0.0;     // rate_action of u_f
};

struct WeakControlResult {
    std::vector<WeakControlRow> rows;
};

/// Skeleton response to the oscillating controls u_f(t) = amp*sin(2*pi*f*t).
WeakControlResult weak_control_continuity(const CoefficientSpec& model, const TimeGrid& grid,
                                          const std::vector<double>& freqs, double amp);

/// ---- long-time behaviour ---------------------------------------------------

struct ContractionPoint {
    double t = 0.0;
    double w2_sq = 0.0;
    double bound = 0.0;  // slack * y(0) * exp(-(c2-c1) t)
};

struct ContractionResult {
    std::vector<ContractionPoint> series;
    double fitted_rate = 0.0;       // slope of log y(t)
    double theoretical_rate = 0.0;  // -(c2 - c1)
    bool pointwise_ok = false;
    bool degenerate = false;  // identical initial points: y == 0, no fit
    double slack = 1.1;
};

/// Synchronous coupling of two ensembles started from point laws a and b;
/// y(t) = W2(law_a(t), law_b(t))^2 against the dissipative decay bound.
ContractionResult contraction(const CoefficientSpec& model, const TimeGrid& grid, double init_a,
                              double init_b, std::size_t n, std::uint64_t seed,
                              double slack = 1.1);

struct InvariantReport {
    double d_stat = 0.0;   // W2 between the t_long and t_long+1 ensembles
    double d_cross = 0.0;  // W2 at t_long across two initial laws
    double terminal_mean = 0.0;
    double terminal_variance = 0.0;
};

/// Long-run diagnostics: distance of the ensemble law from itself one time
/// unit later, and across two independent runs from different initial laws.
InvariantReport invariant_measure(const CoefficientSpec& model, double t_long, double dt,
                                  std::size_t n, std::uint64_t seed,
                                  const rng::InitialLawSpec& other_initial);

/// ---- Harnack-type bounds ---------------------------------------------------

/// phi(s, t) = lambda^2 [ c1 / (1 - exp(-c1 (t-s))) +
///                        t c2^2 exp(2 (c1+c2) (t-s)) / 2 ],
/// continuously extended to c1 = 0 where the first term becomes 1/(t-s).
double phi(double s, double t, double lambda, double c1, double c2);

enum class HarnackFunction { shifted_tanh, gaussian_bump };

/// Bounded positive test functions, both with values in (1, 3]:
///   shifted_tanh   f(x) = 2 + tanh(x)
///   gaussian_bump  f(x) = 1 + exp(-x^2)
double harnack_f(HarnackFunction f, double x);
HarnackFunction harnack_function_from_name(const std::string& name);

/// One inequality check estimated by Monte Carlo.  `correction` is the
/// additive (log forms) or exponential-exponent (power form) term appearing
/// on the right-hand side; mc_halfwidth combines the 99% batch-mean
/// confidence half-widths of both sides.
struct HarnackReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double mc_halfwidth = 0.0;
    double correction = 0.0;
    bool satisfied = false;
};

/// E[log f(X_T^(y0))] <= log E[f(X_T^(x0))] + phi(0,T) (x0-y0)^2 with
/// lambda = 1 / min |sigma|.  Requires sigma = sigma(x) (eta2 == 0).
HarnackReport log_harnack_check(const CoefficientSpec& model, const TimeGrid& grid, double x0,
                                double y0, HarnackFunction f, std::size_t n,
                                std::uint64_t seed);

struct ShiftHarnackReport {
    HarnackReport power_form;  // (E f)^p <= E[f(v+.)^p] * exp(p E / (2(p-1)))
    HarnackReport log_form;    // E log f <= log E[f(v+.)] + E/2
    double exponent_integral = 0.0;  // E = int sigma(mu_s)^-2 (|v|/T + s|v|/T)^2 ds
};

/// Shift-Harnack pair for a state-free sigma (eta1 == 0), estimated along
/// the simulated empirical-law path.
ShiftHarnackReport shift_harnack_check(const CoefficientSpec& model, const TimeGrid& grid,
                                       double x0, double v, double p, HarnackFunction f,
                                       std::size_t n, std::uint64_t seed);

}  // namespace mrsim::experiments
