#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mrsim/model.hpp"

namespace mrsim {

/// Uniform grid on [0, t_end].  steps * dt must reproduce t_end to 1e-12.
struct TimeGrid {
    double t_end = 1.0;
    double dt = 1e-3;
    std::int64_t steps = 1000;

    static TimeGrid make(double t_end, double dt);
    double time_at(std::int64_t k) const { return dt * static_cast<double>(k); }
};

/// Deterministic reparametrisation of the driving semimartingale:
/// finite-variation part dA = a(t) dt and martingale part dM = m(t) dB.
/// The canonical driver a = m = 1 recovers the plain scheme.
struct DriverSpec {
    struct Fn {
        enum class Family { constant, ramp, sinusoid };
        Family family = Family::constant;
        double base = 1.0;
        double slope = 0.0;  // ramp: base + slope*t
        double amp = 0.0;    // sinusoid: base + amp*sin(omega*t)
        double omega = 1.0;

        double eval(double t) const;
    };
    Fn a;
    Fn m;

    static DriverSpec canonical() { return {}; }
};

/// Deterministic control path feeding the controlled drift term
/// sigma(x, mu) * u(t) dt.  The sinusoid is u(t) = amp * sin(2*pi*freq*t);
/// a table holds one value per grid node.
struct ControlPath {
    enum class Kind { zero, constant, sinusoid, table };
    Kind kind = Kind::zero;
    double value = 0.0;
    double amp = 0.0;
    double freq = 0.0;
    std::vector<double> table;

    double eval(double t, const TimeGrid& grid) const;

    static ControlPath zero_control() { return {}; }
    static ControlPath constant(double v);
    static ControlPath sinusoid(double amp, double freq);
};

/// Interacting particle state.  particles[i] is particle i after the latest
/// projection; k_accum is the accumulated reflection and never decreases.
struct Ensemble {
    double time = 0.0;
    std::vector<double> particles;
    double k_accum = 0.0;
    std::uint64_t seed = 0;
};

/// Per-step summary returned by step().
struct StepResult {
    double delta_k = 0.0;
    double mean_h = 0.0;  // E_n[h(X)] after the projection
    double mean = 0.0;
    double variance = 0.0;
};

/// One PathRecord row per grid node (row 0 is the projected initial state).
struct PathRow {
    double t = 0.0;
    double k = 0.0;
    double dk = 0.0;
    double mean_h = 0.0;
    double mean = 0.0;
    double var = 0.0;
};

struct PathRecord {
    std::vector<PathRow> rows;
    /// Optional particle snapshots (time, states), populated when
    /// SimulateOptions::snapshot_stride > 0.
    std::vector<std::pair<double, std::vector<double>>> snapshots;
};

struct SimulateOptions {
    std::int64_t snapshot_stride = 0;  // 0 disables snapshots
};

/// Draw the initial ensemble and apply the initial projection: particles are
/// xi_i + g0(law of xi) and k_accum starts at that shift.
Ensemble init_ensemble(const CoefficientSpec& model, std::size_t n, std::uint64_t seed);

/// One Euler step of the projected scheme:
///   propose  U_i = X_i + b(X_i, mu) a(t) dt
///                + sqrt(noise_scale) sigma(X_i, mu) m(t) sqrt(dt) G_i
///                + sigma(X_i, mu) u(t) dt
///   project  dK = g0(law of U),  X_i <- U_i + dK.
/// mu is the empirical law of the current states; G_i is the Brownian draw
/// keyed by (seed, i, step_index).  Proposals are computed by the parallel
/// kernel; the projection reduces in fixed order, so the step is bitwise
/// reproducible at any worker count.
StepResult step(Ensemble& ens, const CoefficientSpec& model, const TimeGrid& grid,
                std::int64_t step_index, const DriverSpec* driver = nullptr,
                const ControlPath* control = nullptr);

/// Run the full scheme and record the path statistics.
PathRecord simulate(const CoefficientSpec& model, const TimeGrid& grid, std::size_t n,
                    std::uint64_t seed, const DriverSpec* driver = nullptr,
                    const ControlPath* control = nullptr, const SimulateOptions& opts = {});

/// Zero-noise, single-particle instance of the scheme: the reflected ODE.
/// Requires a point initial law.  Row `mean` carries the state itself.
PathRecord simulate_reflected_ode(const CoefficientSpec& model, const TimeGrid& grid);

/// Controlled skeleton path: coefficients frozen along the reflected ODE
/// flow psi, drift shifted by sigma * u(t), and a pathwise projection keeping
/// h(Y) >= 0.  With the zero control this reproduces psi exactly.
PathRecord simulate_skeleton(const CoefficientSpec& model, const TimeGrid& grid,
                             const ControlPath& control);

/// Action functional of a control: (1/2) * integral of u(t)^2 over the grid
/// (trapezoidal quadrature).
double rate_action(const ControlPath& control, const TimeGrid& grid);

/// Raw statistics for the discrete reflection conditions: K nondecreasing,
/// E_n[h] never materially negative, and |E_n[h]| small on every row whose
/// step actually reflected (dk > tol).
struct SkorokhodAudit {
    bool k_nondecreasing = true;
    double min_mean_h = 0.0;
    double max_active_abs_mean_h = 0.0;
    std::size_t active_rows = 0;
};

SkorokhodAudit audit_skorokhod(const PathRecord& record, double tol);

/// Pass/fail reading of the audit: mean_h >= -upper_slope*tol everywhere and
/// |mean_h| <= upper_slope*tol on reflecting rows.
bool skorokhod_ok(const SkorokhodAudit& audit, double upper_slope, double tol);

}  // namespace mrsim
