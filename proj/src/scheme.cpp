#include "mrsim/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mrsim/errors.hpp"
#include "mrsim/parallel.hpp"
#include "mrsim/reflect.hpp"

namespace mrsim {

TimeGrid TimeGrid::make(double t_end, double dt) {
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw ConfigError("grid.t_end", "must be a positive finite time");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ConfigError("grid.dt", "must be a positive finite step");
    if (dt > t_end) throw ConfigError("grid.dt", "step exceeds the horizon");
    const auto steps = static_cast<std::int64_t>(std::llround(t_end / dt));
    if (steps < 1 || std::fabs(static_cast<double>(steps) * dt - t_end) > 1e-12 * std::max(1.0, t_end))
        throw ConfigError("grid.dt", "dt must divide t_end (steps * dt == t_end to 1e-12)");
    return TimeGrid{t_end, dt, steps};
}

double DriverSpec::Fn::eval(double t) const {
    switch (family) {
        case Family::constant: return base;
        case Family::ramp: return base + slope * t;
        case Family::sinusoid: return base + amp * std::sin(omega * t);
    }
    return base;
}

double ControlPath::eval(double t, const TimeGrid& grid) const {
    switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::constant: return value;
        case Kind::sinusoid: return amp * std::sin(2.0 * std::numbers::pi * freq * t);
        case Kind::table: {
            auto idx = static_cast<std::int64_t>(std::llround(t / grid.dt));
            if (idx < 0) idx = 0;
            if (idx >= static_cast<std::int64_t>(table.size()))
                idx = static_cast<std::int64_t>(table.size()) - 1;
            if (table.empty()) throw ConfigError("control.table", "table control has no values");
            return table[static_cast<std::size_t>(idx)];
        }
    }
    return 0.0;
}

ControlPath ControlPath::constant(double v) {
    ControlPath c;
    c.kind = Kind::constant;
    c.value = v;
    return c;
}

ControlPath ControlPath::sinusoid(double amp, double freq) {
    ControlPath c;
    c.kind = Kind::sinusoid;
    c.amp = amp;
    c.freq = freq;
    return c;
}

namespace {

void check_finite_states(const std::vector<double>& xs, std::int64_t step_index) {
    for (double x : xs)
        if (!std::isfinite(x))
            throw NumericalError("non-finite particle state after step " +
                                 std::to_string(step_index));
}

struct StateStats {
    double mean_h = 0.0;
    double mean = 0.0;
    double variance = 0.0;
};

// Post-projection statistics, fixed-order reductions throughout.
StateStats state_stats(const std::vector<double>& xs, const ConstraintSpec& c,
                       std::vector<double>& scratch) {
    StateStats out;
    const auto n = xs.size();
    scratch.resize(n);
    parallel::for_each_index(n, [&](std::size_t i) { scratch[i] = c.eval(xs[i]); });
    out.mean_h = pairwise_sum(scratch) / static_cast<double>(n);
    out.mean = pairwise_sum(std::span<const double>(xs)) / static_cast<double>(n);
    const double m = out.mean;
    parallel::for_each_index(n, [&](std::size_t i) {
        const double d = xs[i] - m;
        scratch[i] = d * d;
    });
    out.variance = pairwise_sum(scratch) / static_cast<double>(n);
    return out;
}

PathRow make_row(double t, double k, double dk, const StateStats& st) {
    return PathRow{t, k, dk, st.mean_h, st.mean, st.variance};
}

}  // namespace

Ensemble init_ensemble(const CoefficientSpec& model, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ConfigError("particles", "ensemble needs at least one particle");
    Ensemble ens;
    ens.seed = seed;
    ens.particles.resize(n);
    parallel::for_each_index(n, [&](std::size_t i) {
        ens.particles[i] = rng::sample_initial(
            model.initial, rng::StreamKey{seed, i, 0, rng::Channel::initial_sample});
    });
    check_finite_states(ens.particles, -1);

    const EmpiricalMeasure law{std::vector<double>(ens.particles)};
    const auto proj = reflect::project(law, model.constraint);
    if (proj.g0 != 0.0)
        for (double& x : ens.particles) x += proj.g0;
    ens.k_accum = proj.g0;
    return ens;
}

StepResult step(Ensemble& ens, const CoefficientSpec& model, const TimeGrid& grid,
                std::int64_t step_index, const DriverSpec* driver, const ControlPath* control) {
    const std::size_t n = ens.particles.size();
    const double t = grid.time_at(step_index);
    const double dt = grid.dt;

    const double a_t = driver ? driver->a.eval(t) : 1.0;
    const double m_t = driver ? driver->m.eval(t) : 1.0;
    const double u_t = control ? control->eval(t, grid) : 0.0;

    const double mean_now =
        pairwise_sum(std::span<const double>(ens.particles)) / static_cast<double>(n);
    const double drift_dt = a_t * dt;
    const double noise_factor = std::sqrt(model.noise_scale) * m_t * std::sqrt(dt);
    const double control_dt = u_t * dt;
    const bool with_noise = noise_factor != 0.0;
    const bool with_control = control != nullptr;

    std::vector<double> proposals(n);
    const auto seed = ens.seed;
    parallel::for_each_index(n, [&](std::size_t i) {
        const double x = ens.particles[i];
        const double s = model.sigma_eval(x, mean_now);
        double u = x + model.drift_eval(x, mean_now) * drift_dt;
        if (with_noise) {
            const double g = rng::gaussian(
                rng::StreamKey{seed, i, static_cast<std::uint64_t>(step_index),
                               rng::Channel::brownian});
            u += s * (noise_factor * g);
        }
        if (with_control) u += s * control_dt;
        proposals[i] = u;
    });
    check_finite_states(proposals, step_index);

    const EmpiricalMeasure proposal_law{std::move(proposals)};
    const auto proj = reflect::project(proposal_law, model.constraint);

    const auto us = proposal_law.samples();
    parallel::for_each_index(n, [&](std::size_t i) { ens.particles[i] = us[i] + proj.g0; });
    ens.k_accum += proj.g0;
    ens.time = grid.time_at(step_index + 1);

    std::vector<double> scratch;
    const StateStats st = state_stats(ens.particles, model.constraint, scratch);
    return StepResult{proj.g0, st.mean_h, st.mean, st.variance};
}

PathRecord simulate(const CoefficientSpec& model, const TimeGrid& grid, std::size_t n,
                    std::uint64_t seed, const DriverSpec* driver, const ControlPath* control,
                    const SimulateOptions& opts) {
    PathRecord rec;
    rec.rows.reserve(static_cast<std::size_t>(grid.steps) + 1);

    Ensemble ens = init_ensemble(model, n, seed);
    std::vector<double> scratch;
    rec.rows.push_back(
        make_row(0.0, ens.k_accum, ens.k_accum, state_stats(ens.particles, model.constraint, scratch)));
    const auto snap = [&](std::int64_t k) {
        if (opts.snapshot_stride > 0 && (k == grid.steps || k % opts.snapshot_stride == 0))
            rec.snapshots.emplace_back(grid.time_at(k), ens.particles);
    };
    snap(0);

    for (std::int64_t k = 0; k < grid.steps; ++k) {
        const StepResult sr = step(ens, model, grid, k, driver, control);
        rec.rows.push_back(make_row(grid.time_at(k + 1), ens.k_accum, sr.delta_k,
                                    StateStats{sr.mean_h, sr.mean, sr.variance}));
        snap(k + 1);
    }
    return rec;
}

PathRecord simulate_reflected_ode(const CoefficientSpec& model, const TimeGrid& grid) {
    if (model.initial.kind != rng::InitialLawSpec::Kind::point)
        throw ConfigError("model.initial", "the reflected ODE needs a point initial law");
    CoefficientSpec frozen = model;
    frozen.noise_scale = 0.0;
    return simulate(frozen, grid, 1, 0);
}

PathRecord simulate_skeleton(const CoefficientSpec& model, const TimeGrid& grid,
                             const ControlPath& control) {
    // The flow psi the coefficients are frozen along.
    const PathRecord ode = simulate_reflected_ode(model, grid);

    PathRecord rec;
    rec.rows.reserve(static_cast<std::size_t>(grid.steps) + 1);

    // Same initial state as psi (already projected).
    std::vector<double> y{ode.rows.front().mean};
    double k_accum = ode.rows.front().k;
    std::vector<double> scratch;
    rec.rows.push_back(make_row(0.0, k_accum, k_accum, state_stats(y, model.constraint, scratch)));

    for (std::int64_t k = 0; k < grid.steps; ++k) {
        const double t = grid.time_at(k);
        const double psi = ode.rows[static_cast<std::size_t>(k)].mean;
        const double u_t = control.eval(t, grid);
        const double s = model.sigma_eval(y[0], psi);
        y[0] += (model.drift_eval(y[0], psi) + s * u_t) * grid.dt;
        if (!std::isfinite(y[0]))
            throw NumericalError("non-finite skeleton state after step " + std::to_string(k));

        // Pathwise projection: keep h(Y) >= 0 with the minimal upward shift.
        const EmpiricalMeasure point_law{std::vector<double>(y)};
        const auto proj = reflect::project(point_law, model.constraint);
        y[0] += proj.g0;
        k_accum += proj.g0;
        rec.rows.push_back(
            make_row(grid.time_at(k + 1), k_accum, proj.g0, state_stats(y, model.constraint, scratch)));
    }
    return rec;
}

double rate_action(const ControlPath& control, const TimeGrid& grid) {
    std::vector<double> sq(static_cast<std::size_t>(grid.steps) + 1);
    for (std::int64_t k = 0; k <= grid.steps; ++k) {
        const double u = control.eval(grid.time_at(k), grid);
        double w = (k == 0 || k == grid.steps) ? 0.5 : 1.0;
        sq[static_cast<std::size_t>(k)] = w * u * u;
    }
    return 0.5 * grid.dt * pairwise_sum(sq);
}

SkorokhodAudit audit_skorokhod(const PathRecord& record, double tol) {
    SkorokhodAudit audit;
    audit.min_mean_h = std::numeric_limits<double>::infinity();
    double prev_k = 0.0;
    bool first = true;
    for (const auto& row : record.rows) {
        if (!first && row.k < prev_k) audit.k_nondecreasing = false;
        prev_k = row.k;
        first = false;
        audit.min_mean_h = std::min(audit.min_mean_h, row.mean_h);
        if (row.dk > tol) {
            ++audit.active_rows;
            audit.max_active_abs_mean_h =
                std::max(audit.max_active_abs_mean_h, std::abs(row.mean_h));
        }
    }
    if (record.rows.empty()) audit.min_mean_h = 0.0;
    return audit;
}

bool skorokhod_ok(const SkorokhodAudit& audit, double upper_slope, double tol) {
    const double slack = upper_slope * tol;
    return audit.k_nondecreasing && audit.min_mean_h >= -slack &&
           audit.max_active_abs_mean_h <= slack;
}

}  // namespace mrsim
