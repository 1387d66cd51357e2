#include "mrsim/density.hpp"

#include <cmath>

#include "mrsim/errors.hpp"

namespace mrsim::density {

double generator_h(double x, const EmpiricalMeasure& mu, const CoefficientSpec& model) {
    const double mean = mu.mean();
    const double s = model.sigma_eval(x, mean);
    return model.drift_eval(x, mean) * model.constraint.deriv(x) +
           0.5 * model.noise_scale * s * s * model.constraint.second_deriv(x);
}

double default_band_epsilon(const CoefficientSpec& model, const TimeGrid& grid, std::size_t n) {
    const double M = model.constraint.upper_slope();
    return 3.0 * (M * std::sqrt(grid.dt) + M / std::sqrt(static_cast<double>(n)));
}

DensityEstimate estimate(const std::vector<std::pair<double, std::vector<double>>>& snapshots,
                         const CoefficientSpec& model, double band_epsilon) {
    if (!(band_epsilon >= 0.0))
        throw ConfigError("density.band_epsilon", "must be >= 0");
    DensityEstimate out;
    out.band_epsilon = band_epsilon;
    out.rows.reserve(snapshots.size());

    for (const auto& [t, states] : snapshots) {
        EmpiricalMeasure law{std::vector<double>(states)};
        const double mean = law.mean();
        const auto& c = model.constraint;

        const double mean_h = expectation([&](double x) { return c.eval(x); }, law);
        const double mean_gen = expectation(
            [&](double x) {
                const double s = model.sigma_eval(x, mean);
                return model.drift_eval(x, mean) * c.deriv(x) +
                       0.5 * model.noise_scale * s * s * c.second_deriv(x);
            },
            law);
        const double mean_dh = expectation([&](double x) { return c.deriv(x); }, law);

        DensityRow row;
        row.t = t;
        row.numerator = std::max(0.0, -mean_gen);
        row.denominator = mean_dh;
        row.active = std::fabs(mean_h) <= band_epsilon;
        if (row.active) {
            if (row.denominator <= 0.0)
                throw NumericalError("density estimate: E[h'] not positive at t = " +
                                     std::to_string(t));
            row.k = row.numerator / row.denominator;
        }
        out.rows.push_back(row);
    }
    return out;
}

std::vector<std::pair<double, double>> k_slope(const PathRecord& record, int window) {
    if (window < 1) throw ConfigError("density.window", "slope window must be >= 1");
    const auto& rows = record.rows;
    std::vector<std::pair<double, double>> out;
    const auto n = static_cast<std::int64_t>(rows.size());
    for (std::int64_t i = window; i + window < n; ++i) {
        const auto& lo = rows[static_cast<std::size_t>(i - window)];
        const auto& hi = rows[static_cast<std::size_t>(i + window)];
        out.emplace_back(rows[static_cast<std::size_t>(i)].t, (hi.k - lo.k) / (hi.t - lo.t));
    }
    return out;
}

}  // namespace mrsim::density
