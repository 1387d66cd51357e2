#pragma once

#include <utility>
#include <vector>

#include "mrsim/model.hpp"
#include "mrsim/scheme.hpp"

namespace mrsim::density {

/// Generator of the dynamics applied to the constraint function:
///   (A_mu h)(x) = b(x, mu) h'(x) + (1/2) noise_scale sigma(x, mu)^2 h''(x).
double generator_h(double x, const EmpiricalMeasure& mu, const CoefficientSpec& model);

/// One evaluation time of the reflection-density estimator.
struct DensityRow {
    double t = 0.0;
    double numerator = 0.0;    // max(0, -E_n[(A_mu h)(X)])
    double denominator = 0.0;  // E_n[h'(X)]
    bool active = false;       // |E_n[h(X)]| <= band_epsilon
    double k = 0.0;            // active ? numerator / denominator : 0
};

struct DensityEstimate {
    std::vector<DensityRow> rows;
    double band_epsilon = 0.0;
};

/// Width of the activity band around E[h] = 0: three times the combined
/// discretisation (sqrt(dt)) and sampling (1/sqrt(n)) scale of the statistic.
double default_band_epsilon(const CoefficientSpec& model, const TimeGrid& grid, std::size_t n);

/// Estimate the density of the reflection measure from particle snapshots:
/// where the constraint binds, dK/dt is read off the generator identity
/// E[(A h)(X)] + k E[h'(X)] = 0.
DensityEstimate estimate(const std::vector<std::pair<double, std::vector<double>>>& snapshots,
                         const CoefficientSpec& model, double band_epsilon);

/// Centered finite-difference slope of the K column over +/- window rows.
/// Returns (t, dK/dt) for the interior nodes.
std::vector<std::pair<double, double>> k_slope(const PathRecord& record, int window);

}  // namespace mrsim::density
