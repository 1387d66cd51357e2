#include "mrsim/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "mrsim/errors.hpp"

namespace mrsim {

double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

EmpiricalMeasure::EmpiricalMeasure(std::vector<double> samples)
    : samples_(std::move(samples)), sorted_once_(std::make_unique<std::once_flag>()) {
    if (samples_.empty())
        throw ConfigError("empirical measure needs at least one sample");
    for (double x : samples_)
        if (!std::isfinite(x))
            throw NumericalError("empirical measure given a non-finite sample");
}

std::span<const double> EmpiricalMeasure::sorted() const {
    std::call_once(*sorted_once_, [this] {
        sorted_ = samples_;
        std::sort(sorted_.begin(), sorted_.end());
    });
    return sorted_;
}

double EmpiricalMeasure::mean() const {
    return pairwise_sum(samples_) / static_cast<double>(samples_.size());
}

double EmpiricalMeasure::moment(int p) const {
    if (p < 1) throw ConfigError("moment order must be >= 1");
    return expectation([p](double x) { return std::pow(x, p); }, *this);
}

double EmpiricalMeasure::variance() const {
    const double m = mean();
    return expectation([m](double x) { return (x - m) * (x - m); }, *this);
}

namespace {

// Midpoint-quantile value: empirical quantile at level (k + 1/2) / q.
double quantile_at(std::span<const double> sorted, std::size_t k, std::size_t q) {
    const double level = (static_cast<double>(k) + 0.5) / static_cast<double>(q);
    auto idx = static_cast<std::size_t>(level * static_cast<double>(sorted.size()));
    if (idx >= sorted.size()) idx = sorted.size() - 1;
    return sorted[idx];
}

}  // namespace

double wasserstein(int p, const EmpiricalMeasure& mu, const EmpiricalMeasure& nu) {
    if (p != 1 && p != 2) throw ConfigError("wasserstein order must be 1 or 2");
    const auto xs = mu.sorted();
    const auto ys = nu.sorted();

    std::vector<double> costs;
    if (xs.size() == ys.size()) {
        costs.resize(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double d = std::fabs(xs[i] - ys[i]);
            costs[i] = p == 1 ? d : d * d;
        }
    } else {
        constexpr std::size_t kQuantiles = 1024;
        costs.resize(kQuantiles);
        for (std::size_t k = 0; k < kQuantiles; ++k) {
            const double d = std::fabs(quantile_at(xs, k, kQuantiles) - quantile_at(ys, k, kQuantiles));
            costs[k] = p == 1 ? d : d * d;
        }
    }
    const double mean_cost = pairwise_sum(costs) / static_cast<double>(costs.size());
    return p == 1 ? mean_cost : std::sqrt(mean_cost);
}

}  // namespace mrsim
