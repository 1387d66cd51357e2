#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace mrsim {

/// Sum in a fixed pairwise tree order (blocks of 32 at the leaves).  The
/// result depends only on the contents of `v`, never on worker count, which
/// is what keeps every expectation in the library bitwise reproducible.
double pairwise_sum(std::span<const double> v);

/// Uniform empirical measure over a finite sample.  Immutable after
/// construction; the sorted view is materialised lazily (guarded, so sharing
/// a measure across workers is safe).
class EmpiricalMeasure {
public:
    /// Takes ownership of the samples.  Rejects empty input and non-finite
    /// entries (a NaN would silently poison every later reduction).
    explicit EmpiricalMeasure(std::vector<double> samples);

    std::size_t size() const { return samples_.size(); }
    std::span<const double> samples() const { return samples_; }

    /// Nondecreasing copy of the samples.
    std::span<const double> sorted() const;

    double mean() const;

    /// Raw moment E[x^p], p >= 1.
    double moment(int p) const;

    /// Population variance (divides by n).
    double variance() const;

private:
    std::vector<double> samples_;
    mutable std::vector<double> sorted_;
    mutable std::unique_ptr<std::once_flag> sorted_once_;
};

/// Fixed-order expectation of f under mu.
template <class F>
double expectation(F&& f, const EmpiricalMeasure& mu) {
    const auto xs = mu.samples();
    std::vector<double> mapped(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) mapped[i] = f(xs[i]);
    return pairwise_sum(mapped) / static_cast<double>(mapped.size());
}

/// Exact order-p Wasserstein distance between one-dimensional empirical
/// measures, p in {1, 2}.  Equal sample counts use the sorted matching (the
/// optimal coupling in one dimension); unequal counts are compared through
/// 1024 midpoint quantiles.
double wasserstein(int p, const EmpiricalMeasure& mu, const EmpiricalMeasure& nu);

}  // namespace mrsim
