#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "mrsim/errors.hpp"
#include "mrsim/measure.hpp"
#include "mrsim/rng.hpp"

using mrsim::EmpiricalMeasure;
using mrsim::pairwise_sum;
using mrsim::wasserstein;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed, double scale = 1.0) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = scale * mrsim::rng::gaussian({seed, i, 0, mrsim::rng::Channel::auxiliary});
    return v;
}

// exhaustive minimum over all particle matchings; only viable for tiny n
double brute_force_wasserstein(int p, std::vector<double> xs, std::vector<double> ys) {
    REQUIRE(xs.size() == ys.size());
    std::vector<std::size_t> perm(xs.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            cost += std::pow(std::abs(xs[i] - ys[perm[i]]), p);
        best = std::min(best, cost / static_cast<double>(xs.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::pow(best, 1.0 / p);
}

}  // namespace

TEST_CASE("pairwise_sum agrees with exact sums") {
    // integers are exact in both orders
    std::vector<double> ints(1000);
    std::iota(ints.begin(), ints.end(), 1.0);
    CHECK(pairwise_sum(ints) == 1000.0 * 1001.0 / 2.0);

    // against long-double accumulation on random data
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto v = random_vector(4097, seed);
        long double acc = 0.0L;
        for (double x : v) acc += static_cast<long double>(x);
        CHECK(pairwise_sum(v) ==
              doctest::Approx(static_cast<double>(acc)).epsilon(1e-13));
    }

    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
    CHECK(pairwise_sum(std::vector<double>{42.0}) == 42.0);
}

TEST_CASE("empirical measure moments") {
    EmpiricalMeasure mu{std::vector<double>{1.0, 2.0, 3.0}};
    CHECK(mu.mean() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(mu.variance() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(mu.moment(1) == mu.mean());
    CHECK(mu.moment(2) == doctest::Approx(14.0 / 3.0).epsilon(1e-15));

    EmpiricalMeasure point{std::vector<double>{5.0}};
    CHECK(point.variance() == 0.0);

    CHECK_THROWS_AS(EmpiricalMeasure{std::vector<double>{}}, mrsim::ConfigError);
    const std::vector<double> with_inf = {1.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(EmpiricalMeasure{std::vector<double>(with_inf)}, mrsim::NumericalError);
}

TEST_CASE("expectation matches moments") {
    const auto v = random_vector(500, 11, 2.0);
    EmpiricalMeasure mu{std::vector<double>(v)};
    CHECK(mrsim::expectation([](double x) { return x * x; }, mu) ==
          doctest::Approx(mu.moment(2)).epsilon(1e-13));
    CHECK(mrsim::expectation([](double) { return 1.0; }, mu) ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("wasserstein distance equals the brute-force matching for small n") {
    for (int p : {1, 2}) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            for (std::size_t n : {1u, 2u, 5u, 6u}) {
                auto xs = random_vector(n, 100 + seed, 1.5);
                auto ys = random_vector(n, 200 + seed, 0.7);
                EmpiricalMeasure mu{std::vector<double>(xs)};
                EmpiricalMeasure nu{std::vector<double>(ys)};
                CHECK(wasserstein(p, mu, nu) ==
                      doctest::Approx(brute_force_wasserstein(p, xs, ys)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("wasserstein elementary identities") {
    EmpiricalMeasure a{std::vector<double>{0.0}};
    EmpiricalMeasure b{std::vector<double>{3.0}};
    CHECK(wasserstein(1, a, b) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(wasserstein(2, a, b) == doctest::Approx(3.0).epsilon(1e-15));

    const auto v = random_vector(100, 5);
    EmpiricalMeasure mu{std::vector<double>(v)};
    CHECK(wasserstein(2, mu, mu) == 0.0);
}

TEST_CASE("wasserstein metric properties on random measures") {
    const auto xs = random_vector(64, 31);
    const auto ys = random_vector(64, 32, 1.3);
    const auto zs = random_vector(64, 33, 0.4);
    EmpiricalMeasure mu{std::vector<double>(xs)};
    EmpiricalMeasure nu{std::vector<double>(ys)};
    EmpiricalMeasure rho{std::vector<double>(zs)};

    for (int p : {1, 2}) {
        const double d_mn = wasserstein(p, mu, nu);
        const double d_nm = wasserstein(p, nu, mu);
        CHECK(d_mn == doctest::Approx(d_nm).epsilon(1e-14));
        // triangle inequality
        CHECK(d_mn <= wasserstein(p, mu, rho) + wasserstein(p, rho, nu) + 1e-12);
    }
    // order of the distances: W1 <= W2
    CHECK(wasserstein(1, mu, nu) <= wasserstein(2, mu, nu) + 1e-12);

    // translation invariance
    auto shifted = xs;
    for (auto& x : shifted) x += 2.5;
    auto shifted_y = ys;
    for (auto& y : shifted_y) y += 2.5;
    EmpiricalMeasure mu_s{std::vector<double>(shifted)};
    EmpiricalMeasure nu_s{std::vector<double>(shifted_y)};
    CHECK(wasserstein(2, mu_s, nu_s) == doctest::Approx(wasserstein(2, mu, nu)).epsilon(1e-12));
}

TEST_CASE("wasserstein between different ensemble sizes") {
    // nu puts half its mass at 0 and half at 1; mu is a point at 0
    EmpiricalMeasure mu{std::vector<double>{0.0}};
    EmpiricalMeasure nu{std::vector<double>{0.0, 1.0}};
    CHECK(wasserstein(1, mu, nu) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(wasserstein(2, mu, nu) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    // same law sampled at different resolutions is close
    EmpiricalMeasure fine{random_vector(4096, 77)};
    EmpiricalMeasure coarse{random_vector(1024, 78)};
    CHECK(wasserstein(2, fine, coarse) < 0.2);

    CHECK_THROWS_AS(wasserstein(3, mu, nu), mrsim::ConfigError);
}
