#include <doctest.h>

#include <cmath>
#include <vector>

#include "mrsim/measure.hpp"
#include "mrsim/model.hpp"
#include "mrsim/reflect.hpp"
#include "mrsim/rng.hpp"

using namespace mrsim;
using namespace mrsim::reflect;

namespace {

ConstraintSpec sine_constraint(double kappa) {
    ConstraintSpec c;
    c.family = ConstraintSpec::Family::sine;
    c.param = kappa;
    return c;
}

std::vector<double> random_atoms(std::size_t n, std::uint64_t seed, double shift) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = shift + mrsim::rng::gaussian({seed, i, 0, rng::Channel::auxiliary});
    return v;
}

// independent root finder: long-double interval halving on the same
// functional, run far past the library tolerance
double oracle_root(const std::vector<double>& atoms, const ConstraintSpec& c) {
    auto H = [&](long double g) {
        long double acc = 0.0L;
        for (double x : atoms) acc += static_cast<long double>(c.eval(x + static_cast<double>(g)));
        return acc / static_cast<long double>(atoms.size());
    };
    long double lo = -64.0L, hi = 64.0L;
    REQUIRE(H(lo) < 0.0L);
    REQUIRE(H(hi) > 0.0L);
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        (H(mid) < 0.0L ? lo : hi) = mid;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace

TEST_CASE("constraint functional of a shifted law") {
    ConstraintSpec identity;
    EmpiricalMeasure mu{std::vector<double>{1.0, 3.0}};
    CHECK(h_functional(0.0, mu, identity) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(h_functional(-2.0, mu, identity) == doctest::Approx(0.0).epsilon(1e-15));

    const auto sine = sine_constraint(0.5);
    EmpiricalMeasure nu{std::vector<double>{0.0}};
    CHECK(h_functional(1.0, nu, sine) ==
          doctest::Approx(1.0 + 0.5 * std::sin(1.0)).epsilon(1e-15));
}

TEST_CASE("projection on the worked examples") {
    ConstraintSpec identity;

    EmpiricalMeasure satisfied{std::vector<double>{1.0, 3.0}};
    const auto r1 = project(satisfied, identity);
    CHECK(r1.g0 == 0.0);
    CHECK(r1.iterations == 0);
    // the signed inverse still reports how much slack there is
    CHECK(signed_root(satisfied, identity, 1e-12) == doctest::Approx(-2.0).epsilon(1e-12));

    EmpiricalMeasure violated{std::vector<double>{-3.0, 1.0}};
    const auto r2 = project(violated, identity);
    CHECK(r2.g0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r2.g0_bar == r2.g0);
}

TEST_CASE("identity and affine constraints are projected exactly") {
    // the bracket collapses to a point for unit-slope h, so the root is exact
    // and no bisection happens
    ConstraintSpec identity;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto atoms = random_atoms(257, seed, -2.0);
        EmpiricalMeasure mu{std::vector<double>(atoms)};
        const double mean = mu.mean();
        if (mean >= 0.0) continue;
        const auto r = project(mu, identity);
        CHECK(r.iterations == 0);
        CHECK(r.g0 == doctest::Approx(-mean).epsilon(1e-13));
        CHECK(std::abs(h_functional(r.g0, mu, identity)) < 1e-12);
    }

    ConstraintSpec affine{ConstraintSpec::Family::affine, 0.7};
    EmpiricalMeasure mu{std::vector<double>{0.1, 0.5}};  // mean 0.3 < 0.7
    const auto r = project(mu, affine);
    CHECK(r.iterations == 0);
    CHECK(r.g0 == doctest::Approx(0.4).epsilon(1e-13));
}

TEST_CASE("sine-constraint root matches an independent bisection oracle") {
    const auto sine = sine_constraint(0.5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const double shift = -3.0 + 0.7 * static_cast<double>(seed);
        auto atoms = random_atoms(64, 500 + seed, shift);
        const double expected = oracle_root(atoms, sine);
        EmpiricalMeasure mu{std::vector<double>(atoms)};
        CHECK(signed_root(mu, sine, 1e-11) == doctest::Approx(expected).epsilon(1e-9));

        const auto r = project(mu, sine);
        CHECK(r.g0 == doctest::Approx(std::max(0.0, expected)).epsilon(1e-8));
    }
}

TEST_CASE("g0 is the positive part of the signed root") {
    const auto sine = sine_constraint(0.3);
    const double tol = 1e-11;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto atoms = random_atoms(33, 900 + seed, -1.5 + 0.25 * static_cast<double>(seed));
        EmpiricalMeasure mu{std::vector<double>(atoms)};
        const double root = signed_root(mu, sine, tol);
        const auto r = project(mu, sine, tol);
        if (root <= 0.0)
            CHECK(r.g0 == 0.0);
        else
            CHECK(r.g0 == doctest::Approx(root).epsilon(1e-10));
    }
}

TEST_CASE("projection leaves the constraint satisfied but tight") {
    const auto sine = sine_constraint(0.5);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto atoms = random_atoms(128, 40 + seed, -2.5);
        EmpiricalMeasure mu{std::vector<double>(atoms)};
        const double h0 = h_functional(0.0, mu, sine);
        if (h0 >= 0.0) continue;
        const auto r = project(mu, sine);
        CHECK(r.g0 > 0.0);
        const double after = h_functional(r.g0, mu, sine);
        // satisfied ...
        CHECK(after >= -1e-12);
        // ... and with no slack beyond the root tolerance (Skorokhod
        // minimality at the discrete level)
        const double tol = default_tolerance(h0, sine.lower_slope());
        CHECK(std::abs(after) <= 10.0 * tol);
    }
}

TEST_CASE("the root responds to translations exactly inversely") {
    const auto sine = sine_constraint(0.4);
    auto atoms = random_atoms(50, 7, -1.0);
    EmpiricalMeasure mu{std::vector<double>(atoms)};
    const double base = signed_root(mu, sine, 1e-12);
    for (double c : {0.25, 1.0, -0.75}) {
        auto shifted = atoms;
        for (auto& x : shifted) x += c;
        EmpiricalMeasure nu{std::vector<double>(shifted)};
        CHECK(signed_root(nu, sine, 1e-12) == doctest::Approx(base - c).epsilon(1e-9));
    }
}

TEST_CASE("the root is Lipschitz in the measure") {
    // |root(mu) - root(nu)| <= (M/m) W1(mu, nu) + tolerances
    const auto sine = sine_constraint(0.5);
    const double ratio = sine.upper_slope() / sine.lower_slope();
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto a = random_atoms(64, 60 + seed, -1.0);
        auto b = random_atoms(64, 70 + seed, -0.8);
        EmpiricalMeasure mu{std::vector<double>(a)};
        EmpiricalMeasure nu{std::vector<double>(b)};
        const double d = std::abs(signed_root(mu, sine, 1e-12) - signed_root(nu, sine, 1e-12));
        CHECK(d <= ratio * wasserstein(1, mu, nu) + 1e-9);
    }
}

TEST_CASE("default tolerance scales with the violation") {
    CHECK(default_tolerance(-0.5, 1.0) == doctest::Approx(1e-10).epsilon(1e-12));
    CHECK(default_tolerance(-40.0, 0.5) == doctest::Approx(8e-9).epsilon(1e-12));
}
