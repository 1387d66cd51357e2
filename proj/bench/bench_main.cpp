// Wall-clock comparison of the serial and OpenMP execution of the same
// kernels.  The parallel path must agree bitwise with the serial one, so this
// also re-checks that invariant on a large run before printing timings.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mrsim/measure.hpp"
#include "mrsim/model.hpp"
#include "mrsim/parallel.hpp"
#include "mrsim/reflect.hpp"
#include "mrsim/scheme.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

mrsim::CoefficientSpec ou_model() {
    mrsim::CoefficientSpec model;
    model.drift.theta1 = -1.0;
    model.drift.theta2 = 0.5;
    model.diffusion.eta0 = 1.0;
    model.initial.kind = mrsim::rng::InitialLawSpec::Kind::gaussian;
    model.initial.a = 1.0;
    model.initial.b = 0.5;
    return model;
}

struct Timing {
    double serial = 0.0;
    double parallel = 0.0;
};

void report(const std::string& name, const Timing& t) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n", name.c_str(),
                t.serial, t.parallel, t.parallel > 0.0 ? t.serial / t.parallel : 0.0);
}

Timing time_simulate(std::size_t n, double t_end, double dt) {
    const auto model = ou_model();
    const auto grid = mrsim::TimeGrid::make(t_end, dt);
    Timing t;

    mrsim::parallel::set_worker_count(1);
    auto start = clock_type::now();
    const auto serial = mrsim::simulate(model, grid, n, 7);
    t.serial = seconds_since(start);

    mrsim::parallel::set_worker_count(0);
    start = clock_type::now();
    const auto parallel = mrsim::simulate(model, grid, n, 7);
    t.parallel = seconds_since(start);

    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        if (serial.rows[i].k != parallel.rows[i].k || serial.rows[i].mean != parallel.rows[i].mean) {
            std::printf("MISMATCH at row %zu: serial and parallel runs differ\n", i);
            std::exit(1);
        }
    }
    return t;
}

Timing time_project(std::size_t n, int repeats) {
    std::vector<double> states(n);
    for (std::size_t i = 0; i < n; ++i)
        states[i] = -2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(n);
    mrsim::ConstraintSpec sine;
    sine.family = mrsim::ConstraintSpec::Family::sine;
    sine.param = 0.5;

    Timing t;
    mrsim::parallel::set_worker_count(1);
    auto start = clock_type::now();
    double acc = 0.0;
    for (int r = 0; r < repeats; ++r) {
        mrsim::EmpiricalMeasure mu{std::vector<double>(states)};
        acc += mrsim::reflect::project(mu, sine).g0;
    }
    t.serial = seconds_since(start);

    mrsim::parallel::set_worker_count(0);
    start = clock_type::now();
    double acc_par = 0.0;
    for (int r = 0; r < repeats; ++r) {
        mrsim::EmpiricalMeasure mu{std::vector<double>(states)};
        acc_par += mrsim::reflect::project(mu, sine).g0;
    }
    t.parallel = seconds_since(start);

    if (acc != acc_par) {
        std::printf("MISMATCH: projection results differ between worker counts\n");
        std::exit(1);
    }
    return t;
}

}  // namespace

int main() {
    std::printf("workers available: %d (OpenMP %s)\n\n", mrsim::parallel::worker_count(),
                mrsim::parallel::openmp_enabled() ? "on" : "off");

    report("simulate n=2e4  T=1 dt=1e-3", time_simulate(20000, 1.0, 1e-3));
    report("simulate n=2e5  T=0.1 dt=1e-3", time_simulate(200000, 0.1, 1e-3));
    report("project  n=1e6  x200", time_project(1000000, 200));
    return 0;
}
