// Acceptance suite: twelve end-to-end checks of the simulation library at
// desk scale.  Each check prints one [PASS]/[FAIL] line with the measured
// numbers; the binary exits nonzero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mrsim/cli.hpp"
#include "mrsim/density.hpp"
#include "mrsim/experiments.hpp"
#include "mrsim/io.hpp"
#include "mrsim/model.hpp"
#include "mrsim/scheme.hpp"

using namespace mrsim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void report(int id, const std::string& name, const Outcome& out) {
    std::printf("[%s] %2d %s: %s\n", out.pass ? "PASS" : "FAIL", id, name.c_str(),
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++g_failures;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CoefficientSpec ou_registry_model() {
    // interacting Ornstein-Uhlenbeck: b = -x + mean/2, sigma = 1, identity h
    CoefficientSpec spec;
    spec.drift.theta1 = -1.0;
    spec.drift.theta2 = 0.5;
    spec.diffusion.eta0 = 1.0;
    return spec;
}

// ---- 1: closed-form reflection ---------------------------------------------

Outcome closed_form_reflection() {
    const auto t0 = std::chrono::steady_clock::now();
    CoefficientSpec spec;
    spec.drift.theta0 = -1.0;
    spec.noise_scale = 0.0;
    spec.initial.kind = rng::InitialLawSpec::Kind::point;
    spec.initial.a = 0.0;

    const auto grid = TimeGrid::make(1.0, 1e-3);
    SimulateOptions opts;
    opts.snapshot_stride = 10;
    const auto rec = simulate(spec, grid, 64, 42, nullptr, nullptr, opts);

    const double k_err = std::abs(rec.rows.back().k - 1.0);
    double max_mean = 0.0;
    for (const auto& row : rec.rows) max_mean = std::max(max_mean, std::abs(row.mean));

    const auto est = density::estimate(rec.snapshots, spec, 1e-6);
    double max_k_err = 0.0;
    bool all_active = true;
    for (const auto& row : est.rows) {
        if (row.t < 0.1) continue;
        all_active = all_active && row.active;
        max_k_err = std::max(max_k_err, std::abs(row.k - 1.0));
    }
    const double secs = seconds_since(t0);

    Outcome out;
    out.pass = k_err <= 1e-9 && max_mean <= 1e-12 && all_active && max_k_err <= 1e-6 &&
               secs < 1.0;
    out.detail = "|K_T-1|=" + fmt(k_err) + " max|mean|=" + fmt(max_mean) +
                 " max|k-1|=" + fmt(max_k_err) + " runtime=" + fmt(secs) + "s";
    return out;
}

// ---- 2: discrete reflection invariants over a model matrix -----------------

Outcome skorokhod_matrix() {
    const auto grid = TimeGrid::make(0.5, 1e-2);
    const double tol = 1e-8;
    std::size_t runs = 0;
    std::size_t violations = 0;
    std::size_t reflecting_rows = 0;

    std::vector<ConstraintSpec> constraints(3);
    constraints[0].family = ConstraintSpec::Family::identity;
    constraints[1].family = ConstraintSpec::Family::affine;
    constraints[1].param = 0.5;
    constraints[2].family = ConstraintSpec::Family::sine;
    constraints[2].param = 0.5;

    std::vector<rng::InitialLawSpec> initials(3);
    initials[0] = {rng::InitialLawSpec::Kind::point, 0.5, 0.0};
    initials[1] = {rng::InitialLawSpec::Kind::gaussian, 1.0, 0.5};
    initials[2] = {rng::InitialLawSpec::Kind::uniform, -0.5, 1.5};

    const auto audit_one = [&](const CoefficientSpec& spec, const DriverSpec* driver,
                               const ControlPath* control) {
        const auto rec = simulate(spec, grid, 128, 7, driver, control);
        const auto audit = audit_skorokhod(rec, tol);
        ++runs;
        reflecting_rows += audit.active_rows;
        if (!skorokhod_ok(audit, spec.constraint.upper_slope(), tol)) ++violations;
    };

    for (const auto& constraint : constraints)
        for (double noise : {0.0, 1.0})
            for (double theta0 : {-1.0, 0.0})
                for (const auto& initial : initials) {
                    CoefficientSpec spec = ou_registry_model();
                    spec.constraint = constraint;
                    spec.noise_scale = noise;
                    spec.drift.theta0 = theta0;
                    spec.initial = initial;
                    audit_one(spec, nullptr, nullptr);
                }

    // driver and control variants on the reflecting noisy model
    CoefficientSpec spec = ou_registry_model();
    spec.drift.theta0 = -1.0;
    spec.initial = initials[1];
    DriverSpec ramp;
    ramp.a = {DriverSpec::Fn::Family::ramp, 1.0, 0.5, 0.0, 1.0};
    audit_one(spec, &ramp, nullptr);
    DriverSpec wave;
    wave.m = {DriverSpec::Fn::Family::sinusoid, 1.0, 0.0, 0.5, 2.0};
    audit_one(spec, &wave, nullptr);
    const auto control = ControlPath::sinusoid(1.0, 2.0);
    audit_one(spec, nullptr, &control);

    Outcome out;
    out.pass = violations == 0 && reflecting_rows > 0;
    out.detail = std::to_string(runs) + " runs, " + std::to_string(reflecting_rows) +
                 " reflecting rows, " + std::to_string(violations) + " violations";
    return out;
}

// ---- 3: propagation of chaos ------------------------------------------------

Outcome chaos_rate() {
    const auto t0 = std::chrono::steady_clock::now();
    CoefficientSpec spec = ou_registry_model();
    spec.initial = {rng::InitialLawSpec::Kind::gaussian, 1.0, 0.5};
    const auto grid = TimeGrid::make(1.0, 1e-2);
    experiments::ChaosParams params;
    params.sizes = {64, 256, 1024, 4096};
    params.n_ref = 16384;
    params.tracked = 256;
    const auto table = experiments::chaos_experiment(spec, grid, params, 42);
    const double slope = experiments::fit_loglog_slope(table).slope;
    const double drop = table.rows.front().y / table.rows.back().y;
    const double secs = seconds_since(t0);

    Outcome out;
    out.pass = slope <= -0.3 && drop >= 4.0 && secs <= 600.0;
    out.detail = "slope=" + fmt(slope) + " (<= -0.3), y(64)/y(4096)=" + fmt(drop) +
                 " (>= 4), runtime=" + fmt(secs) + "s";
    return out;
}

// ---- 4: the reflection path is Hoelder-1/2 ----------------------------------

Outcome holder_stability() {
    CoefficientSpec spec = ou_registry_model();
    spec.initial = {rng::InitialLawSpec::Kind::gaussian, 0.0, 0.5};
    const auto coarse = simulate(spec, TimeGrid::make(1.0, 1e-2), 1024, 42);
    const auto fine = simulate(spec, TimeGrid::make(1.0, 5e-3), 1024, 42);
    const double s_coarse = experiments::holder_half_statistic(coarse);
    const double s_fine = experiments::holder_half_statistic(fine);
    const double ratio = s_fine / s_coarse;

    Outcome out;
    out.pass = s_coarse > 0.0 && s_fine > 0.0 && ratio < 2.0 && ratio > 0.5;
    out.detail = "stat(1e-2)=" + fmt(s_coarse) + " stat(5e-3)=" + fmt(s_fine) +
                 " ratio=" + fmt(ratio) + " (in (1/2, 2))";
    return out;
}

// ---- 5: initial-condition stability -----------------------------------------

Outcome initial_stability() {
    CoefficientSpec spec = ou_registry_model();
    const auto grid = TimeGrid::make(1.0, 1e-2);
    const auto table =
        experiments::stability_initial(spec, grid, 1.0, {0.4, 0.2, 0.1, 0.05}, 256, 42);
    const double slope = experiments::fit_loglog_slope(table).slope;

    Outcome out;
    out.pass = slope >= 1.7 && slope <= 2.3;
    out.detail = "slope=" + fmt(slope) + " (in [1.7, 2.3])";
    return out;
}

// ---- 6: coefficient and driver stability ------------------------------------

bool strictly_decreasing(const experiments::RateTable& table) {
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        if (!(table.rows[i].y < table.rows[i - 1].y)) return false;
    return true;
}

Outcome coeff_driver_stability() {
    const auto grid = TimeGrid::make(1.0, 1e-3);

    // noisy tables: strictly decreasing across the three levels
    CoefficientSpec noisy = ou_registry_model();
    noisy.initial = {rng::InitialLawSpec::Kind::point, 1.0, 0.0};
    const auto coeff_table = experiments::stability_coeffs(
        noisy, grid, {0.2, 0.1, 0.05}, experiments::CoeffPerturbation{}, 256, 42);
    std::vector<experiments::DriverLevel> levels;
    for (double k : {2.0, 4.0, 8.0}) {
        experiments::DriverLevel lvl;
        lvl.label = 1.0 / k;
        lvl.driver.a.base = 1.0 + 1.0 / k;
        lvl.driver.m = {DriverSpec::Fn::Family::sinusoid, 1.0, 0.0, 1.0 / k, 1.0};
        levels.push_back(lvl);
    }
    const auto driver_table = experiments::stability_driver(noisy, grid, levels, 256, 42);

    // zero-noise rows against the explicit flow differences
    CoefficientSpec det;
    det.drift.theta0 = -1.0;
    det.noise_scale = 0.0;
    det.initial = {rng::InitialLawSpec::Kind::point, 2.0, 0.0};
    experiments::CoeffPerturbation drift_only;
    drift_only.diffusion = false;
    const auto coeff_oracle =
        experiments::stability_coeffs(det, grid, {0.2, 0.1, 0.05}, drift_only, 4, 1);
    double coeff_err = 0.0;
    for (const auto& row : coeff_oracle.rows)
        coeff_err = std::max(coeff_err, std::abs(row.y - row.x * row.x));

    CoefficientSpec up;
    up.drift.theta0 = 1.0;
    up.noise_scale = 0.0;
    up.initial = {rng::InitialLawSpec::Kind::point, 0.0, 0.0};
    std::vector<experiments::DriverLevel> scaled;
    for (double k : {2.0, 4.0, 8.0}) {
        experiments::DriverLevel lvl;
        lvl.label = 1.0 / k;
        lvl.driver.a.base = 1.0 + 1.0 / k;
        scaled.push_back(lvl);
    }
    const auto driver_oracle = experiments::stability_driver(up, grid, scaled, 4, 1);
    double driver_err = 0.0;
    for (const auto& row : driver_oracle.rows)
        driver_err = std::max(driver_err, std::abs(row.y - row.x * row.x));

    Outcome out;
    const bool monotone = strictly_decreasing(coeff_table) && strictly_decreasing(driver_table);
    out.pass = monotone && coeff_err <= 1e-10 && driver_err <= 1e-10;
    out.detail = std::string("tables ") + (monotone ? "decreasing" : "NOT decreasing") +
                 ", oracle errors " + fmt(coeff_err) + " / " + fmt(driver_err) + " (<= 1e-10)";
    return out;
}

// ---- 7: small-noise limit ----------------------------------------------------

Outcome small_noise_limit() {
    CoefficientSpec spec = ou_registry_model();
    spec.initial = {rng::InitialLawSpec::Kind::point, 1.0, 0.0};
    const auto grid = TimeGrid::make(1.0, 1e-2);
    const auto table = experiments::small_noise(spec, grid, {0.1, 0.01, 0.001}, 256, 42);

    bool decreasing = strictly_decreasing(table);
    double ratio_min = 1e300;
    double ratio_max = 0.0;
    for (const auto& row : table.rows) {
        const double r = row.y / row.x;
        ratio_min = std::min(ratio_min, r);
        ratio_max = std::max(ratio_max, r);
    }

    Outcome out;
    out.pass = decreasing && ratio_max <= 3.0 * ratio_min;
    out.detail = std::string(decreasing ? "decreasing" : "NOT decreasing") +
                 ", y/eps in [" + fmt(ratio_min) + ", " + fmt(ratio_max) + "] (spread <= 3x)";
    return out;
}

// ---- 8: weak-control continuity ----------------------------------------------

Outcome weak_control() {
    CoefficientSpec spec = ou_registry_model();
    spec.initial = {rng::InitialLawSpec::Kind::point, 1.0, 0.0};
    const auto grid = TimeGrid::make(1.0, 1e-3);
    const auto res = experiments::weak_control_continuity(spec, grid, {2.0, 4.0, 8.0, 16.0}, 1.0);

    bool decreasing = true;
    double action_err = 0.0;
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
        if (i > 0 && !(res.rows[i].sup_error < res.rows[i - 1].sup_error)) decreasing = false;
        action_err = std::max(action_err, std::abs(res.rows[i].action - 0.25));
    }

    Outcome out;
    out.pass = decreasing && action_err <= 1e-4;
    out.detail = std::string(decreasing ? "sup-error decreasing" : "sup-error NOT decreasing") +
                 ", max|action-1/4|=" + fmt(action_err) + " (<= 1e-4)";
    return out;
}

// ---- 9: Wasserstein contraction ------------------------------------------------

Outcome contraction_rate() {
    CoefficientSpec spec;
    spec.drift.theta1 = -1.0;
    spec.diffusion.eta0 = 1.0;
    const auto grid = TimeGrid::make(1.0, 1e-2);
    const auto res = experiments::contraction(spec, grid, 2.0, 1.0, 512, 42, 1.1);

    Outcome out;
    const double rate_err = std::abs(res.fitted_rate - res.theoretical_rate);
    out.pass = !res.degenerate && res.theoretical_rate == -2.0 && rate_err <= 0.5 &&
               res.pointwise_ok;
    out.detail = "fitted=" + fmt(res.fitted_rate) + " vs -2 (|err| <= 0.5), pointwise bound " +
                 (res.pointwise_ok ? "holds" : "VIOLATED");
    return out;
}

// ---- 10: invariant measure -----------------------------------------------------

Outcome invariant_measure() {
    // plain OU with the barrier parked far below the data: the stationary law
    // is N(0, 1/2)
    CoefficientSpec spec;
    spec.drift.theta1 = -1.0;
    spec.diffusion.eta0 = 1.0;
    spec.constraint.family = ConstraintSpec::Family::affine;
    spec.constraint.param = -5.0;
    spec.initial = {rng::InitialLawSpec::Kind::point, 2.0, 0.0};
    const rng::InitialLawSpec other{rng::InitialLawSpec::Kind::gaussian, 2.0, 0.5};

    const auto report = experiments::invariant_measure(spec, 10.0, 1e-2, 10000, 42, other);
    const double var_err = std::abs(report.terminal_variance - 0.5);

    Outcome out;
    out.pass = report.d_stat <= 0.05 && report.d_cross <= 0.05 && var_err <= 0.075;
    out.detail = "d_stat=" + fmt(report.d_stat) + " d_cross=" + fmt(report.d_cross) +
                 " (<= 0.05), |var-1/2|=" + fmt(var_err) + " (<= 0.075)";
    return out;
}

// ---- 11: Harnack-type inequalities ---------------------------------------------

Outcome harnack_checks() {
    const auto grid = TimeGrid::make(1.0, 1e-2);

    CoefficientSpec log_model;
    log_model.drift.theta1 = -1.0;
    log_model.diffusion.eta0 = 2.0;
    log_model.diffusion.eta1 = 0.1;

    CoefficientSpec shift_model;
    shift_model.drift.theta1 = -1.0;
    shift_model.diffusion.eta0 = 1.0;

    int satisfied = 0;
    double min_margin = 1e300;
    const auto count = [&](const experiments::HarnackReport& rep) {
        if (rep.satisfied) ++satisfied;
        min_margin = std::min(min_margin, rep.rhs + rep.mc_halfwidth - rep.lhs);
    };

    for (auto f : {experiments::HarnackFunction::shifted_tanh,
                   experiments::HarnackFunction::gaussian_bump}) {
        count(experiments::log_harnack_check(log_model, grid, 0.0, 0.5, f, 4096, 42));
        const auto pair = experiments::shift_harnack_check(shift_model, grid, 0.0, 0.5, 2.0, f,
                                                           4096, 42);
        count(pair.power_form);
        count(pair.log_form);
    }

    // degenerate cases must hold sample-exactly, with no CI slack
    const auto same = experiments::log_harnack_check(
        log_model, grid, 0.3, 0.3, experiments::HarnackFunction::shifted_tanh, 256, 42);
    const auto still = experiments::shift_harnack_check(
        shift_model, grid, 0.3, 0.0, 2.0, experiments::HarnackFunction::shifted_tanh, 256, 42);
    const bool exact = same.lhs <= same.rhs && still.exponent_integral == 0.0 &&
                       still.power_form.lhs <= still.power_form.rhs &&
                       still.log_form.lhs <= still.log_form.rhs;

    Outcome out;
    out.pass = satisfied == 6 && exact;
    out.detail = std::to_string(satisfied) + "/6 MC cases satisfied, degenerate cases " +
                 (exact ? "exact" : "VIOLATED") + ", min margin=" + fmt(min_margin);
    return out;
}

// ---- 12: bitwise determinism across worker counts -------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Outcome determinism() {
    const auto dir = fs::temp_directory_path() / "mrsim_acceptance_threads";
    fs::remove_all(dir);
    fs::create_directories(dir);

    nlohmann::ordered_json j;
    j["model"] = {{"drift", {{"theta0", -0.5}, {"theta1", -1.0}, {"theta2", 0.5}}},
                  {"diffusion", {{"eta0", 1.0}}},
                  {"initial", {{"kind", "gaussian"}, {"mean", 0.5}, {"sd", 0.5}}}};
    j["grid"] = {{"t_end", 0.5}, {"dt", 0.01}};
    j["particles"] = 512;
    j["seed"] = 42;
    const auto cfg = (dir / "cfg.json").string();
    io::write_text(cfg, j.dump(2) + "\n");

    const auto run_with = [&](const std::string& threads, const std::string& out_dir) {
        const std::string out = (dir / out_dir).string();
        const char* argv[] = {"mrsim",  "simulate", "--config", cfg.c_str(),
                              "--out",  out.c_str(), "--threads", threads.c_str()};
        return cli::run(8, argv);
    };
    const int rc1 = run_with("1", "a");
    const int rc8 = run_with("8", "b");
    const auto csv_a = slurp(dir / "a" / "simulate_path.csv");
    const auto csv_b = slurp(dir / "b" / "simulate_path.csv");
    fs::remove_all(dir);

    Outcome out;
    out.pass = rc1 == 0 && rc8 == 0 && !csv_a.empty() && csv_a == csv_b;
    out.detail = std::string("--threads 1 vs 8: ") +
                 (csv_a == csv_b ? "identical bytes" : "OUTPUTS DIFFER") + " (" +
                 std::to_string(csv_a.size()) + " bytes)";
    return out;
}

Outcome guarded(Outcome (*fn)()) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
    }
}

}  // namespace

int main() {
    report(1, "closed-form reflection", guarded(closed_form_reflection));
    report(2, "discrete reflection invariants", guarded(skorokhod_matrix));
    report(3, "propagation of chaos", guarded(chaos_rate));
    report(4, "reflection path Hoelder-1/2", guarded(holder_stability));
    report(5, "initial-condition stability", guarded(initial_stability));
    report(6, "coefficient and driver stability", guarded(coeff_driver_stability));
    report(7, "small-noise limit", guarded(small_noise_limit));
    report(8, "weak-control continuity", guarded(weak_control));
    report(9, "Wasserstein contraction", guarded(contraction_rate));
    report(10, "invariant measure", guarded(invariant_measure));
    report(11, "Harnack inequalities", guarded(harnack_checks));
    report(12, "bitwise determinism", guarded(determinism));

    if (g_failures == 0)
        std::printf("acceptance: 12/12 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
