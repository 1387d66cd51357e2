#include "mrsim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mrsim/config.hpp"
#include "mrsim/density.hpp"
#include "mrsim/errors.hpp"
#include "mrsim/experiments.hpp"
#include "mrsim/io.hpp"
#include "mrsim/parallel.hpp"

namespace mrsim::cli {
namespace {

using nlohmann::ordered_json;

// Tolerance used by the reflection-condition audit (dk > tol marks a
// reflecting step; |mean_h| must stay below upper_slope * tol there).
constexpr double kAuditTol = 1e-8;

std::string file_prefix(std::string name) {
    std::replace(name.begin(), name.end(), '-', '_');
    return name;
}

std::string out_path(const RunConfig& cfg, const std::string& file) {
    std::filesystem::create_directories(cfg.output_dir);
    return (std::filesystem::path(cfg.output_dir) / file).string();
}

int finish(const std::string& name, const RunConfig& cfg, ordered_json results, bool ok) {
    results["verdict"] = ok ? "pass" : "fail";
    const auto summary = io::make_summary(name, cfg, std::move(results));
    io::write_summary_json(out_path(cfg, file_prefix(name) + "_summary.json"), summary);
    std::cout << name << ": " << (ok ? "pass" : "fail") << "\n";
    return ok ? kExitOk : kExitVerdict;
}

ordered_json table_json(const experiments::RateTable& table, const char* x_name,
                        const char* y_name) {
    auto arr = ordered_json::array();
    for (const auto& r : table.rows) arr.push_back(ordered_json{{x_name, r.x}, {y_name, r.y}});
    return arr;
}

std::optional<experiments::LogLogFit> try_fit(const experiments::RateTable& table) {
    experiments::RateTable positive;
    for (const auto& r : table.rows)
        if (r.x > 0.0 && r.y > 0.0) positive.rows.push_back(r);
    if (positive.rows.size() < 2) return std::nullopt;
    try {
        return experiments::fit_loglog_slope(positive);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// y strictly decreasing when read along decreasing perturbation size
// (or, with ascending_x, along increasing x such as a frequency ladder).
bool strictly_decreasing_y(experiments::RateTable table, bool ascending_x = false) {
    std::sort(table.rows.begin(), table.rows.end(),
              [ascending_x](const experiments::RatePoint& a, const experiments::RatePoint& b) {
                  return ascending_x ? a.x < b.x : a.x > b.x;
              });
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
        if (!(table.rows[i + 1].y < table.rows[i].y)) return false;
    return true;
}

ordered_json path_results(const PathRecord& rec, const CoefficientSpec& model) {
    const auto& back = rec.rows.back();
    const auto audit = audit_skorokhod(rec, kAuditTol);
    const bool ok = skorokhod_ok(audit, model.constraint.upper_slope(), kAuditTol);
    ordered_json results;
    results["final"] = ordered_json{{"t", back.t},
                                    {"K", back.k},
                                    {"mean_h", back.mean_h},
                                    {"mean", back.mean},
                                    {"var", back.var}};
    results["holder_half_statistic"] = experiments::holder_half_statistic(rec);
    results["skorokhod"] = ordered_json{{"tol", kAuditTol},
                                        {"k_nondecreasing", audit.k_nondecreasing},
                                        {"min_mean_h", audit.min_mean_h},
                                        {"max_active_abs_mean_h", audit.max_active_abs_mean_h},
                                        {"active_rows", audit.active_rows},
                                        {"ok", ok}};
    return results;
}

bool path_ok(const ordered_json& results) {
    return results.at("skorokhod").at("ok").get<bool>();
}

int cmd_simulate(const RunConfig& cfg) {
    const DriverSpec* driver = cfg.experiment.driver ? &*cfg.experiment.driver : nullptr;
    const ControlPath* control = cfg.experiment.control ? &*cfg.experiment.control : nullptr;
    const PathRecord rec =
        simulate(cfg.model, cfg.grid, cfg.particles, cfg.seed, driver, control);
    io::write_path_csv(out_path(cfg, "simulate_path.csv"), rec);
    auto results = path_results(rec, cfg.model);
    const bool ok = path_ok(results);
    return finish("simulate", cfg, std::move(results), ok);
}

int cmd_ode(const RunConfig& cfg) {
    const PathRecord rec = simulate_reflected_ode(cfg.model, cfg.grid);
    io::write_path_csv(out_path(cfg, "ode_path.csv"), rec);
    auto results = path_results(rec, cfg.model);
    const bool ok = path_ok(results);
    return finish("ode", cfg, std::move(results), ok);
}

int cmd_skeleton(const RunConfig& cfg) {
    const ControlPath control = cfg.experiment.control.value_or(ControlPath::zero_control());
    const PathRecord rec = simulate_skeleton(cfg.model, cfg.grid, control);
    io::write_path_csv(out_path(cfg, "skeleton_path.csv"), rec);
    auto results = path_results(rec, cfg.model);
    results["rate_action"] = rate_action(control, cfg.grid);
    const bool ok = path_ok(results);
    return finish("skeleton", cfg, std::move(results), ok);
}

int cmd_density(const RunConfig& cfg) {
    SimulateOptions opts;
    opts.snapshot_stride = std::max<std::int64_t>(1, cfg.experiment.snapshot_stride);
    const DriverSpec* driver = cfg.experiment.driver ? &*cfg.experiment.driver : nullptr;
    const ControlPath* control = cfg.experiment.control ? &*cfg.experiment.control : nullptr;
    const PathRecord rec =
        simulate(cfg.model, cfg.grid, cfg.particles, cfg.seed, driver, control, opts);
    io::write_path_csv(out_path(cfg, "density_path.csv"), rec);

    const double band = cfg.experiment.band_epsilon
                            ? *cfg.experiment.band_epsilon
                            : density::default_band_epsilon(cfg.model, cfg.grid, cfg.particles);
    const auto est = density::estimate(rec.snapshots, cfg.model, band);
    io::write_density_csv(out_path(cfg, "density_table.csv"), est);

    std::size_t active = 0;
    double k_min = std::numeric_limits<double>::infinity();
    double k_max = -std::numeric_limits<double>::infinity();
    for (const auto& r : est.rows) {
        if (!r.active) continue;
        ++active;
        k_min = std::min(k_min, r.k);
        k_max = std::max(k_max, r.k);
    }
    ordered_json results;
    results["band_epsilon"] = est.band_epsilon;
    results["rows"] = est.rows.size();
    results["active_rows"] = active;
    if (active > 0) {
        results["k_min"] = k_min;
        results["k_max"] = k_max;
    }
    auto path_res = path_results(rec, cfg.model);
    results["skorokhod"] = path_res.at("skorokhod");
    return finish("density", cfg, std::move(results), path_ok(path_res));
}

int cmd_chaos(const RunConfig& cfg) {
    experiments::ChaosParams params;
    params.sizes = cfg.experiment.sizes;
    params.n_ref = cfg.experiment.n_ref;
    params.tracked = cfg.experiment.tracked;
    auto table = experiments::chaos_experiment(cfg.model, cfg.grid, params, cfg.seed);
    io::write_rate_csv(out_path(cfg, "chaos_table.csv"), table, "n", "err_sq");

    std::sort(table.rows.begin(), table.rows.end(),
              [](const auto& a, const auto& b) { return a.x < b.x; });
    const bool all_zero = std::all_of(table.rows.begin(), table.rows.end(),
                                      [](const auto& r) { return r.y <= 0.0; });
    const double slope_max = -0.3;
    const double min_drop = 4.0;
    ordered_json results;
    results["table"] = table_json(table, "n", "err_sq");
    results["tolerances"] = ordered_json{{"slope_max", slope_max}, {"min_drop", min_drop}};
    bool ok = false;
    if (all_zero) {
        // exact coupling (no noise, no mean-field term): every system is the
        // same path, which satisfies any decay requirement
        results["degenerate"] = "all errors zero";
        ok = true;
    } else if (const auto fit = try_fit(table)) {
        const double drop = table.rows.front().y / table.rows.back().y;
        results["fitted_slope"] = fit->slope;
        results["drop"] = drop;
        ok = fit->slope <= slope_max && drop >= min_drop;
        std::cout << "chaos: slope=" << fit->slope << " drop=" << drop << "\n";
    }
    return finish("chaos", cfg, std::move(results), ok);
}

int cmd_stability_init(const RunConfig& cfg) {
    auto table = experiments::stability_initial(cfg.model, cfg.grid, cfg.experiment.base_point,
                                                cfg.experiment.deltas, cfg.particles, cfg.seed);
    io::write_rate_csv(out_path(cfg, "stability_init_table.csv"), table, "delta", "err_sq");
    const double lo = 1.7, hi = 2.3;
    ordered_json results;
    results["table"] = table_json(table, "delta", "err_sq");
    results["tolerances"] = ordered_json{{"slope_min", lo}, {"slope_max", hi}};
    bool ok = false;
    if (const auto fit = try_fit(table)) {
        results["fitted_slope"] = fit->slope;
        ok = fit->slope >= lo && fit->slope <= hi;
        std::cout << "stability-init: slope=" << fit->slope << "\n";
    }
    return finish("stability-init", cfg, std::move(results), ok);
}

int cmd_stability_coeff(const RunConfig& cfg) {
    experiments::CoeffPerturbation pert{cfg.experiment.perturb_drift,
                                        cfg.experiment.perturb_diffusion};
    auto table = experiments::stability_coeffs(cfg.model, cfg.grid, cfg.experiment.lambdas, pert,
                                               cfg.particles, cfg.seed);
    io::write_rate_csv(out_path(cfg, "stability_coeff_table.csv"), table, "lambda", "err_sq");
    ordered_json results;
    results["table"] = table_json(table, "lambda", "err_sq");
    if (const auto fit = try_fit(table)) results["fitted_slope"] = fit->slope;
    const bool ok = strictly_decreasing_y(table);
    results["strictly_decreasing"] = ok;
    return finish("stability-coeff", cfg, std::move(results), ok);
}

int cmd_stability_driver(const RunConfig& cfg) {
    std::vector<experiments::DriverLevel> levels;
    for (double k : cfg.experiment.driver_levels) {
        if (!(k > 0.0)) throw ConfigError("experiment.driver_levels", "levels must be positive");
        experiments::DriverLevel level;
        level.label = 1.0 / k;
        level.driver.a.family = DriverSpec::Fn::Family::constant;
        level.driver.a.base = 1.0 + 1.0 / k;
        level.driver.m.family = DriverSpec::Fn::Family::sinusoid;
        level.driver.m.base = 1.0;
        level.driver.m.amp = 1.0 / k;
        level.driver.m.omega = 1.0;
        levels.push_back(level);
    }
    auto table =
        experiments::stability_driver(cfg.model, cfg.grid, levels, cfg.particles, cfg.seed);
    io::write_rate_csv(out_path(cfg, "stability_driver_table.csv"), table, "level", "err_sq");
    ordered_json results;
    results["table"] = table_json(table, "level", "err_sq");
    if (const auto fit = try_fit(table)) results["fitted_slope"] = fit->slope;
    const bool ok = strictly_decreasing_y(table);
    results["strictly_decreasing"] = ok;
    return finish("stability-driver", cfg, std::move(results), ok);
}

int cmd_small_noise(const RunConfig& cfg) {
    auto table = experiments::small_noise(cfg.model, cfg.grid, cfg.experiment.eps_list,
                                          cfg.particles, cfg.seed);
    io::write_rate_csv(out_path(cfg, "small_noise_table.csv"), table, "eps", "err_sq");
    ordered_json results;
    results["table"] = table_json(table, "eps", "err_sq");
    const bool decreasing = strictly_decreasing_y(table);

    // proof-shape probe: y(eps)/eps should stay within a constant factor
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = 0.0;
    for (const auto& r : table.rows) {
        if (!(r.x > 0.0)) continue;
        const double ratio = r.y / r.x;
        ratio_min = std::min(ratio_min, ratio);
        ratio_max = std::max(ratio_max, ratio);
    }
    const double max_spread = 3.0;
    const bool ratio_ok = ratio_min > 0.0 && ratio_max <= max_spread * ratio_min;
    results["ratio_spread"] = ratio_min > 0.0 ? ratio_max / ratio_min : 0.0;
    results["tolerances"] = ordered_json{{"max_ratio_spread", max_spread}};
    results["strictly_decreasing"] = decreasing;
    return finish("small-noise", cfg, std::move(results), decreasing && ratio_ok);
}

int cmd_ldp_control(const RunConfig& cfg) {
    const auto res = experiments::weak_control_continuity(cfg.model, cfg.grid,
                                                          cfg.experiment.freqs, cfg.experiment.amp);
    io::write_weak_control_csv(out_path(cfg, "ldp_control_table.csv"), res.rows);

    const double target =
        cfg.experiment.amp * cfg.experiment.amp * cfg.grid.t_end / 4.0;
    const double action_tol = 1e-4;
    bool decreasing = true;
    bool actions_ok = true;
    auto arr = ordered_json::array();
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
        const auto& r = res.rows[i];
        if (i + 1 < res.rows.size() && !(res.rows[i + 1].sup_error < r.sup_error))
            decreasing = false;
        if (std::abs(r.action - target) > action_tol) actions_ok = false;
        arr.push_back(ordered_json{
            {"freq", r.freq}, {"sup_error", r.sup_error}, {"action", r.action}});
    }
    ordered_json results;
    results["table"] = std::move(arr);
    results["target_action"] = target;
    results["tolerances"] = ordered_json{{"action_tol", action_tol}};
    results["strictly_decreasing"] = decreasing;
    results["actions_ok"] = actions_ok;
    return finish("ldp-control", cfg, std::move(results), decreasing && actions_ok);
}

int cmd_contraction(const RunConfig& cfg) {
    const auto res =
        experiments::contraction(cfg.model, cfg.grid, cfg.experiment.init_a,
                                 cfg.experiment.init_b, cfg.particles, cfg.seed,
                                 cfg.experiment.slack);
    io::write_contraction_csv(out_path(cfg, "contraction_table.csv"), res);
    const double rate_tol = 0.25;
    ordered_json results;
    results["theoretical_rate"] = res.theoretical_rate;
    results["slack"] = res.slack;
    results["pointwise_ok"] = res.pointwise_ok;
    results["tolerances"] = ordered_json{{"relative_rate_tol", rate_tol}};
    bool ok;
    if (res.degenerate) {
        results["degenerate"] = "identical initial points";
        ok = res.pointwise_ok;
    } else {
        results["fitted_rate"] = res.fitted_rate;
        const bool rate_ok = std::abs(res.fitted_rate - res.theoretical_rate) <=
                             rate_tol * std::abs(res.theoretical_rate);
        results["rate_ok"] = rate_ok;
        ok = rate_ok && res.pointwise_ok;
        std::cout << "contraction: fitted=" << res.fitted_rate
                  << " theoretical=" << res.theoretical_rate << "\n";
    }
    return finish("contraction", cfg, std::move(results), ok);
}

int cmd_invariant(const RunConfig& cfg) {
    const auto rep =
        experiments::invariant_measure(cfg.model, cfg.experiment.t_long, cfg.grid.dt,
                                       cfg.particles, cfg.seed, cfg.experiment.other_initial);
    std::string csv = "d_stat,d_cross,terminal_mean,terminal_variance\n";
    csv += io::format_g17(rep.d_stat) + "," + io::format_g17(rep.d_cross) + "," +
           io::format_g17(rep.terminal_mean) + "," + io::format_g17(rep.terminal_variance) + "\n";
    io::write_text(out_path(cfg, "invariant_table.csv"), csv);

    const double dist_tol = 0.05;
    const double var_rel_tol = 0.15;
    ordered_json results;
    results["d_stat"] = rep.d_stat;
    results["d_cross"] = rep.d_cross;
    results["terminal_mean"] = rep.terminal_mean;
    results["terminal_variance"] = rep.terminal_variance;
    results["tolerances"] =
        ordered_json{{"dist_tol", dist_tol}, {"var_rel_tol", var_rel_tol}};
    bool ok = rep.d_stat <= dist_tol && rep.d_cross <= dist_tol;
    if (cfg.experiment.target_variance) {
        const double target = *cfg.experiment.target_variance;
        results["target_variance"] = target;
        const bool var_ok =
            std::abs(rep.terminal_variance - target) <= var_rel_tol * std::abs(target);
        results["variance_ok"] = var_ok;
        ok = ok && var_ok;
    }
    std::cout << "invariant: d_stat=" << rep.d_stat << " d_cross=" << rep.d_cross << "\n";
    return finish("invariant", cfg, std::move(results), ok);
}

ordered_json harnack_json(const experiments::HarnackReport& rep) {
    return ordered_json{{"lhs", rep.lhs},
                        {"rhs", rep.rhs},
                        {"mc_halfwidth", rep.mc_halfwidth},
                        {"correction", rep.correction},
                        {"satisfied", rep.satisfied}};
}

int cmd_harnack_log(const RunConfig& cfg) {
    const auto f = experiments::harnack_function_from_name(cfg.experiment.f_name);
    const auto rep = experiments::log_harnack_check(cfg.model, cfg.grid, cfg.experiment.x0,
                                                    cfg.experiment.y0, f, cfg.particles, cfg.seed);
    std::string csv = "form,lhs,rhs,halfwidth,correction\n";
    csv += "log," + io::format_g17(rep.lhs) + "," + io::format_g17(rep.rhs) + "," +
           io::format_g17(rep.mc_halfwidth) + "," + io::format_g17(rep.correction) + "\n";
    io::write_text(out_path(cfg, "harnack_log_table.csv"), csv);
    ordered_json results;
    results["f"] = cfg.experiment.f_name;
    results["x0"] = cfg.experiment.x0;
    results["y0"] = cfg.experiment.y0;
    results["log_form"] = harnack_json(rep);
    std::cout << "harnack-log: lhs=" << rep.lhs << " rhs=" << rep.rhs << "\n";
    return finish("harnack-log", cfg, std::move(results), rep.satisfied);
}

int cmd_harnack_shift(const RunConfig& cfg) {
    const auto f = experiments::harnack_function_from_name(cfg.experiment.f_name);
    const auto rep =
        experiments::shift_harnack_check(cfg.model, cfg.grid, cfg.experiment.x0,
                                         cfg.experiment.v, cfg.experiment.p, f, cfg.particles,
                                         cfg.seed);
    std::string csv = "form,lhs,rhs,halfwidth,correction\n";
    csv += "power," + io::format_g17(rep.power_form.lhs) + "," +
           io::format_g17(rep.power_form.rhs) + "," + io::format_g17(rep.power_form.mc_halfwidth) +
           "," + io::format_g17(rep.power_form.correction) + "\n";
    csv += "log," + io::format_g17(rep.log_form.lhs) + "," + io::format_g17(rep.log_form.rhs) +
           "," + io::format_g17(rep.log_form.mc_halfwidth) + "," +
           io::format_g17(rep.log_form.correction) + "\n";
    io::write_text(out_path(cfg, "harnack_shift_table.csv"), csv);
    ordered_json results;
    results["f"] = cfg.experiment.f_name;
    results["v"] = cfg.experiment.v;
    results["p"] = cfg.experiment.p;
    results["exponent_integral"] = rep.exponent_integral;
    results["power_form"] = harnack_json(rep.power_form);
    results["log_form"] = harnack_json(rep.log_form);
    const bool ok = rep.power_form.satisfied && rep.log_form.satisfied;
    return finish("harnack-shift", cfg, std::move(results), ok);
}

int cmd_validate(const RunConfig& cfg) {
    const auto d = validate(cfg.model);
    ordered_json out{
        {"valid", true},
        {"K", d.lipschitz},
        {"m", d.lower_slope},
        {"M", d.upper_slope},
        {"C1", d.dissipativity.c1},
        {"C2", d.dissipativity.c2},
        {"dissipative", d.dissipativity.valid},
        {"initial_mean_h", d.initial_mean_h},
        {"initial_flagged", d.initial_flagged},
        {"grid", ordered_json{{"t_end", cfg.grid.t_end},
                              {"dt", cfg.grid.dt},
                              {"steps", cfg.grid.steps}}},
    };
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int dispatch(const std::string& name, const RunConfig& cfg) {
    if (name == "simulate") return cmd_simulate(cfg);
    if (name == "ode") return cmd_ode(cfg);
    if (name == "skeleton") return cmd_skeleton(cfg);
    if (name == "density") return cmd_density(cfg);
    if (name == "chaos") return cmd_chaos(cfg);
    if (name == "stability-init") return cmd_stability_init(cfg);
    if (name == "stability-coeff") return cmd_stability_coeff(cfg);
    if (name == "stability-driver") return cmd_stability_driver(cfg);
    if (name == "small-noise") return cmd_small_noise(cfg);
    if (name == "ldp-control") return cmd_ldp_control(cfg);
    if (name == "contraction") return cmd_contraction(cfg);
    if (name == "invariant") return cmd_invariant(cfg);
    if (name == "harnack-log") return cmd_harnack_log(cfg);
    if (name == "harnack-shift") return cmd_harnack_shift(cfg);
    if (name == "validate") return cmd_validate(cfg);
    throw ConfigError("subcommand", "unknown subcommand '" + name + "'");
}

int resolve_threads(bool flag_given, int flag_value) {
    if (flag_given) {
        if (flag_value < 0) throw ConfigError("threads", "must be >= 0");
        return flag_value;
    }
    if (const char* env = std::getenv("MRSIM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0)
            throw ConfigError("MRSIM_THREADS", "must be a nonnegative integer");
        return static_cast<int>(v);
    }
    return 0;
}

struct SubcommandInfo {
    const char* name;
    const char* help;
};

constexpr SubcommandInfo kSubcommands[] = {
    {"simulate", "run the projected particle scheme and record the path"},
    {"ode", "run the zero-noise reflected flow"},
    {"skeleton", "run the controlled skeleton path"},
    {"density", "estimate the reflection density dK/dt from snapshots"},
    {"chaos", "coupled convergence of the n-particle system to a reference"},
    {"stability-init", "error scaling under initial-point perturbations"},
    {"stability-coeff", "error decay under coefficient perturbations"},
    {"stability-driver", "error decay under driver perturbations"},
    {"small-noise", "error decay toward the zero-noise flow"},
    {"ldp-control", "skeleton response to weakly vanishing controls"},
    {"contraction", "two-ensemble Wasserstein contraction versus the decay bound"},
    {"invariant", "long-run stationarity and cross-initial distances"},
    {"harnack-log", "Monte Carlo check of the log-Harnack bound"},
    {"harnack-shift", "Monte Carlo check of the shift-Harnack bounds"},
    {"validate", "validate a config and print the derived model constants"},
};

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"mean-reflected interacting-particle simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    int threads = 0;
    std::uint64_t seed_override = 0;
    for (const auto& info : kSubcommands) {
        auto* sub = app.add_subcommand(info.name, info.help);
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_override, "output directory (overrides the config)");
        sub->add_option("--threads", threads, "worker threads, 0 = hardware default");
        sub->add_option("--seed-override", seed_override, "replace the config seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    const CLI::App* sub = app.get_subcommands().front();
    try {
        parallel::set_worker_count(resolve_threads(sub->count("--threads") > 0, threads));
        RunConfig cfg = load_config(config_path);
        if (sub->count("--seed-override") > 0) cfg.seed = seed_override;
        if (!out_override.empty()) cfg.output_dir = out_override;
        return dispatch(sub->get_name(), cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace mrsim::cli
