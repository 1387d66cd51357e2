#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mrsim/experiments.hpp"
#include "mrsim/model.hpp"
#include "mrsim/scheme.hpp"

namespace mrsim {

/// Per-experiment knobs.  Every field has a default so a config may supply
/// only what it wants to change; the run summary echoes the fully populated
/// block, making summaries replayable as configs.
struct ExperimentConfig {
    // chaos
    std::vector<std::size_t> sizes{64, 256, 1024, 4096};
    std::size_t n_ref = 16384;
    std::size_t tracked = 256;

    // stability ladders
    double base_point = 1.0;
    std::vector<double> deltas{0.4, 0.2, 0.1, 0.05};
    std::vector<double> lambdas{0.2, 0.1, 0.05};
    bool perturb_drift = true;
    bool perturb_diffusion = true;
    std::vector<double> driver_levels{2.0, 4.0, 8.0};  // k: a = 1 + 1/k, m = 1 + sin(t)/k

    // small noise
    std::vector<double> eps_list{0.1, 0.01, 0.001};

    // controlled skeletons
    std::vector<double> freqs{2.0, 4.0, 8.0, 16.0};
    double amp = 1.0;

    // contraction
    double init_a = 2.0;
    double init_b = 1.0;
    double slack = 1.1;

    // invariant measure
    double t_long = 10.0;
    rng::InitialLawSpec other_initial{rng::InitialLawSpec::Kind::gaussian, 2.0, 0.5};
    std::optional<double> target_variance;

    // Harnack checks
    double x0 = 0.0;
    double y0 = 0.5;
    double v = 0.5;
    double p = 2.0;
    std::string f_name = "shifted-tanh";

    // density
    std::int64_t snapshot_stride = 1;
    std::optional<double> band_epsilon;  // absent: use the default band formula
    int window = 5;

    // optional path drivers/controls for simulate & skeleton
    std::optional<DriverSpec> driver;
    std::optional<ControlPath> control;
};

/// Complete run description.  `model` and `grid` are required in JSON; the
/// rest defaults.
struct RunConfig {
    CoefficientSpec model;
    TimeGrid grid;
    std::size_t particles = 1000;
    std::uint64_t seed = 42;
    std::string output_dir = "out";
    ExperimentConfig experiment;
};

/// Parse a config object.  A top-level "config" key (a run summary fed back
/// in) is descended into transparently.  Throws ConfigError with the dotted
/// field path on any malformed entry.
RunConfig parse_config(const nlohmann::ordered_json& j);

/// Load and parse a JSON config file.
RunConfig load_config(const std::string& path);

/// Serialise the fully populated config (defaults included).
nlohmann::ordered_json config_to_json(const RunConfig& cfg);

}  // namespace mrsim
