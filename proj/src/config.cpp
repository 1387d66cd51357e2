#include "mrsim/config.hpp"

#include <cmath>
#include <fstream>

#include "mrsim/errors.hpp"

namespace mrsim {

namespace {

using json = nlohmann::ordered_json;

const json& member(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) throw ConfigError(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(path + "." + key, "missing required field");
    return *it;
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path, "expected a number");
    return j.get<double>();
}

double get_num(const json& j, const std::string& path, const char* key) {
    return as_number(member(j, path, key), path + "." + key);
}

double get_num_or(const json& j, const std::string& path, const char* key, double def) {
    if (!j.is_object() || !j.contains(key)) return def;
    return as_number(j.at(key), path + "." + key);
}

bool get_bool_or(const json& j, const std::string& path, const char* key, bool def) {
    if (!j.is_object() || !j.contains(key)) return def;
    const auto& v = j.at(key);
    if (!v.is_boolean()) throw ConfigError(path + "." + key, "expected a boolean");
    return v.get<bool>();
}

std::string get_str_or(const json& j, const std::string& path, const char* key,
                       const std::string& def) {
    if (!j.is_object() || !j.contains(key)) return def;
    const auto& v = j.at(key);
    if (!v.is_string()) throw ConfigError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

std::vector<double> get_num_list_or(const json& j, const std::string& path, const char* key,
                                    std::vector<double> def) {
    if (!j.is_object() || !j.contains(key)) return def;
    const auto& v = j.at(key);
    if (!v.is_array()) throw ConfigError(path + "." + key, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_number(v[i], path + "." + key + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::size_t> get_size_list_or(const json& j, const std::string& path, const char* key,
                                          std::vector<std::size_t> def) {
    if (!j.is_object() || !j.contains(key)) return def;
    const auto& v = j.at(key);
    if (!v.is_array()) throw ConfigError(path + "." + key, "expected an array of counts");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "." + key + "[" + std::to_string(i) + "]";
        const double d = as_number(v[i], p);
        if (d < 1 || d != std::floor(d)) throw ConfigError(p, "expected a positive integer");
        out.push_back(static_cast<std::size_t>(d));
    }
    return out;
}

rng::InitialLawSpec parse_initial(const json& j, const std::string& path) {
    rng::InitialLawSpec law;
    const std::string kind = get_str_or(j, path, "kind", "point");
    if (kind == "point") {
        law.kind = rng::InitialLawSpec::Kind::point;
        law.a = get_num_or(j, path, "value", 0.0);
    } else if (kind == "gaussian") {
        law.kind = rng::InitialLawSpec::Kind::gaussian;
        law.a = get_num_or(j, path, "mean", 0.0);
        law.b = get_num_or(j, path, "sd", 1.0);
    } else if (kind == "uniform") {
        law.kind = rng::InitialLawSpec::Kind::uniform;
        law.a = get_num(j, path, "lo");
        law.b = get_num(j, path, "hi");
    } else {
        throw ConfigError(path + ".kind", "unknown initial law '" + kind +
                                              "' (expected point, gaussian or uniform)");
    }
    rng::validate(law, path);
    return law;
}

json initial_to_json(const rng::InitialLawSpec& law) {
    json j;
    switch (law.kind) {
        case rng::InitialLawSpec::Kind::point:
            j["kind"] = "point";
            j["value"] = law.a;
            break;
        case rng::InitialLawSpec::Kind::gaussian:
            j["kind"] = "gaussian";
            j["mean"] = law.a;
            j["sd"] = law.b;
            break;
        case rng::InitialLawSpec::Kind::uniform:
            j["kind"] = "uniform";
            j["lo"] = law.a;
            j["hi"] = law.b;
            break;
    }
    return j;
}

ConstraintSpec parse_constraint(const json& j, const std::string& path) {
    ConstraintSpec c;
    const std::string family = get_str_or(j, path, "family", "identity");
    if (family == "identity")
        c.family = ConstraintSpec::Family::identity;
    else if (family == "affine")
        c.family = ConstraintSpec::Family::affine;
    else if (family == "sine")
        c.family = ConstraintSpec::Family::sine;
    else
        throw ConfigError(path + ".family", "unknown constraint '" + family +
                                                "' (expected identity, affine or sine)");
    c.param = get_num_or(j, path, "param", 0.0);
    return c;
}

const char* constraint_name(ConstraintSpec::Family f) {
    switch (f) {
        case ConstraintSpec::Family::identity: return "identity";
        case ConstraintSpec::Family::affine: return "affine";
        case ConstraintSpec::Family::sine: return "sine";
    }
    return "identity";
}

CoefficientSpec parse_model(const json& j, const std::string& path) {
    CoefficientSpec spec;
    if (j.contains("drift")) {
        const auto& d = j.at("drift");
        spec.drift.theta0 = get_num_or(d, path + ".drift", "theta0", 0.0);
        spec.drift.theta1 = get_num_or(d, path + ".drift", "theta1", 0.0);
        spec.drift.theta2 = get_num_or(d, path + ".drift", "theta2", 0.0);
    }
    if (j.contains("diffusion")) {
        const auto& s = j.at("diffusion");
        spec.diffusion.eta0 = get_num_or(s, path + ".diffusion", "eta0", 0.0);
        spec.diffusion.eta1 = get_num_or(s, path + ".diffusion", "eta1", 0.0);
        spec.diffusion.eta2 = get_num_or(s, path + ".diffusion", "eta2", 0.0);
        spec.diffusion.state_free = get_bool_or(s, path + ".diffusion", "state_free", false);
    }
    spec.noise_scale = get_num_or(j, path, "noise_scale", 1.0);
    if (j.contains("constraint"))
        spec.constraint = parse_constraint(j.at("constraint"), path + ".constraint");
    if (j.contains("initial")) spec.initial = parse_initial(j.at("initial"), path + ".initial");
    validate(spec, path);
    return spec;
}

DriverSpec::Fn parse_driver_fn(const json& j, const std::string& path) {
    DriverSpec::Fn fn;
    const std::string family = get_str_or(j, path, "family", "constant");
    if (family == "constant")
        fn.family = DriverSpec::Fn::Family::constant;
    else if (family == "ramp")
        fn.family = DriverSpec::Fn::Family::ramp;
    else if (family == "sinusoid")
        fn.family = DriverSpec::Fn::Family::sinusoid;
    else
        throw ConfigError(path + ".family", "unknown driver family '" + family +
                                                "' (expected constant, ramp or sinusoid)");
    fn.base = get_num_or(j, path, "base", 1.0);
    fn.slope = get_num_or(j, path, "slope", 0.0);
    fn.amp = get_num_or(j, path, "amp", 0.0);
    fn.omega = get_num_or(j, path, "omega", 1.0);
    return fn;
}

const char* driver_family_name(DriverSpec::Fn::Family f) {
    switch (f) {
        case DriverSpec::Fn::Family::constant: return "constant";
        case DriverSpec::Fn::Family::ramp: return "ramp";
        case DriverSpec::Fn::Family::sinusoid: return "sinusoid";
    }
    return "constant";
}

DriverSpec parse_driver(const json& j, const std::string& path) {
    DriverSpec d;
    if (j.contains("a")) d.a = parse_driver_fn(j.at("a"), path + ".a");
    if (j.contains("m")) d.m = parse_driver_fn(j.at("m"), path + ".m");
    return d;
}

json driver_fn_to_json(const DriverSpec::Fn& fn) {
    return json{{"family", driver_family_name(fn.family)},
                {"base", fn.base},
                {"slope", fn.slope},
                {"amp", fn.amp},
                {"omega", fn.omega}};
}

ControlPath parse_control(const json& j, const std::string& path) {
    ControlPath c;
    const std::string kind = get_str_or(j, path, "kind", "zero");
    if (kind == "zero")
        c.kind = ControlPath::Kind::zero;
    else if (kind == "constant")
        c.kind = ControlPath::Kind::constant;
    else if (kind == "sinusoid")
        c.kind = ControlPath::Kind::sinusoid;
    else if (kind == "table")
        c.kind = ControlPath::Kind::table;
    else
        throw ConfigError(path + ".kind", "unknown control '" + kind +
                                              "' (expected zero, constant, sinusoid or table)");
    c.value = get_num_or(j, path, "value", 0.0);
    c.amp = get_num_or(j, path, "amp", 0.0);
    c.freq = get_num_or(j, path, "freq", 0.0);
    c.table = get_num_list_or(j, path, "table", {});
    if (c.kind == ControlPath::Kind::table && c.table.empty())
        throw ConfigError(path + ".table", "table control needs at least one value");
    return c;
}

json control_to_json(const ControlPath& c) {
    const char* kind = "zero";
    switch (c.kind) {
        case ControlPath::Kind::zero: kind = "zero"; break;
        case ControlPath::Kind::constant: kind = "constant"; break;
        case ControlPath::Kind::sinusoid: kind = "sinusoid"; break;
        case ControlPath::Kind::table: kind = "table"; break;
    }
    json j{{"kind", kind}, {"value", c.value}, {"amp", c.amp}, {"freq", c.freq}};
    if (!c.table.empty()) j["table"] = c.table;
    return j;
}

ExperimentConfig parse_experiment(const json& j, const std::string& path) {
    ExperimentConfig e;
    e.sizes = get_size_list_or(j, path, "sizes", e.sizes);
    if (j.contains("n_ref")) {
        const double d = get_num(j, path, "n_ref");
        if (d < 1 || d != std::floor(d)) throw ConfigError(path + ".n_ref", "expected a count");
        e.n_ref = static_cast<std::size_t>(d);
    }
    if (j.contains("tracked")) {
        const double d = get_num(j, path, "tracked");
        if (d < 1 || d != std::floor(d)) throw ConfigError(path + ".tracked", "expected a count");
        e.tracked = static_cast<std::size_t>(d);
    }
    e.base_point = get_num_or(j, path, "base_point", e.base_point);
    e.deltas = get_num_list_or(j, path, "deltas", e.deltas);
    e.lambdas = get_num_list_or(j, path, "lambdas", e.lambdas);
    e.perturb_drift = get_bool_or(j, path, "perturb_drift", e.perturb_drift);
    e.perturb_diffusion = get_bool_or(j, path, "perturb_diffusion", e.perturb_diffusion);
    e.driver_levels = get_num_list_or(j, path, "driver_levels", e.driver_levels);
    e.eps_list = get_num_list_or(j, path, "eps_list", e.eps_list);
    e.freqs = get_num_list_or(j, path, "freqs", e.freqs);
    e.amp = get_num_or(j, path, "amp", e.amp);
    e.init_a = get_num_or(j, path, "init_a", e.init_a);
    e.init_b = get_num_or(j, path, "init_b", e.init_b);
    e.slack = get_num_or(j, path, "slack", e.slack);
    e.t_long = get_num_or(j, path, "t_long", e.t_long);
    if (j.contains("other_initial"))
        e.other_initial = parse_initial(j.at("other_initial"), path + ".other_initial");
    if (j.contains("target_variance"))
        e.target_variance = get_num(j, path, "target_variance");
    e.x0 = get_num_or(j, path, "x0", e.x0);
    e.y0 = get_num_or(j, path, "y0", e.y0);
    e.v = get_num_or(j, path, "v", e.v);
    e.p = get_num_or(j, path, "p", e.p);
    e.f_name = get_str_or(j, path, "f", e.f_name);
    if (j.contains("snapshot_stride")) {
        const double d = get_num(j, path, "snapshot_stride");
        if (d < 0 || d != std::floor(d))
            throw ConfigError(path + ".snapshot_stride", "expected a nonnegative integer");
        e.snapshot_stride = static_cast<std::int64_t>(d);
    }
    if (j.contains("band_epsilon")) e.band_epsilon = get_num(j, path, "band_epsilon");
    if (j.contains("window")) {
        const double d = get_num(j, path, "window");
        if (d < 1 || d != std::floor(d)) throw ConfigError(path + ".window", "expected a count");
        e.window = static_cast<int>(d);
    }
    if (j.contains("driver")) e.driver = parse_driver(j.at("driver"), path + ".driver");
    if (j.contains("control")) e.control = parse_control(j.at("control"), path + ".control");
    return e;
}

}  // namespace

RunConfig parse_config(const json& root) {
    const json& j = root.is_object() && root.contains("config") ? root.at("config") : root;
    if (!j.is_object()) throw ConfigError("config", "expected a JSON object");

    RunConfig cfg;
    cfg.model = parse_model(member(j, "config", "model"), "model");

    const json& grid = member(j, "config", "grid");
    const double t_end = get_num(grid, "grid", "t_end");
    const double dt = get_num(grid, "grid", "dt");
    cfg.grid = TimeGrid::make(t_end, dt);

    if (j.contains("particles")) {
        const double d = get_num(j, "config", "particles");
        if (d < 1 || d != std::floor(d)) throw ConfigError("particles", "expected a count >= 1");
        cfg.particles = static_cast<std::size_t>(d);
    }
    if (j.contains("seed")) {
        const double d = get_num(j, "config", "seed");
        if (d < 0 || d != std::floor(d)) throw ConfigError("seed", "expected a nonnegative integer");
        cfg.seed = static_cast<std::uint64_t>(d);
    }
    cfg.output_dir = get_str_or(j, "config", "output_dir", cfg.output_dir);
    if (j.contains("experiment"))
        cfg.experiment = parse_experiment(j.at("experiment"), "experiment");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

nlohmann::ordered_json config_to_json(const RunConfig& cfg) {
    json j;
    j["model"] = {
        {"drift",
         {{"theta0", cfg.model.drift.theta0},
          {"theta1", cfg.model.drift.theta1},
          {"theta2", cfg.model.drift.theta2}}},
        {"diffusion",
         {{"eta0", cfg.model.diffusion.eta0},
          {"eta1", cfg.model.diffusion.eta1},
          {"eta2", cfg.model.diffusion.eta2},
          {"state_free", cfg.model.diffusion.state_free}}},
        {"noise_scale", cfg.model.noise_scale},
        {"constraint",
         {{"family", constraint_name(cfg.model.constraint.family)},
          {"param", cfg.model.constraint.param}}},
        {"initial", initial_to_json(cfg.model.initial)},
    };
    j["grid"] = {{"t_end", cfg.grid.t_end}, {"dt", cfg.grid.dt}};
    j["particles"] = cfg.particles;
    j["seed"] = cfg.seed;
    j["output_dir"] = cfg.output_dir;

    json e;
    e["sizes"] = cfg.experiment.sizes;
    e["n_ref"] = cfg.experiment.n_ref;
    e["tracked"] = cfg.experiment.tracked;
    e["base_point"] = cfg.experiment.base_point;
    e["deltas"] = cfg.experiment.deltas;
    e["lambdas"] = cfg.experiment.lambdas;
    e["perturb_drift"] = cfg.experiment.perturb_drift;
    e["perturb_diffusion"] = cfg.experiment.perturb_diffusion;
    e["driver_levels"] = cfg.experiment.driver_levels;
    e["eps_list"] = cfg.experiment.eps_list;
    e["freqs"] = cfg.experiment.freqs;
    e["amp"] = cfg.experiment.amp;
    e["init_a"] = cfg.experiment.init_a;
    e["init_b"] = cfg.experiment.init_b;
    e["slack"] = cfg.experiment.slack;
    e["t_long"] = cfg.experiment.t_long;
    e["other_initial"] = initial_to_json(cfg.experiment.other_initial);
    if (cfg.experiment.target_variance) e["target_variance"] = *cfg.experiment.target_variance;
    e["x0"] = cfg.experiment.x0;
    e["y0"] = cfg.experiment.y0;
    e["v"] = cfg.experiment.v;
    e["p"] = cfg.experiment.p;
    e["f"] = cfg.experiment.f_name;
    e["snapshot_stride"] = cfg.experiment.snapshot_stride;
    if (cfg.experiment.band_epsilon) e["band_epsilon"] = *cfg.experiment.band_epsilon;
    e["window"] = cfg.experiment.window;
    if (cfg.experiment.driver)
        e["driver"] = {{"a", driver_fn_to_json(cfg.experiment.driver->a)},
                       {"m", driver_fn_to_json(cfg.experiment.driver->m)}};
    if (cfg.experiment.control) e["control"] = control_to_json(*cfg.experiment.control);
    j["experiment"] = e;
    return j;
}

}  // namespace mrsim
