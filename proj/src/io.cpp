#include "mrsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrsim::io {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out += ',';
        out += format_g17(v);
        first = false;
    }
    out += '\n';
}

}  // namespace

std::string path_csv(const PathRecord& record) {
    std::string out = "t,K,dK,mean_h,mean,var\n";
    for (const auto& r : record.rows) append_row(out, {r.t, r.k, r.dk, r.mean_h, r.mean, r.var});
    return out;
}

void write_path_csv(const std::string& path, const PathRecord& record) {
    write_text(path, path_csv(record));
}

std::string rate_csv(const experiments::RateTable& table, const std::string& x_name,
                     const std::string& y_name) {
    std::string out = x_name + "," + y_name + "\n";
    for (const auto& r : table.rows) append_row(out, {r.x, r.y});
    return out;
}

void write_rate_csv(const std::string& path, const experiments::RateTable& table,
                    const std::string& x_name, const std::string& y_name) {
    write_text(path, rate_csv(table, x_name, y_name));
}

std::string density_csv(const density::DensityEstimate& est) {
    std::string out = "t,numerator,denominator,active,k\n";
    for (const auto& r : est.rows) {
        out += format_g17(r.t);
        out += ',';
        out += format_g17(r.numerator);
        out += ',';
        out += format_g17(r.denominator);
        out += ',';
        out += r.active ? '1' : '0';
        out += ',';
        out += format_g17(r.k);
        out += '\n';
    }
    return out;
}

void write_density_csv(const std::string& path, const density::DensityEstimate& est) {
    write_text(path, density_csv(est));
}

std::string contraction_csv(const experiments::ContractionResult& result) {
    std::string out = "t,w2_sq,bound\n";
    for (const auto& r : result.series) append_row(out, {r.t, r.w2_sq, r.bound});
    return out;
}

void write_contraction_csv(const std::string& path,
                           const experiments::ContractionResult& result) {
    write_text(path, contraction_csv(result));
}

std::string weak_control_csv(const std::vector<experiments::WeakControlRow>& rows) {
    std::string out = "freq,sup_error,action\n";
    for (const auto& r : rows) append_row(out, {r.freq, r.sup_error, r.action});
    return out;
}

void write_weak_control_csv(const std::string& path,
                            const std::vector<experiments::WeakControlRow>& rows) {
    write_text(path, weak_control_csv(rows));
}

nlohmann::ordered_json make_summary(const std::string& experiment, const RunConfig& cfg,
                                    nlohmann::ordered_json results) {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["config"] = config_to_json(cfg);
    j["results"] = std::move(results);
    return j;
}

void write_summary_json(const std::string& path, const nlohmann::ordered_json& summary) {
    write_text(path, summary.dump(2) + "\n");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace mrsim::io
