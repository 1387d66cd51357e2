#pragma once

#include <string>

#include <json.hpp>

#include "mrsim/config.hpp"
#include "mrsim/density.hpp"
#include "mrsim/experiments.hpp"
#include "mrsim/scheme.hpp"

namespace mrsim::io {

// Shortest decimal string that round-trips a double (printf "%.17g").
std::string format_g17(double x);

std::string path_csv(const PathRecord& record);
void write_path_csv(const std::string& path, const PathRecord& record);

std::string rate_csv(const experiments::RateTable& table, const std::string& x_name,
                     const std::string& y_name);
void write_rate_csv(const std::string& path, const experiments::RateTable& table,
                    const std::string& x_name, const std::string& y_name);

std::string density_csv(const density::DensityEstimate& est);
void write_density_csv(const std::string& path, const density::DensityEstimate& est);

std::string contraction_csv(const experiments::ContractionResult& result);
void write_contraction_csv(const std::string& path,
                           const experiments::ContractionResult& result);

std::string weak_control_csv(const std::vector<experiments::WeakControlRow>& rows);
void write_weak_control_csv(const std::string& path,
                            const std::vector<experiments::WeakControlRow>& rows);

// Summary layout: {"experiment": ..., "config": <echo>, "results": ...}.  The
// config echo parses back through load_config, so a summary can be replayed.
nlohmann::ordered_json make_summary(const std::string& experiment, const RunConfig& cfg,
                                    nlohmann::ordered_json results);
void write_summary_json(const std::string& path, const nlohmann::ordered_json& summary);

void write_text(const std::string& path, const std::string& text);

}  // namespace mrsim::io
