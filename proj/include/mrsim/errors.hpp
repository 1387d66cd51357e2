#pragma once

#include <stdexcept>
#include <string>

namespace mrsim {

/// Raised when a spec/config value is malformed or out of range.  `path()`
/// names the offending field in dotted form ("grid.dt", "model.constraint.param")
/// so the CLI can report exactly which entry to fix.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& what)
        : std::runtime_error(path.empty() ? what : path + ": " + what),
          path_(std::move(path)) {}

    explicit ConfigError(const std::string& what) : ConfigError("", what) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Raised when a computation produces a non-finite value or an iteration
/// fails to converge.  Always carries enough context (step index, quantity)
/// to locate the blow-up.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mrsim
