#pragma once

#include <cstdint>
#include <string>

namespace mrsim::rng {

/// Logical noise channels.  Keeping them distinct guarantees that the initial
/// sample, the Brownian increments and any auxiliary draws of one particle
/// never alias each other.
enum class Channel : std::uint64_t {
    initial_sample = 0,
    brownian = 1,
    auxiliary = 2,
};

/// Address of a single random variate.  Draws are pure functions of the key:
/// no generator state exists, so particle i / step k always sees the same
/// number regardless of evaluation order or worker count.  This is also what
/// makes coupled runs trivial — two simulations sharing a master seed share
/// Brownian increments particle by particle.
struct StreamKey {
    std::uint64_t master_seed = 0;
    std::uint64_t particle = 0;
    std::uint64_t step = 0;
    Channel channel = Channel::brownian;
};

/// Uniform variate in the open interval (0, 1).
double uniform(const StreamKey& key);

/// Standard normal variate, computed as the inverse normal CDF of the
/// uniform draw for the same key.
double gaussian(const StreamKey& key);

/// Inverse of the standard normal CDF (quantile function), accurate to full
/// double precision on (0, 1).  Exposed for direct testing.
double inverse_normal_cdf(double p);

/// One-dimensional initial law.
///   point:    all mass at a
///   gaussian: mean a, standard deviation b (b >= 0)
///   uniform:  uniform on [a, b] (a <= b)
struct InitialLawSpec {
    enum class Kind { point, gaussian, uniform };
    Kind kind = Kind::point;
    double a = 0.0;
    double b = 0.0;
};

/// Throws ConfigError when the parameters are non-finite or inconsistent.
/// `path` prefixes the offending field in error messages.
void validate(const InitialLawSpec& law, const std::string& path = "initial");

/// Draw one sample of the initial law addressed by `key` (the key's channel
/// is ignored and replaced by Channel::initial_sample).
double sample_initial(const InitialLawSpec& law, StreamKey key);

}  // namespace mrsim::rng
