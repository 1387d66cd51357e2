#include "mrsim/rng.hpp"

#include <cmath>
#include <limits>

#include "mrsim/errors.hpp"

namespace mrsim::rng {

namespace {

// splitmix64 finalizer: a full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Absorb the key fields one by one, remixing after each word.  Distinct keys
// yield independent-looking 64-bit words.
inline std::uint64_t hash_key(const StreamKey& key) {
    std::uint64_t h = mix64(key.master_seed);
    h = mix64(h ^ key.particle);
    h = mix64(h ^ key.step);
    h = mix64(h ^ static_cast<std::uint64_t>(key.channel));
    return h;
}

// Wichura's PPND16 rational approximations (relative error < 1e-15 on the
// whole open interval).
double ppnd16(double p) {
    static constexpr double A[8] = {
        3.3871328727963666080e0,  1.3314166789178437745e2,  1.9715909503065514427e3,
        1.3731693765509461125e4,  4.5921953931549871457e4,  6.7265770927008700853e4,
        3.3430575583588128105e4,  2.5090809287301226727e3};
    static constexpr double B[8] = {
        1.0,                      4.2313330701600911252e1,  6.8718700749205790830e2,
        5.3941960214247511077e3,  2.1213794301586595867e4,  3.9307895800092710610e4,
        2.8729085735721942674e4,  5.2264952788528545610e3};
    static constexpr double C[8] = {
        1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
        3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
        2.27238449892691845833e-2, 7.74545014278341407640e-4};
    static constexpr double D[8] = {
        1.0,                      2.05319162663775882187e0, 1.67638483018380384940e0,
        6.89767334985100004550e-1, 1.48103976427480074590e-1, 1.51986665636164571966e-2,
        5.47593808499534494600e-4, 1.05075007164441684324e-9};
    static constexpr double E[8] = {
        6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
        2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
        2.71155556874348757815e-5, 2.01033439929228813265e-7};
    static constexpr double F[8] = {
        1.0,                      5.99832206555887937690e-1, 1.36929880922735805310e-1,
        1.48753612908506148525e-2, 7.86869131145613259100e-4, 1.84631831751005468180e-5,
        1.42151175831644588870e-7, 2.04426310338993978564e-15};

    auto horner = [](const double (&c)[8], double x) {
        double r = c[7];
        for (int i = 6; i >= 0; --i) r = r * x + c[i];
        return r;
    };

    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * horner(A, r) / horner(B, r);
    }
    double r = q < 0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double z;
    if (r <= 5.0) {
        r -= 1.6;
        z = horner(C, r) / horner(D, r);
    } else {
        r -= 5.0;
        z = horner(E, r) / horner(F, r);
    }
    return q < 0 ? -z : z;
}

}  // namespace

double uniform(const StreamKey& key) {
    // 53 high bits shifted into (0,1); the +0.5 keeps both endpoints open.
    const std::uint64_t h = hash_key(key);
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

double gaussian(const StreamKey& key) { return ppnd16(uniform(key)); }

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw NumericalError("inverse_normal_cdf: argument outside (0,1)");
    return ppnd16(p);
}

void validate(const InitialLawSpec& law, const std::string& path) {
    if (!std::isfinite(law.a) || !std::isfinite(law.b))
        throw ConfigError(path, "initial-law parameters must be finite");
    switch (law.kind) {
        case InitialLawSpec::Kind::point:
            break;
        case InitialLawSpec::Kind::gaussian:
            if (law.b < 0.0) throw ConfigError(path + ".sd", "standard deviation must be >= 0");
            break;
        case InitialLawSpec::Kind::uniform:
            if (law.a > law.b) throw ConfigError(path + ".lo", "uniform law needs lo <= hi");
            break;
    }
}

double sample_initial(const InitialLawSpec& law, StreamKey key) {
    key.channel = Channel::initial_sample;
    switch (law.kind) {
        case InitialLawSpec::Kind::point:
            return law.a;
        case InitialLawSpec::Kind::gaussian:
            return law.a + law.b * gaussian(key);
        case InitialLawSpec::Kind::uniform:
            return law.a + (law.b - law.a) * uniform(key);
    }
    return law.a;  // unreachable
}

}  // namespace mrsim::rng
