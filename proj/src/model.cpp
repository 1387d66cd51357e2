#include "mrsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mrsim/errors.hpp"

namespace mrsim {

double ConstraintSpec::eval(double x) const {
    switch (family) {
        case Family::identity: return x;
        case Family::affine: return x - param;
        case Family::sine: return x + param * std::sin(x);
    }
    return x;
}

double ConstraintSpec::deriv(double x) const {
    switch (family) {
        case Family::identity:
        case Family::affine: return 1.0;
        case Family::sine: return 1.0 + param * std::cos(x);
    }
    return 1.0;
}

double ConstraintSpec::second_deriv(double x) const {
    return family == Family::sine ? -param * std::sin(x) : 0.0;
}

double ConstraintSpec::lower_slope() const {
    return family == Family::sine ? 1.0 - std::fabs(param) : 1.0;
}

double ConstraintSpec::upper_slope() const {
    return family == Family::sine ? 1.0 + std::fabs(param) : 1.0;
}

double ConstraintSpec::zero_of_h() const {
    // identity and sine vanish at 0; affine at c.
    return family == Family::affine ? param : 0.0;
}

double CoefficientSpec::lipschitz_bound() const {
    return std::fabs(drift.theta1) + std::fabs(drift.theta2) +
           std::fabs(diffusion.eta1) + std::fabs(diffusion.eta2);
}

DissipativityBounds CoefficientSpec::dissipativity() const {
    // Drift part: 2(x-y)(b(x,mu)-b(y,nu)) <= (2*theta1 + |theta2|)|x-y|^2
    //                                        + |theta2| W2^2.
    // Diffusion part (s = sqrt(eps)*sigma): |s(x,mu)-s(y,nu)|^2 splits into
    // the state and mean contributions with a Young balance when both are
    // present; with eta1 = 0 or eta2 = 0 the split below is exact.
    DissipativityBounds out;
    const double eps = noise_scale;
    const double e1 = std::fabs(diffusion.eta1);
    const double e2 = std::fabs(diffusion.eta2);
    out.c1 = std::fabs(drift.theta2) + eps * e2 * (e1 + e2);
    out.c2 = -2.0 * drift.theta1 - std::fabs(drift.theta2) - eps * e1 * (e1 + e2);
    out.valid = out.c2 > out.c1 && out.c1 >= 0.0;
    return out;
}

namespace {

void require_finite(double v, const std::string& path) {
    if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
}

}  // namespace

ModelDiagnostics validate(const CoefficientSpec& spec, const std::string& path) {
    require_finite(spec.drift.theta0, path + ".drift.theta0");
    require_finite(spec.drift.theta1, path + ".drift.theta1");
    require_finite(spec.drift.theta2, path + ".drift.theta2");
    require_finite(spec.diffusion.eta0, path + ".diffusion.eta0");
    require_finite(spec.diffusion.eta1, path + ".diffusion.eta1");
    require_finite(spec.diffusion.eta2, path + ".diffusion.eta2");
    require_finite(spec.noise_scale, path + ".noise_scale");
    require_finite(spec.constraint.param, path + ".constraint.param");

    if (spec.noise_scale < 0.0)
        throw ConfigError(path + ".noise_scale", "must be >= 0");
    if (spec.constraint.family == ConstraintSpec::Family::sine &&
        std::fabs(spec.constraint.param) >= 1.0)
        throw ConfigError(path + ".constraint.param",
                          "sine constraint needs |kappa| < 1 (h must stay strictly increasing)");
    if (spec.diffusion.state_free && spec.diffusion.eta1 != 0.0)
        throw ConfigError(path + ".diffusion.eta1",
                          "state_free diffusion requires eta1 == 0");
    rng::validate(spec.initial, path + ".initial");

    ModelDiagnostics diag;
    diag.lipschitz = spec.lipschitz_bound();
    diag.lower_slope = spec.constraint.lower_slope();
    diag.upper_slope = spec.constraint.upper_slope();
    diag.dissipativity = spec.dissipativity();

    // Spot-check E[h(xi)] with a fixed-key sample; a negative value is legal
    // (the initial ensemble gets projected) but worth surfacing.
    constexpr std::size_t kDraws = 10000;
    std::vector<double> hs(kDraws);
    for (std::size_t i = 0; i < kDraws; ++i) {
        rng::StreamKey key{0x5eedu, i, 0, rng::Channel::auxiliary};
        hs[i] = spec.constraint.eval(rng::sample_initial(spec.initial, key));
    }
    diag.initial_mean_h = pairwise_sum(hs) / static_cast<double>(kDraws);
    diag.initial_flagged = diag.initial_mean_h < 0.0;
    return diag;
}

double harnack_sigma_min(const CoefficientSpec& spec, HarnackMode mode, double box) {
    if (!(box > 0.0) || !std::isfinite(box))
        throw ConfigError("harnack.box", "must be a positive finite width");
    if (mode == HarnackMode::log_mode && spec.diffusion.eta2 != 0.0)
        throw ConfigError("model.diffusion.eta2",
                          "log-Harnack mode needs sigma = sigma(x) (eta2 == 0)");
    if (mode == HarnackMode::shift_mode && spec.diffusion.eta1 != 0.0)
        throw ConfigError("model.diffusion.eta1",
                          "shift-Harnack mode needs a state-free sigma (eta1 == 0)");

    const double scale = std::sqrt(spec.noise_scale);
    constexpr int kGrid = 4096;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i) {
        const double z = -box + 2.0 * box * static_cast<double>(i) / kGrid;
        const double s = mode == HarnackMode::log_mode ? spec.sigma_eval(z, 0.0)
                                                       : spec.sigma_eval(0.0, z);
        best = std::min(best, std::fabs(scale * s));
    }
    if (!(best > 0.0))
        throw ConfigError("model.diffusion",
                          "Harnack mode needs |sigma| bounded away from 0 on the scan box");
    return best;
}

}  // namespace mrsim
