#include "cbound/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cbound {

SchemeConfig SchemeConfig::upwind() {
    SchemeConfig cfg;
    cfg.kind = SchemeKind::Upwind1;
    return cfg;
}

SchemeConfig SchemeConfig::thinc(double beta) {
    SchemeConfig cfg;
    cfg.kind = SchemeKind::ThincOriginal;
    cfg.beta = beta;
    cfg.validate();
    return cfg;
}

SchemeConfig SchemeConfig::thinc_clipped(double beta, double slope) {
    SchemeConfig cfg;
    cfg.kind = SchemeKind::ThincClipped;
    cfg.beta = beta;
    cfg.clip_slope = slope;
    cfg.validate();
    return cfg;
}

SchemeConfig SchemeConfig::weno_js(double eps) {
    SchemeConfig cfg;
    cfg.kind = SchemeKind::WenoJS5;
    cfg.epsilon = eps;
    cfg.validate();
    return cfg;
}

SchemeConfig SchemeConfig::weno_z(double eps) {
    SchemeConfig cfg;
    cfg.kind = SchemeKind::WenoZ5;
    cfg.epsilon = eps;
    cfg.validate();
    return cfg;
}

SchemeConfig SchemeConfig::teno(double ct, double eps) {
    SchemeConfig cfg;
    cfg.kind = SchemeKind::Teno5;
    cfg.ct = ct;
    cfg.epsilon = eps;
    cfg.validate();
    return cfg;
}

void SchemeConfig::validate() const {
    if (!(beta > 0.0)) throw std::invalid_argument("scheme config: beta must be > 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("scheme config: epsilon must be > 0");
    if (!(ct > 0.0 && ct < 1.0)) throw std::invalid_argument("scheme config: ct must lie in (0,1)");
    if (!(clip_slope > 0.0)) throw std::invalid_argument("scheme config: clip_slope must be > 0");
    if (q_teno < 1) throw std::invalid_argument("scheme config: q_teno must be a positive integer");
    double sum = 0.0;
    for (double dk : d) {
        if (dk < 0.0) throw std::invalid_argument("scheme config: ideal weights must be nonnegative");
        sum += dk;
    }
    if (std::abs(sum - 1.0) > 1e-15) throw std::invalid_argument("scheme config: ideal weights must sum to 1");
    if (kind == SchemeKind::Teno5 && ct >= 1.0 / 3.0)
        throw std::invalid_argument("scheme config: TENO cutoff must be < 1/3");
}

std::string SchemeConfig::name() const {
    switch (kind) {
        case SchemeKind::Upwind1: return "upwind";
        case SchemeKind::ThincOriginal: return "thinc";
        case SchemeKind::ThincClipped: return "thinc-clipped";
        case SchemeKind::WenoJS5: return "weno-js";
        case SchemeKind::WenoZ5: return "weno-z";
        case SchemeKind::Teno5: return "teno";
    }
    return "unknown";
}

std::optional<double> normalise_window(const StencilWindow& w, double tol) {
    const double den = w[3] - w[1];
    if (!(std::abs(den) > tol)) return std::nullopt;
    return (w[2] - w[1]) / den;
}

double thinc_nvd(double beta, double phi_c) {
    if (!(beta > 0.0)) throw std::domain_error("thinc_nvd: beta must be > 0");
    if (!(phi_c >= 0.0 && phi_c <= 1.0)) throw std::domain_error("thinc_nvd: phi_c must lie in [0,1]");
    const double sh = std::sinh(beta);
    return (sh + std::cosh(beta) - std::exp(beta * (-2.0 * phi_c + 1.0))) / (2.0 * sh);
}

double clipped_thinc_nvd(double beta, double clip_slope, double phi_c) {
    if (!(clip_slope > 0.0)) throw std::domain_error("clipped_thinc_nvd: clip_slope must be > 0");
    return std::min(thinc_nvd(beta, phi_c), clip_slope * phi_c);
}

std::array<double, 3> smoothness_indicators(const StencilWindow& w) {
    const double v0 = w[0], v1 = w[1], v2 = w[2], v3 = w[3], v4 = w[4];
    const double c0 = v0 - 2.0 * v1 + v2;
    const double c1 = v1 - 2.0 * v2 + v3;
    const double c2 = v2 - 2.0 * v3 + v4;
    const double s0 = v0 - 4.0 * v1 + 3.0 * v2;
    const double s1 = v1 - v3;
    const double s2 = 3.0 * v2 - 4.0 * v3 + v4;
    constexpr double k = 13.0 / 12.0;
    return {k * c0 * c0 + 0.25 * s0 * s0,
            k * c1 * c1 + 0.25 * s1 * s1,
            k * c2 * c2 + 0.25 * s2 * s2};
}

std::array<double, 3> candidate_reconstructions(const StencilWindow& w) {
    const double v0 = w[0], v1 = w[1], v2 = w[2], v3 = w[3], v4 = w[4];
    return {v0 / 3.0 - 7.0 / 6.0 * v1 + 11.0 / 6.0 * v2,
            -v1 / 6.0 + 5.0 / 6.0 * v2 + v3 / 3.0,
            v2 / 3.0 + 5.0 / 6.0 * v3 - v4 / 6.0};
}

namespace {

WeightTriple normalised(std::array<double, 3> alpha) {
    const double sum = alpha[0] + alpha[1] + alpha[2];
    return {{alpha[0] / sum, alpha[1] / sum, alpha[2] / sum}};
}

}  // namespace

WeightTriple weights_js(const std::array<double, 3>& is_vals, const SchemeConfig& cfg) {
    std::array<double, 3> alpha;
    for (int k = 0; k < 3; ++k) {
        const double g = is_vals[static_cast<std::size_t>(k)] + cfg.epsilon;
        alpha[static_cast<std::size_t>(k)] = cfg.d[static_cast<std::size_t>(k)] / (g * g);
    }
    return normalised(alpha);
}

WeightTriple weights_z(const std::array<double, 3>& is_vals, const SchemeConfig& cfg) {
    const double tau5 = std::abs(is_vals[0] - is_vals[2]);
    std::array<double, 3> alpha;
    for (int k = 0; k < 3; ++k) {
        const double r = tau5 / (is_vals[static_cast<std::size_t>(k)] + cfg.epsilon);
        alpha[static_cast<std::size_t>(k)] = cfg.d[static_cast<std::size_t>(k)] * (1.0 + r * r);
    }
    return normalised(alpha);
}

WeightTriple weights_teno(const std::array<double, 3>& is_vals, const SchemeConfig& cfg) {
    if (cfg.ct >= 1.0 / 3.0) throw std::invalid_argument("weights_teno: cutoff must be < 1/3");
    const double tau5 = std::abs(is_vals[0] - is_vals[2]);
    std::array<double, 3> gamma;
    for (int k = 0; k < 3; ++k) {
        const double base = cfg.c_teno + tau5 / (is_vals[static_cast<std::size_t>(k)] + cfg.epsilon);
        gamma[static_cast<std::size_t>(k)] = std::pow(base, cfg.q_teno);
    }
    const double gsum = gamma[0] + gamma[1] + gamma[2];
    std::array<double, 3> cut;
    for (int k = 0; k < 3; ++k)
        cut[static_cast<std::size_t>(k)] =
            (gamma[static_cast<std::size_t>(k)] / gsum < cfg.ct) ? 0.0 : cfg.d[static_cast<std::size_t>(k)];
    return normalised(cut);
}

namespace {

double thinc_face(const SchemeConfig& cfg, const StencilWindow& w) {
    double mag = 0.0;
    for (double v : w.v) mag = std::max(mag, std::abs(v));
    const auto phi_c = normalise_window(w, 1e-14 * mag);
    if (!phi_c || !(*phi_c > 0.0 && *phi_c < 1.0)) return w[2];  // upwind fallback
    const double f = cfg.kind == SchemeKind::ThincClipped
                         ? clipped_thinc_nvd(cfg.beta, cfg.clip_slope, *phi_c)
                         : thinc_nvd(cfg.beta, *phi_c);
    return w[1] + (w[3] - w[1]) * f;
}

}  // namespace

double reconstruct_face(const SchemeConfig& cfg, const StencilWindow& w) {
    switch (cfg.kind) {
        case SchemeKind::Upwind1:
            return w[2];
        case SchemeKind::ThincOriginal:
        case SchemeKind::ThincClipped:
            return thinc_face(cfg, w);
        default:
            break;
    }
    const auto is_vals = smoothness_indicators(w);
    WeightTriple wt;
    switch (cfg.kind) {
        case SchemeKind::WenoJS5: wt = weights_js(is_vals, cfg); break;
        case SchemeKind::WenoZ5: wt = weights_z(is_vals, cfg); break;
        default: wt = weights_teno(is_vals, cfg); break;
    }
    const auto cand = candidate_reconstructions(w);
    return wt.w[0] * cand[0] + wt.w[1] * cand[1] + wt.w[2] * cand[2];
}

}  // namespace cbound
