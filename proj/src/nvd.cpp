#include "cbound/nvd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cbound {

NVDCurve sample_nvd(const SchemeConfig& cfg, int n) {
    if (n < 2) throw std::invalid_argument("sample_nvd: need at least 2 samples");
    NVDCurve curve;
    curve.scheme = cfg;
    curve.samples.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const double phi_c = static_cast<double>(k) / (n + 1.0);
        const StencilWindow w{{0.0, 0.0, phi_c, 1.0, 1.0}};
        curve.samples.push_back({phi_c, reconstruct_face(cfg, w)});
    }
    return curve;
}

CBCReport cbc_report(const NVDCurve& curve) {
    CBCReport rep;
    rep.curve = curve;
    double min_ratio = std::numeric_limits<double>::infinity();
    bool first = true;
    for (const auto& s : curve.samples) {
        if (first || s.phi_f > rep.max_phi_f) {
            rep.max_phi_f = s.phi_f;
            rep.argmax_phi_c = s.phi_c;
        }
        first = false;
        // non-positive face values impose no slope constraint
        if (s.phi_f > 0.0) {
            const double ratio = s.phi_c / s.phi_f;
            if (ratio < min_ratio) {
                min_ratio = ratio;
                rep.binding_phi_c = s.phi_c;
            }
        }
    }
    rep.c_max = std::min(1.0, min_ratio);
    rep.unconditional_violation = rep.max_phi_f > 1.0;
    return rep;
}

std::vector<ViolationInterval> CBCReport::violations_at(double c) const {
    return classify_violations(curve, c);
}

double analytic_cmax_thinc(double beta) {
    if (!(beta > 0.0)) throw std::domain_error("analytic_cmax_thinc: beta must be > 0");
    return std::sinh(beta) / (beta * std::exp(beta));
}

namespace {

// Collapses a per-sample predicate into maximal contiguous phi_c intervals.
void collect_intervals(const std::vector<NormalisedPair>& samples, CbcCondition tag,
                       const std::vector<bool>& flag, std::vector<ViolationInterval>& out) {
    const std::size_t n = samples.size();
    std::size_t i = 0;
    while (i < n) {
        if (!flag[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && flag[j + 1]) ++j;
        out.push_back({samples[i].phi_c, samples[j].phi_c, tag});
        i = j + 1;
    }
}

}  // namespace

std::vector<ViolationInterval> classify_violations(const NVDCurve& curve, double c) {
    if (!(c > 0.0 && c <= 1.0)) throw std::domain_error("classify_violations: c must lie in (0,1]");
    const auto& s = curve.samples;
    std::vector<bool> slope(s.size()), unity(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        slope[i] = c * s[i].phi_f > s[i].phi_c;
        unity[i] = s[i].phi_f > 1.0;
    }
    std::vector<ViolationInterval> out;
    collect_intervals(s, CbcCondition::SlopeCondition, slope, out);
    collect_intervals(s, CbcCondition::UnityCondition, unity, out);
    return out;
}

OneStepOutcome one_step_oracle(const SchemeConfig& cfg, double c, double phi_c,
                               int pad, double tol) {
    if (!(c > 0.0 && c <= 1.0)) throw std::domain_error("one_step_oracle: c must lie in (0,1]");
    if (!(phi_c > 0.0 && phi_c < 1.0)) throw std::domain_error("one_step_oracle: phi_c must lie in (0,1)");
    if (pad < 4) throw std::domain_error("one_step_oracle: pad must be >= 4");
    if (tol < 0.0) throw std::domain_error("one_step_oracle: tol must be >= 0");

    const int n = 2 * pad + 1;
    const int mid = pad;
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    v[static_cast<std::size_t>(mid)] = phi_c;
    for (int i = mid + 1; i < n; ++i) v[static_cast<std::size_t>(i)] = 1.0;

    // face j+1/2 needs cells j-2..j+2; cells outside the supported band keep
    // their constant value, so only the interior update is evaluated
    std::vector<double> face(static_cast<std::size_t>(n), 0.0);
    for (int j = 2; j <= n - 3; ++j) {
        const StencilWindow w{{v[static_cast<std::size_t>(j - 2)], v[static_cast<std::size_t>(j - 1)],
                               v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j + 1)],
                               v[static_cast<std::size_t>(j + 2)]}};
        face[static_cast<std::size_t>(j)] = reconstruct_face(cfg, w);
    }

    OneStepOutcome out;
    for (int j = 3; j <= n - 3; ++j) {
        const double updated = v[static_cast<std::size_t>(j)] -
                               c * (face[static_cast<std::size_t>(j)] - face[static_cast<std::size_t>(j - 1)]);
        const double over = updated - 1.0;
        const double under = -updated;
        out.max_overshoot = std::max(out.max_overshoot, over);
        out.max_undershoot = std::max(out.max_undershoot, under);
        if (over > tol || under > tol) {
            const double den = v[static_cast<std::size_t>(j + 1)] - v[static_cast<std::size_t>(j - 1)];
            if (std::abs(den) > 1e-14)
                out.violating_phi_c.push_back((v[static_cast<std::size_t>(j)] - v[static_cast<std::size_t>(j - 1)]) / den);
        }
    }
    out.max_overshoot = std::max(out.max_overshoot, 0.0);
    out.max_undershoot = std::max(out.max_undershoot, 0.0);
    out.bounded = out.max_overshoot <= tol && out.max_undershoot <= tol;
    return out;
}

}  // namespace cbound
