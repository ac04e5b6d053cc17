#ifndef CBOUND_NVD_HPP
#define CBOUND_NVD_HPP

#include <vector>

#include "cbound/schemes.hpp"

namespace cbound {

// Normalised variable diagram of one scheme across the isolated-discontinuity
// window family (0, 0, phi_tilde, 1, 1).
struct NVDCurve {
    SchemeConfig scheme;
    std::vector<NormalisedPair> samples;  // phi_c strictly increasing, in (0,1)
};

enum class CbcCondition {
    SlopeCondition,  // c * phi_f > phi_c
    UnityCondition,  // phi_f > 1
};

// Maximal contiguous phi_tilde interval over which one condition is violated.
struct ViolationInterval {
    double lo;
    double hi;
    CbcCondition condition;
};

// Convection-boundedness verdict for one sampled curve. The slope condition
// phi_f <= phi_c / c determines c_max; phi_f > 1 anywhere means no CFL choice
// can restore boundedness.
struct CBCReport {
    double c_max = 1.0;
    bool unconditional_violation = false;
    double max_phi_f = 0.0;
    double argmax_phi_c = 0.0;   // sample where phi_f peaks
    double binding_phi_c = 0.0;  // sample where phi_c/phi_f attains its minimum
    NVDCurve curve;

    std::vector<ViolationInterval> violations_at(double c) const;
};

// Samples phi_tilde = k/(n+1), k = 1..n; the window is already normalised so
// the reconstructed face value is phi_tilde_{i+1/2} directly.
NVDCurve sample_nvd(const SchemeConfig& cfg, int n);

CBCReport cbc_report(const NVDCurve& curve);

// Closed-form maximum CFL for the original THINC profile: the NVD curve is
// concave with f(0) = 0, so min phi/f(phi) = 1/f'(0) = sinh(b)/(b e^b).
double analytic_cmax_thinc(double beta);

std::vector<ViolationInterval> classify_violations(const NVDCurve& curve, double c);

struct OneStepOutcome {
    bool bounded = true;
    double max_overshoot = 0.0;
    double max_undershoot = 0.0;
    std::vector<double> violating_phi_c;  // pre-step phi_tilde of each violating cell
};

// Brute-force check of one explicit Euler update on the profile
// (0,...,0, phi_c, 1,...,1) with `pad` constant cells on each side.
// Reports boundedness against [0,1] with tolerance tol.
OneStepOutcome one_step_oracle(const SchemeConfig& cfg, double c, double phi_c,
                               int pad = 6, double tol = 1e-10);

}  // namespace cbound

#endif
