#ifndef CBOUND_SCHEMES_HPP
#define CBOUND_SCHEMES_HPP

#include <array>
#include <optional>
#include <string>

namespace cbound {

// Five consecutive cell averages feeding one face reconstruction,
// ordered (phi_{i-2}, phi_{i-1}, phi_i, phi_{i+1}, phi_{i+2}).
struct StencilWindow {
    std::array<double, 5> v;

    double operator[](int k) const { return v[static_cast<std::size_t>(k)]; }
};

enum class SchemeKind {
    Upwind1,
    ThincOriginal,
    ThincClipped,
    WenoJS5,
    WenoZ5,
    Teno5,
};

// Tagged scheme selector plus every tunable the reconstruction kernels read.
// Use the factory functions; validate() throws std::invalid_argument on bad
// parameter combinations.
struct SchemeConfig {
    SchemeKind kind = SchemeKind::Upwind1;
    double beta = 2.0;                       // THINC steepness
    double epsilon = 1e-16;                  // division guard in the weight formulas
    double c_teno = 1.0;                     // TENO C
    int q_teno = 6;                          // TENO q
    double ct = 1e-5;                        // TENO cutoff C_T
    std::array<double, 3> d = {0.1, 0.6, 0.3};  // ideal weights, upwind-biased face
    double clip_slope = 2.5;                 // slope of the THINC clipping line

    static SchemeConfig upwind();
    static SchemeConfig thinc(double beta);
    static SchemeConfig thinc_clipped(double beta, double slope = 2.5);
    static SchemeConfig weno_js(double eps = 1e-16);
    static SchemeConfig weno_z(double eps = 1e-16);
    static SchemeConfig teno(double ct, double eps = 1e-16);

    void validate() const;
    std::string name() const;
};

struct WeightTriple {
    std::array<double, 3> w;
};

// (phi_tilde_i, phi_tilde_{i+1/2}) sample of a normalised variable diagram.
struct NormalisedPair {
    double phi_c;
    double phi_f;
};

// Normalised cell value (v2 - v1)/(v3 - v1); empty when the denominator
// magnitude is at or below tol.
std::optional<double> normalise_window(const StencilWindow& w, double tol);

// Closed-form THINC face value in normalised variables,
// (sinh b + cosh b - exp(b(1 - 2 phi)))/(2 sinh b).
// Throws std::domain_error unless beta > 0 and phi_c in [0,1].
double thinc_nvd(double beta, double phi_c);

// min(thinc_nvd, clip_slope * phi_c); same domain checks.
double clipped_thinc_nvd(double beta, double clip_slope, double phi_c);

// Jiang-Shu smoothness indicators (IS_0, IS_1, IS_2) of the three
// 3-cell substencils; zero exactly on constant substencils.
std::array<double, 3> smoothness_indicators(const StencilWindow& w);

// Third-order candidate face values from the three substencils.
std::array<double, 3> candidate_reconstructions(const StencilWindow& w);

WeightTriple weights_js(const std::array<double, 3>& is_vals, const SchemeConfig& cfg);
WeightTriple weights_z(const std::array<double, 3>& is_vals, const SchemeConfig& cfg);
// Throws std::invalid_argument for ct >= 1/3 (largest chi_k is always >= 1/3,
// so smaller cutoffs can never cut every stencil).
WeightTriple weights_teno(const std::array<double, 3>& is_vals, const SchemeConfig& cfg);

// Face value phi_{i+1/2} for a left-biased (u > 0) window. THINC kinds fall
// back to first-order upwind when the window is non-monotone or degenerate.
double reconstruct_face(const SchemeConfig& cfg, const StencilWindow& w);

}  // namespace cbound

#endif
