#ifndef CBOUND_METRICS_HPP
#define CBOUND_METRICS_HPP

#include <optional>
#include <vector>

#include "cbound/solver.hpp"

namespace cbound {

struct ViolatingCell {
    long cell;      // flat cell index
    double excess;  // distance past the violated bound
    std::optional<double> phi_tilde;  // pre-step normalised value, when computable
};

struct BoundsReport {
    double lower_bound;
    double upper_bound;
    double max_overshoot = 0.0;
    double max_undershoot = 0.0;
    bool bounded = true;
    std::vector<ViolatingCell> violating_cells;
};

BoundsReport bounds_report(const Field1D& f, double m, double M, double tol = 1e-10);
BoundsReport bounds_report(const Field2D& f, double m, double M, double tol = 1e-10);

// Integral L1 distance, sum |a - b| h. Throws std::invalid_argument on
// mismatched grids.
double l1_error(const Field1D& f, const Field1D& exact);

// Step observer that records, per cell, the pre-step normalised value
// phi_tilde at the first step the cell leaves [m - tol, M + tol]. Neighbour
// orientation follows the sign of the advection velocity.
class ViolationTracker {
  public:
    ViolationTracker(double m, double M, double tol, double velocity);

    void observe(const Field1D& before, const Field1D& after);

    StepObserver1D observer();

    // Merges the tracked first-violation phi_tilde values into a bounds report
    // of the final field.
    BoundsReport report(const Field1D& final_field) const;

    const std::vector<ViolatingCell>& first_violations() const { return cells_; }

  private:
    double m_, big_m_, tol_;
    bool forward_;
    std::vector<ViolatingCell> cells_;
    std::vector<char> seen_;
};

}  // namespace cbound

#endif
