#include "cbound/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace cbound {

namespace {

BoundsReport scan(const std::vector<double>& values, double m, double M, double tol) {
    if (!(M > m)) throw std::invalid_argument("bounds_report: need M > m");
    if (tol < 0.0) throw std::invalid_argument("bounds_report: tol must be >= 0");
    BoundsReport rep;
    rep.lower_bound = m;
    rep.upper_bound = M;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double over = values[i] - M;
        const double under = m - values[i];
        rep.max_overshoot = std::max(rep.max_overshoot, over);
        rep.max_undershoot = std::max(rep.max_undershoot, under);
        if (over > tol)
            rep.violating_cells.push_back({static_cast<long>(i), over, std::nullopt});
        else if (under > tol)
            rep.violating_cells.push_back({static_cast<long>(i), under, std::nullopt});
    }
    rep.max_overshoot = std::max(rep.max_overshoot, 0.0);
    rep.max_undershoot = std::max(rep.max_undershoot, 0.0);
    rep.bounded = rep.max_overshoot <= tol && rep.max_undershoot <= tol;
    return rep;
}

}  // namespace

BoundsReport bounds_report(const Field1D& f, double m, double M, double tol) {
    return scan(f.values, m, M, tol);
}

BoundsReport bounds_report(const Field2D& f, double m, double M, double tol) {
    return scan(f.values, m, M, tol);
}

double l1_error(const Field1D& f, const Field1D& exact) {
    if (f.values.size() != exact.values.size() || f.grid.n_cells != exact.grid.n_cells ||
        f.grid.x_min != exact.grid.x_min || f.grid.x_max != exact.grid.x_max)
        throw std::invalid_argument("l1_error: fields live on different grids");
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double y = std::abs(f.values[i] - exact.values[i]) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum * f.grid.h();
}

ViolationTracker::ViolationTracker(double m, double M, double tol, double velocity)
    : m_(m), big_m_(M), tol_(tol), forward_(velocity >= 0.0) {
    if (!(M > m)) throw std::invalid_argument("ViolationTracker: need M > m");
}

void ViolationTracker::observe(const Field1D& before, const Field1D& after) {
    const int n = static_cast<int>(after.values.size());
    if (seen_.empty()) seen_.assign(after.values.size(), 0);
    for (int i = 0; i < n; ++i) {
        if (seen_[static_cast<std::size_t>(i)]) continue;
        const double v = after.values[static_cast<std::size_t>(i)];
        const double excess = std::max(v - big_m_, m_ - v);
        if (excess <= tol_) continue;
        seen_[static_cast<std::size_t>(i)] = 1;
        // phi_tilde from the pre-step field, oriented with the flow
        const int prev = forward_ ? i - 1 : i + 1;
        const int next = forward_ ? i + 1 : i - 1;
        auto wrapv = [&](int k) {
            k %= n;
            return before.values[static_cast<std::size_t>(k < 0 ? k + n : k)];
        };
        const double den = wrapv(next) - wrapv(prev);
        std::optional<double> pt;
        if (std::abs(den) > 1e-14)
            pt = (before.values[static_cast<std::size_t>(i)] - wrapv(prev)) / den;
        cells_.push_back({i, excess, pt});
    }
}

StepObserver1D ViolationTracker::observer() {
    return [this](const Field1D& before, const Field1D& after) { observe(before, after); };
}

BoundsReport ViolationTracker::report(const Field1D& final_field) const {
    BoundsReport rep = bounds_report(final_field, m_, big_m_, tol_);
    rep.violating_cells = cells_;
    return rep;
}

}  // namespace cbound
