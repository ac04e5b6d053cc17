#ifndef CBOUND_SOLVER_HPP
#define CBOUND_SOLVER_HPP

#include <functional>
#include <utility>
#include <vector>

#include "cbound/schemes.hpp"

namespace cbound {

struct Grid1D {
    int n_cells;
    double x_min;
    double x_max;

    double h() const { return (x_max - x_min) / n_cells; }
    double x_center(int i) const { return x_min + (i + 0.5) * h(); }
};

struct Field1D {
    Grid1D grid;
    std::vector<double> values;  // cell averages
    double time = 0.0;
};

enum class TimeIntegrator {
    EulerForward,
    SspRk3,
};

struct SolverConfig1D {
    SchemeConfig scheme;
    double cfl = 0.4;
    TimeIntegrator integrator = TimeIntegrator::EulerForward;
    double end_time = 0.1;
    double velocity = 1.0;  // constant advection speed, nonzero
};

// Called after every completed time step with the pre- and post-step fields.
using StepObserver1D = std::function<void(const Field1D& before, const Field1D& after)>;

// Exact cell averages of the indicator of [-0.4, 0.4].
Field1D init_square_wave(const Grid1D& grid);

// One nominal step (dt = cfl h / |u|) on the periodic grid; upwind-oriented
// windows are mirrored for u < 0.
Field1D step_1d(const Field1D& f, const SolverConfig1D& cfg);

// Steps until end_time, shortening the last step to land on it exactly.
Field1D run_advection_1d(const SolverConfig1D& cfg, const Grid1D& grid,
                         const StepObserver1D& observer = {});

// Exact cell averages of the square wave translated by u t with periodic wrap.
Field1D exact_advection_1d(const Grid1D& grid, double u, double t);

double total_mass(const Field1D& f);  // sum of v h (compensated)

struct Grid2D {
    int nx;
    int ny;
    double x_min, x_max;
    double y_min, y_max;

    double dx() const { return (x_max - x_min) / nx; }
    double dy() const { return (y_max - y_min) / ny; }
    double x_center(int i) const { return x_min + (i + 0.5) * dx(); }
    double y_center(int j) const { return y_min + (j + 0.5) * dy(); }
};

struct Field2D {
    Grid2D grid;
    std::vector<double> values;  // idx = j * nx + i
    double time = 0.0;

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.nx) + static_cast<std::size_t>(i)]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.nx) + static_cast<std::size_t>(i)]; }
};

// Solid-body rotation about (x0, y0) with angular velocity omega.
struct RotationSpec {
    double omega = 2.0 * 3.14159265358979323846;
    double x0 = 0.5;
    double y0 = 0.5;
};

std::pair<double, double> rotation_velocity(const RotationSpec& spec, double x, double y);

struct SolverConfig2D {
    SchemeConfig scheme;
    double cfl = 0.4;
    TimeIntegrator integrator = TimeIntegrator::EulerForward;
    double end_time = 1.0;
    RotationSpec rotation;
};

using StepObserver2D = std::function<void(const Field2D& before, const Field2D& after)>;

// Slotted-disk indicator, 4x4 subcell sampling per cell.
Field2D init_zalesak(const Grid2D& grid);

// One unsplit conservative step; face velocities are evaluated analytically at
// face centers (discretely divergence-free for solid-body rotation).
Field2D step_2d(const Field2D& f, const SolverConfig2D& cfg, double dt);

// Integrates the slotted disk to end_time (one revolution = 2 pi / omega);
// dt = cfl / (max|u|/dx + max|v|/dy), last step shortened.
Field2D run_zalesak(const SolverConfig2D& cfg, const Grid2D& grid,
                    const StepObserver2D& observer = {});

// As run_zalesak but starting from the given field.
Field2D run_rotation(const SolverConfig2D& cfg, Field2D initial,
                     const StepObserver2D& observer = {});

double total_mass(const Field2D& f);  // sum of v dx dy (compensated)

}  // namespace cbound

#endif
