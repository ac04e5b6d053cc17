#include <cmath>
#include <stdexcept>

#include "cbound/solver.hpp"

namespace cbound {

namespace {

inline int wrap(int i, int n) {
    i %= n;
    return i < 0 ? i + n : i;
}

// Face velocities depend on one coordinate only for solid-body rotation, so
// they are tabulated once per run: u at (x_{i+1/2}, y_j) varies with j,
// v at (x_i, y_{j+1/2}) varies with i.
struct FaceVelocities {
    std::vector<double> u;  // size ny, indexed by row j
    std::vector<double> v;  // size nx, indexed by column i

    static FaceVelocities make(const Grid2D& g, const RotationSpec& rot) {
        FaceVelocities fv;
        fv.u.resize(static_cast<std::size_t>(g.ny));
        fv.v.resize(static_cast<std::size_t>(g.nx));
        for (int j = 0; j < g.ny; ++j)
            fv.u[static_cast<std::size_t>(j)] = -rot.omega * (g.y_center(j) - rot.y0);
        for (int i = 0; i < g.nx; ++i)
            fv.v[static_cast<std::size_t>(i)] = rot.omega * (g.x_center(i) - rot.x0);
        return fv;
    }
};

std::vector<double> euler_update_2d(const Field2D& f, const SchemeConfig& scheme,
                                    const FaceVelocities& fv, double dt) {
    const Grid2D& g = f.grid;
    const int nx = g.nx, ny = g.ny;
    const double rx = dt / g.dx();
    const double ry = dt / g.dy();

    std::vector<double> flux_x(f.values.size());  // F at face (i+1/2, j)
    for (int j = 0; j < ny; ++j) {
        const double u = fv.u[static_cast<std::size_t>(j)];
        for (int i = 0; i < nx; ++i) {
            StencilWindow w{};
            if (u >= 0.0) {
                for (int k = 0; k < 5; ++k)
                    w.v[static_cast<std::size_t>(k)] = f.at(wrap(i - 2 + k, nx), j);
            } else {
                for (int k = 0; k < 5; ++k)
                    w.v[static_cast<std::size_t>(k)] = f.at(wrap(i + 3 - k, nx), j);
            }
            flux_x[static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i)] =
                u * reconstruct_face(scheme, w);
        }
    }

    std::vector<double> flux_y(f.values.size());  // G at face (i, j+1/2)
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double v = fv.v[static_cast<std::size_t>(i)];
            StencilWindow w{};
            if (v >= 0.0) {
                for (int k = 0; k < 5; ++k)
                    w.v[static_cast<std::size_t>(k)] = f.at(i, wrap(j - 2 + k, ny));
            } else {
                for (int k = 0; k < 5; ++k)
                    w.v[static_cast<std::size_t>(k)] = f.at(i, wrap(j + 3 - k, ny));
            }
            flux_y[static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i)] =
                v * reconstruct_face(scheme, w);
        }
    }

    std::vector<double> out(f.values.size());
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t c = static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
            const std::size_t xl = static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(wrap(i - 1, nx));
            const std::size_t yl = static_cast<std::size_t>(wrap(j - 1, ny)) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
            out[c] = f.values[c] - rx * (flux_x[c] - flux_x[xl]) - ry * (flux_y[c] - flux_y[yl]);
        }
    }
    return out;
}

std::vector<double> step_values_2d(const Field2D& f, const SolverConfig2D& cfg,
                                   const FaceVelocities& fv, double dt) {
    if (cfg.integrator == TimeIntegrator::EulerForward)
        return euler_update_2d(f, cfg.scheme, fv, dt);
    Field2D stage = f;
    stage.values = euler_update_2d(f, cfg.scheme, fv, dt);
    auto s2 = euler_update_2d(stage, cfg.scheme, fv, dt);
    for (std::size_t i = 0; i < s2.size(); ++i) s2[i] = 0.75 * f.values[i] + 0.25 * s2[i];
    stage.values = std::move(s2);
    auto s3 = euler_update_2d(stage, cfg.scheme, fv, dt);
    for (std::size_t i = 0; i < s3.size(); ++i) s3[i] = f.values[i] / 3.0 + 2.0 / 3.0 * s3[i];
    return s3;
}

}  // namespace

std::pair<double, double> rotation_velocity(const RotationSpec& spec, double x, double y) {
    return {-spec.omega * (y - spec.y0), spec.omega * (x - spec.x0)};
}

Field2D init_zalesak(const Grid2D& grid) {
    Field2D f{grid, std::vector<double>(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny)), 0.0};
    constexpr int sub = 4;
    constexpr double r2 = 0.15 * 0.15;
    const double dx = grid.dx(), dy = grid.dy();
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            int inside = 0;
            for (int sj = 0; sj < sub; ++sj) {
                const double y = grid.y_min + (j + (sj + 0.5) / sub) * dy;
                for (int si = 0; si < sub; ++si) {
                    const double x = grid.x_min + (i + (si + 0.5) / sub) * dx;
                    const bool disk = (x - 0.5) * (x - 0.5) + (y - 0.75) * (y - 0.75) <= r2;
                    const bool slot = std::abs(x - 0.5) < 0.025 && y < 0.85;
                    if (disk && !slot) ++inside;
                }
            }
            f.at(i, j) = inside / static_cast<double>(sub * sub);
        }
    }
    return f;
}

Field2D step_2d(const Field2D& f, const SolverConfig2D& cfg, double dt) {
    const auto fv = FaceVelocities::make(f.grid, cfg.rotation);
    Field2D out{f.grid, step_values_2d(f, cfg, fv, dt), f.time + dt};
    return out;
}

Field2D run_rotation(const SolverConfig2D& cfg, Field2D initial, const StepObserver2D& observer) {
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw std::invalid_argument("run_rotation: cfl must lie in (0,1]");
    if (!(cfg.end_time > 0.0)) throw std::invalid_argument("run_rotation: end_time must be > 0");

    const Grid2D& g = initial.grid;
    const auto fv = FaceVelocities::make(g, cfg.rotation);
    double umax = 0.0, vmax = 0.0;
    for (double u : fv.u) umax = std::max(umax, std::abs(u));
    for (double v : fv.v) vmax = std::max(vmax, std::abs(v));
    const double rate = umax / g.dx() + vmax / g.dy();
    if (!(rate > 0.0)) throw std::invalid_argument("run_rotation: velocity field is identically zero");
    const double dt_nominal = cfg.cfl / rate;

    Field2D f = std::move(initial);
    double t = f.time;
    const double t_eps = 1e-12 * std::max(1.0, cfg.end_time);
    while (t < cfg.end_time - t_eps) {
        const double dt = std::min(dt_nominal, cfg.end_time - t);
        Field2D next{g, step_values_2d(f, cfg, fv, dt), t + dt};
        if (observer) observer(f, next);
        f = std::move(next);
        t = f.time;
    }
    f.time = cfg.end_time;
    return f;
}

Field2D run_zalesak(const SolverConfig2D& cfg, const Grid2D& grid, const StepObserver2D& observer) {
    return run_rotation(cfg, init_zalesak(grid), observer);
}

double total_mass(const Field2D& f) {
    double sum = 0.0, comp = 0.0;
    for (double v : f.values) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum * f.grid.dx() * f.grid.dy();
}

}  // namespace cbound
