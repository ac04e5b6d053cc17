// cbound: convection-boundedness diagnostics for reconstruction schemes.
//
// Subcommands
//   nvd       sample a scheme's normalised variable diagram to CSV
//   cmax      report the maximum admissible CFL number from the diagram
//   advect1d  run the 1D periodic square-wave advection benchmark
//   zalesak   run the 2D slotted-disk rotation benchmark
//   oracle    sweep the one-step boundedness oracle over phi_tilde
//
// All emitted files are deterministic: identical flags give identical bytes.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbound/metrics.hpp"
#include "cbound/nvd.hpp"
#include "cbound/schemes.hpp"
#include "cbound/solver.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(int x) { return std::to_string(x); }

struct SchemeFlags {
    std::string scheme;
    double beta = 2.0;
    double slope = 2.5;
    double epsilon = 1e-16;
    double ct = 1e-5;
    double c_teno = 1.0;
    int q_teno = 6;

    void attach(CLI::App* cmd) {
        cmd->add_option("--scheme", scheme, "upwind | thinc | thinc-clipped | weno-js | weno-z | teno")
            ->required();
        cmd->add_option("--beta", beta, "THINC steepness (default 2.0)");
        cmd->add_option("--slope", slope, "THINC clipping-line slope (default 2.5)");
        cmd->add_option("--epsilon", epsilon, "weight division guard (default 1e-16)");
        cmd->add_option("--ct", ct, "TENO cutoff C_T (default 1e-5)");
        cmd->add_option("--c-teno", c_teno, "TENO C (default 1)");
        cmd->add_option("--q-teno", q_teno, "TENO q (default 6)");
    }

    cbound::SchemeConfig build() const {
        cbound::SchemeConfig cfg;
        if (scheme == "upwind") cfg = cbound::SchemeConfig::upwind();
        else if (scheme == "thinc") cfg = cbound::SchemeConfig::thinc(beta);
        else if (scheme == "thinc-clipped") cfg = cbound::SchemeConfig::thinc_clipped(beta, slope);
        else if (scheme == "weno-js") cfg = cbound::SchemeConfig::weno_js(epsilon);
        else if (scheme == "weno-z") cfg = cbound::SchemeConfig::weno_z(epsilon);
        else if (scheme == "teno") cfg = cbound::SchemeConfig::teno(ct, epsilon);
        else throw std::invalid_argument("unknown scheme '" + scheme + "'");
        cfg.c_teno = c_teno;
        cfg.q_teno = q_teno;
        cfg.clip_slope = slope;
        cfg.validate();
        return cfg;
    }

    void record(std::map<std::string, std::string>& p) const {
        p["scheme"] = scheme;
        p["beta"] = fmt(beta);
        p["slope"] = fmt(slope);
        p["epsilon"] = fmt(epsilon);
        p["ct"] = fmt(ct);
        p["c-teno"] = fmt(c_teno);
        p["q-teno"] = fmt(q_teno);
    }
};

// Every command records its full (defaulted) parameter set plus the list of
// files it wrote; written next to the primary output.
struct Manifest {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<std::string> outputs;

    std::string text() const {
        std::ostringstream os;
        os << "tool: cbound " << kVersion << "\n";
        os << "command: " << command << "\n";
        for (const auto& [k, v] : params) os << "param " << k << "=" << v << "\n";
        for (const auto& f : outputs) os << "output: " << f << "\n";
        return os.str();
    }

    void write(const std::string& primary_out) const {
        std::ofstream m(primary_out + ".manifest");
        m << text();
    }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    os << content;
}

std::string bounds_comment_lines(const cbound::BoundsReport& rep, double tol) {
    std::ostringstream os;
    os << "# bounded=" << (rep.bounded ? "true" : "false") << "\n";
    os << "# lower_bound=" << fmt(rep.lower_bound) << " upper_bound=" << fmt(rep.upper_bound)
       << " tol=" << fmt(tol) << "\n";
    os << "# max_overshoot=" << fmt(rep.max_overshoot) << "\n";
    os << "# max_undershoot=" << fmt(rep.max_undershoot) << "\n";
    os << "# violating_cells=" << rep.violating_cells.size() << "\n";
    for (const auto& vc : rep.violating_cells) {
        os << "# cell=" << vc.cell << " excess=" << fmt(vc.excess);
        if (vc.phi_tilde) os << " phi_tilde=" << fmt(*vc.phi_tilde);
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- nvd ----

int cmd_nvd(const SchemeFlags& sf, int n, const std::string& out) {
    const auto cfg = sf.build();
    const auto curve = cbound::sample_nvd(cfg, n);

    std::ostringstream csv;
    csv << "phi_tilde_c,phi_tilde_f\n";
    for (const auto& s : curve.samples) csv << fmt(s.phi_c) << "," << fmt(s.phi_f) << "\n";
    write_file(out, csv.str());

    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set xlabel 'phi_tilde_i'\n"
       << "set ylabel 'phi_tilde_{i+1/2}'\n"
       << "set key left top\n"
       << "plot '" << out << "' using 1:2 with lines title '" << cfg.name() << "', \\\n"
       << "     x with lines dashtype 2 title 'identity', \\\n"
       << "     1 with lines dashtype 3 title 'unity bound'\n";
    write_file(out + ".gp", gp.str());

    Manifest man{"nvd", {}, {out, out + ".gp"}};
    sf.record(man.params);
    man.params["n"] = fmt(n);
    man.params["out"] = out;
    man.write(out);
    std::cout << "wrote " << out << " (" << curve.samples.size() << " samples)\n";
    return 0;
}

// --------------------------------------------------------------- cmax ----

int cmd_cmax(const SchemeFlags& sf, int n, const std::string& out) {
    const auto cfg = sf.build();
    const auto rep = cbound::cbc_report(cbound::sample_nvd(cfg, n));

    Manifest man{"cmax", {}, {}};
    sf.record(man.params);
    man.params["n"] = fmt(n);

    std::ostringstream os;
    os << "# cbound " << kVersion << " cmax\n";
    for (const auto& [k, v] : man.params) os << "# param " << k << "=" << v << "\n";
    os << "c_max=" << fmt(rep.c_max) << "\n";
    os << "unconditional_violation=" << (rep.unconditional_violation ? "true" : "false") << "\n";
    os << "binding_phi_tilde=" << fmt(rep.binding_phi_c) << "\n";
    os << "max_phi_tilde_f=" << fmt(rep.max_phi_f) << "\n";
    os << "argmax_phi_tilde=" << fmt(rep.argmax_phi_c) << "\n";
    if (cfg.kind == cbound::SchemeKind::ThincOriginal)
        os << "analytic_c_max=" << fmt(cbound::analytic_cmax_thinc(cfg.beta)) << "\n";

    if (out.empty()) {
        std::cout << os.str();
    } else {
        write_file(out, os.str());
        man.outputs.push_back(out);
        man.params["out"] = out;
        man.write(out);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

// ----------------------------------------------------------- advect1d ----

int cmd_advect1d(const SchemeFlags& sf, double cfl, int n_cells, double t_end, double u,
                 const std::string& integrator, double tol, const std::string& out) {
    cbound::SolverConfig1D cfg;
    cfg.scheme = sf.build();
    cfg.cfl = cfl;
    cfg.end_time = t_end;
    cfg.velocity = u;
    if (integrator == "euler") cfg.integrator = cbound::TimeIntegrator::EulerForward;
    else if (integrator == "ssp-rk3") cfg.integrator = cbound::TimeIntegrator::SspRk3;
    else throw std::invalid_argument("unknown integrator '" + integrator + "'");

    const cbound::Grid1D grid{n_cells, -1.0, 1.0};
    const auto initial = cbound::init_square_wave(grid);
    double m = initial.values[0], big = initial.values[0];
    for (double v : initial.values) {
        m = std::min(m, v);
        big = std::max(big, v);
    }

    cbound::ViolationTracker tracker(m, big, tol, u);
    const auto final_field = cbound::run_advection_1d(cfg, grid, tracker.observer());
    const auto exact = cbound::exact_advection_1d(grid, u, t_end);
    const auto rep = tracker.report(final_field);

    std::ostringstream csv;
    csv << "x,phi,phi_exact\n";
    for (int i = 0; i < grid.n_cells; ++i)
        csv << fmt(grid.x_center(i)) << "," << fmt(final_field.values[static_cast<std::size_t>(i)])
            << "," << fmt(exact.values[static_cast<std::size_t>(i)]) << "\n";
    const std::string report = bounds_comment_lines(rep, tol) +
                               "# l1_error=" + fmt(cbound::l1_error(final_field, exact)) + "\n";
    csv << report;
    write_file(out, csv.str());

    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set xlabel 'x'\n"
       << "set ylabel 'phi'\n"
       << "plot '" << out << "' using 1:2 with linespoints title '" << cfg.scheme.name()
       << " cfl=" << fmt(cfl) << "', \\\n"
       << "     '" << out << "' using 1:3 with lines title 'exact'\n";
    write_file(out + ".gp", gp.str());

    Manifest man{"advect1d", {}, {out, out + ".gp"}};
    sf.record(man.params);
    man.params["cfl"] = fmt(cfl);
    man.params["n"] = fmt(n_cells);
    man.params["t-end"] = fmt(t_end);
    man.params["u"] = fmt(u);
    man.params["integrator"] = integrator;
    man.params["tol"] = fmt(tol);
    man.params["out"] = out;
    man.write(out);

    std::cout << report;
    std::cout << "wrote " << out << "\n";
    return 0;
}

// ------------------------------------------------------------ zalesak ----

int cmd_zalesak(const SchemeFlags& sf, double cfl, int nx, double revolutions,
                const std::string& integrator, double tol, bool use_constant,
                double constant_value, const std::string& out) {
    cbound::SolverConfig2D cfg;
    cfg.scheme = sf.build();
    cfg.cfl = cfl;
    cfg.end_time = revolutions;  // omega = 2 pi: one revolution per unit time
    if (integrator == "euler") cfg.integrator = cbound::TimeIntegrator::EulerForward;
    else if (integrator == "ssp-rk3") cfg.integrator = cbound::TimeIntegrator::SspRk3;
    else throw std::invalid_argument("unknown integrator '" + integrator + "'");

    const cbound::Grid2D grid{nx, nx, 0.0, 1.0, 0.0, 1.0};
    cbound::Field2D initial = use_constant
        ? cbound::Field2D{grid, std::vector<double>(static_cast<std::size_t>(nx) * static_cast<std::size_t>(nx), constant_value), 0.0}
        : cbound::init_zalesak(grid);
    double m = initial.values[0], big = initial.values[0];
    for (double v : initial.values) {
        m = std::min(m, v);
        big = std::max(big, v);
    }

    const auto final_field = cbound::run_rotation(cfg, initial, {});

    std::ostringstream csv;
    csv << "x,y,phi\n";
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            csv << fmt(grid.x_center(i)) << "," << fmt(grid.y_center(j)) << ","
                << fmt(final_field.at(i, j)) << "\n";

    std::string report;
    if (big > m) {
        report = bounds_comment_lines(cbound::bounds_report(final_field, m, big, tol), tol);
    } else {
        bool preserved = final_field.values == initial.values;
        report = std::string("# bounds report skipped: initial field is constant\n") +
                 "# constant_preserved=" + (preserved ? "true" : "false") + "\n";
    }
    csv << report;
    write_file(out, csv.str());

    std::ostringstream gp;
    gp << "set datafile separator ','\n"
       << "set size square\n"
       << "set xlabel 'x'\n"
       << "set ylabel 'y'\n"
       << "plot '" << out << "' using 1:2:3 with image title '" << cfg.scheme.name() << "'\n";
    write_file(out + ".gp", gp.str());

    Manifest man{"zalesak", {}, {out, out + ".gp"}};
    sf.record(man.params);
    man.params["cfl"] = fmt(cfl);
    man.params["nx"] = fmt(nx);
    man.params["revolutions"] = fmt(revolutions);
    man.params["integrator"] = integrator;
    man.params["tol"] = fmt(tol);
    if (use_constant) man.params["constant"] = fmt(constant_value);
    man.params["out"] = out;
    man.write(out);

    std::cout << report;
    std::cout << "wrote " << out << "\n";
    return 0;
}

// ------------------------------------------------------------- oracle ----

int cmd_oracle(const SchemeFlags& sf, double cfl, int samples, int pad, double tol,
               const std::string& out) {
    const auto cfg = sf.build();

    std::ostringstream csv;
    csv << "phi_tilde_c,bounded,max_overshoot,max_undershoot\n";
    for (int k = 1; k <= samples; ++k) {
        const double phi_c = static_cast<double>(k) / (samples + 1.0);
        const auto outcome = cbound::one_step_oracle(cfg, cfl, phi_c, pad, tol);
        csv << fmt(phi_c) << "," << (outcome.bounded ? "true" : "false") << ","
            << fmt(outcome.max_overshoot) << "," << fmt(outcome.max_undershoot) << "\n";
    }

    Manifest man{"oracle", {}, {}};
    sf.record(man.params);
    man.params["cfl"] = fmt(cfl);
    man.params["samples"] = fmt(samples);
    man.params["pad"] = fmt(pad);
    man.params["tol"] = fmt(tol);

    if (out.empty()) {
        std::cout << csv.str();
    } else {
        write_file(out, csv.str());
        man.outputs.push_back(out);
        man.params["out"] = out;
        man.write(out);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convection-boundedness diagnostics for finite-volume reconstruction schemes"};
    app.set_version_flag("--version", std::string("cbound ") + kVersion);
    app.require_subcommand(1);

    SchemeFlags nvd_sf, cmax_sf, adv_sf, zal_sf, orc_sf;

    auto* nvd = app.add_subcommand("nvd", "sample a normalised variable diagram to CSV");
    int nvd_n = 100;
    std::string nvd_out = "nvd.csv";
    nvd_sf.attach(nvd);
    nvd->add_option("--n", nvd_n, "number of phi_tilde samples (default 100)");
    nvd->add_option("--out", nvd_out, "output CSV path (default nvd.csv)");

    auto* cmax = app.add_subcommand("cmax", "report the maximum admissible CFL number");
    int cmax_n = 4000;
    std::string cmax_out;
    cmax_sf.attach(cmax);
    cmax->add_option("--n", cmax_n, "number of phi_tilde samples (default 4000)");
    cmax->add_option("--out", cmax_out, "output path (default: stdout)");

    auto* adv = app.add_subcommand("advect1d", "1D periodic square-wave advection benchmark");
    double adv_cfl = 0.4, adv_tend = 0.1, adv_u = 1.0, adv_tol = 1e-10;
    int adv_n = 200;
    std::string adv_integ = "euler", adv_out = "advect1d.csv";
    adv_sf.attach(adv);
    adv->add_option("--cfl", adv_cfl, "CFL number")->required();
    adv->add_option("--n", adv_n, "number of cells (default 200)");
    adv->add_option("--t-end", adv_tend, "final time (default 0.1)");
    adv->add_option("--u", adv_u, "advection velocity (default 1)");
    adv->add_option("--integrator", adv_integ, "euler | ssp-rk3 (default euler)");
    adv->add_option("--tol", adv_tol, "boundedness tolerance (default 1e-10)");
    adv->add_option("--out", adv_out, "output CSV path (default advect1d.csv)");

    auto* zal = app.add_subcommand("zalesak", "2D slotted-disk rotation benchmark");
    double zal_cfl = 0.4, zal_rev = 1.0, zal_tol = 1e-10, zal_const = 0.0;
    int zal_nx = 100;
    std::string zal_integ = "euler", zal_out = "zalesak.csv";
    zal_sf.attach(zal);
    zal->add_option("--cfl", zal_cfl, "CFL number")->required();
    zal->add_option("--nx", zal_nx, "cells per direction (default 100)");
    zal->add_option("--revolutions", zal_rev, "number of revolutions (default 1)");
    zal->add_option("--integrator", zal_integ, "euler | ssp-rk3 (default euler)");
    zal->add_option("--tol", zal_tol, "boundedness tolerance (default 1e-10)");
    auto* zal_const_opt = zal->add_option("--constant", zal_const, "replace the slotted disk with a constant field");
    zal->add_option("--out", zal_out, "output CSV path (default zalesak.csv)");

    auto* orc = app.add_subcommand("oracle", "one-step boundedness oracle sweep over phi_tilde");
    double orc_cfl = 0.4, orc_tol = 1e-10;
    int orc_samples = 99, orc_pad = 6;
    std::string orc_out;
    orc_sf.attach(orc);
    orc->add_option("--cfl", orc_cfl, "CFL number")->required();
    orc->add_option("--samples", orc_samples, "number of phi_tilde samples (default 99)");
    orc->add_option("--pad", orc_pad, "constant cells on each side (default 6)");
    orc->add_option("--tol", orc_tol, "boundedness tolerance (default 1e-10)");
    orc->add_option("--out", orc_out, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (nvd->parsed()) return cmd_nvd(nvd_sf, nvd_n, nvd_out);
        if (cmax->parsed()) return cmd_cmax(cmax_sf, cmax_n, cmax_out);
        if (adv->parsed())
            return cmd_advect1d(adv_sf, adv_cfl, adv_n, adv_tend, adv_u, adv_integ, adv_tol, adv_out);
        if (zal->parsed())
            return cmd_zalesak(zal_sf, zal_cfl, zal_nx, zal_rev, zal_integ, zal_tol,
                               zal_const_opt->count() > 0, zal_const, zal_out);
        if (orc->parsed()) return cmd_oracle(orc_sf, orc_cfl, orc_samples, orc_pad, orc_tol, orc_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
