#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = "cli_stdout.tmp";
    const std::string cmd = std::string(CBOUND_CLI_PATH) + " " + args + " > " + out_file + " 2> cli_stderr.tmp";
    const int status = std::system(cmd.c_str());
    std::ifstream is(out_file);
    std::stringstream ss;
    ss << is.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE_MESSAGE(is.good(), "missing file ", path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::vector<std::string> data_rows(const std::string& csv) {
    std::vector<std::string> rows;
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line))
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    return rows;
}

std::vector<double> split_doubles(const std::string& row) {
    std::vector<double> out;
    std::stringstream ss(row);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (...) {
            out.push_back(std::nan(""));
        }
    }
    return out;
}

double report_value(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + "=");
    REQUIRE_MESSAGE(pos != std::string::npos, "missing key ", key);
    return std::stod(text.substr(pos + key.size() + 1));
}

}  // namespace

TEST_CASE("nvd command") {
    auto r = run_cli("nvd --scheme thinc --beta 2.0 --n 100 --out cli_nvd.csv");
    CHECK(r.exit_code == 0);
    const auto csv = slurp("cli_nvd.csv");
    const auto rows = data_rows(csv);
    REQUIRE(rows.size() == 100);
    double best_f = 0.0, best_dist = 1.0;
    for (const auto& row : rows) {
        const auto cols = split_doubles(row);
        REQUIRE(cols.size() == 2);
        if (std::abs(cols[0] - 0.5) < best_dist) {
            best_dist = std::abs(cols[0] - 0.5);
            best_f = cols[1];
        }
    }
    CHECK(best_f == doctest::Approx(0.8808).epsilon(0.01));

    const auto manifest = slurp("cli_nvd.csv.manifest");
    CHECK(manifest.find("command: nvd") != std::string::npos);
    CHECK(manifest.find("output: cli_nvd.csv") != std::string::npos);
    CHECK(manifest.find("output: cli_nvd.csv.gp") != std::string::npos);
    CHECK(slurp("cli_nvd.csv.gp").find("cli_nvd.csv") != std::string::npos);

    auto up = run_cli("nvd --scheme upwind --out cli_nvd_up.csv");
    CHECK(up.exit_code == 0);
    for (const auto& row : data_rows(slurp("cli_nvd_up.csv"))) {
        const auto cols = split_doubles(row);
        CHECK(cols[0] == cols[1]);
    }

    auto teno = run_cli("nvd --scheme teno --ct 1e-7 --out cli_nvd_t7.csv");
    CHECK(teno.exit_code == 0);
    bool above_unity = false;
    for (const auto& row : data_rows(slurp("cli_nvd_t7.csv")))
        above_unity = above_unity || split_doubles(row)[1] > 1.0;
    CHECK(above_unity);
}

TEST_CASE("cmax command") {
    auto clip = run_cli("cmax --scheme thinc-clipped --beta 2.0 --slope 2.5");
    CHECK(clip.exit_code == 0);
    CHECK(std::abs(report_value(clip.stdout_text, "c_max") - 0.4) < 0.002);

    auto up = run_cli("cmax --scheme upwind");
    CHECK(report_value(up.stdout_text, "c_max") == 1.0);

    auto thinc = run_cli("cmax --scheme thinc --beta 2.0 --n 4000");
    CHECK(std::abs(report_value(thinc.stdout_text, "c_max") - 0.2454) < 0.002);
    CHECK(std::abs(report_value(thinc.stdout_text, "analytic_c_max") - 0.24542109) < 1e-6);
    CHECK(thinc.stdout_text.find("unconditional_violation=false") != std::string::npos);
}

TEST_CASE("advect1d command") {
    auto hot = run_cli("advect1d --scheme thinc --beta 1.1 --cfl 0.5 --out cli_adv1.csv");
    CHECK(hot.exit_code == 0);  // violations are data, not failures
    CHECK(hot.stdout_text.find("bounded=false") != std::string::npos);
    CHECK(report_value(hot.stdout_text, "max_overshoot") > 1e-6);

    auto z = run_cli("advect1d --scheme weno-z --cfl 0.4 --out cli_adv2.csv");
    CHECK(z.exit_code == 0);
    // no visible oscillations at this CFL; the residue is the epsilon-regime
    // foot noise, well under the visibility scale
    CHECK(report_value(z.stdout_text, "max_overshoot") < 1e-6);

    auto up = run_cli("advect1d --scheme upwind --cfl 1.0 --out cli_adv3.csv");
    CHECK(up.exit_code == 0);
    CHECK(up.stdout_text.find("bounded=true") != std::string::npos);
    CHECK(report_value(up.stdout_text, "l1_error") < 1e-12);

    const auto rows = data_rows(slurp("cli_adv3.csv"));
    REQUIRE(rows.size() == 200);
    CHECK(split_doubles(rows[0]).size() == 3);
    CHECK(slurp("cli_adv3.csv").find("# bounded=true") != std::string::npos);
}

TEST_CASE("zalesak command") {
    auto c = run_cli("zalesak --scheme thinc --beta 2.0 --cfl 0.4 --nx 16 --revolutions 0.02 "
                     "--constant 0.42 --out cli_zal.csv");
    CHECK(c.exit_code == 0);
    CHECK(c.stdout_text.find("constant_preserved=true") != std::string::npos);
    const auto rows = data_rows(slurp("cli_zal.csv"));
    REQUIRE(rows.size() == 16 * 16);
    for (const auto& row : rows) CHECK(split_doubles(row)[2] == 0.42);

    auto disk = run_cli("zalesak --scheme thinc-clipped --beta 2.0 --cfl 0.4 --nx 32 "
                        "--revolutions 0.05 --out cli_zal2.csv");
    CHECK(disk.exit_code == 0);
    CHECK(disk.stdout_text.find("bounded=true") != std::string::npos);
}

TEST_CASE("oracle command") {
    auto r = run_cli("oracle --scheme thinc --beta 2.0 --cfl 0.3 --samples 99 --out cli_orc.csv");
    CHECK(r.exit_code == 0);
    bool any_unbounded = false;
    for (const auto& row : data_rows(slurp("cli_orc.csv")))
        any_unbounded = any_unbounded || row.find("false") != std::string::npos;
    CHECK(any_unbounded);

    auto ok = run_cli("oracle --scheme thinc --beta 2.0 --cfl 0.2 --samples 99 --out cli_orc2.csv");
    CHECK(ok.exit_code == 0);
    for (const auto& row : data_rows(slurp("cli_orc2.csv")))
        CHECK(row.find("false") == std::string::npos);
}

TEST_CASE("invalid parameters exit with code 2") {
    CHECK(run_cli("cmax --scheme nope").exit_code == 2);
    CHECK(run_cli("cmax --scheme teno --ct 0.4").exit_code == 2);
    CHECK(run_cli("cmax --scheme thinc --beta -1").exit_code == 2);
    CHECK(run_cli("advect1d --scheme upwind").exit_code == 2);  // missing --cfl
    CHECK(run_cli("advect1d --scheme upwind --cfl 1.5 --out x.csv").exit_code == 2);
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> cases = {
        "nvd --scheme weno-js --n 50 --out cli_det.csv",
        "advect1d --scheme teno --ct 1e-5 --cfl 0.5 --n 100 --out cli_det.csv",
        "zalesak --scheme thinc --beta 2.0 --cfl 0.4 --nx 16 --revolutions 0.02 --out cli_det.csv",
    };
    for (const auto& args : cases) {
        REQUIRE(run_cli(args).exit_code == 0);
        const auto first = slurp("cli_det.csv");
        const auto first_man = slurp("cli_det.csv.manifest");
        REQUIRE(run_cli(args).exit_code == 0);
        CHECK(slurp("cli_det.csv") == first);
        CHECK(slurp("cli_det.csv.manifest") == first_man);
    }
    auto a = run_cli("cmax --scheme weno-z --n 500");
    auto b = run_cli("cmax --scheme weno-z --n 500");
    CHECK(a.stdout_text == b.stdout_text);
}
