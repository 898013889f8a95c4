#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <doctest.h>

#include "pam/cli.hpp"
#include "pam/errors.hpp"

using namespace pam;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("pam_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

const char* festo_config_text =
    "# DSMP-20-400N style parameters\n"
    "r0_cm = 1.09\n"
    "l0_cm = 40\n"
    "alpha0_deg = 25.5\n"
    "c_bar = 0\n"
    "d_bar = -10.5\n"
    "e_bar2 = -779\n"
    "R_cm = 2\n"
    "eps0 = 0.1375\n"
    "eps_threshold = 0.025\n"
    "p_min_bar = 0\n"
    "p_max_bar = 5\n";

fs::path write_config(const fs::path& dir, const std::string& body) {
    const fs::path p = dir / "festo.toml";
    std::ofstream out(p);
    out << body;
    return p;
}

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("roots subcommand maps directly onto the solver") {
    const auto plan = parse_command({"roots", "--a2", "-6", "--a1", "11", "--a0", "-6"});
    CHECK(plan.kind == CommandPlan::Kind::roots);
    CHECK(plan.a2 == -6.0);
    CHECK(plan.a1 == 11.0);
    CHECK(plan.a0 == -6.0);

    const auto r = invoke({"roots", "--a2", "-6", "--a1", "11", "--a0", "-6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("branch = three_real") != std::string::npos);
    CHECK(r.out.find("roots = 1 2 3") != std::string::npos);
}

TEST_CASE("sweep plan reproduces the fig. 8 grid parameters") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, festo_config_text);
    const auto plan = parse_command({"sweep", "--model", "festo", "--k-min", "6", "--k-max", "9",
                                     "--k-step", "1", "--theta-max-deg", "125", "--theta-step-deg",
                                     "5", "--config", cfgp.string(), "--out",
                                     (tmp.path / "fig8.csv").string()});
    CHECK(plan.kind == CommandPlan::Kind::sweep);
    CHECK(plan.model == "festo");
    CHECK(plan.k_min == 6.0);
    CHECK(plan.k_max == 9.0);
    CHECK(plan.theta_min_deg == -125.0); // defaulted to -theta-max
    CHECK(plan.config.d_bar == -10.5);

    const auto r = invoke({"sweep", "--model", "festo", "--k-min", "6", "--k-max", "9", "--k-step",
                           "1", "--theta-max-deg", "125", "--theta-step-deg", "5", "--config",
                           cfgp.string(), "--out", (tmp.path / "fig8.csv").string()});
    REQUIRE(r.code == 0);
    std::ifstream csv(tmp.path / "fig8.csv");
    std::string line;
    std::size_t lines = 0;
    while (std::getline(csv, line)) ++lines;
    CHECK(lines == 1 + 4 * 51);
}

TEST_CASE("unknown flags and missing required flags are usage errors") {
    CHECK_THROWS_AS(parse_command({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse_command({"roots", "--a2", "1"}), UsageError);
    CHECK_THROWS_AS(parse_command({"sweep", "--model", "festo", "--nope", "1"}), UsageError);
    CHECK_THROWS_AS(parse_command({}), UsageError);

    const auto r = invoke({"force", "--model", "mckibben"});
    CHECK(r.code == 1); // missing --eps
}

TEST_CASE("fit-rational prints the paper values") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, festo_config_text);
    const auto r = invoke({"fit-rational", "--anchor", "3:0.225", "--anchor", "5:0.275", "--c", "0",
                           "--config", cfgp.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("d_bar = -10.5\n") != std::string::npos);
    CHECK(r.out.find("e_bar2 = -779.099013\n") != std::string::npos);
    CHECK(r.out.find("eps_max_I = 0.225\n") != std::string::npos);
    CHECK(r.out.find("eps_max_II = 0.275\n") != std::string::npos);
}

TEST_CASE("fit-polynomial warns about a wandering 5-anchor interpolant") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, festo_config_text);
    const auto r3 = invoke({"fit-polynomial", "--anchor", "3:0.225", "--anchor", "4:0.26",
                            "--anchor", "5:0.275", "--config", cfgp.string()});
    REQUIRE(r3.code == 0);
    CHECK(r3.out.find("wandering_warning = no") != std::string::npos);
    CHECK(r3.err.empty());

    const auto r5 = invoke({"fit-polynomial", "--anchor", "1:0.05", "--anchor", "2:0.16",
                            "--anchor", "3:0.225", "--anchor", "4:0.26", "--anchor", "5:0.275",
                            "--config", cfgp.string()});
    REQUIRE(r5.code == 0);
    CHECK(r5.out.find("wandering_warning = yes") != std::string::npos);
    CHECK(r5.err.find("warning") != std::string::npos);
}

TEST_CASE("force domain errors exit with code 2 and name the bound") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, festo_config_text);
    const auto r = invoke({"force", "--model", "mckibben", "--eps", "0.5", "--p-bar", "3",
                           "--config", cfgp.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("0.36") != std::string::npos); // eps_max of the 25.5 deg geometry
    CHECK(r.out.empty());

    const auto ok = invoke({"force", "--model", "mckibben", "--eps", "0.1", "--p-bar", "3",
                            "--config", cfgp.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("force_N = ") != std::string::npos);
}

TEST_CASE("actuator-inverse festo: feasible case and infeasible exit code") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, festo_config_text);
    const auto r = invoke({"actuator-inverse", "--model", "festo", "--theta-deg", "0", "--k", "8",
                           "--config", cfgp.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("p1_bar = 3.23090516") != std::string::npos);
    CHECK(r.out.find("p2_bar = 3.23090516") != std::string::npos);
    CHECK(r.out.find("feasibility = feasible") != std::string::npos);

    const auto inf = invoke({"actuator-inverse", "--model", "festo", "--theta-deg", "0", "--k",
                             "12", "--config", cfgp.string()});
    CHECK(inf.code == 2);
    CHECK(inf.err.find("infeasible") != std::string::npos);
}

TEST_CASE("flag overrides beat config values") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, festo_config_text);
    // overriding e changes the fitted stiffness bound check slightly
    const auto a = invoke({"actuator-direct", "--model", "festo", "--theta-deg", "0", "--p1-bar",
                           "4", "--p2-bar", "4", "--config", cfgp.string()});
    const auto b = invoke({"actuator-direct", "--model", "festo", "--theta-deg", "0", "--p1-bar",
                           "4", "--p2-bar", "4", "--config", cfgp.string(), "--e-bar2", "-700"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out != b.out);
    CHECK(a.out.find("torque_Nm = 0\n") != std::string::npos);
}

TEST_CASE("unknown config keys are rejected") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, std::string(festo_config_text) + "bogus_key = 1\n");
    const auto r = invoke({"force", "--model", "festo", "--eps", "0.1", "--p-bar", "3", "--config",
                           cfgp.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("bogus_key") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, festo_config_text);
    const std::vector<std::string> args{"sweep",           "--model", "festo", "--k-min", "6",
                                        "--k-max",         "9",       "--k-step", "1",
                                        "--theta-max-deg", "125",     "--theta-step-deg", "5",
                                        "--config",        cfgp.string()};
    const auto r1 = invoke(args);
    const auto r2 = invoke(args);
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(!r1.out.empty());
}

TEST_CASE("residuals subcommand reports aggregates and out-of-domain rows") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, festo_config_text);
    const fs::path data = tmp.path / "curve.csv";
    {
        std::ofstream out(data);
        out << "pressure_bar,contraction_ratio,force_N\n"
               "3,0.0,700\n"
               "3,0.1,420\n"
               "5,0.9,10\n"; // beyond eps_max: out of domain
    }
    const auto r = invoke({"residuals", "--model", "festo", "--data", data.string(), "--config",
                           cfgp.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("samples = 3") != std::string::npos);
    CHECK(r.out.find("evaluated = 2") != std::string::npos);
    CHECK(r.out.find("out_of_domain = 1") != std::string::npos);
    CHECK(r.out.find("out_of_domain_rows = 4") != std::string::npos);
}

TEST_CASE("reference models are reachable for force/stiffness/residuals") {
    TempDir tmp;
    const auto cfgp = write_config(tmp.path, "l0_cm = 40\n"
                                             "sarosi_c = 9e-4,-3e-4,8e-5,700,650,-2\n"
                                             "wick_c = 4000,8e-4,6e-9,1.2e-9\n"
                                             "wick_min_length_cm = 30\n");
    const auto s = invoke({"force", "--model", "sarosi", "--eps", "0.1", "--p-bar", "3",
                           "--config", cfgp.string()});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("force_N = ") != std::string::npos);

    const fs::path data = tmp.path / "curve.csv";
    {
        std::ofstream out(data);
        out << "pressure_bar,contraction_ratio,force_N\n"
               "3,0.1,400\n"
               "3,0.2,300\n";
    }
    const auto r = invoke({"residuals", "--model", "wickramatunge", "--data", data.string(),
                           "--config", cfgp.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("evaluated = 2") != std::string::npos);

    const auto bad = invoke({"force", "--model", "hildebrandt", "--eps", "0.1", "--p-bar", "3",
                             "--config", cfgp.string()});
    CHECK(bad.code == 1); // coefficient-count/key mismatch
}

TEST_CASE("help requests exit 0") {
    const auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep") != std::string::npos);
}
