#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pam/model_config.hpp"

// Command-line surface. parse_command turns argv (without the program
// name) into a validated plan; run executes it. Diagnostics go to the
// error stream, data to the output stream or the --out file.
// Exit codes: 0 ok, 1 I/O or parse error, 2 domain or feasibility error.

namespace pam {

struct CommandPlan {
    enum class Kind {
        fit_rational,
        fit_polynomial,
        force,
        stiffness,
        actuator_direct,
        actuator_inverse,
        sweep,
        roots,
        residuals,
    };

    Kind kind{};
    ModelConfig config; // file values already overridden by flags

    std::string model; // hogan|mckibben|mckibben-k|andrikopoulos|festo|polynomial|
                       // hildebrandt|sarosi|wickramatunge (where applicable)

    std::vector<std::pair<double, double>> anchors_bar; // (P_bar, eps_max)
    double c_bar = 0.0;

    double eps = 0.0;        // contraction (or stretched length, m, for wickramatunge)
    double pressure_bar = 0.0;
    double u = 1.0;          // hogan activation for force/stiffness

    double u1 = 0.0, u2 = 0.0;     // hogan actuator controls
    double p1_bar = 0.0, p2_bar = 0.0;
    double theta_deg = 0.0;
    double stiffness_nm_per_rad = 0.0;
    double torque_nm = 0.0;

    double a2 = 0.0, a1 = 0.0, a0 = 0.0; // roots subcommand

    double k_min = 0.0, k_max = 0.0, k_step = 1.0;
    double theta_min_deg = 0.0, theta_max_deg = 0.0, theta_step_deg = 5.0;
    bool theta_min_set = false;

    std::string out_path;
    std::string data_path;
};

// Thrown when --help is requested; carries the text to print.
struct HelpRequested {
    std::string text;
};

// Throws UsageError on unknown subcommands/flags or missing required flags.
CommandPlan parse_command(const std::vector<std::string>& args);

int run(const CommandPlan& plan, std::ostream& out, std::ostream& err);

// parse + run + error-to-exit-code mapping, as used by the binary.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pam
