#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Flat `key = value` config file (# comments) holding geometry, model and
// actuator parameters in boundary units; the key suffix fixes the unit.
// Unknown keys are rejected.

namespace pam {

struct ModelConfig {
    std::optional<double> r0_cm;
    std::optional<double> l0_cm;
    std::optional<double> alpha0_deg;

    std::optional<double> c_bar;
    std::optional<double> d_bar;
    std::optional<double> e_bar2;

    std::vector<double> poly_coeffs_bar;                 // a0,a1,...
    std::vector<std::pair<double, double>> k_table_bar;  // P_bar:k pairs
    std::optional<double> q;

    std::optional<double> f_max_n;
    std::optional<double> hogan_eps_max;

    std::vector<double> hildebrandt_c; // exactly 3 when present
    std::vector<double> hildebrandt_d; // exactly 5
    std::vector<double> sarosi_c;      // exactly 6
    std::vector<double> wick_c;        // exactly 4
    std::optional<double> wick_min_length_cm;

    std::optional<double> pulley_radius_cm;
    std::optional<double> eps0;
    std::optional<double> eps_threshold;
    std::optional<double> p_min_bar;
    std::optional<double> p_max_bar;
};

ModelConfig load_model_config(const std::filesystem::path& path);

// Parses the body of a config; `origin` names the source in messages.
ModelConfig parse_model_config(const std::string& text, const std::string& origin);

} // namespace pam
