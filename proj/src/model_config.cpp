#include "pam/model_config.hpp"

#include <fstream>
#include <sstream>

#include "pam/errors.hpp"

namespace pam {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& origin, std::size_t line_no,
                    const std::string& key) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw IoError(origin + ":" + std::to_string(line_no) + ": non-numeric value for '" + key +
                      "'");
    }
    if (pos != text.size())
        throw IoError(origin + ":" + std::to_string(line_no) + ": trailing characters in value of '" +
                      key + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

ModelConfig parse_model_config(const std::string& text, const std::string& origin) {
    ModelConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw IoError(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw IoError(origin + ":" + std::to_string(line_no) + ": empty value for '" + key + "'");

        auto scalar = [&](std::optional<double>& slot) {
            slot = parse_number(value, origin, line_no, key);
        };

        auto list = [&](std::vector<double>& slot) {
            slot.clear();
            for (const auto& part : split(value, ','))
                slot.push_back(parse_number(trim(part), origin, line_no, key));
        };

        if (key == "r0_cm") scalar(cfg.r0_cm);
        else if (key == "l0_cm") scalar(cfg.l0_cm);
        else if (key == "alpha0_deg") scalar(cfg.alpha0_deg);
        else if (key == "c_bar") scalar(cfg.c_bar);
        else if (key == "d_bar") scalar(cfg.d_bar);
        else if (key == "e_bar2") scalar(cfg.e_bar2);
        else if (key == "q") scalar(cfg.q);
        else if (key == "f_max_N") scalar(cfg.f_max_n);
        else if (key == "hogan_eps_max") scalar(cfg.hogan_eps_max);
        else if (key == "R_cm") scalar(cfg.pulley_radius_cm);
        else if (key == "eps0") scalar(cfg.eps0);
        else if (key == "eps_threshold") scalar(cfg.eps_threshold);
        else if (key == "p_min_bar") scalar(cfg.p_min_bar);
        else if (key == "p_max_bar") scalar(cfg.p_max_bar);
        else if (key == "wick_min_length_cm") scalar(cfg.wick_min_length_cm);
        else if (key == "poly_coeffs_bar") list(cfg.poly_coeffs_bar);
        else if (key == "hildebrandt_c") list(cfg.hildebrandt_c);
        else if (key == "hildebrandt_d") list(cfg.hildebrandt_d);
        else if (key == "sarosi_c") list(cfg.sarosi_c);
        else if (key == "wick_c") list(cfg.wick_c);
        else if (key == "k_table") {
            cfg.k_table_bar.clear();
            for (const auto& part : split(value, ',')) {
                const auto pair = split(trim(part), ':');
                if (pair.size() != 2)
                    throw IoError(origin + ":" + std::to_string(line_no) +
                                  ": k_table entries must be P_bar:k");
                cfg.k_table_bar.emplace_back(parse_number(trim(pair[0]), origin, line_no, key),
                                             parse_number(trim(pair[1]), origin, line_no, key));
            }
        } else {
            throw IoError(origin + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

ModelConfig load_model_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_config(buf.str(), path.string());
}

} // namespace pam
