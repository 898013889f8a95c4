#include "pam/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pam/actuator.hpp"
#include "pam/cubic.hpp"
#include "pam/dataset_io.hpp"
#include "pam/fitting.hpp"
#include "pam/sweep.hpp"
#include "pam/units.hpp"

namespace pam {

namespace {

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::pair<double, double> parse_anchor(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("--anchor expects P_bar:eps_max, got '" + text + "'");
    try {
        std::size_t pos1 = 0, pos2 = 0;
        const double p = std::stod(text.substr(0, colon), &pos1);
        const double e = std::stod(text.substr(colon + 1), &pos2);
        if (pos1 != colon || pos2 != text.size() - colon - 1)
            throw UsageError("--anchor expects P_bar:eps_max, got '" + text + "'");
        return {p, e};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("--anchor expects P_bar:eps_max, got '" + text + "'");
    }
}

double require_key(const std::optional<double>& slot, const char* key) {
    if (!slot) throw UsageError(std::string("missing config key or flag for '") + key + "'");
    return *slot;
}

MuscleGeometry geometry_from(const ModelConfig& c) {
    return MuscleGeometry::create(require_key(c.r0_cm, "r0_cm") * units::cm_to_m,
                                  require_key(c.l0_cm, "l0_cm") * units::cm_to_m,
                                  require_key(c.alpha0_deg, "alpha0_deg") * units::deg_to_rad);
}

RationalFestoParams rational_from(const ModelConfig& c) {
    RationalFestoParams p;
    p.geometry = geometry_from(c);
    p.c = c.c_bar.value_or(0.0) * units::bar_to_pa;
    p.d = require_key(c.d_bar, "d_bar") * units::bar_to_pa;
    p.e = require_key(c.e_bar2, "e_bar2") * units::bar_to_pa * units::bar_to_pa;
    return p;
}

KTable k_table_from(const ModelConfig& c) {
    if (c.k_table_bar.empty()) throw UsageError("missing config key 'k_table'");
    KTable t;
    for (const auto& [p_bar, k] : c.k_table_bar) t.entries.emplace_back(p_bar * units::bar_to_pa, k);
    std::sort(t.entries.begin(), t.entries.end());
    t.validate();
    return t;
}

MuscleModel muscle_from(const ModelConfig& c, const std::string& model) {
    if (model == "hogan") {
        HoganParams hp{require_key(c.f_max_n, "f_max_N"), require_key(c.hogan_eps_max, "hogan_eps_max")};
        return HoganModel{hp, require_key(c.l0_cm, "l0_cm") * units::cm_to_m};
    }
    if (model == "mckibben") return TheoreticalMcKibbenModel{geometry_from(c)};
    if (model == "mckibben-k") return ModifiedMcKibbenModel{{geometry_from(c), k_table_from(c)}};
    if (model == "andrikopoulos")
        return AndrikopoulosModel{{geometry_from(c), require_key(c.q, "q"), k_table_from(c)}};
    if (model == "festo") return RationalFestoModel{rational_from(c)};
    if (model == "polynomial") {
        if (c.poly_coeffs_bar.empty()) throw UsageError("missing config key 'poly_coeffs_bar'");
        PolynomialFestoParams p;
        p.geometry = geometry_from(c);
        for (double a : c.poly_coeffs_bar) p.coeffs.push_back(a * units::bar_to_pa);
        return PolynomialFestoModel{p};
    }
    auto exactly = [](const std::vector<double>& v, std::size_t n, const char* key) {
        if (v.size() != n)
            throw UsageError(std::string("config key '") + key + "' needs exactly " +
                             std::to_string(n) + " comma-separated values");
    };
    const double l0 = require_key(c.l0_cm, "l0_cm") * units::cm_to_m;
    if (model == "hildebrandt") {
        exactly(c.hildebrandt_c, 3, "hildebrandt_c");
        exactly(c.hildebrandt_d, 5, "hildebrandt_d");
        HildebrandtParams h;
        std::copy(c.hildebrandt_c.begin(), c.hildebrandt_c.end(), h.c.begin());
        std::copy(c.hildebrandt_d.begin(), c.hildebrandt_d.end(), h.d.begin());
        return ReferenceModel{h, l0};
    }
    if (model == "sarosi") {
        exactly(c.sarosi_c, 6, "sarosi_c");
        SarosiParams s;
        std::copy(c.sarosi_c.begin(), c.sarosi_c.end(), s.c.begin());
        return ReferenceModel{s, l0};
    }
    if (model == "wickramatunge") {
        exactly(c.wick_c, 4, "wick_c");
        WickramatungeParams w;
        std::copy(c.wick_c.begin(), c.wick_c.end(), w.c.begin());
        w.min_length = require_key(c.wick_min_length_cm, "wick_min_length_cm") * units::cm_to_m;
        return ReferenceModel{w, l0};
    }
    throw UsageError("unknown model '" + model + "'");
}

ActuatorConfig actuator_from(const ModelConfig& c, const std::string& model) {
    ActuatorConfig cfg;
    cfg.pulley_radius = require_key(c.pulley_radius_cm, "R_cm") * units::cm_to_m;
    cfg.l0 = require_key(c.l0_cm, "l0_cm") * units::cm_to_m;
    cfg.eps_threshold = c.eps_threshold.value_or(0.025);
    cfg.p_min = c.p_min_bar.value_or(0.0) * units::bar_to_pa;
    cfg.p_max = c.p_max_bar.value_or(5.0) * units::bar_to_pa;
    if (c.eps0) {
        cfg.eps0 = *c.eps0;
    } else if (model == "festo") {
        cfg.eps0 = init_contraction(rational_from(c), cfg); // eps_max(p_max)/2
    } else if (model == "mckibben") {
        cfg.eps0 = geometry_from(c).eps_max_theoretical / 2.0;
    } else if (model == "hogan") {
        cfg.eps0 = require_key(c.hogan_eps_max, "hogan_eps_max") / 2.0;
    } else {
        throw UsageError("missing config key 'eps0'");
    }
    cfg.validate();
    return cfg;
}

void merge_overrides(ModelConfig& into, const ModelConfig& overrides) {
    auto pick = [](std::optional<double>& dst, const std::optional<double>& src) {
        if (src) dst = src;
    };
    pick(into.r0_cm, overrides.r0_cm);
    pick(into.l0_cm, overrides.l0_cm);
    pick(into.alpha0_deg, overrides.alpha0_deg);
    pick(into.c_bar, overrides.c_bar);
    pick(into.d_bar, overrides.d_bar);
    pick(into.e_bar2, overrides.e_bar2);
    pick(into.q, overrides.q);
    pick(into.f_max_n, overrides.f_max_n);
    pick(into.hogan_eps_max, overrides.hogan_eps_max);
    pick(into.pulley_radius_cm, overrides.pulley_radius_cm);
    pick(into.eps0, overrides.eps0);
    pick(into.eps_threshold, overrides.eps_threshold);
    pick(into.p_min_bar, overrides.p_min_bar);
    pick(into.p_max_bar, overrides.p_max_bar);
    if (!overrides.poly_coeffs_bar.empty()) into.poly_coeffs_bar = overrides.poly_coeffs_bar;
    if (!overrides.k_table_bar.empty()) into.k_table_bar = overrides.k_table_bar;
}

struct ParseState {
    CommandPlan plan;
    std::string config_path;
    ModelConfig overrides;
    std::vector<std::string> anchor_texts;
};

void add_config_flags(CLI::App* cmd, ParseState& st, bool with_actuator) {
    cmd->add_option("--config", st.config_path, "model config file (key = value lines)");
    auto opt = [&](const char* flag, std::optional<double>& slot, const char* help) {
        cmd->add_option_function<double>(flag, [&slot](double v) { slot = v; }, help);
    };
    opt("--r0-cm", st.overrides.r0_cm, "initial muscle radius, cm");
    opt("--l0-cm", st.overrides.l0_cm, "initial muscle length, cm");
    opt("--alpha0-deg", st.overrides.alpha0_deg, "initial braid angle, deg");
    opt("--d-bar", st.overrides.d_bar, "rational model d, bar");
    opt("--e-bar2", st.overrides.e_bar2, "rational model e, bar^2");
    opt("--c-bar", st.overrides.c_bar, "rational model c, bar");
    opt("--q", st.overrides.q, "andrikopoulos q-parameter");
    opt("--f-max-N", st.overrides.f_max_n, "hogan maximum isometric force, N");
    opt("--hogan-eps-max", st.overrides.hogan_eps_max, "hogan maximum contraction");
    if (with_actuator) {
        opt("--R-cm", st.overrides.pulley_radius_cm, "pulley radius, cm");
        opt("--eps0", st.overrides.eps0, "initial contraction of both muscles");
        opt("--eps-threshold", st.overrides.eps_threshold, "minimum allowed contraction");
        opt("--p-min-bar", st.overrides.p_min_bar, "pressure box lower bound, bar");
        opt("--p-max-bar", st.overrides.p_max_bar, "pressure box upper bound, bar");
    }
}

} // namespace

CommandPlan parse_command(const std::vector<std::string>& args) {
    ParseState st;
    CommandPlan& plan = st.plan;

    CLI::App app{"static models of pneumatic artificial muscles and the antagonist actuator"};
    app.require_subcommand(1);

    auto* fit_rational = app.add_subcommand("fit-rational", "fit (d, e) of the rational model");
    fit_rational->add_option("--anchor", st.anchor_texts, "anchor P_bar:eps_max (exactly two)")
        ->required()
        ->expected(2, 2);
    fit_rational->add_option("--c", plan.c_bar, "fixed c parameter, bar")->default_val(0.0);
    add_config_flags(fit_rational, st, false);

    auto* fit_poly = app.add_subcommand("fit-polynomial", "fit polynomial f(eps) from anchors");
    fit_poly->add_option("--anchor", st.anchor_texts, "anchor P_bar:eps_max (one or more)")
        ->required();
    add_config_flags(fit_poly, st, false);

    auto* force = app.add_subcommand("force", "evaluate muscle force, N");
    force->add_option("--model", plan.model, "muscle model")->required();
    force->add_option("--eps", plan.eps, "contraction ratio (stretched length, m, for wickramatunge)")
        ->required();
    force->add_option("--p-bar", plan.pressure_bar, "control pressure, bar");
    force->add_option("--u", plan.u, "hogan activation in [0, 1]");
    add_config_flags(force, st, false);

    auto* stiff = app.add_subcommand("stiffness", "evaluate muscle stiffness, N/m");
    stiff->add_option("--model", plan.model, "muscle model")->required();
    stiff->add_option("--eps", plan.eps, "contraction ratio")->required();
    stiff->add_option("--p-bar", plan.pressure_bar, "control pressure, bar");
    stiff->add_option("--u", plan.u, "hogan activation in [0, 1]");
    add_config_flags(stiff, st, false);

    auto* adirect = app.add_subcommand("actuator-direct", "torque and stiffness at a state");
    adirect->add_option("--model", plan.model, "hogan|mckibben|festo")->required();
    adirect->add_option("--theta-deg", plan.theta_deg, "joint angle, deg")->required();
    adirect->add_option("--p1-bar", plan.p1_bar, "muscle 1 pressure, bar");
    adirect->add_option("--p2-bar", plan.p2_bar, "muscle 2 pressure, bar");
    adirect->add_option("--u1", plan.u1, "hogan activation 1");
    adirect->add_option("--u2", plan.u2, "hogan activation 2");
    add_config_flags(adirect, st, true);

    auto* ainverse = app.add_subcommand("actuator-inverse", "pressures (or activations) from (theta, K)");
    ainverse->add_option("--model", plan.model, "hogan|mckibben|festo")->required();
    ainverse->add_option("--theta-deg", plan.theta_deg, "equilibrium joint angle, deg")->required();
    ainverse->add_option("--k", plan.stiffness_nm_per_rad, "requested stiffness, N.m/rad")->required();
    ainverse->add_option("--torque", plan.torque_nm, "target torque, N.m (mckibben only)")
        ->default_val(0.0);
    add_config_flags(ainverse, st, true);

    auto* sweep = app.add_subcommand("sweep", "inverse-model sweep over a (K, theta) grid");
    sweep->add_option("--model", plan.model, "mckibben|festo")->required();
    sweep->add_option("--k-min", plan.k_min, "N.m/rad")->required();
    sweep->add_option("--k-max", plan.k_max, "N.m/rad")->required();
    sweep->add_option("--k-step", plan.k_step, "N.m/rad")->default_val(1.0);
    sweep->add_option("--theta-max-deg", plan.theta_max_deg, "deg")->required();
    auto* tmin = sweep->add_option("--theta-min-deg", plan.theta_min_deg, "deg (default -theta-max)");
    sweep->add_option("--theta-step-deg", plan.theta_step_deg, "deg")->default_val(5.0);
    sweep->add_option("--out", plan.out_path, "output CSV path (stdout when omitted)");
    add_config_flags(sweep, st, true);

    auto* roots = app.add_subcommand("roots", "real roots of x^3 + a2 x^2 + a1 x + a0");
    roots->add_option("--a2", plan.a2)->required();
    roots->add_option("--a1", plan.a1)->required();
    roots->add_option("--a0", plan.a0)->required();

    auto* residuals = app.add_subcommand("residuals", "model residuals against a measured curve");
    residuals->add_option("--model", plan.model, "muscle model")->required();
    residuals->add_option("--data", plan.data_path, "curve CSV (pressure_bar,contraction_ratio,force_N)")
        ->required();
    add_config_flags(residuals, st, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (app.got_subcommand(fit_rational)) plan.kind = CommandPlan::Kind::fit_rational;
    else if (app.got_subcommand(fit_poly)) plan.kind = CommandPlan::Kind::fit_polynomial;
    else if (app.got_subcommand(force)) plan.kind = CommandPlan::Kind::force;
    else if (app.got_subcommand(stiff)) plan.kind = CommandPlan::Kind::stiffness;
    else if (app.got_subcommand(adirect)) plan.kind = CommandPlan::Kind::actuator_direct;
    else if (app.got_subcommand(ainverse)) plan.kind = CommandPlan::Kind::actuator_inverse;
    else if (app.got_subcommand(sweep)) plan.kind = CommandPlan::Kind::sweep;
    else if (app.got_subcommand(roots)) plan.kind = CommandPlan::Kind::roots;
    else plan.kind = CommandPlan::Kind::residuals;

    plan.theta_min_set = tmin->count() > 0;
    if (!plan.theta_min_set) plan.theta_min_deg = -plan.theta_max_deg;

    for (const auto& text : st.anchor_texts) plan.anchors_bar.push_back(parse_anchor(text));

    if (!st.config_path.empty()) plan.config = load_model_config(st.config_path);
    merge_overrides(plan.config, st.overrides);
    return plan;
}

namespace {

int run_fit_rational(const CommandPlan& plan, std::ostream& out) {
    const auto geom = geometry_from(plan.config);
    const ContractionAnchor a{plan.anchors_bar[0].first * units::bar_to_pa,
                              plan.anchors_bar[0].second};
    const ContractionAnchor b{plan.anchors_bar[1].first * units::bar_to_pa,
                              plan.anchors_bar[1].second};
    const auto fit = fit_rational_params(a, b, plan.c_bar * units::bar_to_pa, geom);
    out << "c_bar = " << g9(fit.c / units::bar_to_pa) << '\n';
    out << "d_bar = " << g9(fit.d / units::bar_to_pa) << '\n';
    out << "e_bar2 = " << g9(fit.e / (units::bar_to_pa * units::bar_to_pa)) << '\n';
    out << "eps_max_I = " << g9(fit.eps_max_at(a.pressure_pa)) << '\n';
    out << "eps_max_II = " << g9(fit.eps_max_at(b.pressure_pa)) << '\n';
    return 0;
}

int run_fit_polynomial(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
    const auto geom = geometry_from(plan.config);
    std::vector<ContractionAnchor> anchors;
    for (const auto& [p_bar, em] : plan.anchors_bar)
        anchors.push_back({p_bar * units::bar_to_pa, em});
    const auto fit = fit_polynomial_coeffs(anchors, geom);
    for (std::size_t i = 0; i < fit.params.coeffs.size(); ++i)
        out << 'a' << i << "_bar = " << g9(fit.params.coeffs[i] / units::bar_to_pa) << '\n';
    out << "condition_estimate = " << g9(fit.condition_estimate) << '\n';
    out << "wandering_warning = " << (fit.wandering_warning ? "yes" : "no") << '\n';
    if (fit.wandering_warning)
        err << "warning: f(eps) oscillates between anchors (slope changes sign more than twice); "
               "consider fewer anchors\n";
    return 0;
}

int run_force_or_stiffness(const CommandPlan& plan, std::ostream& out, bool stiffness) {
    const auto model = muscle_from(plan.config, plan.model);
    const double control = plan.model == "hogan" ? plan.u : plan.pressure_bar * units::bar_to_pa;
    const double value = stiffness ? muscle_stiffness(model, plan.eps, control)
                                   : muscle_force(model, plan.eps, control);
    out << (stiffness ? "stiffness_N_per_m = " : "force_N = ") << g9(value) << '\n';
    return 0;
}

int run_actuator_direct(const CommandPlan& plan, std::ostream& out) {
    const auto cfg = actuator_from(plan.config, plan.model);
    const double theta = plan.theta_deg * units::deg_to_rad;
    TorqueStiffness ts;
    if (plan.model == "hogan") {
        HoganParams hp{require_key(plan.config.f_max_n, "f_max_N"),
                       require_key(plan.config.hogan_eps_max, "hogan_eps_max")};
        ts = hogan_direct(plan.u1, plan.u2, theta, hp, cfg);
    } else {
        const PressurePair pp{plan.p1_bar * units::bar_to_pa, plan.p2_bar * units::bar_to_pa};
        if (plan.model == "mckibben")
            ts = mckibben_direct(pp, theta, geometry_from(plan.config), cfg);
        else if (plan.model == "festo")
            ts = festo_direct(pp, theta, rational_from(plan.config), cfg);
        else
            throw UsageError("unknown actuator model '" + plan.model + "'");
    }
    out << "torque_Nm = " << g9(ts.torque) << '\n';
    out << "stiffness_Nm_per_rad = " << g9(ts.stiffness) << '\n';
    return 0;
}

int run_actuator_inverse(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
    const auto cfg = actuator_from(plan.config, plan.model);
    const double theta = plan.theta_deg * units::deg_to_rad;
    if (plan.model == "hogan") {
        HoganParams hp{require_key(plan.config.f_max_n, "f_max_N"),
                       require_key(plan.config.hogan_eps_max, "hogan_eps_max")};
        const auto sol = hogan_inverse(theta, plan.stiffness_nm_per_rad, hp, cfg);
        out << "u1 = " << g9(sol.u1) << '\n';
        out << "u2 = " << g9(sol.u2) << '\n';
        out << "feasibility = " << feasibility_name(sol.tag) << '\n';
        if (sol.tag != Feasibility::feasible) {
            err << "infeasible request; clipped suggestion u1 = " << g9(sol.u1_clipped)
                << ", u2 = " << g9(sol.u2_clipped) << '\n';
            return 2;
        }
        return 0;
    }
    InverseSolution sol;
    if (plan.model == "mckibben")
        sol = mckibben_inverse(theta, plan.stiffness_nm_per_rad, plan.torque_nm,
                               geometry_from(plan.config), cfg);
    else if (plan.model == "festo")
        sol = festo_inverse(theta, plan.stiffness_nm_per_rad, rational_from(plan.config), cfg);
    else
        throw UsageError("unknown actuator model '" + plan.model + "'");
    out << "p1_bar = " << g9(sol.pressures.p1 / units::bar_to_pa) << '\n';
    out << "p2_bar = " << g9(sol.pressures.p2 / units::bar_to_pa) << '\n';
    out << "feasibility = " << feasibility_name(sol.tag) << '\n';
    out << "torque_residual_Nm = " << g9(sol.torque_residual) << '\n';
    out << "stiffness_residual_Nm_per_rad = " << g9(sol.stiffness_residual) << '\n';
    if (sol.tag != Feasibility::feasible) {
        err << "infeasible request (" << feasibility_name(sol.tag)
            << "): no pressure pair inside the box achieves the requested state\n";
        return 2;
    }
    return 0;
}

int run_sweep(const CommandPlan& plan, std::ostream& out) {
    const auto cfg = actuator_from(plan.config, plan.model);
    SweepGrid grid{plan.k_min,
                   plan.k_max,
                   plan.k_step,
                   plan.theta_min_deg * units::deg_to_rad,
                   plan.theta_max_deg * units::deg_to_rad,
                   plan.theta_step_deg * units::deg_to_rad};
    SweepModel model;
    if (plan.model == "mckibben")
        model = geometry_from(plan.config);
    else if (plan.model == "festo")
        model = rational_from(plan.config);
    else
        throw UsageError("sweep supports models 'mckibben' and 'festo'");
    const auto rows = sweep_inverse(model, grid, cfg);
    if (plan.out_path.empty())
        out << format_sweep_csv(rows);
    else
        write_sweep_csv(rows, plan.out_path);
    return 0;
}

int run_roots(const CommandPlan& plan, std::ostream& out) {
    const auto r = solve_cubic({plan.a2, plan.a1, plan.a0});
    out << "discriminant = " << g9(r.discriminant) << '\n';
    const char* branch = r.branch == CubicBranch::one_real
                             ? "one_real"
                             : (r.branch == CubicBranch::three_real ? "three_real" : "multiple");
    out << "branch = " << branch << '\n';
    out << "roots =";
    for (int i = 0; i < r.count; ++i) out << ' ' << g9(r.roots[i]);
    out << '\n';
    return 0;
}

int run_residuals(const CommandPlan& plan, std::ostream& out) {
    const auto model = muscle_from(plan.config, plan.model);
    const auto data = load_curve_csv(plan.data_path);
    const auto rep = residual_report(model, data);
    out << "samples = " << data.samples.size() << '\n';
    out << "evaluated = " << rep.residuals.size() << '\n';
    out << "out_of_domain = " << rep.out_of_domain_rows.size() << '\n';
    if (!rep.out_of_domain_rows.empty()) {
        out << "out_of_domain_rows =";
        for (auto row : rep.out_of_domain_rows) out << ' ' << row;
        out << '\n';
    }
    out << "rmse_N = " << g9(rep.rmse) << '\n';
    out << "max_abs_error_N = " << g9(rep.max_abs_error) << '\n';
    return 0;
}

} // namespace

int run(const CommandPlan& plan, std::ostream& out, std::ostream& err) {
    switch (plan.kind) {
    case CommandPlan::Kind::fit_rational: return run_fit_rational(plan, out);
    case CommandPlan::Kind::fit_polynomial: return run_fit_polynomial(plan, out, err);
    case CommandPlan::Kind::force: return run_force_or_stiffness(plan, out, false);
    case CommandPlan::Kind::stiffness: return run_force_or_stiffness(plan, out, true);
    case CommandPlan::Kind::actuator_direct: return run_actuator_direct(plan, out);
    case CommandPlan::Kind::actuator_inverse: return run_actuator_inverse(plan, out, err);
    case CommandPlan::Kind::sweep: return run_sweep(plan, out);
    case CommandPlan::Kind::roots: return run_roots(plan, out);
    case CommandPlan::Kind::residuals: return run_residuals(plan, out);
    }
    throw UsageError("unhandled subcommand");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const auto plan = parse_command(args);
        return run(plan, out, err);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace pam
