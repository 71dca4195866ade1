#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "planarlab/cycles.hpp"
#include "planarlab/exprio.hpp"
#include "planarlab/linops.hpp"
#include "planarlab/presets.hpp"
#include "planarlab/symplectic.hpp"
#include "planarlab/verification.hpp"

namespace {

using nlohmann::json;
using namespace planarlab;

// Inputs shared by most subcommands.
struct FieldArgs {
    std::vector<std::string> exprs;  // two component expressions
    std::string preset;

    VectorField2 resolve(const char* which) const {
        if (!preset.empty()) {
            auto f = presets::field_by_name(preset);
            if (!f) throw std::invalid_argument(std::string(which) + ": unknown preset '" +
                                                preset + "'");
            return *f;
        }
        if (exprs.size() != 2)
            throw std::invalid_argument(std::string(which) +
                                        ": expected two component expressions or a preset");
        return parse_field(exprs[0], exprs[1]);
    }

    bool provided() const { return !preset.empty() || !exprs.empty(); }
};

void add_field_options(CLI::App* cmd, FieldArgs& args, const std::string& flag,
                       const std::string& preset_flag, const std::string& desc) {
    cmd->add_option(flag, args.exprs, desc + " as two component expressions")->type_size(2);
    cmd->add_option(preset_flag, args.preset,
                    desc + " preset (example1-x, example1-y, vdp, rotation, dilation, "
                           "homogeneous-n<k>)");
}

json field_json(const VectorField2& f) {
    return json::array({format_poly(f.p), format_poly(f.q)});
}

json centralizer_json(const CentralizerReport& rep) {
    json basis = json::array();
    for (const auto& b : rep.basis) basis.push_back(field_json(b));
    json structure;
    if (rep.closed_within_degree && !rep.structure.empty()) {
        structure = json::array();
        for (const auto& plane : rep.structure) {
            json row = json::array();
            for (const auto& line : plane) {
                json cs = json::array();
                for (const auto& c : line) cs.push_back(rat_to_string(c));
                row.push_back(cs);
            }
            structure.push_back(row);
        }
    }
    return json{{"N", rep.degree_bound},
                {"dimension", rep.dimension},
                {"basis", basis},
                {"closed_within_degree", rep.closed_within_degree},
                {"abelian", rep.abelian},
                {"structure_constants", structure}};
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::kStable:
            return "stable";
        case Stability::kUnstable:
            return "unstable";
        default:
            return "non-hyperbolic";
    }
}

json cycle_json(const CycleInfo& c, bool with_samples) {
    json samples = json::array();
    if (with_samples)
        for (const auto& s : c.samples)
            samples.push_back({format_double17(s[0]), format_double17(s[1])});
    return json{{"section_angle", format_double17(c.section_angle)},
                {"radius", format_double17(c.radius)},
                {"period", format_double17(c.period)},
                {"multiplier", format_double17(c.multiplier)},
                {"stability", stability_name(c.stability)},
                {"residual", format_double17(c.residual)},
                {"samples", samples}};
}

json scan_json(const CycleScan& scan, bool with_samples) {
    json cycles = json::array();
    for (const auto& c : scan.cycles) cycles.push_back(cycle_json(c, with_samples));
    json bands = json::array();
    for (const auto& b : scan.center_bands)
        bands.push_back({format_double17(b.r_lo), format_double17(b.r_hi)});
    json failures = json::array();
    for (const auto& f : scan.failures)
        failures.push_back({{"radius", format_double17(f.radius)}, {"error", f.error}});
    return json{{"cycles", cycles}, {"center_bands", bands}, {"failures", failures}};
}

void render_text(const json& value, const std::string& indent) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items()) {
            if (sub.is_object() || (sub.is_array() && !sub.empty() &&
                                    (sub[0].is_object() || sub[0].is_array()))) {
                std::cout << indent << key << ":\n";
                render_text(sub, indent + "  ");
            } else {
                std::cout << indent << key << ": " << (sub.is_string() ? sub.get<std::string>()
                                                                       : sub.dump())
                          << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& sub : value) {
            if (sub.is_object() || sub.is_array()) {
                std::cout << indent << "-\n";
                render_text(sub, indent + "  ");
            } else {
                std::cout << indent << "- "
                          << (sub.is_string() ? sub.get<std::string>() : sub.dump()) << "\n";
            }
        }
    }
}

void emit(bool json_mode, const std::string& command, json inputs, json result) {
    const json report = make_report(command, std::move(inputs), std::move(result));
    if (json_mode) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "command: " << command << "\n";
        render_text(report["inputs"], "  ");
        render_text(report["result"], "");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planarlab: exact Lie-algebraic and numerical limit-cycle laboratory for "
                 "planar polynomial vector fields"};
    app.require_subcommand(1);

    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit a JSON report instead of text");

    FieldArgs x_args, y_args, e_args;
    std::string f_expr, eps_text = "0";
    int degree = kDefaultDegreeBound, n_max = kDefaultDegreeBound;
    double r0 = 1.0, alpha = 0.0, r_min = 0.2, r_max = 2.0;
    bool parallel = false;
    IntegratorConfig cfg;

    auto add_common = [&](CLI::App* cmd, bool with_y = false) {
        cmd->fallthrough();
        add_field_options(cmd, x_args, "--x", "--preset", "field X");
        if (with_y) add_field_options(cmd, y_args, "--y", "--preset-y", "field Y");
        cmd->add_option("--rtol", cfg.rtol, "relative tolerance");
        cmd->add_option("--atol", cfg.atol, "absolute tolerance");
        return cmd;
    };
    auto add_degree = [&](CLI::App* cmd) {
        cmd->add_option("-N,--degree", degree, "degree bound N")
            ->check(CLI::Range(1, kMaxDegreeBound));
    };

    auto* c_bracket = add_common(app.add_subcommand("bracket", "Lie bracket [X, Y]"), true);
    auto* c_div = add_common(app.add_subcommand("divergence", "divergence of X"));
    auto* c_scale = add_common(app.add_subcommand("scale", "rescaled field f X"));
    c_scale->add_option("--f", f_expr, "scalar polynomial f")->required();
    auto* c_cent = add_common(app.add_subcommand("centralizer", "degree-truncated centralizer C_N(X)"));
    add_degree(c_cent);
    auto* c_cmp = add_common(
        app.add_subcommand("compare-centralizers", "necessary-condition comparison of C_N(X) and C_N(fX)"));
    c_cmp->add_option("--f", f_expr, "positive rescaling polynomial f")->required();
    add_degree(c_cmp);
    auto* c_prof = add_common(app.add_subcommand("dimension-profile", "dim C_N(X) for N = 1..N_max"));
    c_prof->add_option("--nmax", n_max, "largest degree bound")->check(CLI::Range(1, kMaxDegreeBound));
    auto* c_fi = add_common(app.add_subcommand("first-integrals", "polynomial first integrals of degree <= N"));
    add_degree(c_fi);
    auto* c_corank = add_common(app.add_subcommand("corank", "report on the operator g -> X.g"));
    add_degree(c_corank);
    auto* c_poisson = add_common(
        app.add_subcommand("poisson-check", "symplectic-lift commutation certificate for X, Y"), true);
    auto* c_polar = add_common(app.add_subcommand("polar", "exact polar form of dr/dtheta"));
    auto* c_ret = add_common(app.add_subcommand("return-map", "first-return radius from the section ray"));
    c_ret->add_option("--r0", r0, "starting radius")->required();
    c_ret->add_option("--alpha", alpha, "section angle");
    auto* c_cycles = add_common(app.add_subcommand("cycles", "scan an annulus for limit cycles"));
    c_cycles->add_option("--rmin", r_min, "inner scan radius")->required();
    c_cycles->add_option("--rmax", r_max, "outer scan radius")->required();
    c_cycles->add_option("--alpha", alpha, "section angle");
    c_cycles->add_flag("--parallel", parallel, "evaluate the scan grid concurrently");
    auto* c_mult = add_common(app.add_subcommand("multiplier", "characteristic multipliers of detected cycles"));
    c_mult->add_option("--rmin", r_min, "inner scan radius")->required();
    c_mult->add_option("--rmax", r_max, "outer scan radius")->required();
    auto* c_inv = add_common(
        app.add_subcommand("invariance", "tangency defect of Y along the cycles of X"), true);
    c_inv->add_option("--rmin", r_min, "inner scan radius")->required();
    c_inv->add_option("--rmax", r_max, "outer scan radius")->required();
    auto* c_probe = add_common(
        app.add_subcommand("probe-perturbation", "centralizer of the perturbed field X + eps E"));
    add_field_options(c_probe, e_args, "--e", "--preset-e", "perturbation field E");
    c_probe->add_option("--eps", eps_text, "exact rational perturbation size");
    add_degree(c_probe);
    auto* c_verify =
        app.add_subcommand("verify-paper-examples", "run the bundled verification suite");
    c_verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {  // help / version
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_bracket->parsed()) {
            const VectorField2 x = x_args.resolve("--x"), y = y_args.resolve("--y");
            const VectorField2 br = lie_bracket(x, y);
            emit(json_mode, "bracket", {{"x", field_json(x)}, {"y", field_json(y)}},
                 {{"bracket", field_json(br)}, {"is_zero", br.is_zero()}});
        } else if (c_div->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            emit(json_mode, "divergence", {{"x", field_json(x)}},
                 {{"divergence", format_poly(divergence(x))}});
        } else if (c_scale->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            const Poly2 f = parse_poly2(f_expr);
            emit(json_mode, "scale", {{"x", field_json(x)}, {"f", format_poly(f)}},
                 {{"field", field_json(scale_field(f, x))}});
        } else if (c_cent->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            emit(json_mode, "centralizer", {{"x", field_json(x)}, {"N", degree}},
                 centralizer_json(centralizer_basis(x, degree)));
        } else if (c_cmp->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            const Poly2 f = parse_poly2(f_expr);
            const CentralizerComparison cmp = compare_centralizers(x, f, degree);
            emit(json_mode, "compare-centralizers",
                 {{"x", field_json(x)}, {"f", format_poly(f)}, {"N", degree}},
                 {{"base", centralizer_json(cmp.base)},
                  {"scaled", centralizer_json(cmp.scaled)},
                  {"dimensions_equal", cmp.dimensions_equal},
                  {"abelian_flags_equal", cmp.abelian_flags_equal},
                  {"necessary_conditions_hold", cmp.necessary_conditions_hold}});
        } else if (c_prof->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            json profile = json::array();
            for (const auto& [n, dim] : dimension_profile(x, n_max))
                profile.push_back({n, dim});
            emit(json_mode, "dimension-profile", {{"x", field_json(x)}, {"nmax", n_max}},
                 {{"profile", profile}});
        } else if (c_fi->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            json ints = json::array();
            for (const Poly2& g : first_integrals(x, degree)) ints.push_back(format_poly(g));
            emit(json_mode, "first-integrals", {{"x", field_json(x)}, {"N", degree}},
                 {{"integrals", ints}});
        } else if (c_corank->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            const OperatorReport rep = derivative_operator_report(x, degree);
            json kernel = json::array();
            for (const Poly2& g : rep.kernel) kernel.push_back(format_poly(g));
            emit(json_mode, "corank", {{"x", field_json(x)}, {"N", degree}},
                 {{"N", rep.degree_bound},
                  {"domain_dimension", rep.domain_dimension},
                  {"codomain_dimension", rep.codomain_dimension},
                  {"rank", rep.rank},
                  {"corank", rep.corank},
                  {"kernel", kernel}});
        } else if (c_poisson->parsed()) {
            const VectorField2 x = x_args.resolve("--x"), y = y_args.resolve("--y");
            const IntegrabilityCertificate cert = integrability_certificate(x, y);
            const VectorField2 br = lie_bracket(x, y);
            emit(json_mode, "poisson-check", {{"x", field_json(x)}, {"y", field_json(y)}},
                 {{"hamiltonian", format_poly(cert.h)},
                  {"moment", format_poly(cert.g)},
                  {"poisson_bracket", format_poly(poisson(cert.h, cert.g))},
                  {"poisson_commutes", cert.poisson_commutes},
                  {"lie_bracket", field_json(br)},
                  {"lie_bracket_zero", br.is_zero()},
                  {"max_gradient_rank", cert.max_gradient_rank}});
        } else if (c_polar->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            const PolarForm form = polar_reduce(x);
            json num = json::array(), den = json::array(), zeros = json::array();
            for (const TrigPoly& t : form.numerator) num.push_back(format_trig(t));
            for (const TrigPoly& t : form.denominator) den.push_back(format_trig(t));
            for (double a : form.denominator_zero_angles) zeros.push_back(format_double17(a));
            emit(json_mode, "polar", {{"x", field_json(x)}},
                 {{"numerator", num},
                  {"denominator", den},
                  {"non_transversal", form.non_transversal},
                  {"denominator_zero_angles", zeros}});
        } else if (c_ret->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            const ReturnMapResult res = return_map_detail(x, r0, alpha, cfg);
            emit(json_mode, "return-map",
                 {{"x", field_json(x)},
                  {"r0", format_double17(r0)},
                  {"alpha", format_double17(alpha)}},
                 {{"radius", format_double17(res.radius)},
                  {"time", format_double17(res.time)},
                  {"point", {format_double17(res.point[0]), format_double17(res.point[1])}}});
        } else if (c_cycles->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            const CycleScan scan = find_cycles(x, r_min, r_max, cfg, parallel, alpha);
            emit(json_mode, "cycles",
                 {{"x", field_json(x)},
                  {"rmin", format_double17(r_min)},
                  {"rmax", format_double17(r_max)}},
                 scan_json(scan, true));
        } else if (c_mult->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            const CycleScan scan = find_cycles(x, r_min, r_max, cfg);
            json cycles = json::array();
            for (const CycleInfo& c : scan.cycles)
                cycles.push_back({{"radius", format_double17(c.radius)},
                                  {"period", format_double17(c.period)},
                                  {"multiplier", format_double17(c.multiplier)},
                                  {"stability", stability_name(c.stability)}});
            emit(json_mode, "multiplier",
                 {{"x", field_json(x)},
                  {"rmin", format_double17(r_min)},
                  {"rmax", format_double17(r_max)}},
                 {{"cycles", cycles}});
        } else if (c_inv->parsed()) {
            const VectorField2 x = x_args.resolve("--x"), y = y_args.resolve("--y");
            const CycleScan scan = find_cycles(x, r_min, r_max, cfg);
            json cycles = json::array();
            for (const CycleInfo& c : scan.cycles)
                cycles.push_back({{"radius", format_double17(c.radius)},
                                  {"defect", format_double17(invariance_defect(x, c, y))}});
            emit(json_mode, "invariance",
                 {{"x", field_json(x)},
                  {"y", field_json(y)},
                  {"rmin", format_double17(r_min)},
                  {"rmax", format_double17(r_max)}},
                 {{"cycles", cycles}});
        } else if (c_probe->parsed()) {
            const VectorField2 x = x_args.resolve("--x");
            const VectorField2 e =
                e_args.provided() ? e_args.resolve("--e") : VectorField2{};
            const Rat eps = rat_from_string(eps_text);
            emit(json_mode, "probe-perturbation",
                 {{"x", field_json(x)},
                  {"e", field_json(e)},
                  {"eps", rat_to_string(eps)},
                  {"N", degree}},
                 centralizer_json(commuting_perturbation_probe(x, e, eps, degree)));
        } else if (c_verify->parsed()) {
            const auto results = verification::run_all();
            json checks = json::array();
            for (const auto& r : results)
                checks.push_back({{"id", r.id},
                                  {"claim", r.claim},
                                  {"computed", r.computed},
                                  {"pass", r.pass}});
            const bool ok = verification::all_passed(results);
            if (json_mode) {
                emit(true, "verify-paper-examples", json::object(),
                     {{"checks", checks}, {"all_passed", ok}});
            } else {
                for (const auto& r : results)
                    std::printf("%-24s %-4s  %s  [%s]\n", r.id.c_str(),
                                r.pass ? "PASS" : "FAIL", r.claim.c_str(),
                                r.computed.c_str());
                std::printf("%s\n", ok ? "all checks passed" : "SOME CHECKS FAILED");
            }
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        emit(json_mode, "error", json::object(),
             {{"error", e.name()}, {"message", e.what()}});
        std::cerr << "numerical failure: " << e.name() << ": " << e.what() << "\n";
        return 3;
    }
    return 0;
}
