// springfold command-line tool: kinematic curves, inverse design, crease
// pattern generation, flat-foldability validation, and the closed-form vs
// loop-closure oracle grid.
//
// Exit codes: 0 success, 2 malformed input, 3 domain error, 4 infeasible
// design, 5 validation failure, 6 oracle error above threshold.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "springfold/springfold.hpp"

namespace {

using namespace springfold;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitInvalidPattern = 5;
constexpr int kExitOracle = 6;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

std::string out_path(const CliConfig& cfg, const std::string& name) {
    if (!name.empty() && name.front() == '/') return name;
    if (cfg.out_dir.empty() || cfg.out_dir == ".") return name;
    return cfg.out_dir + "/" + name;
}

SpringJointSpec joint_from_cli(const std::vector<std::string>& phi0_tokens,
                               const std::string& joint_file) {
    if (!joint_file.empty())
        return joint_from_json(nlohmann::json::parse(read_file(joint_file)));
    if (phi0_tokens.empty())
        throw std::invalid_argument("need --phi0 angles or --joint file");
    return SpringJointSpec(parse_angle_list(phi0_tokens));
}

int cmd_kinematics(const CliConfig& cfg, const std::vector<std::string>& phi0_tokens,
                   const std::string& joint_file, int samples, const std::string& out) {
    const SpringJointSpec joint = joint_from_cli(phi0_tokens, joint_file);
    const KinematicCurve curve = sample_curve(joint, static_cast<std::size_t>(samples));
    if (!out.empty()) write_file(out_path(cfg, out), curve_to_csv(curve));

    const double start = compound_start_angle(joint);
    std::cout << "joint: n=" << joint.size() << ", compound start angle = " << format_full(start)
              << "\n";
    if (joint.all_pi_folds()) {
        std::cout << "all constituents are pi folds: constant curve at phi = pi\n";
        return kExitOk;
    }
    std::cout << "phi(pi) = " << format_full(compound_fold_angle(kPi, joint)) << "\n";
    if (const auto hard = find_hard_stop(joint))
        std::cout << "hard stop (phi = -pi) at xi = " << format_full(*hard) << "\n";
    else
        std::cout << "hard stop: none (curve never reaches -pi)\n";
    const double lo = compound_fold_angle(kPi, joint);
    if (start >= 0.0 && lo <= 0.0)
        std::cout << "phi = 0 crossing at xi = " << format_full(invert_dihedral(0.0, joint))
                  << "\n";
    else
        std::cout << "phi = 0 crossing: none\n";
    if (!out.empty()) std::cout << "curve csv: " << out_path(cfg, out) << "\n";
    return kExitOk;
}

int cmd_design(const CliConfig& cfg, const std::string& waypoints_file, int n_override,
               const std::string& out) {
    DesignProblem problem =
        design_problem_from_json(nlohmann::json::parse(read_file(waypoints_file)));
    if (n_override > 0) problem.n = static_cast<std::size_t>(n_override);
    const DesignSolution sol = solve_waypoints(problem);
    const std::string doc = design_solution_to_json(sol).dump(2) + "\n";
    if (!out.empty()) write_file(out_path(cfg, out), doc);
    std::cout << doc;
    std::cout << (sol.converged ? "converged" : "did not converge") << " after " << sol.iterations
              << " iterations\n";
    return kExitOk;
}

int cmd_generate(const CliConfig& cfg, const std::string& kind, const std::string& params_file,
                 const std::string& out_prefix, bool force) {
    const nlohmann::json params = nlohmann::json::parse(read_file(params_file));
    CreasePattern cp;
    std::optional<ModularUnitsResult> modular;
    if (kind == "straight") {
        cp = gen_straight_spring_joint(straight_params_from_json(params));
    } else if (kind == "tilted") {
        cp = gen_tilted_spring_joint(tilted_params_from_json(params));
    } else if (kind == "miura") {
        cp = gen_miura_with_spring_joints(miura_spec_from_json(params));
    } else if (kind == "modular") {
        const ModularParams p = modular_params_from_json(params);
        modular = gen_modular_units(p.joint, p.unit_length, p.unit_width);
        cp = modular->layout;
    } else if (kind == "modular-tilted") {
        const ModularParams p = modular_params_from_json(params);
        modular = gen_tilted_modular_units(p.joint, p.unit_length, p.unit_width);
        cp = modular->layout;
    } else {
        throw std::invalid_argument("unknown kind '" + kind +
                                    "' (straight|tilted|miura|modular|modular-tilted)");
    }

    const FlatFoldabilityReport report = validate_flat_foldable(cp, cfg.validate_tol);
    if (!report.all_pass && !force) {
        std::cerr << "generated pattern fails flat-foldability validation; use --force to write\n";
        return kExitInvalidPattern;
    }
    write_file(out_path(cfg, out_prefix + ".fold"), write_fold(cp));
    write_file(out_path(cfg, out_prefix + ".svg"), write_svg(cp, cfg.svg));
    std::cout << "wrote " << out_path(cfg, out_prefix + ".fold") << " and "
              << out_path(cfg, out_prefix + ".svg") << "\n";
    if (modular) {
        write_file(out_path(cfg, out_prefix + ".units.json"),
                   modular_result_to_json(*modular).dump(2) + "\n");
        std::cout << "wrote " << out_path(cfg, out_prefix + ".units.json") << "\n";
    }
    std::cout << "interior vertices: " << report.vertices.size() << ", flat-foldable: "
              << (report.all_pass ? "yes" : "NO (forced)") << "\n";
    return kExitOk;
}

int cmd_validate(const CliConfig& cfg, const std::string& fold_file) {
    const CreasePattern cp = read_fold(read_file(fold_file));
    const FlatFoldabilityReport report = validate_flat_foldable(cp, cfg.validate_tol);
    std::printf("%8s %8s %18s %10s %6s\n", "vertex", "degree", "kawasaki_defect", "maekawa",
                "pass");
    for (const auto& v : report.vertices)
        std::printf("%8d %8zu %18.3e %10d %6s\n", v.vertex, v.degree, v.kawasaki_defect,
                    v.maekawa_balance, v.flat_foldable ? "yes" : "NO");
    std::printf("pattern verdict: %s (%zu interior vertices)\n",
                report.all_pass ? "flat-foldable" : "NOT flat-foldable", report.vertices.size());
    return report.all_pass ? kExitOk : kExitInvalidPattern;
}

int cmd_oracle(const CliConfig& cfg, int grid, double threshold, const std::string& out) {
    const OracleGrid result = oracle_comparison_grid(grid);
    if (!out.empty()) write_file(out_path(cfg, out), oracle_grid_to_csv(result));
    std::cout << "grid " << grid << "x" << grid
              << ", max |closed form - oracle| = " << format_full(result.max_abs_err) << "\n";
    if (result.max_abs_err > threshold) {
        std::cerr << "oracle disagreement above threshold " << threshold << "\n";
        return kExitOracle;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spring-joint origami: kinematics, inverse design, and crease patterns"};
    app.require_subcommand(1);

    std::string config_file;
    app.add_option("--config", config_file, "flat key=value configuration file");

    auto* kin = app.add_subcommand("kinematics", "sample a joint's fold-angle curve");
    std::vector<std::string> phi0_tokens;
    std::string joint_file, kin_out;
    int samples = -1;
    kin->add_option("--phi0", phi0_tokens, "constituent angles, e.g. 3pi/4 x4");
    kin->add_option("--joint", joint_file, "joint JSON file");
    kin->add_option("--samples", samples, "sample count (>= 2)");
    kin->add_option("--out", kin_out, "output CSV path");

    auto* des = app.add_subcommand("design", "solve constituent angles from waypoints");
    std::string waypoints_file, design_out;
    int n_override = -1;
    des->add_option("--waypoints", waypoints_file, "DesignProblem JSON file")->required();
    des->add_option("--n", n_override, "override the reverse-fold count");
    des->add_option("--out", design_out, "solution JSON path");

    auto* gen = app.add_subcommand("generate", "emit a crease pattern as FOLD + SVG");
    std::string kind, params_file, gen_out = "pattern";
    bool force = false;
    gen->add_option("--kind", kind, "straight|tilted|miura|modular|modular-tilted")->required();
    gen->add_option("--params", params_file, "parameter JSON file")->required();
    gen->add_option("--out", gen_out, "output prefix");
    gen->add_flag("--force", force, "write even if validation fails");

    auto* val = app.add_subcommand("validate", "flat-foldability report for a FOLD file");
    std::string fold_file;
    val->add_option("fold", fold_file, "FOLD file")->required();

    auto* orc = app.add_subcommand("oracle", "closed form vs loop-closure comparison grid");
    int grid = -1;
    double threshold = -1.0;
    std::string oracle_out;
    orc->add_option("--grid", grid, "grid size per axis");
    orc->add_option("--threshold", threshold, "max tolerated |error|");
    orc->add_option("--out", oracle_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitBadInput;
    }

    try {
        CliConfig cfg = config_file.empty() ? springfold::default_config()
                                            : springfold::load_config(config_file);
        if (samples > 0) cfg.samples = samples;
        if (grid > 0) cfg.oracle_grid = grid;
        if (threshold > 0) cfg.oracle_tol = threshold;
        cfg.validate();

        if (kin->parsed())
            return cmd_kinematics(cfg, phi0_tokens, joint_file, cfg.samples, kin_out);
        if (des->parsed()) return cmd_design(cfg, waypoints_file, n_override, design_out);
        if (gen->parsed()) return cmd_generate(cfg, kind, params_file, gen_out, force);
        if (val->parsed()) return cmd_validate(cfg, fold_file);
        if (orc->parsed()) return cmd_oracle(cfg, cfg.oracle_grid, cfg.oracle_tol, oracle_out);
    } catch (const springfold::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const springfold::construction_error& e) {
        std::cerr << "construction failure: " << e.what() << "\n";
        return kExitDomain;
    } catch (const springfold::geometry_error& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const springfold::malformed_graph_error& e) {
        std::cerr << "malformed pattern: " << e.what() << "\n";
        return kExitInvalidPattern;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::range_error& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
