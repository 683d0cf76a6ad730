#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "springfold/design.hpp"
#include "springfold/generators.hpp"
#include "springfold/kinematics.hpp"

namespace springfold {

// Parses "pi", "3pi/4", "-pi/2", "2pi", "0.5", "1e-3". The paper's parameters
// are all rational multiples of pi, so the CLI accepts them verbatim.
inline double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_angle: empty string");
    double sign = 1.0;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = -1.0;
        ++pos;
    }
    const std::size_t pi_at = s.find("pi", pos);
    if (pi_at == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(s.substr(pos), &used);
        if (used != s.size() - pos) throw std::invalid_argument("parse_angle: trailing characters");
        return sign * v;
    }
    double coef = 1.0;
    if (pi_at > pos) {
        std::size_t used = 0;
        coef = std::stod(s.substr(pos, pi_at - pos), &used);
        if (used != pi_at - pos) throw std::invalid_argument("parse_angle: bad coefficient");
    }
    double div = 1.0;
    std::size_t rest = pi_at + 2;
    if (rest < s.size()) {
        if (s[rest] != '/') throw std::invalid_argument("parse_angle: expected '/' after pi");
        std::size_t used = 0;
        div = std::stod(s.substr(rest + 1), &used);
        if (used != s.size() - rest - 1) throw std::invalid_argument("parse_angle: bad divisor");
        if (div == 0.0) throw std::invalid_argument("parse_angle: division by zero");
    }
    return sign * coef * kPi / div;
}

// Angle list tokens; "x4" repeats the previous angle. "3pi/4 x4" is the
// four-fold equal-angle joint.
inline std::vector<double> parse_angle_list(const std::vector<std::string>& tokens) {
    std::vector<double> out;
    for (const auto& tok : tokens) {
        if (tok.size() > 1 && (tok[0] == 'x' || tok[0] == 'X') &&
            std::isdigit(static_cast<unsigned char>(tok[1]))) {
            if (out.empty()) throw std::invalid_argument("angle list: repetition without a value");
            const long reps = std::stol(tok.substr(1));
            if (reps < 1) throw std::invalid_argument("angle list: repetition below 1");
            for (long i = 1; i < reps; ++i) out.push_back(out.back());
        } else {
            out.push_back(parse_angle(tok));
        }
    }
    return out;
}

inline double angle_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_angle(j.get<std::string>());
    return j.get<double>();
}

inline SpringJointSpec joint_from_json(const nlohmann::json& j) {
    const nlohmann::json& arr = j.is_object() ? j.at("constituent_angles") : j;
    std::vector<std::string> tokens;
    for (const auto& a : arr)
        tokens.push_back(a.is_string() ? a.get<std::string>() : format_full(a.get<double>()));
    return SpringJointSpec(parse_angle_list(tokens));
}

inline nlohmann::json joint_to_json(const SpringJointSpec& joint) {
    return {{"constituent_angles", joint.constituent_angles}};
}

inline DesignProblem design_problem_from_json(const nlohmann::json& j) {
    DesignProblem p;
    for (const auto& w : j.at("waypoints")) {
        Waypoint wp;
        wp.xi = angle_from_json(w.at("xi"));
        wp.phi = angle_from_json(w.at("phi"));
        wp.weight = w.value("weight", 1.0);
        p.waypoints.push_back(wp);
    }
    p.n = j.at("n").get<std::size_t>();
    if (j.contains("tolerance")) p.tolerance = j.at("tolerance").get<double>();
    if (j.contains("max_iterations")) p.max_iterations = j.at("max_iterations").get<std::size_t>();
    return p;
}

inline nlohmann::json design_problem_to_json(const DesignProblem& p) {
    nlohmann::json wps = nlohmann::json::array();
    for (const auto& w : p.waypoints)
        wps.push_back({{"xi", w.xi}, {"phi", w.phi}, {"weight", w.weight}});
    return {{"waypoints", wps}, {"n", p.n}, {"tolerance", p.tolerance}};
}

inline nlohmann::json design_solution_to_json(const DesignSolution& s) {
    return {{"constituent_angles", s.joint.constituent_angles},
            {"residuals", s.residuals},
            {"converged", s.converged},
            {"iterations", s.iterations}};
}

inline DesignSolution design_solution_from_json(const nlohmann::json& j) {
    DesignSolution s;
    s.joint = SpringJointSpec(j.at("constituent_angles").get<std::vector<double>>());
    s.residuals = j.at("residuals").get<std::vector<double>>();
    s.converged = j.at("converged").get<bool>();
    s.iterations = j.at("iterations").get<std::size_t>();
    return s;
}

// Generator parameter documents mirror the param types.
inline StraightJointParams straight_params_from_json(const nlohmann::json& j) {
    StraightJointParams p;
    p.joint = joint_from_json(j.at("joint"));
    p.strip_width = j.value("strip_width", p.strip_width);
    p.pleat_width = j.value("pleat_width", p.pleat_width);
    return p;
}

inline TiltedJointParams tilted_params_from_json(const nlohmann::json& j) {
    TiltedJointParams p;
    p.d = j.at("d").get<double>();
    p.l = j.at("l").get<double>();
    p.n = j.at("n").get<std::size_t>();
    p.pleat_width = j.value("pleat_width", p.pleat_width);
    return p;
}

inline MiuraSubstitutionSpec miura_spec_from_json(const nlohmann::json& j) {
    MiuraSubstitutionSpec s;
    s.rows = j.value("rows", s.rows);
    s.cols = j.value("cols", s.cols);
    s.panel_width = j.value("panel_width", s.panel_width);
    s.panel_height = j.value("panel_height", s.panel_height);
    if (j.contains("miura_angle")) s.miura_angle = angle_from_json(j.at("miura_angle"));
    s.joint = joint_from_json(j.at("joint"));
    return s;
}

struct ModularParams {
    SpringJointSpec joint;
    double unit_length = 2.0;
    double unit_width = 1.0;
};

inline ModularParams modular_params_from_json(const nlohmann::json& j) {
    ModularParams p;
    p.joint = joint_from_json(j.at("joint"));
    p.unit_length = j.value("unit_length", p.unit_length);
    p.unit_width = j.value("unit_width", p.unit_width);
    return p;
}

inline nlohmann::json modular_result_to_json(const ModularUnitsResult& r) {
    nlohmann::json units = nlohmann::json::array();
    for (const auto& u : r.units)
        units.push_back({{"index", u.index}, {"mirrored", u.mirrored}, {"open_cut", u.open_cut}});
    return {{"vertex_angles", r.spec.vertex_angles},
            {"unit_length", r.spec.unit_length},
            {"unit_width", r.spec.unit_width},
            {"unit_count", r.spec.unit_count},
            {"units", units}};
}

}  // namespace springfold
