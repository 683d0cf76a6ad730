#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "springfold/crease_pattern.hpp"
#include "springfold/kinematics.hpp"

namespace springfold {

inline constexpr double kDegPerRad = 180.0 / kPi;

inline double radians_to_degrees(double rad) { return rad * kDegPerRad; }

// Inverse of radians_to_degrees, nudged by at most one ulp so that
// re-serializing reproduces the exact degree value. Keeps FOLD round trips
// byte-identical.
inline double degrees_to_radians_stable(double deg) {
    double rad = deg / kDegPerRad;
    if (radians_to_degrees(rad) == deg) return rad;
    const double up = std::nextafter(rad, std::numeric_limits<double>::infinity());
    if (radians_to_degrees(up) == deg) return up;
    const double dn = std::nextafter(rad, -std::numeric_limits<double>::infinity());
    if (radians_to_degrees(dn) == deg) return dn;
    return rad;
}

// FOLD (https://github.com/edemaine/fold) subset: file_spec, file_classes,
// vertices_coords, edges_vertices, edges_assignment, edges_foldAngle
// (degrees, signed; null on border edges). Keys emitted in alphabetical
// order with full double precision, so identical patterns serialize to
// identical bytes.
inline std::string write_fold(const CreasePattern& cp) {
    std::string out = "{\n";
    out += "  \"edges_assignment\": [";
    for (std::size_t i = 0; i < cp.creases.size(); ++i) {
        if (i) out += ", ";
        out += '"';
        out += assignment_code(cp.creases[i].assignment);
        out += '"';
    }
    out += "],\n";
    out += "  \"edges_foldAngle\": [";
    for (std::size_t i = 0; i < cp.creases.size(); ++i) {
        if (i) out += ", ";
        if (cp.creases[i].assignment == CreaseAssignment::Border)
            out += "null";
        else
            out += format_full(radians_to_degrees(cp.creases[i].fold_angle));
    }
    out += "],\n";
    out += "  \"edges_vertices\": [";
    for (std::size_t i = 0; i < cp.creases.size(); ++i) {
        if (i) out += ", ";
        out += '[' + std::to_string(cp.creases[i].v1) + ',' + std::to_string(cp.creases[i].v2) + ']';
    }
    out += "],\n";
    out += "  \"file_classes\": [\"creasePattern\"],\n";
    out += "  \"file_spec\": 1.1,\n";
    out += "  \"vertices_coords\": [";
    for (std::size_t i = 0; i < cp.vertices.size(); ++i) {
        if (i) out += ", ";
        out += '[' + format_full(cp.vertices[i].x) + ',' + format_full(cp.vertices[i].y) + ']';
    }
    out += "]\n}\n";
    return out;
}

inline CreasePattern read_fold(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("vertices_coords") || !doc.contains("edges_vertices"))
        throw std::invalid_argument("read_fold: missing vertices_coords/edges_vertices");
    CreasePattern cp;
    for (const auto& v : doc.at("vertices_coords")) {
        if (!v.is_array() || v.size() < 2)
            throw std::invalid_argument("read_fold: bad vertex entry");
        cp.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    const auto& edges = doc.at("edges_vertices");
    const auto& assigns = doc.at("edges_assignment");
    if (assigns.size() != edges.size())
        throw std::invalid_argument("read_fold: edges_assignment size mismatch");
    const bool has_angles = doc.contains("edges_foldAngle");
    if (has_angles && doc.at("edges_foldAngle").size() != edges.size())
        throw std::invalid_argument("read_fold: edges_foldAngle size mismatch");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Crease c;
        c.v1 = edges[i][0].get<int>();
        c.v2 = edges[i][1].get<int>();
        const std::string code = assigns[i].get<std::string>();
        if (code.size() != 1) throw std::invalid_argument("read_fold: bad assignment string");
        c.assignment = assignment_from_code(code[0]);
        c.fold_angle = 0.0;
        if (has_angles && c.assignment != CreaseAssignment::Border) {
            const auto& fa = doc.at("edges_foldAngle")[i];
            if (!fa.is_null()) c.fold_angle = degrees_to_radians_stable(fa.get<double>());
        }
        cp.creases.push_back(c);
    }
    return cp;
}

}  // namespace springfold
