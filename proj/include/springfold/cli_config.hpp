#pragma once

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include "springfold/svg.hpp"

namespace springfold {

// Flat key=value configuration; CLI flags override these values.
struct CliConfig {
    double validate_tol = 1e-9;
    double oracle_tol = 1e-9;
    int samples = 201;
    int oracle_grid = 50;
    std::string out_dir = ".";
    SvgStyle svg;

    void validate() const {
        if (!(validate_tol > 0.0) || !(oracle_tol > 0.0))
            throw std::invalid_argument("config: tolerances must be positive");
        if (samples < 2) throw std::invalid_argument("config: samples must be >= 2");
        if (oracle_grid < 2) throw std::invalid_argument("config: oracle_grid must be >= 2");
    }
};

inline CliConfig default_config() {
    CliConfig cfg;
    if (const char* dir = std::getenv("SPRINGFOLD_OUT_DIR"); dir && *dir) cfg.out_dir = dir;
    return cfg;
}

inline CliConfig load_config(const std::string& path) {
    CliConfig cfg = default_config();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (trimmed.empty()) continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value at line " + std::to_string(lineno));
        const std::string key = trimmed.substr(0, eq);
        const std::string value = trimmed.substr(eq + 1);
        if (key == "validate_tol")
            cfg.validate_tol = std::stod(value);
        else if (key == "oracle_tol")
            cfg.oracle_tol = std::stod(value);
        else if (key == "samples")
            cfg.samples = std::stoi(value);
        else if (key == "oracle_grid")
            cfg.oracle_grid = std::stoi(value);
        else if (key == "out_dir")
            cfg.out_dir = value;
        else if (key == "svg_stroke")
            cfg.svg.stroke_width = std::stod(value);
        else if (key == "svg_border_stroke")
            cfg.svg.border_stroke_width = std::stod(value);
        else if (key == "svg_valley_dash")
            cfg.svg.valley_dash = value;
        else
            throw std::invalid_argument("config: unknown key '" + key + "' at line " +
                                        std::to_string(lineno));
    }
    cfg.validate();
    return cfg;
}

}  // namespace springfold
