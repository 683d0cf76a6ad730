#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "springfold/kinematics.hpp"

namespace springfold {

class infeasible_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A required (xi, phi) value pair for inverse design.
struct Waypoint {
    double xi = 0.0;
    double phi = 0.0;
    double weight = 1.0;
};

inline void validate_waypoints(const std::vector<Waypoint>& wps) {
    if (wps.empty()) throw std::domain_error("waypoints: need at least one");
    for (const auto& w : wps) {
        if (!std::isfinite(w.xi) || w.xi < 0.0 || w.xi >= kPi)
            throw std::domain_error("waypoint: xi must lie in [0, pi)");
        if (!std::isfinite(w.phi) || w.phi > kPi)
            throw std::domain_error("waypoint: phi must lie in (-inf, pi]");
        if (!std::isfinite(w.weight) || w.weight < 0.0)
            throw std::domain_error("waypoint: weight must be non-negative");
    }
    for (std::size_t i = 0; i < wps.size(); ++i)
        for (std::size_t j = i + 1; j < wps.size(); ++j)
            if (std::fabs(wps[i].xi - wps[j].xi) <= 1e-9)
                throw std::domain_error("waypoints: xi values must be pairwise distinct");
}

struct FeasibilityVerdict {
    std::size_t index = 0;
    bool feasible = true;
    std::string reason;
};

struct FeasibilityReport {
    std::vector<FeasibilityVerdict> verdicts;
    bool all_feasible = true;
};

// Screens waypoints against the reachable space of spring-joint curves with
// the given starting fold angle: every curve decreases from phi0_max and
// never drops below the maximum-motion envelope, which finite joints approach
// from above. phi0_max == pi means no starting anchor is known and only the
// hard cap and monotonicity apply.
inline FeasibilityReport check_feasibility(const std::vector<Waypoint>& waypoints,
                                           double phi0_max) {
    validate_waypoints(waypoints);
    require_start_angle(phi0_max);
    const bool anchored = phi0_max < kPi - kPiFoldTol;
    FeasibilityReport report;
    report.verdicts.resize(waypoints.size());
    for (std::size_t i = 0; i < waypoints.size(); ++i) {
        report.verdicts[i].index = i;
        const auto& w = waypoints[i];
        if (w.phi > kPi) {
            report.verdicts[i] = {i, false, "phi above pi"};
            continue;
        }
        if (!anchored) continue;
        if (w.phi > phi0_max + 1e-9) {
            report.verdicts[i] = {i, false, "phi above the starting fold angle"};
            continue;
        }
        const double env = envelope_fold_angle(w.xi, phi0_max);
        if (w.phi < env - 1e-9)
            report.verdicts[i] = {i, false, "phi below the maximum-motion envelope"};
    }
    // phi must be non-increasing in xi.
    std::vector<std::size_t> order(waypoints.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return waypoints[a].xi < waypoints[b].xi; });
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto& prev = waypoints[order[k - 1]];
        const auto& cur = waypoints[order[k]];
        if (cur.phi > prev.phi + 1e-9)
            report.verdicts[order[k]] = {order[k], false, "phi increases with xi (non-monotone)"};
    }
    for (const auto& v : report.verdicts) report.all_feasible = report.all_feasible && v.feasible;
    return report;
}

struct DesignProblem {
    std::vector<Waypoint> waypoints;
    std::size_t n = 2;                // number of reverse folds
    std::size_t max_iterations = 200;
    double tolerance = 1e-6;          // convergence bound on per-waypoint phi error
};

struct DesignSolution {
    SpringJointSpec joint;
    std::vector<double> residuals;  // per-waypoint phi errors, waypoint order
    bool converged = false;
    std::size_t iterations = 0;
};

namespace design_detail {

// Constituents stay strictly inside (0, pi).
inline constexpr double kAngleLo = 1e-9;
inline constexpr double kAngleHi = kPi - 1e-9;

// Solve H x = g for a small dense symmetric positive-ish system (LU with
// partial pivoting).
inline std::vector<double> solve_dense(std::vector<double> H, std::vector<double> g) {
    const std::size_t n = g.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(H[r * n + col]) > std::fabs(H[piv * n + col])) piv = r;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(H[col * n + c], H[piv * n + c]);
            std::swap(g[col], g[piv]);
        }
        const double diag = H[col * n + col];
        if (diag == 0.0) throw std::runtime_error("solve_dense: singular system");
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = H[r * n + col] / diag;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) H[r * n + c] -= f * H[col * n + c];
            g[r] -= f * g[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = g[ri];
        for (std::size_t c = ri + 1; c < n; ++c) s -= H[ri * n + c] * x[c];
        x[ri] = s / H[ri * n + ri];
    }
    return x;
}

inline double cost_of(const std::vector<Waypoint>& wps, const std::vector<double>& angles) {
    double c = 0.0;
    SpringJointSpec joint(angles);
    for (const auto& w : wps) {
        const double r = compound_fold_angle(w.xi, joint) - w.phi;
        c += w.weight * r * r;
    }
    return c;
}

inline void residuals_jacobian(const std::vector<Waypoint>& wps, const std::vector<double>& a,
                               std::vector<double>& r, std::vector<double>& J) {
    const std::size_t m = wps.size();
    const std::size_t n = a.size();
    SpringJointSpec joint(a);
    r.assign(m, 0.0);
    J.assign(m * n, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        const double sw = std::sqrt(wps[j].weight);
        r[j] = sw * (compound_fold_angle(wps[j].xi, joint) - wps[j].phi);
        for (std::size_t k = 0; k < n; ++k)
            J[j * n + k] = sw * reverse_fold_angle_dphi0(wps[j].xi, a[k]);
    }
}

inline double max_unweighted_residual(const std::vector<Waypoint>& wps,
                                      const std::vector<double>& a) {
    SpringJointSpec joint(a);
    double m = 0.0;
    for (const auto& w : wps)
        m = std::max(m, std::fabs(compound_fold_angle(w.xi, joint) - w.phi));
    return m;
}

struct GnRun {
    std::vector<double> angles;
    double max_residual = 0.0;
    std::size_t iterations = 0;
};

// Damped Gauss-Newton on the constituent angles with an adaptive Levenberg
// floor: the damping escalates tenfold (up to 30 times per iteration) until a
// step decreases the cost, then decays. A full-step polish afterwards drives
// the residuals of near-degenerate joints (twin angles leave the Jacobian
// close to singular) down to the tolerance.
inline GnRun gauss_newton_run(const std::vector<Waypoint>& wps, std::vector<double> a,
                              std::size_t lm_iters, std::size_t polish_iters) {
    const std::size_t n = a.size();
    for (auto& v : a) v = std::clamp(v, kAngleLo, kAngleHi);
    std::vector<double> r, J, H, g;
    double cost = cost_of(wps, a);
    double lambda = -1.0;
    GnRun run;
    for (std::size_t it = 0; it < lm_iters; ++it) {
        run.iterations = it + 1;
        residuals_jacobian(wps, a, r, J);
        H.assign(n * n, 0.0);
        g.assign(n, 0.0);
        for (std::size_t j = 0; j < wps.size(); ++j)
            for (std::size_t k = 0; k < n; ++k) {
                g[k] += J[j * n + k] * r[j];
                for (std::size_t l = 0; l < n; ++l) H[k * n + l] += J[j * n + k] * J[j * n + l];
            }
        double diag_max = 1e-300;
        for (std::size_t k = 0; k < n; ++k) diag_max = std::max(diag_max, H[k * n + k]);
        if (lambda < 0.0) lambda = 1e-3 * diag_max;

        bool accepted = false;
        std::vector<double> a_new(n);
        double new_cost = cost;
        for (int damp = 0; damp <= 30 && !accepted; ++damp) {
            std::vector<double> Hd = H;
            for (std::size_t k = 0; k < n; ++k) Hd[k * n + k] += lambda;
            std::vector<double> step;
            try {
                step = solve_dense(std::move(Hd), g);
            } catch (const std::runtime_error&) {
                lambda = std::max(lambda, 1e-14 * diag_max) * 10.0;
                continue;
            }
            for (std::size_t k = 0; k < n; ++k)
                a_new[k] = std::clamp(a[k] - step[k], kAngleLo, kAngleHi);
            new_cost = cost_of(wps, a_new);
            if (new_cost < cost)
                accepted = true;
            else
                lambda = std::max(lambda, 1e-14 * diag_max) * 10.0;
        }
        if (!accepted) break;
        a = a_new;
        const double old_norm = std::sqrt(cost);
        const double new_norm = std::sqrt(new_cost);
        cost = new_cost;
        lambda *= 0.1;
        if (old_norm - new_norm <= 1e-13 * old_norm) break;
    }

    // Full-step polish, keeping the best iterate by residual.
    std::vector<double> best = a;
    double best_res = max_unweighted_residual(wps, a);
    for (std::size_t it = 0; it < polish_iters && best_res > 1e-12; ++it) {
        residuals_jacobian(wps, a, r, J);
        H.assign(n * n, 0.0);
        g.assign(n, 0.0);
        for (std::size_t j = 0; j < wps.size(); ++j)
            for (std::size_t k = 0; k < n; ++k) {
                g[k] += J[j * n + k] * r[j];
                for (std::size_t l = 0; l < n; ++l) H[k * n + l] += J[j * n + k] * J[j * n + l];
            }
        double diag_max = 1e-300;
        for (std::size_t k = 0; k < n; ++k) diag_max = std::max(diag_max, H[k * n + k]);
        for (std::size_t k = 0; k < n; ++k) H[k * n + k] += 1e-14 * diag_max;
        std::vector<double> step;
        try {
            step = solve_dense(std::move(H), g);
        } catch (const std::runtime_error&) {
            break;
        }
        double step_max = 0.0;
        for (double s : step) step_max = std::max(step_max, std::fabs(s));
        const double scale = step_max > 1.0 ? 1.0 / step_max : 1.0;
        for (std::size_t k = 0; k < n; ++k)
            a[k] = std::clamp(a[k] - scale * step[k], kAngleLo, kAngleHi);
        const double res = max_unweighted_residual(wps, a);
        if (res < best_res) {
            best_res = res;
            best = a;
        }
    }
    run.angles = best;
    run.max_residual = best_res;
    return run;
}

}  // namespace design_detail

// Damped Gauss-Newton with analytic Jacobian on unconstrained variables
// u_k, phi0_k = pi * logistic(u_k), so constituents stay inside (0, pi).
// Deterministic; returns the best iterate when not converged.
inline DesignSolution solve_waypoints(const DesignProblem& problem) {
    using namespace design_detail;
    validate_waypoints(problem.waypoints);
    if (problem.n < 1) throw std::domain_error("DesignProblem: n must be >= 1");
    if (!(problem.tolerance > 0.0)) throw std::domain_error("DesignProblem: tolerance must be positive");

    // Feasibility gate: bound by the envelope through the xi = 0 waypoint when
    // present, otherwise only monotonicity and phi <= pi apply.
    double phi0_max = kPi;
    for (const auto& w : problem.waypoints)
        if (w.xi <= 1e-12 && w.phi > 0.0 && w.phi < kPi) phi0_max = w.phi;
    const FeasibilityReport feas = check_feasibility(problem.waypoints, phi0_max);
    if (!feas.all_feasible) {
        std::string why = "solve_waypoints: infeasible waypoints:";
        for (const auto& v : feas.verdicts)
            if (!v.feasible) why += " [" + std::to_string(v.index) + "] " + v.reason + ";";
        throw infeasible_error(why);
    }

    const std::size_t n = problem.n;
    const std::size_t m = problem.waypoints.size();
    const double nd = static_cast<double>(n);

    // Deterministic multi-start: equal angles matching the xi = 0 waypoint
    // when present (else 3*pi/4) with a small stagger to separate the
    // exchangeable parameters, plus an ascending and a descending ramp.
    double base = 0.75 * kPi;
    for (const auto& w : problem.waypoints)
        if (w.xi <= 1e-12) base = (w.phi + (nd - 1.0) * kPi) / nd;
    base = std::clamp(base, 0.1, kPi - 0.1);
    std::vector<std::vector<double>> starts(3, std::vector<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        starts[0][k] = std::clamp(base + 0.1 * (kd - 0.5 * (nd - 1.0)), 0.05, kPi - 0.05);
        starts[1][k] = std::clamp(0.3 + 2.6 * (kd + 0.5) / nd, 0.05, kPi - 0.05);
        starts[2][k] = std::clamp(kPi - 0.2 - 2.0 * (kd + 0.5) / nd, 0.05, kPi - 0.05);
    }

    const std::size_t lm_budget = std::max<std::size_t>(1, (problem.max_iterations * 3) / 4);
    const std::size_t polish_budget = problem.max_iterations - lm_budget;
    GnRun best;
    bool have_best = false;
    for (const auto& a0 : starts) {
        const GnRun run = gauss_newton_run(problem.waypoints, a0, lm_budget, polish_budget);
        if (!have_best || run.max_residual < best.max_residual) {
            best = run;
            have_best = true;
        }
        if (best.max_residual <= 1e-9) break;
    }

    DesignSolution sol;
    std::vector<double> angles = best.angles;
    std::sort(angles.begin(), angles.end());  // canonical: exchangeable parameters
    sol.joint = SpringJointSpec(angles);
    sol.iterations = best.iterations;
    sol.residuals.resize(m);
    double max_res = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        sol.residuals[j] = compound_fold_angle(problem.waypoints[j].xi, sol.joint) -
                           problem.waypoints[j].phi;
        max_res = std::max(max_res, std::fabs(sol.residuals[j]));
    }
    sol.converged = max_res <= problem.tolerance;
    return sol;
}

// Convenience wrapper: start angle at xi = 0 plus a desired fold angle when
// unfolded to xi_unfolded.
inline DesignSolution solve_two_point(double phi0_start, double phi_unfolded, double xi_unfolded,
                                      std::size_t n) {
    if (n < 2) throw std::domain_error("solve_two_point: n must be >= 2");
    DesignProblem problem;
    problem.waypoints = {{0.0, phi0_start, 1.0}, {xi_unfolded, phi_unfolded, 1.0}};
    problem.n = n;
    return solve_waypoints(problem);
}

}  // namespace springfold
