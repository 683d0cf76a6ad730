#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "springfold/geometry.hpp"

namespace springfold {

// Tolerance under which a starting fold angle counts as a pi fold.
inline constexpr double kPiFoldTol = 1e-12;

inline bool is_pi_fold(double phi0) { return std::fabs(phi0 - kPi) <= kPiFoldTol; }

inline void require_dihedral(double xi) {
    if (!std::isfinite(xi) || xi < 0.0 || xi > kPi)
        throw std::domain_error("dihedral angle xi must lie in [0, pi]");
}

inline void require_start_angle(double phi0) {
    if (!std::isfinite(phi0) || phi0 < 0.0 || phi0 > kPi)
        throw std::domain_error("starting fold angle phi0 must lie in [0, pi]");
}

// Ordered list of constituent reverse-fold starting angles; the joint's genome.
// A spec with n == 1 degenerates to a plain reverse fold.
struct SpringJointSpec {
    std::vector<double> constituent_angles;

    SpringJointSpec() = default;
    explicit SpringJointSpec(std::vector<double> angles) : constituent_angles(std::move(angles)) {
        validate();
    }

    std::size_t size() const { return constituent_angles.size(); }

    void validate() const {
        if (constituent_angles.empty())
            throw std::domain_error("SpringJointSpec: needs at least one reverse fold");
        for (double a : constituent_angles) {
            if (!std::isfinite(a) || a <= 0.0 || a > kPi)
                throw std::domain_error("SpringJointSpec: constituent angles must lie in (0, pi]");
        }
    }

    bool all_pi_folds() const {
        for (double a : constituent_angles)
            if (!is_pi_fold(a)) return false;
        return true;
    }

    static SpringJointSpec equal(std::size_t n, double phi0) {
        return SpringJointSpec(std::vector<double>(n, phi0));
    }
};

// Fold angle of a single reverse fold as a function of the pleat dihedral angle.
// phi0 == pi is the constant pi-fold case.
inline double reverse_fold_angle(double xi, double phi0) {
    require_dihedral(xi);
    require_start_angle(phi0);
    if (is_pi_fold(phi0)) return kPi;
    return 2.0 * std::atan(std::cos(xi / 2.0) * std::tan(phi0 / 2.0));
}

// d(reverse_fold_angle)/d(phi0) for fixed xi; used by the design solver.
inline double reverse_fold_angle_dphi0(double xi, double phi0) {
    require_dihedral(xi);
    require_start_angle(phi0);
    const double c = std::cos(xi / 2.0);
    const double t = std::tan(phi0 / 2.0);
    return c * (1.0 + t * t) / (1.0 + c * c * t * t);
}

// Fold angle of the compound joint at xi = 0. Summed in the serial order
// phi0^0 - pi + phi0^1 - pi + ... so the n == 2 case reproduces the dual
// formula term for term.
inline double compound_start_angle(const SpringJointSpec& joint) {
    joint.validate();
    double acc = joint.constituent_angles[0];
    for (std::size_t k = 1; k < joint.size(); ++k)
        acc = acc - kPi + joint.constituent_angles[k];
    return acc;
}

// Fold angle of the compound joint: n reverse folds interleaved with (n-1)
// opposite-sign pi folds. Monotone non-increasing in xi; may fall below -pi,
// physical validity is the caller's job via find_hard_stop.
inline double compound_fold_angle(double xi, const SpringJointSpec& joint) {
    require_dihedral(xi);
    joint.validate();
    double acc = reverse_fold_angle(xi, joint.constituent_angles[0]);
    for (std::size_t k = 1; k < joint.size(); ++k)
        acc = acc - kPi + reverse_fold_angle(xi, joint.constituent_angles[k]);
    return acc;
}

// Limiting curve of spring joints as the constituent count grows and the
// constituent angles approach pi, for a given starting fold angle phi0_max.
inline double envelope_fold_angle(double xi, double phi0_max) {
    require_start_angle(phi0_max);
    if (!std::isfinite(xi) || xi < 0.0 || xi > kPi)
        throw std::domain_error("envelope_fold_angle: xi must lie in [0, pi]");
    if (std::fabs(phi0_max - kPi) <= kPiFoldTol) return kPi;
    if (xi >= kPi)
        throw std::domain_error("envelope_fold_angle: secant singularity at xi = pi");
    return (phi0_max - kPi) / std::cos(xi / 2.0) + kPi;
}

// The envelope diverges to -inf as xi -> pi whenever phi0_max < pi.
inline bool envelope_unbounded(double phi0_max) {
    require_start_angle(phi0_max);
    return phi0_max < kPi - kPiFoldTol;
}

// Unique xi in [0, pi] with compound_fold_angle(xi) == phi_target, by
// bisection to |dxi| <= 1e-12. Requires at least one constituent in (0, pi).
inline double invert_dihedral(double phi_target, const SpringJointSpec& joint) {
    joint.validate();
    if (!std::isfinite(phi_target)) throw std::domain_error("invert_dihedral: non-finite target");
    if (joint.all_pi_folds())
        throw std::domain_error("invert_dihedral: all constituents are pi folds (constant curve)");
    const double hi_val = compound_fold_angle(0.0, joint);
    const double lo_val = compound_fold_angle(kPi, joint);
    const double slack = 1e-12;
    if (phi_target > hi_val + slack || phi_target < lo_val - slack)
        throw std::range_error("invert_dihedral: phi_target outside reachable interval");
    // The curve is flat at the endpoints (d(phi)/d(xi) = 0 at xi = 0), so
    // endpoint targets resolve exactly rather than by bisection.
    if (phi_target >= hi_val) return 0.0;
    if (phi_target <= lo_val) return kPi;
    double lo = 0.0, hi = kPi;
    // compound is decreasing: f(lo) >= target >= f(hi)
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (compound_fold_angle(mid, joint) >= phi_target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Dihedral angle at which the compound fold angle reaches -pi and the pleats
// collide, or nullopt if the curve never reaches -pi on [0, pi].
inline std::optional<double> find_hard_stop(const SpringJointSpec& joint) {
    joint.validate();
    const double start = compound_start_angle(joint);
    const double end = compound_fold_angle(kPi, joint);
    if (start < -kPi || end > -kPi) return std::nullopt;
    if (start == -kPi) return 0.0;
    double lo = 0.0, hi = kPi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (compound_fold_angle(mid, joint) >= -kPi)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Sampled (xi, phi) trajectory of a joint over the dihedral-angle domain.
struct KinematicCurve {
    SpringJointSpec joint;
    std::vector<std::pair<double, double>> samples;  // (xi, phi), xi strictly increasing
};

inline KinematicCurve sample_curve(const SpringJointSpec& joint, std::size_t num_samples) {
    if (num_samples < 2) throw std::domain_error("sample_curve: num_samples must be >= 2");
    KinematicCurve curve;
    curve.joint = joint;
    curve.samples.reserve(num_samples);
    for (std::size_t i = 0; i < num_samples; ++i) {
        const double xi = kPi * static_cast<double>(i) / static_cast<double>(num_samples - 1);
        curve.samples.emplace_back(xi, compound_fold_angle(xi, joint));
    }
    return curve;
}

inline std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// CSV with header "xi,phi", full double precision.
inline std::string curve_to_csv(const KinematicCurve& curve) {
    std::string out = "xi,phi\n";
    for (const auto& [xi, phi] : curve.samples) {
        out += format_full(xi);
        out += ',';
        out += format_full(phi);
        out += '\n';
    }
    return out;
}

}  // namespace springfold
