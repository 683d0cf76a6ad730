#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "springfold/geometry.hpp"
#include "springfold/kinematics.hpp"

namespace springfold {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
};

struct Mat3 {
    // Row-major.
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }

    Vec3 apply(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 mul(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i * 3 + k] * o.m[k * 3 + j];
                r.m[i * 3 + j] = s;
            }
        return r;
    }
    double dist_from_identity() const {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double d = m[i * 3 + j] - (i == j ? 1.0 : 0.0);
                s += d * d;
            }
        return std::sqrt(s);
    }

    // Rodrigues rotation about a unit axis.
    static Mat3 rotation(const Vec3& axis, double angle) {
        const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
        const double x = axis.x, y = axis.y, z = axis.z;
        Mat3 r;
        r.m = {t * x * x + c,     t * x * y - s * z, t * x * z + s * y,
               t * x * y + s * z, t * y * y + c,     t * y * z - s * x,
               t * x * z - s * y, t * y * z + s * x, t * z * z + c};
        return r;
    }
};

// Rigid degree-4 vertex given by its four sector angles in cyclic order.
struct Degree4Vertex {
    std::array<double, 4> sectors;

    explicit Degree4Vertex(const std::array<double, 4>& s) : sectors(s) { validate(); }

    void validate() const {
        double sum = 0.0;
        for (double s : sectors) {
            if (!(s > 0.0 && s < kPi)) throw std::domain_error("Degree4Vertex: sector outside (0, pi)");
            sum += s;
        }
        if (std::fabs(sum - 2.0 * kPi) > 1e-12)
            throw std::domain_error("Degree4Vertex: sectors must sum to 2*pi");
    }

    // Crease directions in the flat plane at cumulative sector angles.
    std::array<Vec3, 4> crease_dirs() const {
        std::array<Vec3, 4> u;
        double th = 0.0;
        for (int i = 0; i < 4; ++i) {
            u[i] = {std::cos(th), std::sin(th), 0.0};
            th += sectors[i];
        }
        return u;
    }
};

// The isotropic reverse-fold vertex: driven pleat crease at index 0, the
// opposite pleat at index 2, the two fold-line arms at 1 and 3.
inline Degree4Vertex reverse_fold_vertex(double phi0) {
    require_start_angle(phi0);
    if (phi0 <= 0.0 || phi0 >= kPi)
        throw std::domain_error("reverse_fold_vertex: phi0 must lie in (0, pi)");
    return Degree4Vertex({phi0 / 2.0, kPi - phi0 / 2.0, kPi - phi0 / 2.0, phi0 / 2.0});
}

struct VertexFoldAngles {
    std::array<double, 4> rho;  // fold angle per crease, driven included
    double residual = 0.0;      // Frobenius distance of the composed rotation from identity
};

namespace oracle_detail {

struct Candidate {
    std::array<double, 4> rho;
    double residual;
};

// Rotation angle of R about unit axis u, assuming R is (close to) a rotation
// fixing u.
inline double rotation_angle_about(const Mat3& R, const Vec3& u) {
    Vec3 p{-u.y, u.x, 0.0};
    if (p.norm() < 1e-9) p = {1.0, 0.0, 0.0};
    const Vec3 q = R.apply(p);
    const double sinv = u.dot(p.cross(q));
    const double cosv = p.dot(q) - u.dot(p) * u.dot(q);
    return std::atan2(sinv, cosv);
}

inline Candidate candidate_from_opposite(const std::array<Vec3, 4>& u, double rho0, double rho_opp) {
    // Closure R(u0,rho0) R(u1,rho1) R(u2,rho2) R(u3,rho3) = I with the
    // indices rotated so the driven crease is 0 and the opposite is 2.
    const Mat3 A = Mat3::rotation(u[0], -rho0);
    const Vec3 w = Mat3::rotation(u[2], rho_opp).apply(u[3]);
    const Vec3 v = A.apply(u[3]);
    // rho1 rotates w onto v about u1.
    const Vec3 u1 = u[1];
    const double sinv = u1.dot(w.cross(v));
    const double cosv = w.dot(v) - u1.dot(w) * u1.dot(v);
    const double rho1 = std::atan2(sinv, cosv);
    const Mat3 R3 = Mat3::rotation(u[2], -rho_opp).mul(Mat3::rotation(u1, -rho1)).mul(A);
    const double rho3 = rotation_angle_about(R3, u[3]);
    Mat3 closure = Mat3::rotation(u[0], rho0)
                       .mul(Mat3::rotation(u[1], rho1))
                       .mul(Mat3::rotation(u[2], rho_opp))
                       .mul(Mat3::rotation(u[3], rho3));
    return {{rho0, rho1, rho_opp, rho3}, closure.dist_from_identity()};
}

}  // namespace oracle_detail

// Solves the vertex's fold angles from the driven crease by composing
// rotations about the four crease directions; one-dimensional bisection over
// the opposite crease's fold angle. Picks the pleat-reversing branch (the
// opposite fold angle carries the opposite sign of the driven one).
inline VertexFoldAngles vertex_loop_closure(const Degree4Vertex& vertex, double driven_angle,
                                            int driven_index) {
    if (driven_index < 0 || driven_index > 3)
        throw std::domain_error("vertex_loop_closure: driven_index outside 0..3");
    if (!(driven_angle > -kPi - 1e-12 && driven_angle < kPi + 1e-12) || !std::isfinite(driven_angle))
        throw std::domain_error("vertex_loop_closure: driven_angle outside (-pi, pi)");

    if (driven_angle == 0.0) return {{0.0, 0.0, 0.0, 0.0}, 0.0};

    // Work with indices rotated so the driven crease is local index 0.
    const auto dirs = vertex.crease_dirs();
    std::array<Vec3, 4> u;
    for (int i = 0; i < 4; ++i) u[i] = dirs[(driven_index + i) % 4];

    // Fully folded: the closure root is tangent (no sign change), so test the
    // flat-folded candidates directly.
    if (std::fabs(driven_angle) >= kPi - 1e-12) {
        const double s = driven_angle > 0 ? 1.0 : -1.0;
        for (double side : {-s * kPi, s * kPi}) {
            const Mat3 closure = Mat3::rotation(u[0], driven_angle)
                                     .mul(Mat3::rotation(u[1], side))
                                     .mul(Mat3::rotation(u[2], -driven_angle))
                                     .mul(Mat3::rotation(u[3], side));
            if (closure.dist_from_identity() <= 1e-10) {
                VertexFoldAngles out;
                const std::array<double, 4> rho{driven_angle, side, -driven_angle, side};
                for (int i = 0; i < 4; ++i) out.rho[(driven_index + i) % 4] = rho[i];
                out.residual = closure.dist_from_identity();
                return out;
            }
        }
        throw std::runtime_error(
            "vertex_loop_closure: no flat-folded closure for the driven angle");
    }

    const Mat3 A = Mat3::rotation(u[0], -driven_angle);
    const double target = u[1].dot(A.apply(u[3]));
    auto h = [&](double r) { return u[1].dot(Mat3::rotation(u[2], r).apply(u[3])) - target; };

    // Scan for sign changes, then bisect each bracket to 1e-12 width.
    constexpr int kScan = 1440;
    std::vector<double> roots;
    double prev_x = -kPi, prev_h = h(prev_x);
    for (int i = 1; i <= kScan; ++i) {
        const double x = -kPi + 2.0 * kPi * i / kScan;
        const double hx = h(x);
        if (prev_h == 0.0) roots.push_back(prev_x);
        if (prev_h * hx < 0.0) {
            double lo = prev_x, hi = x, flo = prev_h;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                const double fm = h(mid);
                if (flo * fm <= 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_h = hx;
    }
    if (prev_h == 0.0) roots.push_back(prev_x);

    std::vector<oracle_detail::Candidate> valid;
    for (double r : roots) {
        auto c = oracle_detail::candidate_from_opposite(u, driven_angle, r);
        if (c.residual <= 1e-10) valid.push_back(c);
    }
    if (valid.empty())
        throw std::runtime_error("vertex_loop_closure: no closure solution for the driven angle");

    // Reversal branch: opposite pleat fold angle has the opposite sign of the
    // driven one; among those prefer the most active side creases.
    const oracle_detail::Candidate* best = nullptr;
    for (const auto& c : valid) {
        if (c.rho[2] * driven_angle < 0.0) {
            if (!best || std::fabs(c.rho[1]) > std::fabs(best->rho[1])) best = &c;
        }
    }
    if (!best) best = &valid.front();

    VertexFoldAngles out;
    for (int i = 0; i < 4; ++i) out.rho[(driven_index + i) % 4] = best->rho[i];
    out.residual = best->residual;
    return out;
}

// Fold angle of the strip axis across an isotropic reverse-fold vertex at
// pleat dihedral xi, computed purely from the 3D loop closure. This is the
// independent check of the closed form.
inline double oracle_reverse_fold_phi(double xi, double phi0) {
    require_dihedral(xi);
    if (xi >= kPi) return 0.0;
    const Degree4Vertex vertex = reverse_fold_vertex(phi0);
    const double driven = kPi - xi;  // pleat crease fold angle
    const VertexFoldAngles sol = vertex_loop_closure(vertex, driven, 0);
    const auto u = vertex.crease_dirs();
    // Outgoing pleat direction through the face between creases 1 and 2.
    const Vec3 v_out = Mat3::rotation(u[1], sol.rho[1]).apply(u[2]);
    const Vec3 cont = u[0] * -1.0;  // continuation of the incoming strip axis
    const double c = std::clamp(cont.dot(v_out), -1.0, 1.0);
    return std::acos(c);
}

struct OracleGridRow {
    double xi, phi0, phi_closed_form, phi_oracle, abs_err;
};

struct OracleGrid {
    std::vector<OracleGridRow> rows;
    double max_abs_err = 0.0;
};

// Closed form vs loop closure over an n x n grid of (xi, phi0) in
// [0, pi) x (0, pi).
inline OracleGrid oracle_comparison_grid(int n) {
    if (n < 2) throw std::domain_error("oracle_comparison_grid: n must be >= 2");
    OracleGrid grid;
    grid.rows.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double xi = kPi * i / n;  // [0, pi)
        for (int j = 0; j < n; ++j) {
            const double phi0 = kPi * (j + 1) / (n + 1);  // (0, pi)
            const double closed = reverse_fold_angle(xi, phi0);
            const double orc = oracle_reverse_fold_phi(xi, phi0);
            const double err = std::fabs(closed - orc);
            grid.rows.push_back({xi, phi0, closed, orc, err});
            grid.max_abs_err = std::max(grid.max_abs_err, err);
        }
    }
    return grid;
}

inline std::string oracle_grid_to_csv(const OracleGrid& grid) {
    std::string out = "xi,phi0,phi_closed_form,phi_oracle,abs_err\n";
    for (const auto& r : grid.rows) {
        out += format_full(r.xi);
        out += ',';
        out += format_full(r.phi0);
        out += ',';
        out += format_full(r.phi_closed_form);
        out += ',';
        out += format_full(r.phi_oracle);
        out += ',';
        out += format_full(r.abs_err);
        out += '\n';
    }
    return out;
}

// Planar cross-section of the folded strip at a given dihedral angle: each
// reverse fold turns the axis by its fold angle, each pi fold by -pi.
struct FoldedProfile {
    std::vector<Vec2> points;           // 2n segments -> 2n + 1 points
    std::vector<double> direction_angles;  // per segment
    double total_turn = 0.0;
    bool collided = false;
};

inline FoldedProfile folded_profile(const SpringJointSpec& joint, double xi,
                                    const std::vector<double>& segment_lengths) {
    require_dihedral(xi);
    joint.validate();
    const std::size_t n = joint.size();
    if (segment_lengths.size() != 2 * n)
        throw std::domain_error("folded_profile: need n + (n-1) + 1 segment lengths");
    for (double len : segment_lengths)
        if (!(len > 0.0)) throw std::domain_error("folded_profile: lengths must be positive");

    FoldedProfile prof;
    prof.points.push_back({0.0, 0.0});
    double theta = 0.0;
    for (std::size_t s = 0; s < 2 * n; ++s) {
        prof.direction_angles.push_back(theta);
        const Vec2 p = prof.points.back() + unit_dir(theta) * segment_lengths[s];
        prof.points.push_back(p);
        if (s + 1 < 2 * n) {
            if (s % 2 == 0)
                theta = theta + reverse_fold_angle(xi, joint.constituent_angles[s / 2]);
            else
                theta = theta - kPi;
        }
    }
    prof.total_turn = theta;

    const auto& pts = prof.points;
    for (std::size_t i = 0; i + 1 < pts.size() && !prof.collided; ++i) {
        for (std::size_t j = i + 2; j + 1 < pts.size(); ++j) {
            if (segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1], 1e-12)) {
                prof.collided = true;
                break;
            }
        }
    }
    return prof;
}

}  // namespace springfold
