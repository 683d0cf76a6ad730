#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "springfold/crease_pattern.hpp"
#include "springfold/geometry.hpp"
#include "springfold/kinematics.hpp"

namespace springfold {

class construction_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class geometry_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace gen_detail {

inline CreaseAssignment pleat_assignment(int parity) {
    return parity % 2 == 0 ? CreaseAssignment::Mountain : CreaseAssignment::Valley;
}

inline double target_of(CreaseAssignment a) {
    return a == CreaseAssignment::Mountain ? -kPi : kPi;
}

inline void add_signed(CreasePattern& cp, int v1, int v2, CreaseAssignment a) {
    cp.add_crease(v1, v2, a, a == CreaseAssignment::Border || a == CreaseAssignment::Flat
                                 ? 0.0
                                 : target_of(a));
}

// Chain border segments through a run of already-created vertices.
inline void add_border_chain(CreasePattern& cp, const std::vector<int>& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        add_signed(cp, chain[i], chain[i + 1], CreaseAssignment::Border);
}

}  // namespace gen_detail

// ---------------------------------------------------------------------------
// Straight-axis spring joint
// ---------------------------------------------------------------------------

struct StraightJointParams {
    SpringJointSpec joint;
    double strip_width = 4.0;  // across the pleats
    double pleat_width = 1.0;

    void validate() const {
        joint.validate();
        if (!(strip_width > 0.0) || !(pleat_width > 0.0))
            throw std::domain_error("StraightJointParams: widths must be positive");
        if (!(pleat_width < strip_width))
            throw std::domain_error("StraightJointParams: pleat_width must be below strip_width");
    }
};

// Strip crease pattern: n reverse-fold zigzag lines with arm angle
// (pi - phi0)/2, interleaved with (n-1) straight pi-fold lines of the
// opposite sign, crossing vertical pleats.
inline CreasePattern gen_straight_spring_joint(const StraightJointParams& params) {
    using namespace gen_detail;
    params.validate();
    const double w = params.pleat_width;
    const double W = params.strip_width;
    const std::size_t bays = static_cast<std::size_t>(std::floor(W / w + 1e-9));
    if (bays < 2)
        throw geometry_error("gen_straight_spring_joint: pleat_width leaves fewer than two bays");

    std::vector<double> xs;  // pleat and border x positions
    xs.push_back(0.0);
    for (std::size_t j = 1; j < bays; ++j) xs.push_back(w * static_cast<double>(j));
    xs.push_back(W);
    const std::size_t ncols = xs.size();

    const std::size_t n = params.joint.size();
    const std::size_t nlines = 2 * n - 1;
    std::vector<double> gamma(nlines, 0.0);
    std::vector<CreaseAssignment> line_sign(nlines);
    for (std::size_t g = 0; g < nlines; ++g) {
        if (g % 2 == 0) {
            const double phi0 = params.joint.constituent_angles[g / 2];
            gamma[g] = (kPi - phi0) / 2.0;
            line_sign[g] = CreaseAssignment::Valley;
        } else {
            line_sign[g] = CreaseAssignment::Mountain;  // pi fold, opposite sign
        }
    }

    // Zigzag heights; groups stacked with clearance.
    const double gap = 0.5 * w;
    std::vector<std::vector<double>> Y(nlines, std::vector<double>(ncols, 0.0));
    double base = std::max(w, gap);
    for (std::size_t g = 0; g < nlines; ++g) {
        const double t = std::tan(gamma[g]);
        if (t * w > 100.0 * W)
            throw geometry_error(
                "gen_straight_spring_joint: pleat_width too large for the fold-line spacing "
                "implied by phi0");
        Y[g][0] = base;
        double sgn = 1.0;
        double top = base;
        for (std::size_t j = 0; j + 1 < ncols; ++j) {
            Y[g][j + 1] = Y[g][j] + sgn * (xs[j + 1] - xs[j]) * t;
            top = std::max(top, Y[g][j + 1]);
            sgn = -sgn;
        }
        base = top + gap;
    }
    const double y_top = base - gap + std::max(w, gap);

    CreasePattern cp;
    std::vector<int> bottom(ncols), top(ncols);
    std::vector<std::vector<int>> line_v(nlines, std::vector<int>(ncols));
    for (std::size_t j = 0; j < ncols; ++j) bottom[j] = cp.add_vertex({xs[j], 0.0});
    for (std::size_t g = 0; g < nlines; ++g)
        for (std::size_t j = 0; j < ncols; ++j) line_v[g][j] = cp.add_vertex({xs[j], Y[g][j]});
    for (std::size_t j = 0; j < ncols; ++j) top[j] = cp.add_vertex({xs[j], y_top});

    add_border_chain(cp, bottom);
    add_border_chain(cp, top);
    std::vector<int> left{bottom[0]}, right{bottom[ncols - 1]};
    for (std::size_t g = 0; g < nlines; ++g) {
        left.push_back(line_v[g][0]);
        right.push_back(line_v[g][ncols - 1]);
    }
    left.push_back(top[0]);
    right.push_back(top[ncols - 1]);
    add_border_chain(cp, left);
    add_border_chain(cp, right);

    for (std::size_t g = 0; g < nlines; ++g)
        for (std::size_t j = 0; j + 1 < ncols; ++j)
            add_signed(cp, line_v[g][j], line_v[g][j + 1], line_sign[g]);

    // Pleat creases, sign flipping at every fold line.
    for (std::size_t j = 1; j + 1 < ncols; ++j) {
        int prev = bottom[j];
        for (std::size_t band = 0; band <= nlines; ++band) {
            const int next = band < nlines ? line_v[band][j] : top[j];
            add_signed(cp, prev, next, pleat_assignment(static_cast<int>(j + band)));
            prev = next;
        }
    }
    return cp;
}

// ---------------------------------------------------------------------------
// Tilted-axis spring joint
// ---------------------------------------------------------------------------

struct TiltedJointParams {
    double d = 0.5;        // distance between pi folds
    double l = 1.0;        // pleat segment length inside the joint
    std::size_t n = 2;     // reverse fold count
    double pleat_width = 1.0;

    void validate() const {
        if (!(d > 0.0) || !(l > 0.0) || !(pleat_width > 0.0))
            throw std::domain_error("TiltedJointParams: d, l, pleat_width must be positive");
        if (n < 2) throw std::domain_error("TiltedJointParams: n must be >= 2");
    }
    double ratio() const { return d / l; }
};

// Iterative construction: the working pleat advances by segments of length l
// through the fold lines, each new vertex solved by the Kawasaki-Justin
// condition (the free crease direction is closed-form at a degree-4 vertex).
// The emergent tilt angle is chi/2 with sin(chi) = d / (2 l). The last
// reverse-fold line spends its freedom restoring every pleat to the input
// direction, which keeps the resultant pleats parallel and bisected against
// the spread failure mode.
inline CreasePattern gen_tilted_spring_joint(const TiltedJointParams& params) {
    using namespace gen_detail;
    params.validate();
    const double w = params.pleat_width;
    const std::size_t n = params.n;
    const std::size_t nlines = 2 * n - 1;
    const std::size_t npleats = 3;
    const double sheet_w = w * static_cast<double>(npleats + 1);

    if (params.d >= 2.0 * params.l)
        throw construction_error(
            "step 2 (axis spacing): d/l too large, pleat segments cannot bridge the pi-fold "
            "spacing (requires d < 2l)");
    const double chi = std::asin(params.d / (2.0 * params.l));
    if (chi < 1e-6)
        throw construction_error("step 2 (axis spacing): d/l too small, tilt degenerates");
    const double tilt = chi / 2.0;

    // Working-pleat travel directions through the joint.
    std::vector<double> s_states(nlines + 1);
    s_states[0] = kPi / 2.0;
    for (std::size_t i = 0; i < nlines; ++i) {
        double s_out;
        const double s_in = s_states[i];
        if (i == 0)
            s_out = kPi / 2.0 + tilt + chi;
        else if (i == nlines - 1)
            s_out = kPi / 2.0;
        else if (i % 2 == 1)
            s_out = 2.0 * tilt + kPi - s_in;  // pi fold: reflect across the line
        else
            s_out = s_in + chi;  // interior reverse fold
        if (!(std::sin(s_out) > 0.01) || s_out <= 0.0 || s_out >= kPi)
            throw construction_error(
                "step 3 (vertex placement): pleat direction leaves the strip, d/l too large for n");
        s_states[i + 1] = s_out;
    }

    // Vertex grid: line i crossing pleat j (1-based pleats).
    std::vector<std::vector<Vec2>> V(nlines, std::vector<Vec2>(npleats + 1));
    std::vector<std::vector<double>> F(nlines, std::vector<double>(npleats + 1));
    std::vector<double> kink(nlines, 0.0);

    const double y0 = std::max(w, params.l);
    V[0][1] = {w, y0};
    for (std::size_t i = 0; i < nlines; ++i) {
        if (i > 0) V[i][1] = V[i - 1][1] + unit_dir(s_states[i]) * params.l;
        F[i][0] = tilt;  // all fold lines enter parallel to the emergent axis
        // Kawasaki at the working pleat: P_out + P_in = F_out + F_in + pi.
        const double f_out = wrap_angle(s_states[i + 1] + s_states[i] - kPi - F[i][0]);
        F[i][1] = f_out;
        kink[i] = f_out - F[i][0];
    }

    // Sweep the remaining pleats; fold angles emerge from the geometry.
    // S[i][j] is the direction of pleat j below fold line i.
    std::vector<std::vector<double>> S(nlines + 1, std::vector<double>(npleats + 1, kPi / 2.0));
    for (std::size_t i = 0; i <= nlines; ++i) S[i][1] = s_states[i];

    std::vector<Vec2> pleat_base(npleats + 1);
    for (std::size_t j = 1; j <= npleats; ++j) pleat_base[j] = {w * static_cast<double>(j), 0.0};

    for (std::size_t i = 0; i < nlines; ++i) {
        for (std::size_t j = 2; j <= npleats; ++j) {
            const Vec2 arm_from = V[i][j - 1];
            const Vec2 arm_dir = unit_dir(F[i][j - 1]);
            const Vec2 pleat_from = (i == 0) ? pleat_base[j] : V[i - 1][j];
            const Vec2 pleat_dir = unit_dir(S[i][j]);
            double t_pleat, t_arm;
            if (!ray_ray_intersect(pleat_from, pleat_dir, arm_from, arm_dir, t_pleat, t_arm) ||
                t_pleat <= 1e-9 || t_arm <= 1e-9)
                throw construction_error(
                    "step 4 (Kawasaki solve): fold line misses the pleat, d/l too large for n");
            V[i][j] = pleat_from + pleat_dir * t_pleat;

            const double f_in = F[i][j - 1];
            const double s_in = S[i][j];
            double f_out, s_out;
            if (i % 2 == 1) {
                f_out = f_in;  // pi-fold lines stay straight
                s_out = wrap_angle(2.0 * f_in + kPi - s_in);
            } else if (i == nlines - 1) {
                s_out = kPi / 2.0;  // step 5/6: resultant pleat parallel to input
                f_out = wrap_angle(s_out + s_in - kPi - f_in);
            } else {
                // Chevron kink of constant magnitude, alternating sign per bay
                // so the line zigzags instead of drifting.
                const double sign = (j % 2 == 1) ? 1.0 : -1.0;
                f_out = wrap_angle(f_in + sign * kink[i]);
                s_out = wrap_angle(f_out + f_in + kPi - s_in);
            }
            if (s_out < 0.0) s_out += 2.0 * kPi;
            if (!(std::sin(s_out) > 0.01))
                throw construction_error(
                    "step 4 (Kawasaki solve): pleat direction reversed, d/l too large for n");
            if (!(std::cos(f_out) > 0.05))
                throw construction_error(
                    "step 4 (Kawasaki solve): fold line turned back, d/l too large for n");
            F[i][j] = f_out;
            S[i + 1][j] = s_out;
        }
    }

    // Sheet bounds.
    double max_y = y0;
    for (std::size_t i = 0; i < nlines; ++i)
        for (std::size_t j = 1; j <= npleats; ++j) max_y = std::max(max_y, V[i][j].y);
    const double y_top = max_y + std::max(w, params.l);

    // Border crossing points.
    std::vector<Vec2> left_pt(nlines), right_pt(nlines);
    for (std::size_t i = 0; i < nlines; ++i) {
        const double drop = V[i][1].x * std::tan(F[i][0]);
        left_pt[i] = {0.0, V[i][1].y - drop};
        if (left_pt[i].y <= 1e-9)
            throw construction_error("step 7 (emit): fold line exits below the strip");
        const double run = sheet_w - V[i][npleats].x;
        if (run <= 1e-9)
            throw construction_error("step 7 (emit): joint leaves the strip on the right");
        right_pt[i] = {sheet_w, V[i][npleats].y + run * std::tan(F[i][npleats])};
        if (right_pt[i].y <= 1e-9 || right_pt[i].y >= y_top - 1e-9)
            throw construction_error("step 7 (emit): fold line exits outside the strip");
    }
    for (std::size_t i = 0; i + 1 < nlines; ++i) {
        if (left_pt[i + 1].y <= left_pt[i].y + 1e-9 || right_pt[i + 1].y <= right_pt[i].y + 1e-9)
            throw construction_error("step 7 (emit): fold lines cross near the border");
    }

    CreasePattern cp;
    // Bottom border with pleat feet.
    std::vector<int> bottom;
    bottom.push_back(cp.add_vertex({0.0, 0.0}));
    std::vector<int> pleat_bottom(npleats + 1);
    for (std::size_t j = 1; j <= npleats; ++j)
        bottom.push_back(pleat_bottom[j] = cp.add_vertex(pleat_base[j]));
    bottom.push_back(cp.add_vertex({sheet_w, 0.0}));
    // Top border with pleat exits (x of the last joint vertex, exactly vertical).
    std::vector<int> pleat_top(npleats + 1);
    std::vector<std::pair<double, int>> top_order;
    for (std::size_t j = 1; j <= npleats; ++j) {
        pleat_top[j] = cp.add_vertex({V[nlines - 1][j].x, y_top});
        top_order.emplace_back(V[nlines - 1][j].x, pleat_top[j]);
    }
    const int top_left = cp.add_vertex({0.0, y_top});
    const int top_right = cp.add_vertex({sheet_w, y_top});
    std::sort(top_order.begin(), top_order.end());
    std::vector<int> top{top_left};
    for (const auto& [x, idx] : top_order) top.push_back(idx);
    top.push_back(top_right);

    std::vector<std::vector<int>> joint_v(nlines, std::vector<int>(npleats + 1));
    for (std::size_t i = 0; i < nlines; ++i)
        for (std::size_t j = 1; j <= npleats; ++j) joint_v[i][j] = cp.add_vertex(V[i][j]);
    std::vector<int> left_v(nlines), right_v(nlines);
    for (std::size_t i = 0; i < nlines; ++i) {
        left_v[i] = cp.add_vertex(left_pt[i]);
        right_v[i] = cp.add_vertex(right_pt[i]);
    }

    add_border_chain(cp, bottom);
    add_border_chain(cp, top);
    std::vector<int> left{bottom.front()};
    for (std::size_t i = 0; i < nlines; ++i) left.push_back(left_v[i]);
    left.push_back(top_left);
    add_border_chain(cp, left);
    std::vector<int> right{bottom.back()};
    for (std::size_t i = 0; i < nlines; ++i) right.push_back(right_v[i]);
    right.push_back(top_right);
    add_border_chain(cp, right);

    // Fold lines.
    for (std::size_t i = 0; i < nlines; ++i) {
        const CreaseAssignment sign =
            (i % 2 == 0) ? CreaseAssignment::Valley : CreaseAssignment::Mountain;
        add_signed(cp, left_v[i], joint_v[i][1], sign);
        for (std::size_t j = 1; j < npleats; ++j) add_signed(cp, joint_v[i][j], joint_v[i][j + 1], sign);
        add_signed(cp, joint_v[i][npleats], right_v[i], sign);
    }
    // Pleats, sign flipping at every crossing.
    for (std::size_t j = 1; j <= npleats; ++j) {
        int prev = pleat_bottom[j];
        for (std::size_t band = 0; band <= nlines; ++band) {
            const int next = band < nlines ? joint_v[band][j] : pleat_top[j];
            add_signed(cp, prev, next, pleat_assignment(static_cast<int>(j + band)));
            prev = next;
        }
    }
    return cp;
}

// ---------------------------------------------------------------------------
// Miura-Ori with spring-joint substitution
// ---------------------------------------------------------------------------

struct MiuraSubstitutionSpec {
    std::size_t rows = 1;
    std::size_t cols = 1;
    double panel_width = 1.0;
    double panel_height = 1.0;
    double miura_angle = kPi / 8.0;  // zigzag angle of the plain pattern
    SpringJointSpec joint;

    void validate() const {
        joint.validate();
        if (rows < 1 || cols < 1) throw std::domain_error("MiuraSubstitutionSpec: rows, cols >= 1");
        if (!(panel_width > 0.0) || !(panel_height > 0.0))
            throw std::domain_error("MiuraSubstitutionSpec: panel sizes must be positive");
        if (!(miura_angle > 0.0) || !(miura_angle < kPi / 2.0))
            throw std::domain_error("MiuraSubstitutionSpec: miura_angle must lie in (0, pi/2)");
    }
};

namespace gen_detail {

// Shared emitter: a Miura grid whose zigzag rows are groups of fold lines
// (one entry per line: zigzag arm angle + assignment), each group centered on
// its nominal row line.
inline CreasePattern emit_miura_grid(std::size_t rows, std::size_t cols, double pw, double ph,
                                     const std::vector<double>& group_gamma,
                                     const std::vector<CreaseAssignment>& group_sign) {
    const std::size_t nlines = group_gamma.size();
    std::vector<double> dy(nlines);
    double span = 0.0;
    const double clearance = 0.05 * ph;
    for (std::size_t g = 0; g < nlines; ++g) {
        dy[g] = pw * std::tan(group_gamma[g]);
        span += dy[g];
    }
    span += clearance * static_cast<double>(nlines - 1);
    if (span > 0.9 * ph)
        throw geometry_error("miura generator: joint group height exceeds the panel height");

    const double height = ph * static_cast<double>(rows + 1);
    std::vector<double> xs;
    for (std::size_t i = 0; i <= cols; ++i) xs.push_back(pw * static_cast<double>(i));

    CreasePattern cp;
    std::vector<int> bottom, top;
    for (std::size_t i = 0; i <= cols; ++i) bottom.push_back(cp.add_vertex({xs[i], 0.0}));

    // line_v[r][g][i]
    std::vector<std::vector<std::vector<int>>> line_v(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const double y_row = ph * static_cast<double>(r + 1);
        double base = y_row - span / 2.0;
        line_v[r].resize(nlines);
        for (std::size_t g = 0; g < nlines; ++g) {
            for (std::size_t i = 0; i <= cols; ++i) {
                const double y = base + (i % 2 ? dy[g] : 0.0);
                line_v[r][g].push_back(cp.add_vertex({xs[i], y}));
            }
            base += dy[g] + clearance;
        }
    }
    for (std::size_t i = 0; i <= cols; ++i) top.push_back(cp.add_vertex({xs[i], height}));

    add_border_chain(cp, bottom);
    add_border_chain(cp, top);
    std::vector<int> left{bottom[0]}, right{bottom[cols]};
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t g = 0; g < nlines; ++g) {
            left.push_back(line_v[r][g][0]);
            right.push_back(line_v[r][g][cols]);
        }
    left.push_back(top[0]);
    right.push_back(top[cols]);
    add_border_chain(cp, left);
    add_border_chain(cp, right);

    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t g = 0; g < nlines; ++g) {
            CreaseAssignment sign = group_sign[g];
            if (r % 2 == 1)
                sign = (sign == CreaseAssignment::Valley) ? CreaseAssignment::Mountain
                                                          : CreaseAssignment::Valley;
            for (std::size_t i = 0; i < cols; ++i)
                add_signed(cp, line_v[r][g][i], line_v[r][g][i + 1], sign);
        }

    // Vertical creases split at every group line, sign flipping per crossing.
    for (std::size_t i = 1; i < cols; ++i) {
        int prev = bottom[i];
        int band = 0;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t g = 0; g < nlines; ++g) {
                add_signed(cp, prev, line_v[r][g][i], pleat_assignment(static_cast<int>(i) + band));
                prev = line_v[r][g][i];
                ++band;
            }
        add_signed(cp, prev, top[i], pleat_assignment(static_cast<int>(i) + band));
    }
    return cp;
}

}  // namespace gen_detail

// Plain Miura-Ori reference grid.
inline CreasePattern gen_miura_plain(std::size_t rows, std::size_t cols, double panel_width,
                                     double panel_height, double miura_angle) {
    if (rows < 1 || cols < 1) throw std::domain_error("gen_miura_plain: rows, cols >= 1");
    return gen_detail::emit_miura_grid(rows, cols, panel_width, panel_height, {miura_angle},
                                       {CreaseAssignment::Valley});
}

// Miura-Ori in which every reverse-fold row is substituted by the straight
// spring-joint group; with a single-fold joint the output equals the plain
// pattern whose zigzag angle is (pi - phi0)/2.
inline CreasePattern gen_miura_with_spring_joints(const MiuraSubstitutionSpec& spec) {
    spec.validate();
    const std::size_t n = spec.joint.size();
    std::vector<double> gamma;
    std::vector<CreaseAssignment> sign;
    for (std::size_t g = 0; g < 2 * n - 1; ++g) {
        if (g % 2 == 0) {
            gamma.push_back((kPi - spec.joint.constituent_angles[g / 2]) / 2.0);
            sign.push_back(CreaseAssignment::Valley);
        } else {
            gamma.push_back(0.0);
            sign.push_back(CreaseAssignment::Mountain);
        }
    }
    return gen_detail::emit_miura_grid(spec.rows, spec.cols, spec.panel_width, spec.panel_height,
                                       gamma, sign);
}

// ---------------------------------------------------------------------------
// Minimal-layer modular units
// ---------------------------------------------------------------------------

// Polygon vertex angles and unit dimensions for the minimal-layer variant;
// theta_vertex[k] equals the source joint's phi0[k].
struct ModularJointSpec {
    std::vector<double> vertex_angles;
    double unit_length = 2.0;
    double unit_width = 1.0;
    std::size_t unit_count = 4;

    SpringJointSpec equivalent_joint() const { return SpringJointSpec(vertex_angles); }
    double predicted_fold_angle(double xi) const {
        return compound_fold_angle(xi, equivalent_joint());
    }
};

struct ModularUnit {
    std::size_t index = 0;
    bool mirrored = false;
    bool open_cut = false;
};

struct ModularUnitsResult {
    ModularJointSpec spec;
    std::vector<ModularUnit> units;
    CreasePattern layout;  // cut outlines (border edges) + hinge lines (flat)
};

namespace gen_detail {

// Outline of one unit: a rectangle whose free end is capped by the polygon
// carrying the joint's vertex angles; the cap turn at vertex k is
// pi - theta_k.
inline std::vector<Vec2> unit_outline(const std::vector<double>& angles, double L, double W) {
    std::vector<Vec2> pts{{0.0, 0.0}, {0.0, W}, {L, W}};
    const double chord = 0.4 * W;
    Vec2 p{L, W};
    double dir = 0.0;
    for (double theta : angles) {
        p = p + unit_dir(dir) * chord;
        pts.push_back(p);
        dir -= (kPi - theta);
    }
    p = p + unit_dir(dir) * chord;
    pts.push_back(p);
    pts.push_back({L, 0.0});
    return pts;
}

inline ModularUnitsResult build_modular(const SpringJointSpec& joint, double unit_length,
                                        double unit_width, bool tilted_variant) {
    joint.validate();
    if (!(unit_length > 0.0) || !(unit_width > 0.0))
        throw std::domain_error("modular units: dimensions must be positive");
    if (tilted_variant && joint.size() < 2)
        throw std::domain_error("tilted modular units: joint needs at least 2 reverse folds");

    ModularUnitsResult result;
    result.spec.vertex_angles = joint.constituent_angles;
    result.spec.unit_length = unit_length;
    result.spec.unit_width = unit_width;
    result.spec.unit_count = 4;

    const auto outline = unit_outline(joint.constituent_angles, unit_length, unit_width);
    double min_x = outline[0].x, max_x = outline[0].x, min_y = outline[0].y, max_y = outline[0].y;
    for (const auto& p : outline) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double pitch = (max_x - min_x) + 0.1 * unit_width;

    CreasePattern cp;
    for (std::size_t k = 0; k < 4; ++k) {
        ModularUnit unit;
        unit.index = k;
        unit.mirrored = k >= 2;
        unit.open_cut = tilted_variant && (k % 2 == 0);
        result.units.push_back(unit);

        const double xoff = static_cast<double>(k) * pitch - min_x;
        auto place = [&](const Vec2& p) -> Vec2 {
            const double y = unit.mirrored ? unit_width - p.y : p.y;
            return {p.x + xoff, y};
        };

        // Slit / open cut on the cap's closing edge, cut perpendicular into
        // the sheet (the ring below runs clockwise, interior to the right).
        const Vec2 close_a = outline[outline.size() - 2];  // last cap point
        const Vec2 close_b = outline.back();               // (L, 0)
        const Vec2 mid = (close_a + close_b) * 0.5;
        const Vec2 edge = close_b - close_a;
        const double edge_len = edge.norm();
        const Vec2 edge_unit = edge * (1.0 / edge_len);
        const double depth = 0.15 * std::min(unit_length, unit_width);
        const Vec2 inward = Vec2{edge_unit.y, -edge_unit.x} * depth;
        const Vec2 along = edge_unit * std::min(0.05 * unit_width, 0.25 * edge_len);

        // Outline ring with hinge feet and the cut anchors inserted.
        const double hx = 0.15 * unit_length;
        std::vector<Vec2> ring;
        int slit_ring_pos = -1;
        ring.push_back({0.0, 0.0});
        ring.push_back({0.0, unit_width});
        ring.push_back({hx, unit_width});  // hinge top
        for (std::size_t i = 2; i + 1 < outline.size(); ++i) ring.push_back(outline[i]);
        if (unit.open_cut) {
            ring.push_back(mid - along);
            ring.push_back(mid - along + inward);
            ring.push_back(mid + along + inward);
            ring.push_back(mid + along);
        } else {
            slit_ring_pos = static_cast<int>(ring.size());
            ring.push_back(mid);
        }
        ring.push_back(outline.back());
        ring.push_back({hx, 0.0});  // hinge bottom

        std::vector<int> ids;
        for (const auto& p : ring) ids.push_back(cp.add_vertex(place(p)));
        for (std::size_t i = 0; i < ids.size(); ++i)
            add_signed(cp, ids[i], ids[(i + 1) % ids.size()], CreaseAssignment::Border);
        // Hinge line (dashed in the assembly figures).
        cp.add_crease(ids[2], ids.back(), CreaseAssignment::Flat, 0.0);
        if (slit_ring_pos >= 0) {
            const int e_id = cp.add_vertex(place(mid + inward));
            cp.add_crease(ids[slit_ring_pos], e_id, CreaseAssignment::Border, 0.0);
        }
    }
    result.layout = cp;
    return result;
}

}  // namespace gen_detail

// Minimal-layer modular joint: each reverse-fold/pi-fold pair becomes one
// polygon vertex with theta_vertex = phi0; the assembly's predicted curve is
// the compound curve of the source joint.
inline ModularUnitsResult gen_modular_units(const SpringJointSpec& joint, double unit_length,
                                            double unit_width) {
    return gen_detail::build_modular(joint, unit_length, unit_width, false);
}

// Tilted-axis modular variant: half the units carry an open cut in place of
// the slit. Kinematics are not modeled for this variant.
inline ModularUnitsResult gen_tilted_modular_units(const SpringJointSpec& joint,
                                                   double unit_length, double unit_width) {
    return gen_detail::build_modular(joint, unit_length, unit_width, true);
}

}  // namespace springfold
