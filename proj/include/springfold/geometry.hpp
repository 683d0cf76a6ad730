#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace springfold {

inline constexpr double kPi = std::numbers::pi_v<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 unit_dir(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline double dir_angle(const Vec2& v) { return std::atan2(v.y, v.x); }

// Normalize an angle into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

// Rigid (possibly orientation-reversing) map of the plane:
// p -> linear * p + offset.
struct Affine2 {
    // Row-major linear part.
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    double tx = 0.0, ty = 0.0;

    Vec2 apply(const Vec2& p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }
    // this ∘ other (apply `other` first).
    Affine2 compose(const Affine2& o) const {
        Affine2 r;
        r.a = a * o.a + b * o.c;
        r.b = a * o.b + b * o.d;
        r.c = c * o.a + d * o.c;
        r.d = c * o.b + d * o.d;
        r.tx = a * o.tx + b * o.ty + tx;
        r.ty = c * o.tx + d * o.ty + ty;
        return r;
    }
    double det() const { return a * d - b * c; }

    static Affine2 identity() { return {}; }

    // Reflection across the line through p and q.
    static Affine2 reflection(const Vec2& p, const Vec2& q) {
        const Vec2 u = q - p;
        const double len = u.norm();
        if (len <= 0.0) throw std::invalid_argument("reflection: degenerate line");
        const double ux = u.x / len, uy = u.y / len;
        Affine2 r;
        r.a = ux * ux - uy * uy;
        r.b = 2.0 * ux * uy;
        r.c = r.b;
        r.d = uy * uy - ux * ux;
        // Fix the point p: offset = p - linear * p.
        r.tx = p.x - (r.a * p.x + r.b * p.y);
        r.ty = p.y - (r.c * p.x + r.d * p.y);
        return r;
    }

    double max_abs_diff(const Affine2& o) const {
        double m = 0.0;
        for (double v : {a - o.a, b - o.b, c - o.c, d - o.d, tx - o.tx, ty - o.ty})
            m = std::max(m, std::fabs(v));
        return m;
    }
};

// Intersection of the ray p + t*dp (t >= 0) with the ray q + s*dq (s >= 0).
// Returns true and fills t, s when the rays are not parallel.
inline bool ray_ray_intersect(const Vec2& p, const Vec2& dp, const Vec2& q, const Vec2& dq,
                              double& t, double& s) {
    const double den = dp.cross(dq);
    if (std::fabs(den) < 1e-14) return false;
    const Vec2 w = q - p;
    t = w.cross(dq) / den;
    s = w.cross(dp) / den;
    return true;
}

namespace detail {
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c, double eps) {
    const double v = (b - a).cross(c - a);
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
}
inline bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p, double eps) {
    return p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps &&
           p.y >= std::min(a.y, b.y) - eps && p.y <= std::max(a.y, b.y) + eps;
}
}  // namespace detail

// True when segments [a,b] and [c,d] share any point (within eps).
inline bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                               double eps = 1e-12) {
    using detail::on_segment;
    using detail::orient;
    const int o1 = orient(a, b, c, eps);
    const int o2 = orient(a, b, d, eps);
    const int o3 = orient(c, d, a, eps);
    const int o4 = orient(c, d, b, eps);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c, eps)) return true;
    if (o2 == 0 && on_segment(a, b, d, eps)) return true;
    if (o3 == 0 && on_segment(c, d, a, eps)) return true;
    if (o4 == 0 && on_segment(c, d, b, eps)) return true;
    return false;
}

}  // namespace springfold
