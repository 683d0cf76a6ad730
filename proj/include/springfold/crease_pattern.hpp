#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "springfold/geometry.hpp"

namespace springfold {

inline constexpr double kGeomTol = 1e-9;

class malformed_graph_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class fold_inconsistency_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class CreaseAssignment { Mountain, Valley, Border, Flat };

inline char assignment_code(CreaseAssignment a) {
    switch (a) {
        case CreaseAssignment::Mountain: return 'M';
        case CreaseAssignment::Valley: return 'V';
        case CreaseAssignment::Border: return 'B';
        case CreaseAssignment::Flat: return 'F';
    }
    return '?';
}

inline CreaseAssignment assignment_from_code(char c) {
    switch (c) {
        case 'M': return CreaseAssignment::Mountain;
        case 'V': return CreaseAssignment::Valley;
        case 'B': return CreaseAssignment::Border;
        case 'F': return CreaseAssignment::Flat;
    }
    throw std::invalid_argument(std::string("unknown crease assignment code: ") + c);
}

struct Crease {
    int v1 = 0;
    int v2 = 0;
    CreaseAssignment assignment = CreaseAssignment::Border;
    double fold_angle = 0.0;  // radians, valley positive, mountain negative
};

// Planar straight-line graph of vertices and creases. Immutable once built;
// faces are derived, not stored.
struct CreasePattern {
    std::vector<Vec2> vertices;
    std::vector<Crease> creases;

    int add_vertex(const Vec2& p) {
        vertices.push_back(p);
        return static_cast<int>(vertices.size()) - 1;
    }
    void add_crease(int v1, int v2, CreaseAssignment a, double fold_angle) {
        creases.push_back({v1, v2, a, fold_angle});
    }

    Vec2 crease_dir(const Crease& c) const { return vertices[c.v2] - vertices[c.v1]; }

    bool is_boundary_vertex(int v) const {
        for (const auto& c : creases)
            if ((c.v1 == v || c.v2 == v) && c.assignment == CreaseAssignment::Border) return true;
        return false;
    }

    // Angles of incident mountain/valley creases, sorted ccw. Flat creases do
    // not fold and border creases mark the boundary; neither enters the
    // flat-foldability conditions.
    std::vector<std::pair<double, const Crease*>> folded_star(int v) const {
        std::vector<std::pair<double, const Crease*>> star;
        for (const auto& c : creases) {
            if (c.assignment != CreaseAssignment::Mountain &&
                c.assignment != CreaseAssignment::Valley)
                continue;
            if (c.v1 == v)
                star.emplace_back(dir_angle(vertices[c.v2] - vertices[c.v1]), &c);
            else if (c.v2 == v)
                star.emplace_back(dir_angle(vertices[c.v1] - vertices[c.v2]), &c);
        }
        std::sort(star.begin(), star.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return star;
    }

    std::vector<double> sector_angles(int v) const {
        const auto star = folded_star(v);
        if (star.size() < 2) throw malformed_graph_error("sector_angles: vertex degree below 2");
        std::vector<double> sectors;
        sectors.reserve(star.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < star.size(); ++i) {
            const double a = star[i].first;
            const double b = (i + 1 < star.size()) ? star[i + 1].first : star[0].first + 2.0 * kPi;
            sectors.push_back(b - a);
            sum += b - a;
        }
        if (std::fabs(sum - 2.0 * kPi) > kGeomTol)
            throw malformed_graph_error("sector_angles: sectors do not sum to 2*pi");
        return sectors;
    }

    void validate() const {
        for (const auto& p : vertices)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw malformed_graph_error("CreasePattern: non-finite vertex");
        const int nv = static_cast<int>(vertices.size());
        for (const auto& c : creases) {
            if (c.v1 < 0 || c.v1 >= nv || c.v2 < 0 || c.v2 >= nv || c.v1 == c.v2)
                throw malformed_graph_error("CreasePattern: bad crease endpoints");
            if ((vertices[c.v2] - vertices[c.v1]).norm() <= 1e-12)
                throw malformed_graph_error("CreasePattern: zero-length crease");
            switch (c.assignment) {
                case CreaseAssignment::Mountain:
                    if (!(c.fold_angle < 0.0))
                        throw malformed_graph_error("CreasePattern: mountain needs negative fold angle");
                    break;
                case CreaseAssignment::Valley:
                    if (!(c.fold_angle > 0.0))
                        throw malformed_graph_error("CreasePattern: valley needs positive fold angle");
                    break;
                default:
                    if (c.fold_angle != 0.0)
                        throw malformed_graph_error("CreasePattern: border/flat creases carry no fold angle");
            }
        }
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if ((vertices[i] - vertices[j]).norm() <= kGeomTol)
                    throw malformed_graph_error("CreasePattern: coincident vertices");
        // Creases intersect only at shared vertices.
        for (std::size_t i = 0; i < creases.size(); ++i) {
            for (std::size_t j = i + 1; j < creases.size(); ++j) {
                const Crease& a = creases[i];
                const Crease& b = creases[j];
                const bool share1 = a.v1 == b.v1 || a.v1 == b.v2;
                const bool share2 = a.v2 == b.v1 || a.v2 == b.v2;
                if (share1 && share2)
                    throw malformed_graph_error("CreasePattern: duplicate crease");
                if (share1 || share2) {
                    const int shared = share1 ? a.v1 : a.v2;
                    const int oa = share1 ? a.v2 : a.v1;
                    const int ob = (b.v1 == shared) ? b.v2 : b.v1;
                    const Vec2 u = vertices[oa] - vertices[shared];
                    const Vec2 w = vertices[ob] - vertices[shared];
                    const double cosv = u.dot(w) / (u.norm() * w.norm());
                    if (cosv > 1.0 - 1e-12)
                        throw malformed_graph_error("CreasePattern: overlapping collinear creases");
                    continue;
                }
                if (segments_intersect(vertices[a.v1], vertices[a.v2], vertices[b.v1],
                                       vertices[b.v2], kGeomTol))
                    throw malformed_graph_error("CreasePattern: creases cross away from vertices");
            }
        }
    }
};

inline CreasePattern transformed(const CreasePattern& cp, const Affine2& t) {
    CreasePattern out = cp;
    for (auto& v : out.vertices) v = t.apply(v);
    return out;
}

// Alternating sector-angle sum at an interior vertex; zero iff the vertex
// satisfies the Kawasaki-Justin condition.
inline double kawasaki_defect(const CreasePattern& cp, int vertex) {
    if (cp.is_boundary_vertex(vertex))
        throw std::domain_error("kawasaki_defect: boundary vertex");
    const auto sectors = cp.sector_angles(vertex);
    if (sectors.size() % 2 != 0 || sectors.size() < 4)
        throw std::domain_error("kawasaki_defect: needs even degree >= 4");
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 0; i < sectors.size(); ++i) (i % 2 ? odd : even) += sectors[i];
    return odd - even;
}

// Mountain count minus valley count at an interior vertex.
inline int maekawa_balance(const CreasePattern& cp, int vertex) {
    if (cp.is_boundary_vertex(vertex))
        throw std::domain_error("maekawa_balance: boundary vertex");
    int m = 0, v = 0;
    for (const auto& c : cp.creases) {
        if (c.v1 != vertex && c.v2 != vertex) continue;
        if (c.assignment == CreaseAssignment::Mountain) ++m;
        if (c.assignment == CreaseAssignment::Valley) ++v;
    }
    return m - v;
}

struct VertexReport {
    int vertex = 0;
    bool interior = false;
    std::size_t degree = 0;
    double kawasaki_defect = 0.0;
    int maekawa_balance = 0;
    bool flat_foldable = false;
};

struct FlatFoldabilityReport {
    std::vector<VertexReport> vertices;  // one per interior creased vertex
    bool all_pass = true;
};

// Local flat-foldability of every interior vertex: even degree, zero Kawasaki
// defect, Maekawa balance of +-2. Global self-intersection is out of scope.
inline FlatFoldabilityReport validate_flat_foldable(const CreasePattern& cp, double tol = kGeomTol) {
    cp.validate();
    FlatFoldabilityReport report;
    for (int v = 0; v < static_cast<int>(cp.vertices.size()); ++v) {
        if (cp.is_boundary_vertex(v)) continue;
        const auto star = cp.folded_star(v);
        if (star.empty()) continue;
        VertexReport r;
        r.vertex = v;
        r.interior = true;
        r.degree = star.size();
        const bool even = star.size() % 2 == 0 && star.size() >= 2;
        if (even) {
            const auto sectors = cp.sector_angles(v);
            double odd_s = 0.0, even_s = 0.0;
            for (std::size_t i = 0; i < sectors.size(); ++i) (i % 2 ? odd_s : even_s) += sectors[i];
            r.kawasaki_defect = odd_s - even_s;
        } else {
            r.kawasaki_defect = std::numeric_limits<double>::quiet_NaN();
        }
        r.maekawa_balance = maekawa_balance(cp, v);
        r.flat_foldable = even && std::fabs(r.kawasaki_defect) <= tol &&
                          (r.maekawa_balance == 2 || r.maekawa_balance == -2);
        report.all_pass = report.all_pass && r.flat_foldable;
        report.vertices.push_back(r);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Faces (derived by planar traversal) and the flat-fold map
// ---------------------------------------------------------------------------

struct FaceSet {
    // Each face is a cycle of half-edges; half-edge h = 2*crease + dir.
    std::vector<std::vector<int>> face_half_edges;
    std::vector<char> is_inner;           // signed area > 0
    std::vector<int> left_face;           // per half-edge
    std::size_t inner_count = 0;

    static int crease_of(int h) { return h / 2; }
    static bool forward(int h) { return (h & 1) == 0; }
};

inline FaceSet build_faces(const CreasePattern& cp) {
    const int ne = static_cast<int>(cp.creases.size());
    const int nv = static_cast<int>(cp.vertices.size());
    auto origin = [&](int h) {
        const Crease& c = cp.creases[h / 2];
        return (h & 1) ? c.v2 : c.v1;
    };
    auto dest = [&](int h) {
        const Crease& c = cp.creases[h / 2];
        return (h & 1) ? c.v1 : c.v2;
    };
    // Outgoing half-edges per vertex, sorted ccw by angle.
    std::vector<std::vector<int>> out(nv);
    for (int h = 0; h < 2 * ne; ++h) out[origin(h)].push_back(h);
    for (int v = 0; v < nv; ++v) {
        auto& list = out[v];
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            const Vec2 da = cp.vertices[dest(a)] - cp.vertices[v];
            const Vec2 db = cp.vertices[dest(b)] - cp.vertices[v];
            return dir_angle(da) < dir_angle(db);
        });
    }
    // next(u->v) = ccw-predecessor of (v->u) at v; traces faces with the
    // interior on the left.
    std::vector<int> next(2 * ne, -1);
    for (int v = 0; v < nv; ++v) {
        const auto& list = out[v];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const int twin_prev = list[(i + list.size() - 1) % list.size()];
            next[list[i] ^ 1] = twin_prev;
        }
    }
    FaceSet fs;
    fs.left_face.assign(2 * ne, -1);
    std::vector<char> used(2 * ne, 0);
    for (int h0 = 0; h0 < 2 * ne; ++h0) {
        if (used[h0]) continue;
        std::vector<int> cycle;
        int h = h0;
        double area2 = 0.0;
        do {
            used[h] = 1;
            fs.left_face[h] = static_cast<int>(fs.face_half_edges.size());
            cycle.push_back(h);
            const Vec2 a = cp.vertices[origin(h)];
            const Vec2 b = cp.vertices[dest(h)];
            area2 += a.cross(b);
            h = next[h];
            if (h < 0) throw malformed_graph_error("build_faces: broken traversal");
        } while (h != h0);
        fs.face_half_edges.push_back(std::move(cycle));
        fs.is_inner.push_back(area2 > 0.0);
        if (area2 > 0.0) ++fs.inner_count;
    }
    return fs;
}

struct FlatFoldMap {
    FaceSet faces;
    std::vector<Affine2> maps;  // per face; identity for outer faces
};

// Assigns each face the composition of reflections across creases along a
// path from the seed face. Consistency requires path independence; checked on
// every non-tree adjacency, and an inconsistency names the offending crease.
inline FlatFoldMap flat_fold_map(const CreasePattern& cp, int seed_face = -1) {
    cp.validate();
    FlatFoldMap result;
    result.faces = build_faces(cp);
    const FaceSet& fs = result.faces;
    const int nf = static_cast<int>(fs.face_half_edges.size());
    result.maps.assign(nf, Affine2::identity());
    if (nf == 0) return result;

    if (seed_face < 0) {
        for (int f = 0; f < nf; ++f)
            if (fs.is_inner[f]) {
                seed_face = f;
                break;
            }
        if (seed_face < 0) return result;  // no inner faces at all
    }
    if (seed_face >= nf || !fs.is_inner[seed_face])
        throw std::domain_error("flat_fold_map: seed must be an inner face");

    std::vector<char> visited(nf, 0);
    auto bfs_from = [&](int seed) {
        std::vector<int> queue{seed};
        visited[seed] = 1;
        result.maps[seed] = Affine2::identity();
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int f = queue[qi];
            for (int h : fs.face_half_edges[f]) {
                const int e = FaceSet::crease_of(h);
                const Crease& c = cp.creases[e];
                if (c.assignment == CreaseAssignment::Border) continue;
                const int g = fs.left_face[h ^ 1];
                if (g == f || !fs.is_inner[g]) continue;
                Affine2 fold;
                if (c.assignment == CreaseAssignment::Flat)
                    fold = Affine2::identity();
                else
                    fold = Affine2::reflection(cp.vertices[c.v1], cp.vertices[c.v2]);
                const Affine2 expected = result.maps[f].compose(fold);
                if (!visited[g]) {
                    visited[g] = 1;
                    result.maps[g] = expected;
                    queue.push_back(g);
                } else if (result.maps[g].max_abs_diff(expected) > kGeomTol) {
                    throw fold_inconsistency_error(
                        "flat_fold_map: inconsistent cycle across crease " + std::to_string(e) +
                        " between faces " + std::to_string(f) + " and " + std::to_string(g));
                }
            }
        }
    };
    bfs_from(seed_face);
    // Disconnected components get their own seeds.
    for (int f = 0; f < nf; ++f)
        if (fs.is_inner[f] && !visited[f]) bfs_from(f);
    return result;
}

}  // namespace springfold
