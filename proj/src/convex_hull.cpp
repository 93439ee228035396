#include "cardiomesh/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "cardiomesh/errors.hpp"

namespace cardiomesh {

namespace {

struct HullFace {
    int v[3];
    Vec3 normal;     // unit
    double offset;   // plane: normal . x = offset
    std::vector<int> outside;  // conflict list, farthest classified last
    int neighbor[3]; // across edge (v[k], v[k+1])
    bool dead = false;
};

inline double plane_dist(const HullFace& f, const Vec3& p) {
    return f.normal.dot(p) - f.offset;
}

}  // namespace

SurfaceMesh convex_hull(const std::vector<Vec3>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 4) throw DegenerateInput("convex hull needs at least 4 points");

    Aabb box;
    for (const auto& p : points) box.expand(p);
    const double eps = 1e-9 * std::max(box.diagonal(), 1e-30);

    // Initial simplex from extreme points: farthest pair along x, then the
    // point farthest from that line, then farthest from the plane.
    int i0 = 0, i1 = 0;
    for (int i = 1; i < n; ++i) {
        if (points[i].x < points[i0].x) i0 = i;
        if (points[i].x > points[i1].x) i1 = i;
    }
    if ((points[i1] - points[i0]).norm() <= eps) {
        // Degenerate along x; fall back to the overall farthest pair.
        double best = -1.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double d = (points[j] - points[i]).norm2();
                if (d > best) { best = d; i0 = i; i1 = j; }
            }
        if (best <= eps * eps) throw DegenerateInput("all points coincident");
    }
    const Vec3 dir = (points[i1] - points[i0]).normalized();
    int i2 = -1;
    double best = eps;
    for (int i = 0; i < n; ++i) {
        const Vec3 d = points[i] - points[i0];
        const double dist = (d - dir * d.dot(dir)).norm();
        if (dist > best) { best = dist; i2 = i; }
    }
    if (i2 < 0) throw DegenerateInput("input points are collinear");
    Vec3 pn = (points[i1] - points[i0]).cross(points[i2] - points[i0]).normalized();
    int i3 = -1;
    best = eps;
    for (int i = 0; i < n; ++i) {
        const double dist = std::abs(pn.dot(points[i] - points[i0]));
        if (dist > best) { best = dist; i3 = i; }
    }
    if (i3 < 0) throw DegenerateInput("input points are coplanar");
    if (pn.dot(points[i3] - points[i0]) > 0.0) std::swap(i1, i2);

    std::vector<HullFace> faces;
    auto make_face = [&](int a, int b, int c) {
        HullFace f;
        f.v[0] = a; f.v[1] = b; f.v[2] = c;
        f.normal = (points[b] - points[a]).cross(points[c] - points[a]).normalized();
        f.offset = f.normal.dot(points[a]);
        f.neighbor[0] = f.neighbor[1] = f.neighbor[2] = -1;
        return f;
    };
    faces.push_back(make_face(i0, i1, i2));
    faces.push_back(make_face(i0, i3, i1));
    faces.push_back(make_face(i1, i3, i2));
    faces.push_back(make_face(i2, i3, i0));

    auto link_all = [&](const std::vector<int>& ids) {
        std::map<std::pair<int, int>, std::pair<int, int>> half;  // (a,b) -> (face, slot)
        for (int fi : ids) {
            const HullFace& f = faces[fi];
            for (int k = 0; k < 3; ++k) half[{f.v[k], f.v[(k + 1) % 3]}] = {fi, k};
        }
        for (const auto& [edge, fs] : half) {
            auto it = half.find({edge.second, edge.first});
            if (it != half.end()) faces[fs.first].neighbor[fs.second] = it->second.first;
        }
    };
    link_all({0, 1, 2, 3});

    // Conflict lists; each unassigned point goes to the first face it is
    // outside of (strictly beyond eps).
    for (int i = 0; i < n; ++i) {
        if (i == i0 || i == i1 || i == i2 || i == i3) continue;
        for (auto& f : faces) {
            if (plane_dist(f, points[i]) > eps) { f.outside.push_back(i); break; }
        }
    }

    std::vector<int> stack;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
        if (!faces[fi].outside.empty()) stack.push_back(fi);

    while (!stack.empty()) {
        const int fi = stack.back();
        stack.pop_back();
        if (faces[fi].dead || faces[fi].outside.empty()) continue;

        // Farthest conflict point (ties broken by lowest index for determinism).
        int apex = -1;
        double far = -1.0;
        for (int i : faces[fi].outside) {
            const double d = plane_dist(faces[fi], points[i]);
            if (d > far + 1e-30 || (d > far - 1e-30 && (apex < 0 || i < apex))) {
                far = d;
                apex = i;
            }
        }
        const Vec3& p = points[apex];

        // Visible set via BFS over neighbours.
        std::vector<int> visible{fi};
        std::vector<char> seen(faces.size(), 0);
        seen[fi] = 1;
        for (size_t s = 0; s < visible.size(); ++s) {
            const HullFace& f = faces[visible[s]];
            for (int k = 0; k < 3; ++k) {
                const int nb = f.neighbor[k];
                if (nb < 0 || seen[nb] || faces[nb].dead) continue;
                if (plane_dist(faces[nb], p) > eps) {
                    seen[nb] = 1;
                    visible.push_back(nb);
                }
            }
        }

        // Horizon: directed edges of visible faces whose neighbour is hidden.
        std::vector<std::array<int, 3>> horizon;  // a, b, hidden neighbour
        for (int vi : visible) {
            const HullFace& f = faces[vi];
            for (int k = 0; k < 3; ++k) {
                const int nb = f.neighbor[k];
                if (nb >= 0 && !seen[nb]) horizon.push_back({f.v[k], f.v[(k + 1) % 3], nb});
            }
        }
        for (int vi : visible) {
            faces[vi].dead = true;
            faces[vi].outside.shrink_to_fit();
        }

        std::vector<int> fresh;
        for (const auto& h : horizon) {
            const int nfi = static_cast<int>(faces.size());
            faces.push_back(make_face(h[0], h[1], apex));
            fresh.push_back(nfi);
        }
        // Link fresh faces to the hidden neighbours and among themselves.
        {
            std::map<std::pair<int, int>, std::pair<int, int>> half;
            for (int nfi : fresh) {
                const HullFace& f = faces[nfi];
                for (int k = 0; k < 3; ++k) half[{f.v[k], f.v[(k + 1) % 3]}] = {nfi, k};
            }
            for (size_t hidx = 0; hidx < horizon.size(); ++hidx) {
                const int nfi = fresh[hidx];
                const int hidden = horizon[hidx][2];
                faces[nfi].neighbor[0] = hidden;
                HullFace& hf = faces[hidden];
                for (int k = 0; k < 3; ++k)
                    if (hf.v[k] == horizon[hidx][1] && hf.v[(k + 1) % 3] == horizon[hidx][0])
                        hf.neighbor[k] = nfi;
                for (int k = 1; k < 3; ++k) {
                    const HullFace& f = faces[nfi];
                    auto it = half.find({f.v[(k + 1) % 3], f.v[k]});
                    if (it != half.end()) faces[nfi].neighbor[k] = it->second.first;
                }
            }
        }

        // Redistribute orphaned conflict points.
        for (int vi : visible) {
            for (int i : faces[vi].outside) {
                if (i == apex) continue;
                for (int nfi : fresh) {
                    if (plane_dist(faces[nfi], points[i]) > eps) {
                        faces[nfi].outside.push_back(i);
                        break;
                    }
                }
            }
            faces[vi].outside.clear();
        }
        for (int nfi : fresh)
            if (!faces[nfi].outside.empty()) stack.push_back(nfi);
    }

    // Compact to a SurfaceMesh over the hull vertices only.
    std::vector<int> remap(points.size(), -1);
    std::vector<Vec3> verts;
    std::vector<std::array<int, 3>> tris;
    for (const auto& f : faces) {
        if (f.dead) continue;
        std::array<int, 3> t;
        for (int k = 0; k < 3; ++k) {
            if (remap[f.v[k]] < 0) {
                remap[f.v[k]] = static_cast<int>(verts.size());
                verts.push_back(points[f.v[k]]);
            }
            t[k] = remap[f.v[k]];
        }
        tris.push_back(t);
    }
    return SurfaceMesh::create(std::move(verts), std::move(tris));
}

}  // namespace cardiomesh
