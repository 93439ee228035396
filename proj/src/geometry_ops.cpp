#include "cardiomesh/geometry_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "cardiomesh/errors.hpp"

namespace cardiomesh {

namespace {

struct EdgeUse {
    int face;
    bool forward;  // edge traversed (lo -> hi) within the face winding
};

inline uint64_t ekey(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
}

std::unordered_map<uint64_t, std::vector<EdgeUse>> collect_edges(const SurfaceMesh& mesh) {
    std::unordered_map<uint64_t, std::vector<EdgeUse>> edges;
    edges.reserve(mesh.faces().size() * 3);
    for (int f = 0; f < mesh.face_count(); ++f) {
        const auto& fc = mesh.faces()[f];
        for (int k = 0; k < 3; ++k) {
            const int a = fc[k], b = fc[(k + 1) % 3];
            edges[ekey(a, b)].push_back({f, a < b});
        }
    }
    return edges;
}

}  // namespace

ClosedReport validate_closed(const SurfaceMesh& mesh) {
    ClosedReport report;
    auto edges = collect_edges(mesh);
    // Deterministic defect ordering for reporting.
    std::map<std::pair<int, int>, std::vector<EdgeUse>> ordered;
    for (auto& [key, uses] : edges) {
        const int a = static_cast<int>(key >> 32);
        const int b = static_cast<int>(key & 0xffffffffu);
        ordered[{a, b}] = std::move(uses);
    }
    for (const auto& [edge, uses] : ordered) {
        if (uses.size() == 2 && uses[0].forward != uses[1].forward) continue;
        EdgeDefect d;
        d.v0 = edge.first;
        d.v1 = edge.second;
        d.face_count = static_cast<int>(uses.size());
        d.orientation = uses.size() == 2;  // two faces, same traversal
        report.defects.push_back(d);
    }
    report.watertight = report.defects.empty() && !mesh.empty();
    return report;
}

std::vector<BoundaryLoop> boundary_loops(const SurfaceMesh& mesh) {
    auto edges = collect_edges(mesh);
    // Directed boundary edges follow the winding of their single face, so
    // loops inherit a consistent orientation.
    std::map<int, std::vector<int>> next;  // start vertex -> candidate end vertices
    for (const auto& [key, uses] : edges) {
        if (uses.size() > 2) {
            const int a = static_cast<int>(key >> 32);
            const int b = static_cast<int>(key & 0xffffffffu);
            throw NonManifoldEdge("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") has " + std::to_string(uses.size()) + " incident faces");
        }
        if (uses.size() != 1) continue;
        const int lo = static_cast<int>(key >> 32);
        const int hi = static_cast<int>(key & 0xffffffffu);
        // The boundary direction is the face's traversal of this edge.
        if (uses[0].forward)
            next[lo].push_back(hi);
        else
            next[hi].push_back(lo);
    }
    for (auto& [v, ends] : next) {
        (void)v;
        std::sort(ends.begin(), ends.end());
    }

    std::vector<BoundaryLoop> loops;
    while (!next.empty()) {
        const int start = next.begin()->first;
        BoundaryLoop loop;
        int cur = start;
        while (true) {
            loop.vertices.push_back(cur);
            auto it = next.find(cur);
            if (it == next.end() || it->second.empty())
                throw NonManifoldEdge("open boundary chain at vertex " + std::to_string(cur));
            const int nxt = it->second.front();
            it->second.erase(it->second.begin());
            if (it->second.empty()) next.erase(it);
            cur = nxt;
            if (cur == start) break;
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

double signed_volume_unchecked(const std::vector<Vec3>& vertices,
                               const std::vector<std::array<int, 3>>& faces) {
    double vol = 0.0;
    for (const auto& f : faces)
        vol += vertices[f[0]].cross(vertices[f[1]]).dot(vertices[f[2]]);
    return vol / 6.0;
}

double enclosed_volume(const SurfaceMesh& mesh) {
    const auto report = validate_closed(mesh);
    if (!report.watertight) {
        throw NotClosed("enclosed_volume requires a watertight mesh (" +
                        std::to_string(report.defects.size()) + " defective edges)");
    }
    return signed_volume_unchecked(mesh.vertices(), mesh.faces());
}

namespace {

inline double corner_det(const Vec3& e0, const Vec3& e1, const Vec3& e2) {
    const double n0 = e0.norm(), n1 = e1.norm(), n2 = e2.norm();
    if (n0 == 0.0 || n1 == 0.0 || n2 == 0.0) return 0.0;
    return e0.cross(e1).dot(e2) / (n0 * n1 * n2);
}

}  // namespace

double scaled_jacobian_tet(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    // Normalized Jacobian at all four corners, scaled so the regular
    // tetrahedron scores 1. Inverted or degenerate elements clamp to 0.
    static const double sqrt2 = std::sqrt(2.0);
    double q = corner_det(b - a, c - a, d - a);
    q = std::min(q, corner_det(c - b, a - b, d - b));
    q = std::min(q, corner_det(a - c, b - c, d - c));
    q = std::min(q, corner_det(b - d, a - d, c - d));
    return std::clamp(q * sqrt2, 0.0, 1.0);
}

double scaled_jacobian_hex(const std::array<Vec3, 8>& c) {
    // VTK hexahedron corner numbering; three edge neighbours per corner
    // ordered so an axis-aligned cube yields +1 at every corner.
    static const int nbr[8][3] = {{1, 3, 4}, {2, 0, 5}, {3, 1, 6}, {0, 2, 7},
                                  {7, 5, 0}, {4, 6, 1}, {5, 7, 2}, {6, 4, 3}};
    double q = 1.0;
    for (int k = 0; k < 8; ++k) {
        q = std::min(q, corner_det(c[nbr[k][0]] - c[k], c[nbr[k][1]] - c[k],
                                   c[nbr[k][2]] - c[k]));
    }
    return std::clamp(q, 0.0, 1.0);
}

double scaled_jacobian(const VolumeMesh& mesh, int e) {
    const int* el = mesh.element(e);
    const auto& n = mesh.nodes();
    if (mesh.kind() == ElementKind::Tet)
        return scaled_jacobian_tet(n[el[0]], n[el[1]], n[el[2]], n[el[3]]);
    std::array<Vec3, 8> corners;
    for (int k = 0; k < 8; ++k) corners[k] = n[el[k]];
    return scaled_jacobian_hex(corners);
}

}  // namespace cardiomesh
