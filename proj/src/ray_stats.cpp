#include "cardiomesh/ray_stats.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "cardiomesh/errors.hpp"
#include "cardiomesh/geometry_ops.hpp"

namespace cardiomesh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RayStats stats_for_face(const TriBvh& bvh, const SurfaceMesh& mesh, int face,
                        bool include_self_mesh) {
    RayStats s;
    if (mesh.face_areas()[face] <= kDegenerateFaceArea) return s;  // undefined
    s.defined = true;
    const Vec3& origin = mesh.face_centroids()[face];
    const Vec3& normal = mesh.face_normals()[face];
    const int exclude = include_self_mesh ? face : -1;

    const auto fwd = bvh.cast(origin, normal, exclude);
    if (fwd.empty()) {
        // Only possible when the face lies on the hull plane itself; record
        // the immediate hull exit so n_i >= 1 stays true.
        s.n_i = 1;
        s.d_n_plus = kRayOffset;
    } else {
        s.n_i = static_cast<int>(fwd.size());
        s.d_n_plus = fwd.front().t;
    }
    const auto bwd = bvh.cast(origin, -normal, exclude);
    s.d_n_minus = bwd.empty() ? kInf : bwd.front().t;
    return s;
}

}  // namespace

std::vector<RayStats> face_ray_stats(const SurfaceMesh& mesh, const SurfaceMesh& hull,
                                     bool include_self_mesh) {
    std::vector<int> all(mesh.face_count());
    for (int f = 0; f < mesh.face_count(); ++f) all[f] = f;
    return face_ray_stats_subset(mesh, hull, include_self_mesh, all);
}

std::vector<RayStats> face_ray_stats_subset(const SurfaceMesh& mesh, const SurfaceMesh& hull,
                                            bool include_self_mesh,
                                            const std::vector<int>& faces) {
    // Mesh first so its faces win index tie-breaks against coincident hull
    // faces, then the hull guarantees every ray an exit hit.
    std::vector<const SurfaceMesh*> targets;
    if (include_self_mesh) targets.push_back(&mesh);
    targets.push_back(&hull);
    const TriBvh bvh(targets);

    std::vector<RayStats> stats(mesh.face_count());
    for (int f : faces) stats[f] = stats_for_face(bvh, mesh, f, include_self_mesh);
    return stats;
}

InsideTester::InsideTester(const SurfaceMesh& mesh, bool validate) : bvh_(mesh) {
    if (validate) {
        const auto report = validate_closed(mesh);
        if (!report.watertight)
            throw NotClosed("point containment requires a watertight mesh (" +
                            std::to_string(report.defects.size()) + " defective edges)");
    }
}

bool InsideTester::contains(const Vec3& point) const {
    // Parity count along a fixed direction; a hit within 1e-9 of a triangle
    // edge (in barycentric terms) may be a graze, so recast along a perturbed
    // deterministic direction.
    Vec3 dir{0.5371580878161237, 0.6632398964907162, 0.5209841763861593};
    dir = dir.normalized();
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (int attempt = 0; attempt < 8; ++attempt) {
        const auto hits = bvh_.cast(point, dir, -1, 0.0);
        bool suspicious = false;
        for (const RayHit& h : hits) {
            const double w = 1.0 - h.bary_u - h.bary_v;
            if (h.bary_u < 1e-9 || h.bary_v < 1e-9 || w < 1e-9 || h.t < 1e-12) {
                suspicious = true;
                break;
            }
        }
        if (!suspicious) return (hits.size() % 2) == 1;
        dir = Vec3{uniform_double(rng) - 0.5, uniform_double(rng) - 0.5,
                   uniform_double(rng) - 0.5}
                  .normalized();
        if (dir.norm() == 0.0) dir = Vec3{0, 0, 1};
    }
    throw Error("point containment test kept grazing after 8 perturbed recasts");
}

bool point_in_mesh(const SurfaceMesh& mesh, const Vec3& point) {
    return InsideTester(mesh).contains(point);
}

}  // namespace cardiomesh
