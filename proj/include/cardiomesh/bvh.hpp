#pragma once

#include <vector>

#include "cardiomesh/surface_mesh.hpp"

namespace cardiomesh {

// Intersection with a target triangle. Hits are sorted ascending by t and
// deduplicated at shared edges (canonical tie-break: lowest face index wins).
struct RayHit {
    int face = -1;       // global face index over the target set
    double t = 0.0;      // distance along the (unit) ray direction, mm
    Vec3 point{};        // origin + t * direction
    double bary_u = 0.0; // barycentric coordinates on the triangle
    double bary_v = 0.0;
};

// Shared-edge crossings closer than this along the ray collapse to one hit.
inline constexpr double kHitMergeTolerance = 1e-9;  // mm
// Ray origins are pushed forward by this much; the source face is also
// excluded by index because the centroid lies exactly on it.
inline constexpr double kRayOffset = 1e-6;  // mm

// Single ray/triangle intersection (Moller-Trumbore, inclusive edges).
bool ray_triangle(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b,
                  const Vec3& c, double& t, double& u, double& v);

// Bounding-volume hierarchy over the triangles of one or more surface meshes.
// Faces are numbered globally in the order the meshes are given. Immutable
// after construction; casts are pure and may run concurrently.
class TriBvh {
  public:
    explicit TriBvh(const std::vector<const SurfaceMesh*>& meshes);
    explicit TriBvh(const SurfaceMesh& mesh) : TriBvh(std::vector<const SurfaceMesh*>{&mesh}) {}

    int triangle_count() const { return static_cast<int>(tri_a_.size()); }

    // All intersections with t > t_min, sorted by t, deduplicated. A non
    // negative exclude_face removes that global face from consideration.
    std::vector<RayHit> cast(const Vec3& origin, const Vec3& dir, int exclude_face = -1,
                             double t_min = kRayOffset) const;

    // Reference implementation over all triangles; the acceleration structure
    // must reproduce it bitwise.
    std::vector<RayHit> cast_brute(const Vec3& origin, const Vec3& dir, int exclude_face = -1,
                                   double t_min = kRayOffset) const;

    // Nearest point on the triangle set.
    struct Closest {
        int face = -1;
        Vec3 point{};
        double distance = 0.0;
    };
    Closest closest_point(const Vec3& p) const;

    // Maps a global face index back to (mesh ordinal, local face index).
    std::pair<int, int> face_origin(int global_face) const;

    const Aabb& bounds() const { return root_bounds_; }

  private:
    struct Node {
        Aabb box;
        int left = -1;    // internal: child index; leaf: first triangle
        int count = 0;    // leaf triangle count (0 for internal nodes)
        int right = -1;
    };

    int build(std::vector<int>& ids, int begin, int end, std::vector<Vec3>& centroids);
    void dedupe(std::vector<RayHit>& hits) const;

    std::vector<Vec3> tri_a_, tri_b_, tri_c_;
    std::vector<int> order_;   // triangle ids in leaf order
    std::vector<Node> nodes_;
    std::vector<int> mesh_face_offset_;
    Aabb root_bounds_;
};

}  // namespace cardiomesh
