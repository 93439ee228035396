#pragma once

#include <array>
#include <vector>

#include "cardiomesh/vec3.hpp"

namespace cardiomesh {

// Area below which a face is treated as degenerate: it gets a zero normal and
// is excluded from ray statistics instead of faulting.
inline constexpr double kDegenerateFaceArea = 1e-12;  // mm^2

// Indexed triangle mesh. Derived data (normals, centroids, areas, adjacency)
// is computed once at construction; instances are immutable afterwards and
// safe for concurrent read-only use.
class SurfaceMesh {
  public:
    SurfaceMesh() = default;

    // Validates indices and computes all derived caches. Throws Error on
    // out-of-range face indices.
    static SurfaceMesh create(std::vector<Vec3> vertices,
                              std::vector<std::array<int, 3>> faces);

    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }
    const std::vector<Vec3>& face_normals() const { return normals_; }
    const std::vector<Vec3>& face_centroids() const { return centroids_; }
    const std::vector<double>& face_areas() const { return areas_; }

    // Edge-neighbouring faces per face. Manifold faces have at most three
    // entries; non-manifold inputs may have more.
    const std::vector<std::vector<int>>& face_adjacency() const { return adjacency_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    bool empty() const { return faces_.empty(); }

    const Aabb& bounds() const { return bounds_; }
    double total_area() const { return total_area_; }

    Vec3 face_vertex(int face, int corner) const { return vertices_[faces_[face][corner]]; }

    // Area-weighted vertex normals (computed on demand is avoided: derived at
    // construction like everything else).
    const std::vector<Vec3>& vertex_normals() const { return vertex_normals_; }

    double median_edge_length() const { return median_edge_length_; }

  private:
    std::vector<Vec3> vertices_;
    std::vector<std::array<int, 3>> faces_;
    std::vector<Vec3> normals_;
    std::vector<Vec3> centroids_;
    std::vector<double> areas_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Vec3> vertex_normals_;
    Aabb bounds_;
    double total_area_ = 0.0;
    double median_edge_length_ = 0.0;
};

// Maps every input vertex to the index of its weld representative among the
// returned unique positions (first occurrence wins, deterministic).
struct WeldResult {
    std::vector<Vec3> vertices;
    std::vector<int> remap;  // size == input vertex count
};
WeldResult weld_points(const std::vector<Vec3>& vertices, double tolerance = 1e-6);

// Welds duplicate vertices closer than `tolerance` (mm) and drops faces that
// collapse, remapping the rest. Used by the mesh loaders; exposed for assembly.
std::pair<std::vector<Vec3>, std::vector<std::array<int, 3>>> weld_vertices(
    const std::vector<Vec3>& vertices, const std::vector<std::array<int, 3>>& faces,
    double tolerance = 1e-6);

// Concatenates face soups into one (no welding).
SurfaceMesh merge_meshes(const std::vector<SurfaceMesh>& parts);

// Rigid/affine helpers used across tests and the electrode registration.
SurfaceMesh transform(const SurfaceMesh& mesh, const std::array<double, 9>& rot, const Vec3& t);

}  // namespace cardiomesh
