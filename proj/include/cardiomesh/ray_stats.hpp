#pragma once

#include <vector>

#include "cardiomesh/bvh.hpp"
#include "cardiomesh/surface_mesh.hpp"

namespace cardiomesh {

// Per-face ray statistics driving the labelling rules: number of
// intersections along the face normal (n_i) and nearest-hit distances along
// +normal (d_n_plus) and -normal (d_n_minus). Degenerate faces are flagged
// undefined instead of faulting.
struct RayStats {
    int n_i = 0;
    double d_n_plus = 0.0;   // +inf when nothing is hit
    double d_n_minus = 0.0;  // +inf when nothing is hit
    bool defined = false;
};

// Rays start at each face centroid and run along +/- the face normal against
// (mesh + hull) when include_self_mesh, else against the hull alone. The
// source face is always excluded. A +normal ray that escapes without hits can
// only start on the hull itself and is recorded as a hull exit at the offset
// distance, keeping n_i >= 1.
std::vector<RayStats> face_ray_stats(const SurfaceMesh& mesh, const SurfaceMesh& hull,
                                     bool include_self_mesh);

// As above but only for the listed faces (used when ray origins are
// downsampled on very fine meshes).
std::vector<RayStats> face_ray_stats_subset(const SurfaceMesh& mesh, const SurfaceMesh& hull,
                                            bool include_self_mesh,
                                            const std::vector<int>& faces);

// Crossing-parity containment test for a watertight mesh. Hits grazing a
// triangle edge trigger a recast along a perturbed direction (deterministic,
// seeded, up to 8 attempts). Throws NotClosed for open meshes and Error when
// all retries graze.
class InsideTester {
  public:
    explicit InsideTester(const SurfaceMesh& mesh, bool validate = true);
    bool contains(const Vec3& point) const;
    const TriBvh& bvh() const { return bvh_; }

  private:
    TriBvh bvh_;
};

bool point_in_mesh(const SurfaceMesh& mesh, const Vec3& point);

}  // namespace cardiomesh
