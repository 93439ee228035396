#pragma once

#include <string>
#include <vector>

#include "cardiomesh/surface_mesh.hpp"
#include "cardiomesh/volume_mesh.hpp"

namespace cardiomesh {

// Ordered vertex-index cycle along a surface boundary. Consecutive vertices
// share an edge with exactly one incident face; the cycle is closed.
struct BoundaryLoop {
    std::vector<int> vertices;
};

struct EdgeDefect {
    int v0 = 0, v1 = 0;
    int face_count = 0;       // number of incident faces
    bool orientation = false; // true when the two incident faces traverse the edge the same way
};

struct ClosedReport {
    bool watertight = false;
    std::vector<EdgeDefect> defects;
};

// Watertight <=> every edge has exactly two incident faces traversing it in
// opposite directions. Diagnostic only; never throws.
ClosedReport validate_closed(const SurfaceMesh& mesh);

// One loop per connected boundary cycle; empty for closed meshes.
// Throws NonManifoldEdge for edges with more than two incident faces.
std::vector<BoundaryLoop> boundary_loops(const SurfaceMesh& mesh);

// Divergence-theorem signed volume (mm^3); positive for outward orientation.
// Throws NotClosed when validate_closed fails.
double enclosed_volume(const SurfaceMesh& mesh);

// Signed volume without the closedness gate, for internal metrics on face
// subsets (value only meaningful relative to a closed companion set).
double signed_volume_unchecked(const std::vector<Vec3>& vertices,
                               const std::vector<std::array<int, 3>>& faces);

// Scaled Jacobian quality in [0,1]. 1 for an axis-aligned cube hex and for the
// regular tetrahedron; 0 for degenerate or inverted elements. Rotation- and
// uniform-scale-invariant. Degenerate input never faults.
double scaled_jacobian_tet(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);
double scaled_jacobian_hex(const std::array<Vec3, 8>& corners);
double scaled_jacobian(const VolumeMesh& mesh, int element);

}  // namespace cardiomesh
