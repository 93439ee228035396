#pragma once

#include <vector>

#include "cardiomesh/surface_mesh.hpp"

namespace cardiomesh {

// 3D convex hull (quickhull). The returned mesh is closed and outward
// oriented; every input point lies inside or on the hull within the
// classification epsilon (1e-9 x bounding-box diagonal). Throws
// DegenerateInput for coplanar/collinear point sets.
SurfaceMesh convex_hull(const std::vector<Vec3>& points);

}  // namespace cardiomesh
