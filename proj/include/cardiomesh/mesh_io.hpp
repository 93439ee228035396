#pragma once

#include <map>
#include <string>
#include <vector>

#include "cardiomesh/surface_mesh.hpp"
#include "cardiomesh/volume_mesh.hpp"

namespace cardiomesh {

enum class MeshFormat { StlBinary, StlAscii, Obj, VtkPolydata, VtkUnstructured };

// Data arrays carried alongside a surface in VTK files. Integer cell arrays
// hold label codes; doubles hold everything else.
struct SurfaceData {
    SurfaceMesh mesh;
    std::map<std::string, std::vector<int>> cell_ints;
    std::map<std::string, std::vector<double>> cell_scalars;
    std::map<std::string, std::vector<double>> point_scalars;
};

// Loaders weld duplicate vertices at 1e-6 mm and validate connectivity.
// ParseError carries the byte offset (binary STL) or line number (text
// formats); UnsupportedElement is raised for non-triangle surface cells and
// non-tet/hex volume cells.
SurfaceData load_surface(const std::string& path);
VolumeMesh load_volume(const std::string& path);

void save_surface(const SurfaceMesh& mesh, const std::string& path, MeshFormat format);
void save_surface_vtk(const SurfaceMesh& mesh, const std::string& path,
                      const std::map<std::string, std::vector<int>>& cell_ints = {},
                      const std::map<std::string, std::vector<double>>& cell_scalars = {},
                      const std::map<std::string, std::vector<double>>& point_scalars = {});
void save_volume(const VolumeMesh& mesh, const std::string& path);

// Picks a format from the file extension (.stl binary, .obj, .vtk).
MeshFormat format_from_path(const std::string& path, bool volume);

}  // namespace cardiomesh
