#include "cardiomesh/surface_mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "cardiomesh/errors.hpp"

namespace cardiomesh {

namespace {

// Key for grouping the two faces sharing an undirected edge.
inline uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
}

}  // namespace

SurfaceMesh SurfaceMesh::create(std::vector<Vec3> vertices,
                                std::vector<std::array<int, 3>> faces) {
    SurfaceMesh m;
    const int nv = static_cast<int>(vertices.size());
    for (const auto& f : faces) {
        for (int k = 0; k < 3; ++k) {
            if (f[k] < 0 || f[k] >= nv)
                throw Error("face index " + std::to_string(f[k]) + " out of range [0," +
                            std::to_string(nv) + ")");
        }
    }
    m.vertices_ = std::move(vertices);
    m.faces_ = std::move(faces);

    const int nf = m.face_count();
    m.normals_.resize(nf);
    m.centroids_.resize(nf);
    m.areas_.resize(nf);
    m.vertex_normals_.assign(m.vertices_.size(), Vec3{});
    m.total_area_ = 0.0;

    for (const auto& v : m.vertices_) m.bounds_.expand(v);

    for (int f = 0; f < nf; ++f) {
        const Vec3& a = m.vertices_[m.faces_[f][0]];
        const Vec3& b = m.vertices_[m.faces_[f][1]];
        const Vec3& c = m.vertices_[m.faces_[f][2]];
        const Vec3 n = (b - a).cross(c - a);
        const double area = 0.5 * n.norm();
        m.areas_[f] = area;
        m.centroids_[f] = (a + b + c) / 3.0;
        m.normals_[f] = area > kDegenerateFaceArea ? n / (2.0 * area) : Vec3{};
        m.total_area_ += area;
        for (int k = 0; k < 3; ++k) m.vertex_normals_[m.faces_[f][k]] += n * 0.5;
    }
    for (auto& vn : m.vertex_normals_) vn = vn.normalized();

    // Edge-adjacency. Every face incident to an undirected edge becomes a
    // neighbour of every other face on that edge, so non-manifold inputs are
    // representable (boundary_loops reports them when it matters).
    std::unordered_map<uint64_t, std::vector<int>> edge_faces;
    edge_faces.reserve(static_cast<size_t>(nf) * 3);
    for (int f = 0; f < nf; ++f) {
        const auto& fc = m.faces_[f];
        for (int k = 0; k < 3; ++k) edge_faces[edge_key(fc[k], fc[(k + 1) % 3])].push_back(f);
    }
    m.adjacency_.assign(nf, {});
    for (const auto& [key, fl] : edge_faces) {
        (void)key;
        for (int i : fl)
            for (int j : fl)
                if (i != j) m.adjacency_[i].push_back(j);
    }
    for (auto& adj : m.adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }

    // Median edge length feeds projection warnings and tolerance scaling.
    std::vector<double> edges;
    edges.reserve(static_cast<size_t>(nf) * 3);
    for (int f = 0; f < nf; ++f) {
        const auto& fc = m.faces_[f];
        for (int k = 0; k < 3; ++k)
            edges.push_back((m.vertices_[fc[k]] - m.vertices_[fc[(k + 1) % 3]]).norm());
    }
    if (!edges.empty()) {
        auto mid = edges.begin() + edges.size() / 2;
        std::nth_element(edges.begin(), mid, edges.end());
        m.median_edge_length_ = *mid;
    }
    return m;
}

WeldResult weld_points(const std::vector<Vec3>& vertices, double tolerance) {
    // Quantized hash grid; candidate cells within one tolerance step are
    // scanned so points straddling a cell boundary still weld.
    struct CellHash {
        size_t operator()(const std::array<int64_t, 3>& c) const {
            uint64_t h = 1469598103934665603ull;
            for (int64_t v : c) {
                h ^= static_cast<uint64_t>(v);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_map<std::array<int64_t, 3>, std::vector<int>, CellHash> grid;
    WeldResult out;
    out.remap.resize(vertices.size());
    const double inv = 1.0 / std::max(tolerance, 1e-300);

    for (size_t i = 0; i < vertices.size(); ++i) {
        const Vec3& p = vertices[i];
        const int64_t cx = static_cast<int64_t>(std::floor(p.x * inv));
        const int64_t cy = static_cast<int64_t>(std::floor(p.y * inv));
        const int64_t cz = static_cast<int64_t>(std::floor(p.z * inv));
        int found = -1;
        for (int64_t dx = -1; dx <= 1 && found < 0; ++dx)
            for (int64_t dy = -1; dy <= 1 && found < 0; ++dy)
                for (int64_t dz = -1; dz <= 1 && found < 0; ++dz) {
                    auto it = grid.find({cx + dx, cy + dy, cz + dz});
                    if (it == grid.end()) continue;
                    for (int j : it->second) {
                        if ((out.vertices[j] - p).norm() <= tolerance) {
                            found = j;
                            break;
                        }
                    }
                }
        if (found < 0) {
            found = static_cast<int>(out.vertices.size());
            out.vertices.push_back(p);
            grid[{cx, cy, cz}].push_back(found);
        }
        out.remap[i] = found;
    }
    return out;
}

std::pair<std::vector<Vec3>, std::vector<std::array<int, 3>>> weld_vertices(
    const std::vector<Vec3>& vertices, const std::vector<std::array<int, 3>>& faces,
    double tolerance) {
    WeldResult weld = weld_points(vertices, tolerance);
    std::vector<std::array<int, 3>> out_faces;
    out_faces.reserve(faces.size());
    for (const auto& f : faces) {
        std::array<int, 3> g{weld.remap[f[0]], weld.remap[f[1]], weld.remap[f[2]]};
        // Faces collapsed by welding are dropped.
        if (g[0] == g[1] || g[1] == g[2] || g[0] == g[2]) continue;
        out_faces.push_back(g);
    }
    return {std::move(weld.vertices), std::move(out_faces)};
}

SurfaceMesh merge_meshes(const std::vector<SurfaceMesh>& parts) {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    for (const auto& part : parts) {
        const int base = static_cast<int>(vertices.size());
        vertices.insert(vertices.end(), part.vertices().begin(), part.vertices().end());
        for (const auto& f : part.faces())
            faces.push_back({f[0] + base, f[1] + base, f[2] + base});
    }
    return SurfaceMesh::create(std::move(vertices), std::move(faces));
}

SurfaceMesh transform(const SurfaceMesh& mesh, const std::array<double, 9>& r, const Vec3& t) {
    std::vector<Vec3> verts;
    verts.reserve(mesh.vertices().size());
    for (const Vec3& p : mesh.vertices()) {
        verts.push_back({r[0] * p.x + r[1] * p.y + r[2] * p.z + t.x,
                         r[3] * p.x + r[4] * p.y + r[5] * p.z + t.y,
                         r[6] * p.x + r[7] * p.y + r[8] * p.z + t.z});
    }
    return SurfaceMesh::create(std::move(verts), mesh.faces());
}

}  // namespace cardiomesh
