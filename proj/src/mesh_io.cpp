#include "cardiomesh/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "cardiomesh/errors.hpp"

namespace cardiomesh {

namespace {

constexpr double kWeldTolerance = 1e-6;  // mm

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Welds, drops collapsed faces and filters per-face/per-point arrays to the
// kept set.
SurfaceData finish_surface(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces,
                           std::map<std::string, std::vector<int>> cell_ints = {},
                           std::map<std::string, std::vector<double>> cell_scalars = {},
                           std::map<std::string, std::vector<double>> point_scalars = {}) {
    WeldResult weld = weld_points(vertices, kWeldTolerance);
    for (auto& [name, arr] : point_scalars) {
        (void)name;
        if (arr.size() != vertices.size()) continue;
        std::vector<double> out(weld.vertices.size(), 0.0);
        for (size_t i = vertices.size(); i-- > 0;) out[weld.remap[i]] = arr[i];
        arr = std::move(out);
    }
    std::vector<std::array<int, 3>> kept_faces;
    std::vector<int> kept_ids;
    kept_faces.reserve(faces.size());
    for (size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        std::array<int, 3> g{weld.remap[f[0]], weld.remap[f[1]], weld.remap[f[2]]};
        if (g[0] == g[1] || g[1] == g[2] || g[0] == g[2]) continue;
        kept_faces.push_back(g);
        kept_ids.push_back(static_cast<int>(i));
    }
    SurfaceData data;
    data.mesh = SurfaceMesh::create(std::move(weld.vertices), std::move(kept_faces));
    const bool filtered = kept_ids.size() != faces.size();
    auto filter = [&](auto& arrays) {
        for (auto& [name, arr] : arrays) {
            (void)name;
            if (!filtered || arr.size() != faces.size()) continue;
            std::remove_reference_t<decltype(arr)> out;
            out.reserve(kept_ids.size());
            for (int id : kept_ids) out.push_back(arr[id]);
            arr = std::move(out);
        }
    };
    filter(cell_ints);
    filter(cell_scalars);
    data.cell_ints = std::move(cell_ints);
    data.cell_scalars = std::move(cell_scalars);
    data.point_scalars = std::move(point_scalars);
    return data;
}

// --- STL ---------------------------------------------------------------------

bool stl_is_ascii(const std::string& bytes) {
    if (bytes.size() < 6 || bytes.compare(0, 5, "solid") != 0) return false;
    // Binary files may also begin with "solid"; require a "facet" keyword in
    // the leading text to accept ASCII.
    const size_t probe = std::min<size_t>(bytes.size(), 512);
    return bytes.substr(0, probe).find("facet") != std::string::npos;
}

SurfaceData load_stl_binary(const std::string& bytes, const std::string& path) {
    if (bytes.size() < 84)
        throw ParseError("binary STL '" + path + "' truncated in header at byte offset " +
                             std::to_string(bytes.size()),
                         static_cast<long long>(bytes.size()));
    uint32_t ntri = 0;
    std::memcpy(&ntri, bytes.data() + 80, 4);
    const size_t expected = 84 + static_cast<size_t>(ntri) * 50;
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    vertices.reserve(static_cast<size_t>(ntri) * 3);
    faces.reserve(ntri);
    size_t off = 84;
    for (uint32_t t = 0; t < ntri; ++t, off += 50) {
        if (off + 50 > bytes.size())
            throw ParseError("binary STL '" + path + "' truncated facet record " +
                                 std::to_string(t) + " at byte offset " + std::to_string(off),
                             static_cast<long long>(off));
        float raw[12];
        std::memcpy(raw, bytes.data() + off, 48);  // normal + 3 vertices
        const int base = static_cast<int>(vertices.size());
        for (int k = 0; k < 3; ++k)
            vertices.push_back({raw[3 + 3 * k], raw[4 + 3 * k], raw[5 + 3 * k]});
        faces.push_back({base, base + 1, base + 2});
    }
    (void)expected;
    return finish_surface(std::move(vertices), std::move(faces));
}

SurfaceData load_stl_ascii(const std::string& bytes, const std::string& path) {
    std::istringstream in(bytes);
    std::string line;
    long long lineno = 0;
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::vector<Vec3> tri;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "vertex") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z))
                throw ParseError("ASCII STL '" + path + "': malformed vertex at line " +
                                     std::to_string(lineno),
                                 -1, lineno);
            tri.push_back(v);
        } else if (tok == "endfacet") {
            if (tri.size() != 3)
                throw ParseError("ASCII STL '" + path + "': facet with " +
                                     std::to_string(tri.size()) + " vertices at line " +
                                     std::to_string(lineno),
                                 -1, lineno);
            const int base = static_cast<int>(vertices.size());
            vertices.insert(vertices.end(), tri.begin(), tri.end());
            faces.push_back({base, base + 1, base + 2});
            tri.clear();
        }
    }
    if (!tri.empty())
        throw ParseError("ASCII STL '" + path + "': truncated facet at line " +
                             std::to_string(lineno),
                         -1, lineno);
    return finish_surface(std::move(vertices), std::move(faces));
}

// --- OBJ ---------------------------------------------------------------------

SurfaceData load_obj(const std::string& bytes, const std::string& path) {
    std::istringstream in(bytes);
    std::string line;
    long long lineno = 0;
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z))
                throw ParseError("OBJ '" + path + "': malformed vertex at line " +
                                     std::to_string(lineno),
                                 -1, lineno);
            vertices.push_back(v);
        } else if (tok == "f") {
            std::vector<int> idx;
            std::string ref;
            while (ls >> ref) {
                // "i", "i/j", "i//k", "i/j/k"; only the vertex index matters.
                const long v = std::strtol(ref.c_str(), nullptr, 10);
                if (v == 0)
                    throw ParseError("OBJ '" + path + "': bad face index '" + ref +
                                         "' at line " + std::to_string(lineno),
                                     -1, lineno);
                const long resolved = v > 0 ? v - 1 : static_cast<long>(vertices.size()) + v;
                if (resolved < 0 || resolved >= static_cast<long>(vertices.size()))
                    throw ParseError("OBJ '" + path + "': face index out of range at line " +
                                         std::to_string(lineno),
                                     -1, lineno);
                idx.push_back(static_cast<int>(resolved));
            }
            if (idx.size() != 3)
                throw UnsupportedElement("OBJ '" + path + "': non-triangle face (" +
                                         std::to_string(idx.size()) + " vertices) at line " +
                                         std::to_string(lineno));
            faces.push_back({idx[0], idx[1], idx[2]});
        }
    }
    return finish_surface(std::move(vertices), std::move(faces));
}

// --- VTK legacy ----------------------------------------------------------------

// Whitespace tokenizer with line tracking for error messages.
class VtkTokens {
  public:
    explicit VtkTokens(const std::string& bytes, std::string path)
        : data_(bytes), path_(std::move(path)) {}

    bool next(std::string& out) {
        while (pos_ < data_.size() && std::isspace(static_cast<unsigned char>(data_[pos_]))) {
            if (data_[pos_] == '\n') ++line_;
            ++pos_;
        }
        if (pos_ >= data_.size()) return false;
        const size_t start = pos_;
        while (pos_ < data_.size() && !std::isspace(static_cast<unsigned char>(data_[pos_])))
            ++pos_;
        out = data_.substr(start, pos_ - start);
        return true;
    }
    std::string expect() {
        std::string t;
        if (!next(t)) fail("unexpected end of file");
        return t;
    }
    long long expect_int() {
        const std::string t = expect();
        try {
            return std::stoll(t);
        } catch (...) {
            fail("expected integer, got '" + t + "'");
        }
        return 0;
    }
    double expect_double() {
        const std::string t = expect();
        try {
            return std::stod(t);
        } catch (...) {
            fail("expected number, got '" + t + "'");
        }
        return 0;
    }
    void skip_line() {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("VTK '" + path_ + "' line " + std::to_string(line_) + ": " + msg, -1,
                         line_);
    }
    long long line() const { return line_; }

  private:
    const std::string& data_;
    std::string path_;
    size_t pos_ = 0;
    long long line_ = 1;
};

struct VtkContent {
    std::string dataset;
    std::vector<Vec3> points;
    std::vector<long long> cells;       // legacy layout: count, ids..., count, ids...
    std::vector<int> cell_types;        // UNSTRUCTURED_GRID only
    long long cell_records = 0;
    std::map<std::string, std::vector<double>> point_scalars;
    std::map<std::string, std::vector<int>> cell_ints;
    std::map<std::string, std::vector<double>> cell_scalars;
    std::map<std::string, std::vector<Vec3>> cell_vectors;
    std::map<std::string, std::vector<Vec3>> point_vectors;
};

VtkContent parse_vtk(const std::string& bytes, const std::string& path) {
    VtkTokens tok(bytes, path);
    if (bytes.compare(0, 25, "# vtk DataFile Version 2.") != 0 &&
        bytes.compare(0, 25, "# vtk DataFile Version 3.") != 0)
        throw ParseError("VTK '" + path + "': missing legacy '# vtk DataFile Version' header", -1,
                         1);
    tok.skip_line();  // header
    std::string t = tok.expect();
    tok.skip_line();  // title line (first token consumed above)
    t = tok.expect();
    if (t != "ASCII") tok.fail("only ASCII legacy files are supported, got '" + t + "'");
    t = tok.expect();
    if (t != "DATASET") tok.fail("expected DATASET, got '" + t + "'");
    VtkContent c;
    c.dataset = tok.expect();
    if (c.dataset != "POLYDATA" && c.dataset != "UNSTRUCTURED_GRID")
        throw UnsupportedElement("VTK '" + path + "': unsupported dataset " + c.dataset);

    long long n_points = 0;
    enum class Section { None, PointData, CellData } section = Section::None;
    long long section_count = 0;

    std::string kw;
    while (tok.next(kw)) {
        if (kw == "POINTS") {
            n_points = tok.expect_int();
            tok.expect();  // data type
            c.points.resize(n_points);
            for (long long i = 0; i < n_points; ++i) {
                c.points[i].x = tok.expect_double();
                c.points[i].y = tok.expect_double();
                c.points[i].z = tok.expect_double();
            }
        } else if (kw == "POLYGONS" || kw == "CELLS") {
            c.cell_records = tok.expect_int();
            const long long total = tok.expect_int();
            c.cells.resize(total);
            for (long long i = 0; i < total; ++i) c.cells[i] = tok.expect_int();
        } else if (kw == "CELL_TYPES") {
            const long long n = tok.expect_int();
            c.cell_types.resize(n);
            for (long long i = 0; i < n; ++i) c.cell_types[i] = static_cast<int>(tok.expect_int());
        } else if (kw == "POINT_DATA") {
            section = Section::PointData;
            section_count = tok.expect_int();
        } else if (kw == "CELL_DATA") {
            section = Section::CellData;
            section_count = tok.expect_int();
        } else if (kw == "SCALARS") {
            const std::string name = tok.expect();
            const std::string type = tok.expect();
            // Optional numComp token followed by LOOKUP_TABLE.
            std::string peek = tok.expect();
            if (peek != "LOOKUP_TABLE") {
                if (std::stoi(peek) != 1) tok.fail("only 1-component SCALARS are supported");
                peek = tok.expect();
            }
            if (peek != "LOOKUP_TABLE") tok.fail("expected LOOKUP_TABLE, got '" + peek + "'");
            tok.expect();  // table name
            const bool integral =
                type == "int" || type == "long" || type == "short" || type == "vtkIdType";
            if (section == Section::None) tok.fail("SCALARS outside POINT_DATA/CELL_DATA");
            if (integral && section == Section::CellData) {
                auto& arr = c.cell_ints[name];
                arr.resize(section_count);
                for (long long i = 0; i < section_count; ++i)
                    arr[i] = static_cast<int>(tok.expect_int());
            } else {
                auto& arr = section == Section::PointData ? c.point_scalars[name]
                                                          : c.cell_scalars[name];
                arr.resize(section_count);
                for (long long i = 0; i < section_count; ++i) arr[i] = tok.expect_double();
            }
        } else if (kw == "VECTORS") {
            const std::string name = tok.expect();
            tok.expect();  // data type
            if (section == Section::None) tok.fail("VECTORS outside POINT_DATA/CELL_DATA");
            auto& arr =
                section == Section::PointData ? c.point_vectors[name] : c.cell_vectors[name];
            arr.resize(section_count);
            for (long long i = 0; i < section_count; ++i) {
                arr[i].x = tok.expect_double();
                arr[i].y = tok.expect_double();
                arr[i].z = tok.expect_double();
            }
        } else if (kw == "LOOKUP_TABLE" || kw == "METADATA" || kw == "FIELD") {
            tok.fail("unsupported section '" + kw + "'");
        } else {
            tok.fail("unexpected token '" + kw + "'");
        }
    }
    if (static_cast<long long>(c.points.size()) != n_points)
        throw ParseError("VTK '" + path + "': POINTS section truncated");
    return c;
}

SurfaceData load_vtk_surface(const std::string& bytes, const std::string& path) {
    VtkContent c = parse_vtk(bytes, path);
    std::vector<std::array<int, 3>> faces;
    size_t i = 0;
    while (i < c.cells.size()) {
        const long long cnt = c.cells[i++];
        if (cnt != 3)
            throw UnsupportedElement("VTK '" + path + "': non-triangle surface cell with " +
                                     std::to_string(cnt) + " points");
        faces.push_back({static_cast<int>(c.cells[i]), static_cast<int>(c.cells[i + 1]),
                         static_cast<int>(c.cells[i + 2])});
        i += 3;
    }
    return finish_surface(std::move(c.points), std::move(faces), std::move(c.cell_ints),
                          std::move(c.cell_scalars), std::move(c.point_scalars));
}

VolumeMesh load_vtk_volume(const std::string& bytes, const std::string& path) {
    VtkContent c = parse_vtk(bytes, path);
    if (c.dataset != "UNSTRUCTURED_GRID")
        throw UnsupportedElement("VTK '" + path + "': volume load requires UNSTRUCTURED_GRID");
    if (c.cell_types.empty()) throw ParseError("VTK '" + path + "': missing CELL_TYPES");
    int kind_type = 0;
    for (int t : c.cell_types) {
        if (t != 10 && t != 12)
            throw UnsupportedElement("VTK '" + path + "': unsupported cell type " +
                                     std::to_string(t) + " (only 10=tet, 12=hex)");
        if (kind_type == 0) kind_type = t;
        if (t != kind_type)
            throw UnsupportedElement("VTK '" + path + "': mixed tet/hex cells are not supported");
    }
    const ElementKind kind = kind_type == 10 ? ElementKind::Tet : ElementKind::Hex;
    const int npe = nodes_per_element(kind);
    std::vector<int> elements;
    size_t i = 0;
    while (i < c.cells.size()) {
        const long long cnt = c.cells[i++];
        if (cnt != npe)
            throw UnsupportedElement("VTK '" + path + "': cell arity " + std::to_string(cnt) +
                                     " does not match cell type");
        for (int k = 0; k < npe; ++k) elements.push_back(static_cast<int>(c.cells[i + k]));
        i += npe;
    }

    VolumeMesh mesh = VolumeMesh::create(std::move(c.points), std::move(elements), kind);
    for (auto& [name, arr] : c.point_scalars) {
        if (arr.size() == static_cast<size_t>(mesh.node_count()))
            mesh.node_fields()[name] = std::move(arr);
    }
    for (auto& [name, arr] : c.cell_scalars) {
        if (arr.size() == static_cast<size_t>(mesh.element_count()))
            mesh.element_fields()[name] = std::move(arr);
    }
    for (auto& [name, arr] : c.cell_ints) {
        if (arr.size() == static_cast<size_t>(mesh.element_count())) {
            std::vector<double> as_double(arr.begin(), arr.end());
            mesh.element_fields()[name] = std::move(as_double);
        }
    }
    for (auto& [name, arr] : c.cell_vectors) {
        if (arr.size() == static_cast<size_t>(mesh.element_count()))
            mesh.element_vectors()[name] = std::move(arr);
    }
    return mesh;
}

// --- writers -------------------------------------------------------------------

class FileWriter {
  public:
    FileWriter(const std::string& path) : path_(path), f_(std::fopen(path.c_str(), "wb")) {
        if (!f_) throw WriteFailed("cannot open '" + path + "' for writing");
        std::setvbuf(f_, nullptr, _IOFBF, 1 << 20);
    }
    ~FileWriter() {
        if (f_) std::fclose(f_);
    }
    FileWriter(const FileWriter&) = delete;
    FileWriter& operator=(const FileWriter&) = delete;

    void printf(const char* fmt, ...) __attribute__((format(printf, 2, 3))) {
        va_list args;
        va_start(args, fmt);
        if (std::vfprintf(f_, fmt, args) < 0) {
            va_end(args);
            throw WriteFailed("write failed for '" + path_ + "'");
        }
        va_end(args);
    }
    void write_raw(const void* data, size_t bytes) {
        if (std::fwrite(data, 1, bytes, f_) != bytes)
            throw WriteFailed("write failed for '" + path_ + "'");
    }
    void close() {
        if (f_ && std::fclose(f_) != 0) {
            f_ = nullptr;
            throw WriteFailed("close failed for '" + path_ + "'");
        }
        f_ = nullptr;
    }

  private:
    std::string path_;
    std::FILE* f_;
};

void save_stl_binary(const SurfaceMesh& mesh, const std::string& path) {
    FileWriter out(path);
    char header[80] = {0};
    std::snprintf(header, sizeof(header), "binary STL surface, %d triangles",
                  mesh.face_count());
    out.write_raw(header, 80);
    const uint32_t n = static_cast<uint32_t>(mesh.face_count());
    out.write_raw(&n, 4);
    for (int f = 0; f < mesh.face_count(); ++f) {
        float rec[12];
        const Vec3& nrm = mesh.face_normals()[f];
        rec[0] = static_cast<float>(nrm.x);
        rec[1] = static_cast<float>(nrm.y);
        rec[2] = static_cast<float>(nrm.z);
        for (int k = 0; k < 3; ++k) {
            const Vec3& v = mesh.face_vertex(f, k);
            rec[3 + 3 * k] = static_cast<float>(v.x);
            rec[4 + 3 * k] = static_cast<float>(v.y);
            rec[5 + 3 * k] = static_cast<float>(v.z);
        }
        out.write_raw(rec, 48);
        const uint16_t attr = 0;
        out.write_raw(&attr, 2);
    }
    out.close();
}

void save_stl_ascii(const SurfaceMesh& mesh, const std::string& path) {
    FileWriter out(path);
    out.printf("solid surface\n");
    for (int f = 0; f < mesh.face_count(); ++f) {
        const Vec3& n = mesh.face_normals()[f];
        out.printf("facet normal %.9g %.9g %.9g\n", n.x, n.y, n.z);
        out.printf("outer loop\n");
        for (int k = 0; k < 3; ++k) {
            const Vec3& v = mesh.face_vertex(f, k);
            out.printf("vertex %.9g %.9g %.9g\n", v.x, v.y, v.z);
        }
        out.printf("endloop\nendfacet\n");
    }
    out.printf("endsolid surface\n");
    out.close();
}

void save_obj(const SurfaceMesh& mesh, const std::string& path) {
    FileWriter out(path);
    for (const Vec3& v : mesh.vertices()) out.printf("v %.9g %.9g %.9g\n", v.x, v.y, v.z);
    for (const auto& f : mesh.faces()) out.printf("f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
    out.close();
}

}  // namespace

void save_surface_vtk(const SurfaceMesh& mesh, const std::string& path,
                      const std::map<std::string, std::vector<int>>& cell_ints,
                      const std::map<std::string, std::vector<double>>& cell_scalars,
                      const std::map<std::string, std::vector<double>>& point_scalars) {
    FileWriter out(path);
    out.printf("# vtk DataFile Version 3.0\n");
    out.printf("cardiomesh surface\n");
    out.printf("ASCII\n");
    out.printf("DATASET POLYDATA\n");
    out.printf("POINTS %d double\n", mesh.vertex_count());
    for (const Vec3& v : mesh.vertices()) out.printf("%.9g %.9g %.9g\n", v.x, v.y, v.z);
    out.printf("POLYGONS %d %d\n", mesh.face_count(), mesh.face_count() * 4);
    for (const auto& f : mesh.faces()) out.printf("3 %d %d %d\n", f[0], f[1], f[2]);
    if (!cell_ints.empty() || !cell_scalars.empty()) {
        out.printf("CELL_DATA %d\n", mesh.face_count());
        for (const auto& [name, arr] : cell_ints) {
            out.printf("SCALARS %s int 1\nLOOKUP_TABLE default\n", name.c_str());
            for (int v : arr) out.printf("%d\n", v);
        }
        for (const auto& [name, arr] : cell_scalars) {
            out.printf("SCALARS %s double 1\nLOOKUP_TABLE default\n", name.c_str());
            for (double v : arr) out.printf("%.9g\n", v);
        }
    }
    if (!point_scalars.empty()) {
        out.printf("POINT_DATA %d\n", mesh.vertex_count());
        for (const auto& [name, arr] : point_scalars) {
            out.printf("SCALARS %s double 1\nLOOKUP_TABLE default\n", name.c_str());
            for (double v : arr) out.printf("%.9g\n", v);
        }
    }
    out.close();
}

void save_surface(const SurfaceMesh& mesh, const std::string& path, MeshFormat format) {
    switch (format) {
        case MeshFormat::StlBinary: save_stl_binary(mesh, path); return;
        case MeshFormat::StlAscii: save_stl_ascii(mesh, path); return;
        case MeshFormat::Obj: save_obj(mesh, path); return;
        case MeshFormat::VtkPolydata: save_surface_vtk(mesh, path); return;
        case MeshFormat::VtkUnstructured:
            throw WriteFailed("surfaces cannot be written as UNSTRUCTURED_GRID");
    }
}

void save_volume(const VolumeMesh& mesh, const std::string& path) {
    FileWriter out(path);
    const int npe = nodes_per_element(mesh.kind());
    const int vtk_type = mesh.kind() == ElementKind::Tet ? 10 : 12;
    out.printf("# vtk DataFile Version 3.0\n");
    out.printf("cardiomesh volume\n");
    out.printf("ASCII\n");
    out.printf("DATASET UNSTRUCTURED_GRID\n");
    out.printf("POINTS %d double\n", mesh.node_count());
    for (const Vec3& v : mesh.nodes()) out.printf("%.9g %.9g %.9g\n", v.x, v.y, v.z);
    const int ne = mesh.element_count();
    out.printf("CELLS %d %d\n", ne, ne * (npe + 1));
    for (int e = 0; e < ne; ++e) {
        const int* el = mesh.element(e);
        out.printf("%d", npe);
        for (int k = 0; k < npe; ++k) out.printf(" %d", el[k]);
        out.printf("\n");
    }
    out.printf("CELL_TYPES %d\n", ne);
    for (int e = 0; e < ne; ++e) out.printf("%d\n", vtk_type);
    if (!mesh.node_fields().empty()) {
        out.printf("POINT_DATA %d\n", mesh.node_count());
        for (const auto& [name, arr] : mesh.node_fields()) {
            out.printf("SCALARS %s double 1\nLOOKUP_TABLE default\n", name.c_str());
            for (double v : arr) out.printf("%.9g\n", v);
        }
    }
    if (!mesh.element_fields().empty() || !mesh.element_vectors().empty()) {
        out.printf("CELL_DATA %d\n", ne);
        for (const auto& [name, arr] : mesh.element_fields()) {
            out.printf("SCALARS %s double 1\nLOOKUP_TABLE default\n", name.c_str());
            for (double v : arr) out.printf("%.9g\n", v);
        }
        for (const auto& [name, arr] : mesh.element_vectors()) {
            out.printf("VECTORS %s double\n", name.c_str());
            for (const Vec3& v : arr) out.printf("%.9g %.9g %.9g\n", v.x, v.y, v.z);
        }
    }
    out.close();
}

MeshFormat format_from_path(const std::string& path, bool volume) {
    auto ends_with = [&](const char* suffix) {
        const size_t n = std::strlen(suffix);
        if (path.size() < n) return false;
        std::string tail = path.substr(path.size() - n);
        std::transform(tail.begin(), tail.end(), tail.begin(),
                       [](unsigned char ch) { return std::tolower(ch); });
        return tail == suffix;
    };
    if (ends_with(".stl")) return MeshFormat::StlBinary;
    if (ends_with(".obj")) return MeshFormat::Obj;
    if (ends_with(".vtk")) return volume ? MeshFormat::VtkUnstructured : MeshFormat::VtkPolydata;
    throw ParseError("cannot infer mesh format from path '" + path + "'");
}

SurfaceData load_surface(const std::string& path) {
    const std::string bytes = read_file(path);
    const MeshFormat fmt = format_from_path(path, false);
    switch (fmt) {
        case MeshFormat::Obj: return load_obj(bytes, path);
        case MeshFormat::StlBinary:
        case MeshFormat::StlAscii:
            return stl_is_ascii(bytes) ? load_stl_ascii(bytes, path)
                                       : load_stl_binary(bytes, path);
        default: return load_vtk_surface(bytes, path);
    }
}

VolumeMesh load_volume(const std::string& path) {
    const std::string bytes = read_file(path);
    return load_vtk_volume(bytes, path);
}

}  // namespace cardiomesh
