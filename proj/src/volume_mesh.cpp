#include "cardiomesh/volume_mesh.hpp"

#include <algorithm>

#include "cardiomesh/errors.hpp"

namespace cardiomesh {

VolumeMesh VolumeMesh::create(std::vector<Vec3> nodes, std::vector<int> elements,
                              ElementKind kind) {
    VolumeMesh m = create_unchecked(std::move(nodes), std::move(elements), kind);
    if (kind == ElementKind::Tet) {
        for (int e = 0; e < m.element_count(); ++e) {
            int* el = m.elements_.data() + e * 4;
            if (signed_tet_volume(m.nodes_[el[0]], m.nodes_[el[1]], m.nodes_[el[2]],
                                  m.nodes_[el[3]]) < 0.0)
                std::swap(el[0], el[1]);
        }
    }
    return m;
}

VolumeMesh VolumeMesh::create_unchecked(std::vector<Vec3> nodes, std::vector<int> elements,
                                        ElementKind kind) {
    const int npe = nodes_per_element(kind);
    if (elements.size() % npe != 0)
        throw Error("element array size not a multiple of " + std::to_string(npe));
    const int nn = static_cast<int>(nodes.size());
    for (int idx : elements) {
        if (idx < 0 || idx >= nn)
            throw Error("node index " + std::to_string(idx) + " out of range");
    }

    std::vector<int> remap(nodes.size(), -1);
    std::vector<Vec3> used;
    used.reserve(nodes.size());
    for (int& idx : elements) {
        if (remap[idx] < 0) {
            remap[idx] = static_cast<int>(used.size());
            used.push_back(nodes[idx]);
        }
        idx = remap[idx];
    }

    VolumeMesh m;
    m.nodes_ = std::move(used);
    m.elements_ = std::move(elements);
    m.kind_ = kind;
    for (const auto& n : m.nodes_) m.bounds_.expand(n);
    return m;
}

Vec3 VolumeMesh::element_centroid(int e) const {
    const int npe = nodes_per_element(kind_);
    Vec3 c{};
    const int* el = element(e);
    for (int k = 0; k < npe; ++k) c += nodes_[el[k]];
    return c / npe;
}

double VolumeMesh::tet_volume(int e) const {
    const int* el = element(e);
    return signed_tet_volume(nodes_[el[0]], nodes_[el[1]], nodes_[el[2]], nodes_[el[3]]);
}

}  // namespace cardiomesh
