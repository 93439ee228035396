#pragma once

#include <map>
#include <string>
#include <vector>

#include "cardiomesh/vec3.hpp"

namespace cardiomesh {

enum class ElementKind { Tet, Hex };

inline int nodes_per_element(ElementKind k) { return k == ElementKind::Tet ? 4 : 8; }

// Unstructured volume mesh with a homogeneous element kind. Node and element
// connectivity are fixed at construction; named field arrays may be attached
// afterwards (they are data payload, not structure).
class VolumeMesh {
  public:
    VolumeMesh() = default;

    // Drops unreferenced nodes, remaps connectivity, and re-orients negative
    // tetrahedra so signed volumes are positive.
    static VolumeMesh create(std::vector<Vec3> nodes, std::vector<int> elements,
                             ElementKind kind);

    // As create() but keeps element orientation untouched; used by quality
    // tooling that must see inverted elements as-is.
    static VolumeMesh create_unchecked(std::vector<Vec3> nodes, std::vector<int> elements,
                                       ElementKind kind);

    const std::vector<Vec3>& nodes() const { return nodes_; }
    ElementKind kind() const { return kind_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int element_count() const {
        return elements_.empty() ? 0 : static_cast<int>(elements_.size()) / nodes_per_element(kind_);
    }
    // Flat connectivity: element e occupies [e*npe, (e+1)*npe).
    const std::vector<int>& connectivity() const { return elements_; }
    const int* element(int e) const { return elements_.data() + e * nodes_per_element(kind_); }

    const Aabb& bounds() const { return bounds_; }

    // Named per-node scalar arrays (size == node_count).
    std::map<std::string, std::vector<double>>& node_fields() { return node_fields_; }
    const std::map<std::string, std::vector<double>>& node_fields() const { return node_fields_; }

    // Named per-element scalar arrays (size == element_count).
    std::map<std::string, std::vector<double>>& element_fields() { return element_fields_; }
    const std::map<std::string, std::vector<double>>& element_fields() const {
        return element_fields_;
    }

    // Named per-element vector arrays (size == element_count).
    std::map<std::string, std::vector<Vec3>>& element_vectors() { return element_vectors_; }
    const std::map<std::string, std::vector<Vec3>>& element_vectors() const {
        return element_vectors_;
    }

    Vec3 element_centroid(int e) const;
    double tet_volume(int e) const;

  private:
    std::vector<Vec3> nodes_;
    std::vector<int> elements_;
    ElementKind kind_ = ElementKind::Tet;
    std::map<std::string, std::vector<double>> node_fields_;
    std::map<std::string, std::vector<double>> element_fields_;
    std::map<std::string, std::vector<Vec3>> element_vectors_;
    Aabb bounds_;
};

inline double signed_tet_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return (b - a).cross(c - a).dot(d - a) / 6.0;
}

}  // namespace cardiomesh
