#pragma once

// Shared fixtures and independent oracles for the test suites. Everything in
// here must stay independent of the implementation paths it checks.

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "cardiomesh/surface_mesh.hpp"
#include "cardiomesh/vec3.hpp"

namespace test_util {

using cardiomesh::SurfaceMesh;
using cardiomesh::Vec3;

// Axis-aligned cube [0,1]^3 as 12 outward-oriented triangles.
inline SurfaceMesh make_cube(double scale = 1.0, Vec3 origin = {0, 0, 0}) {
    std::vector<Vec3> v = {
        {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
        {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
    };
    for (auto& p : v) p = origin + p * scale;
    std::vector<std::array<int, 3>> f = {
        {0, 2, 1}, {0, 3, 2},  // z = 0 (normal -z)
        {4, 5, 6}, {4, 6, 7},  // z = 1 (normal +z)
        {0, 1, 5}, {0, 5, 4},  // y = 0
        {2, 3, 7}, {2, 7, 6},  // y = 1
        {0, 4, 7}, {0, 7, 3},  // x = 0
        {1, 2, 6}, {1, 6, 5},  // x = 1
    };
    return SurfaceMesh::create(v, f);
}

// Icosphere: subdivided icosahedron projected to the given radius.
inline SurfaceMesh make_icosphere(double radius, int subdivisions, Vec3 center = {0, 0, 0}) {
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v = {
        {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
        {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
    };
    std::vector<std::array<int, 3>> f = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
    };
    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<int, int>, int> midpoints;
        auto midpoint = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = midpoints.find(key);
            if (it != midpoints.end()) return it->second;
            const int id = static_cast<int>(v.size());
            v.push_back((v[a] + v[b]) * 0.5);
            midpoints[key] = id;
            return id;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(f.size() * 4);
        for (const auto& tri : f) {
            const int ab = midpoint(tri[0], tri[1]);
            const int bc = midpoint(tri[1], tri[2]);
            const int ca = midpoint(tri[2], tri[0]);
            next.push_back({tri[0], ab, ca});
            next.push_back({tri[1], bc, ab});
            next.push_back({tri[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        f = std::move(next);
    }
    for (auto& p : v) p = center + p.normalized() * radius;
    return SurfaceMesh::create(v, f);
}

// Open cylinder shell (no caps): two boundary loops.
inline SurfaceMesh make_open_cylinder(double radius, double height, int segments) {
    std::vector<Vec3> v;
    std::vector<std::array<int, 3>> f;
    for (int ring = 0; ring < 2; ++ring) {
        const double z = ring * height;
        for (int s = 0; s < segments; ++s) {
            const double a = 2.0 * M_PI * s / segments;
            v.push_back({radius * std::cos(a), radius * std::sin(a), z});
        }
    }
    for (int s = 0; s < segments; ++s) {
        const int s1 = (s + 1) % segments;
        f.push_back({s, s1, segments + s});
        f.push_back({s1, segments + s1, segments + s});
    }
    return SurfaceMesh::create(v, f);
}

// Flat annular disk in the z = 0 plane: two boundary loops (rims).
inline SurfaceMesh make_annulus(double r_inner, double r_outer, int segments) {
    std::vector<Vec3> v;
    std::vector<std::array<int, 3>> f;
    for (int s = 0; s < segments; ++s) {
        const double a = 2.0 * M_PI * s / segments;
        v.push_back({r_inner * std::cos(a), r_inner * std::sin(a), 0});
        v.push_back({r_outer * std::cos(a), r_outer * std::sin(a), 0});
    }
    for (int s = 0; s < segments; ++s) {
        const int i0 = 2 * s, o0 = 2 * s + 1;
        const int i1 = 2 * ((s + 1) % segments), o1 = i1 + 1;
        f.push_back({i0, o0, o1});
        f.push_back({i0, o1, i1});
    }
    return SurfaceMesh::create(v, f);
}

inline std::vector<Vec3> random_points_in_ball(int n, double radius, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vec3> pts;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        const Vec3 p{2 * cardiomesh::uniform_double(rng) - 1,
                     2 * cardiomesh::uniform_double(rng) - 1,
                     2 * cardiomesh::uniform_double(rng) - 1};
        if (p.norm() <= 1.0) pts.push_back(p * radius);
    }
    return pts;
}

// Random rotation matrix (row-major) via Gram-Schmidt on random vectors.
inline std::array<double, 9> random_rotation(uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rand_vec = [&]() {
        return Vec3{2 * cardiomesh::uniform_double(rng) - 1,
                    2 * cardiomesh::uniform_double(rng) - 1,
                    2 * cardiomesh::uniform_double(rng) - 1};
    };
    Vec3 a = rand_vec().normalized();
    while (a.norm() == 0.0) a = rand_vec().normalized();
    Vec3 b = rand_vec();
    b = (b - a * a.dot(b)).normalized();
    const Vec3 c = a.cross(b);
    return {a.x, a.y, a.z, b.x, b.y, b.z, c.x, c.y, c.z};
}

inline Vec3 apply_rotation(const std::array<double, 9>& r, const Vec3& p) {
    return {r[0] * p.x + r[1] * p.y + r[2] * p.z, r[3] * p.x + r[4] * p.y + r[5] * p.z,
            r[6] * p.x + r[7] * p.y + r[8] * p.z};
}

// Generalized winding number (Van Oosterom & Strackee solid angles); an
// implementation-independent containment oracle.
inline double winding_number(const SurfaceMesh& mesh, const Vec3& p) {
    double total = 0.0;
    for (int f = 0; f < mesh.face_count(); ++f) {
        const Vec3 a = mesh.face_vertex(f, 0) - p;
        const Vec3 b = mesh.face_vertex(f, 1) - p;
        const Vec3 c = mesh.face_vertex(f, 2) - p;
        const double la = a.norm(), lb = b.norm(), lc = c.norm();
        const double num = a.cross(b).dot(c);
        const double den = la * lb * lc + a.dot(b) * lc + b.dot(c) * la + c.dot(a) * lb;
        total += 2.0 * std::atan2(num, den);
    }
    return total / (4.0 * M_PI);
}

}  // namespace test_util
