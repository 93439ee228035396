#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cardiomesh/bvh.hpp"
#include "cardiomesh/convex_hull.hpp"
#include "cardiomesh/errors.hpp"
#include "cardiomesh/ray_stats.hpp"
#include "test_util.hpp"

using namespace cardiomesh;
using namespace test_util;

namespace {

// Test-side intersector written independently of the library routine
// (plane-first formulation instead of Moller-Trumbore).
bool oracle_ray_tri(const Vec3& o, const Vec3& d, const Vec3& a, const Vec3& b, const Vec3& c,
                    double& t_out, double& edge_margin) {
    const Vec3 ab = b - a, ac = c - a;
    const Vec3 n = ab.cross(ac);
    const double denom = -d.dot(n);
    if (denom == 0.0) return false;
    const Vec3 ao = o - a;
    const double t = ao.dot(n) / denom;
    const Vec3 e = -d.cross(ao);
    const double v = ab.dot(e) / denom;
    const double u = -ac.dot(e) / denom;
    edge_margin = std::min({u, v, 1.0 - u - v});
    if (u < 0.0 || v < 0.0 || u + v > 1.0) return false;
    t_out = t;
    return t > 0.0;
}

struct OracleResult {
    std::vector<std::pair<int, double>> hits;
    bool grazing = false;  // some hit decision is closer than 1e-9 to an edge
};

OracleResult oracle_cast(const SurfaceMesh& mesh, const Vec3& origin, const Vec3& dir,
                         double t_min) {
    OracleResult res;
    const Vec3 o = origin + dir * t_min;
    for (int f = 0; f < mesh.face_count(); ++f) {
        double t, margin;
        const bool hit = oracle_ray_tri(o, dir, mesh.face_vertex(f, 0), mesh.face_vertex(f, 1),
                                        mesh.face_vertex(f, 2), t, margin);
        if (std::abs(margin) < 1e-9) res.grazing = true;
        if (hit) res.hits.push_back({f, t + t_min});
    }
    std::sort(res.hits.begin(), res.hits.end(),
              [](const auto& a, const auto& b) {
                  return a.second < b.second || (a.second == b.second && a.first < b.first);
              });
    std::vector<std::pair<int, double>> dedup;
    for (const auto& h : res.hits) {
        if (!dedup.empty() && h.second - dedup.back().second <= 1e-9) continue;
        dedup.push_back(h);
    }
    res.hits = std::move(dedup);
    return res;
}

}  // namespace

TEST_CASE("cast_ray basics on the unit cube") {
    const SurfaceMesh cube = make_cube();
    const TriBvh bvh(cube);

    SUBCASE("centre ray hits the +x face once at t = 0.5") {
        const auto hits = bvh.cast({0.5, 0.5, 0.5}, {1, 0, 0}, -1, 0.0);
        REQUIRE(hits.size() == 1);
        CHECK(hits[0].t == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(cube.face_normals()[hits[0].face].x == doctest::Approx(1.0));
    }
    SUBCASE("self-face exclusion removes the origin face") {
        const int face = 0;  // on z = 0, normal -z
        const Vec3 origin = cube.face_centroids()[face];
        const Vec3 dir = cube.face_normals()[face];
        const auto hits = bvh.cast(origin, dir, face);
        for (const auto& h : hits) CHECK(h.face != face);
        // Along its own normal (away from the cube) only empty space remains.
        CHECK(hits.empty());
        // Into the cube the far face is found.
        const auto back = bvh.cast(origin, -dir, face);
        REQUIRE(!back.empty());
        CHECK(back.front().t == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("BVH equals brute force (library and independent oracle)") {
    const SurfaceMesh sphere = make_icosphere(10.0, 3);
    const TriBvh bvh(sphere);
    std::mt19937_64 rng(1234);
    int total_hits = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Vec3 origin{30 * uniform_double(rng) - 15, 30 * uniform_double(rng) - 15,
                          30 * uniform_double(rng) - 15};
        Vec3 dir{2 * uniform_double(rng) - 1, 2 * uniform_double(rng) - 1,
                 2 * uniform_double(rng) - 1};
        if (dir.norm() < 1e-6) dir = {1, 0, 0};
        dir = dir.normalized();

        const auto fast = bvh.cast(origin, dir);
        const auto brute = bvh.cast_brute(origin, dir);
        // Acceleration structure is an implementation detail: bitwise equal.
        REQUIRE(fast.size() == brute.size());
        for (size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].face == brute[i].face);
            CHECK(fast[i].t == brute[i].t);
        }
        // Independent oracle agrees within 1e-9 on the (face, t) multiset.
        const auto oracle = oracle_cast(sphere, origin, dir, kRayOffset);
        REQUIRE(fast.size() == oracle.size());
        for (size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].face == oracle[i].first);
            CHECK(std::abs(fast[i].t - oracle[i].second) < 1e-9);
        }
        total_hits += static_cast<int>(fast.size());
    }
    CHECK(total_hits > 1000);  // the experiment actually exercised hits
}

TEST_CASE("parity of crossing counts") {
    const SurfaceMesh sphere = make_icosphere(8.0, 2);
    const TriBvh bvh(sphere);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        Vec3 dir{2 * uniform_double(rng) - 1, 2 * uniform_double(rng) - 1,
                 2 * uniform_double(rng) - 1};
        if (dir.norm() < 1e-6) dir = {0, 1, 0};
        dir = dir.normalized();
        const Vec3 inside = random_points_in_ball(1, 5.0, 1000 + trial)[0];
        const Vec3 outside = dir * 20.0 + Vec3{0.03, 0.01, -0.02};
        CHECK(bvh.cast(inside, dir, -1, 0.0).size() % 2 == 1);
        CHECK(bvh.cast(outside, dir, -1, 0.0).size() % 2 == 0);
    }
}

TEST_CASE("face_ray_stats") {
    SUBCASE("convex shell: every face sees only the hull (n_i = 1)") {
        const SurfaceMesh sphere = make_icosphere(15.0, 2);
        const SurfaceMesh hull = convex_hull(sphere.vertices());
        const auto stats = face_ray_stats(sphere, hull, true);
        for (const auto& s : stats) {
            REQUIRE(s.defined);
            CHECK(s.n_i == 1);
            CHECK(s.d_n_minus < std::numeric_limits<double>::infinity());
        }
    }
    SUBCASE("concentric shells: inner outward faces see the 10 mm gap") {
        const SurfaceMesh inner = make_icosphere(20.0, 3);
        const SurfaceMesh outer = make_icosphere(30.0, 3);
        // Inner shell oriented outward; merged soup so rays see both walls.
        const SurfaceMesh soup = merge_meshes({inner, outer});
        const SurfaceMesh hull = convex_hull(soup.vertices());
        const auto stats = face_ray_stats(soup, hull, true);
        for (int f = 0; f < inner.face_count(); ++f) {
            REQUIRE(stats[f].defined);
            // Discretization: chord midpoints sit slightly inside both spheres.
            CHECK(stats[f].d_n_plus == doctest::Approx(10.0).epsilon(0.02));
        }
        // Closedness: a ray into the body must exit somewhere.
        for (const auto& s : stats) CHECK(s.d_n_minus < std::numeric_limits<double>::infinity());
    }
    SUBCASE("degenerate faces are flagged undefined") {
        std::vector<Vec3> v = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0.5, 0, 0}};
        std::vector<std::array<int, 3>> f = {{0, 1, 2}, {0, 1, 3}};  // second is collinear
        const auto mesh = SurfaceMesh::create(v, f);
        const auto hull = convex_hull(make_cube().vertices());
        const auto stats = face_ray_stats(mesh, hull, true);
        CHECK(stats[0].defined);
        CHECK_FALSE(stats[1].defined);
    }
}

TEST_CASE("point_in_mesh") {
    const SurfaceMesh cube = make_cube();
    SUBCASE("cube centre in, far point out") {
        CHECK(point_in_mesh(cube, {0.5, 0.5, 0.5}));
        CHECK_FALSE(point_in_mesh(cube, {2, 2, 2}));
    }
    SUBCASE("open mesh throws NotClosed") {
        auto faces = cube.faces();
        faces.pop_back();
        CHECK_THROWS_AS(point_in_mesh(SurfaceMesh::create(cube.vertices(), faces), {0.5, 0.5, 0.5}),
                        NotClosed);
    }
    SUBCASE("on-plane but outside the solid resolves to outside") {
        // Coplanar with the z=0 face plane, beyond the square.
        CHECK_FALSE(point_in_mesh(cube, {1.5, 0.5, 0.0}));
        CHECK_FALSE(point_in_mesh(cube, {-0.5, 0.25, 1.0}));
    }
    SUBCASE("1000 grid points agree with the winding-number oracle") {
        const SurfaceMesh sphere = make_icosphere(9.0, 2);
        const InsideTester tester(sphere);
        int inside_count = 0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j)
                for (int k = 0; k < 10; ++k) {
                    const Vec3 p{-12.0 + 24.0 * i / 9.0, -12.0 + 24.0 * j / 9.0,
                                 -12.0 + 24.0 * k / 9.0};
                    const bool in = tester.contains(p);
                    const bool oracle = std::abs(winding_number(sphere, p)) > 0.5;
                    CHECK(in == oracle);
                    inside_count += in;
                }
        CHECK(inside_count > 100);
    }
}

TEST_CASE("ray stats equivariance under rigid motion") {
    const SurfaceMesh inner = make_icosphere(12.0, 2);
    const SurfaceMesh outer = make_icosphere(20.0, 2);
    const SurfaceMesh soup = merge_meshes({inner, outer});
    const SurfaceMesh hull = convex_hull(soup.vertices());
    const auto base = face_ray_stats(soup, hull, true);

    const auto rot = random_rotation(5);
    const Vec3 shift{12.5, -3.25, 101.0};
    const SurfaceMesh soup_t = transform(soup, rot, shift);
    const SurfaceMesh hull_t = transform(hull, rot, shift);
    const auto moved = face_ray_stats(soup_t, hull_t, true);

    REQUIRE(base.size() == moved.size());
    for (size_t f = 0; f < base.size(); ++f) {
        CHECK(base[f].n_i == moved[f].n_i);
        CHECK(base[f].d_n_plus == doctest::Approx(moved[f].d_n_plus).epsilon(1e-9));
        CHECK(base[f].d_n_minus == doctest::Approx(moved[f].d_n_minus).epsilon(1e-9));
    }
}
