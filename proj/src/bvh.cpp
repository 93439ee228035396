#include "cardiomesh/bvh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cardiomesh/errors.hpp"

namespace cardiomesh {

bool ray_triangle(const Vec3& origin, const Vec3& dir, const Vec3& a, const Vec3& b,
                  const Vec3& c, double& t, double& u, double& v) {
    // Edges are inclusive (u, v allowed to touch 0/1) so rays through shared
    // edges register on both incident triangles; the caller deduplicates.
    const Vec3 e1 = b - a;
    const Vec3 e2 = c - a;
    const Vec3 pvec = dir.cross(e2);
    const double det = e1.dot(pvec);
    if (std::abs(det) < 1e-300) return false;
    const double inv_det = 1.0 / det;
    const Vec3 tvec = origin - a;
    u = tvec.dot(pvec) * inv_det;
    if (u < 0.0 || u > 1.0) return false;
    const Vec3 qvec = tvec.cross(e1);
    v = dir.dot(qvec) * inv_det;
    if (v < 0.0 || u + v > 1.0) return false;
    t = e2.dot(qvec) * inv_det;
    return true;
}

TriBvh::TriBvh(const std::vector<const SurfaceMesh*>& meshes) {
    int total = 0;
    for (const SurfaceMesh* m : meshes) {
        mesh_face_offset_.push_back(total);
        total += m->face_count();
    }
    mesh_face_offset_.push_back(total);
    tri_a_.reserve(total);
    tri_b_.reserve(total);
    tri_c_.reserve(total);
    std::vector<Vec3> centroids;
    centroids.reserve(total);
    for (const SurfaceMesh* m : meshes) {
        for (int f = 0; f < m->face_count(); ++f) {
            tri_a_.push_back(m->face_vertex(f, 0));
            tri_b_.push_back(m->face_vertex(f, 1));
            tri_c_.push_back(m->face_vertex(f, 2));
            centroids.push_back(m->face_centroids()[f]);
        }
    }
    order_.resize(total);
    for (int i = 0; i < total; ++i) order_[i] = i;
    if (total > 0) {
        nodes_.reserve(2 * total);
        build(order_, 0, total, centroids);
        root_bounds_ = nodes_.front().box;
    }
}

int TriBvh::build(std::vector<int>& ids, int begin, int end, std::vector<Vec3>& centroids) {
    const int node_id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    Aabb box;
    for (int i = begin; i < end; ++i) {
        box.expand(tri_a_[ids[i]]);
        box.expand(tri_b_[ids[i]]);
        box.expand(tri_c_[ids[i]]);
    }
    // Pad so slab tests can never drop a triangle that grazes the box.
    const double pad = 1e-12 * std::max(1.0, box.diagonal());
    box.lo -= Vec3{pad, pad, pad};
    box.hi += Vec3{pad, pad, pad};
    nodes_[node_id].box = box;

    const int count = end - begin;
    if (count <= 4) {
        nodes_[node_id].left = begin;
        nodes_[node_id].count = count;
        return node_id;
    }
    Aabb cbox;
    for (int i = begin; i < end; ++i) cbox.expand(centroids[ids[i]]);
    const Vec3 ext = cbox.extent();
    const int axis = ext.x >= ext.y ? (ext.x >= ext.z ? 0 : 2) : (ext.y >= ext.z ? 1 : 2);
    const int mid = begin + count / 2;
    std::nth_element(ids.begin() + begin, ids.begin() + mid, ids.begin() + end,
                     [&](int lhs, int rhs) {
                         const double a = centroids[lhs][axis];
                         const double b = centroids[rhs][axis];
                         return a < b || (a == b && lhs < rhs);
                     });
    const int left = build(ids, begin, mid, centroids);
    const int right = build(ids, mid, end, centroids);
    nodes_[node_id].left = left;
    nodes_[node_id].right = right;
    return node_id;
}

namespace {

inline bool slab_hit(const Aabb& box, const Vec3& origin, const Vec3& inv_dir, double t_max) {
    double t0 = 0.0, t1 = t_max;
    for (int k = 0; k < 3; ++k) {
        const double inv = k == 0 ? inv_dir.x : (k == 1 ? inv_dir.y : inv_dir.z);
        const double o = k == 0 ? origin.x : (k == 1 ? origin.y : origin.z);
        const double lo = k == 0 ? box.lo.x : (k == 1 ? box.lo.y : box.lo.z);
        const double hi = k == 0 ? box.hi.x : (k == 1 ? box.hi.y : box.hi.z);
        double near = (lo - o) * inv;
        double far = (hi - o) * inv;
        if (near > far) std::swap(near, far);
        t0 = std::max(t0, near);
        t1 = std::min(t1, far);
        if (t0 > t1) return false;
    }
    return true;
}

}  // namespace

void TriBvh::dedupe(std::vector<RayHit>& hits) const {
    std::sort(hits.begin(), hits.end(), [](const RayHit& a, const RayHit& b) {
        return a.t < b.t || (a.t == b.t && a.face < b.face);
    });
    std::vector<RayHit> out;
    out.reserve(hits.size());
    for (const RayHit& h : hits) {
        if (!out.empty() && h.t - out.back().t <= kHitMergeTolerance) {
            // Same geometric crossing; the lowest face index is already kept
            // because of the sort order.
            continue;
        }
        out.push_back(h);
    }
    hits = std::move(out);
}

std::vector<RayHit> TriBvh::cast(const Vec3& origin, const Vec3& dir, int exclude_face,
                                 double t_min) const {
    std::vector<RayHit> hits;
    if (nodes_.empty()) return hits;
    const Vec3 o = origin + dir * t_min;
    const Vec3 inv_dir{1.0 / dir.x, 1.0 / dir.y, 1.0 / dir.z};
    const double t_max = std::numeric_limits<double>::max();

    int stack[128];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        if (!slab_hit(node.box, o, inv_dir, t_max)) continue;
        if (node.count > 0) {
            for (int i = node.left; i < node.left + node.count; ++i) {
                const int tri = order_[i];
                if (tri == exclude_face) continue;
                double t, u, v;
                if (ray_triangle(o, dir, tri_a_[tri], tri_b_[tri], tri_c_[tri], t, u, v) &&
                    t > 0.0) {
                    hits.push_back({tri, t + t_min, o + dir * t, u, v});
                }
            }
        } else {
            stack[top++] = node.left;
            stack[top++] = node.right;
        }
    }
    dedupe(hits);
    return hits;
}

std::vector<RayHit> TriBvh::cast_brute(const Vec3& origin, const Vec3& dir, int exclude_face,
                                       double t_min) const {
    std::vector<RayHit> hits;
    const Vec3 o = origin + dir * t_min;
    for (int tri = 0; tri < triangle_count(); ++tri) {
        if (tri == exclude_face) continue;
        double t, u, v;
        if (ray_triangle(o, dir, tri_a_[tri], tri_b_[tri], tri_c_[tri], t, u, v) && t > 0.0) {
            hits.push_back({tri, t + t_min, o + dir * t, u, v});
        }
    }
    dedupe(hits);
    return hits;
}

namespace {

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    // Ericson, Real-Time Collision Detection, 5.1.5.
    const Vec3 ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;
    const Vec3 bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return b;
    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + ab * (d1 / (d1 - d3));
    const Vec3 cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return c;
    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + ac * (d2 / (d2 - d6));
    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return b + (c - b) * w;
    }
    const double denom = 1.0 / (va + vb + vc);
    return a + ab * (vb * denom) + ac * (vc * denom);
}

inline double box_distance2(const Aabb& box, const Vec3& p) {
    double d2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double v = p[k];
        const double lo = box.lo[k], hi = box.hi[k];
        if (v < lo) d2 += (lo - v) * (lo - v);
        else if (v > hi) d2 += (v - hi) * (v - hi);
    }
    return d2;
}

}  // namespace

TriBvh::Closest TriBvh::closest_point(const Vec3& p) const {
    Closest best;
    best.distance = std::numeric_limits<double>::max();
    if (nodes_.empty()) return best;

    // Depth-first with distance pruning; nearer child first.
    struct Entry { int node; double d2; };
    Entry stack[128];
    int top = 0;
    stack[top++] = {0, box_distance2(nodes_[0].box, p)};
    double best_d2 = std::numeric_limits<double>::max();
    while (top > 0) {
        const Entry e = stack[--top];
        if (e.d2 >= best_d2) continue;
        const Node& node = nodes_[e.node];
        if (node.count > 0) {
            for (int i = node.left; i < node.left + node.count; ++i) {
                const int tri = order_[i];
                const Vec3 q = closest_point_on_triangle(p, tri_a_[tri], tri_b_[tri], tri_c_[tri]);
                const double d2 = (q - p).norm2();
                if (d2 < best_d2 || (d2 == best_d2 && tri < best.face)) {
                    best_d2 = d2;
                    best.face = tri;
                    best.point = q;
                }
            }
        } else {
            Entry l{node.left, box_distance2(nodes_[node.left].box, p)};
            Entry r{node.right, box_distance2(nodes_[node.right].box, p)};
            if (l.d2 > r.d2) std::swap(l, r);  // pop nearer first
            stack[top++] = r;
            stack[top++] = l;
        }
    }
    best.distance = std::sqrt(best_d2);
    return best;
}

std::pair<int, int> TriBvh::face_origin(int global_face) const {
    int mesh = 0;
    while (mesh + 1 < static_cast<int>(mesh_face_offset_.size()) - 1 &&
           global_face >= mesh_face_offset_[mesh + 1])
        ++mesh;
    return {mesh, global_face - mesh_face_offset_[mesh]};
}

}  // namespace cardiomesh
