#include "mrs/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "mrs/error.hpp"

// Half-space clipping of convex polytopes along level sets of linear field
// interpolants.
//
// Classification is done on the stored field values with exact comparisons:
// every holder of a vertex handle sees the same value bits, so the two
// fragments meeting at a cut agree on which side each point belongs to, and
// so do fragments in neighbouring simplices that share the subdivided facet.
// Cut points are interned by (edge, plane) identity; a threshold is applied
// at most once per ascending sweep, which keeps the keys unambiguous.

namespace mrs::geom {

Handle PointPool::add_base_point(const double* pos, const double* vals) {
    const Handle h = static_cast<Handle>(size());
    pos_.insert(pos_.end(), pos, pos + 3);
    vals_.insert(vals_.end(), vals, vals + n_fields_);
    return h;
}

Handle PointPool::intern_cut(Handle a, Handle b, std::uint32_t plane, int field,
                             double threshold) {
    CutKey key{std::min(a, b), std::max(a, b), plane};
    auto it = cut_index_.find(key);
    if (it != cut_index_.end()) return it->second;

    if (n_fields_ > 16) throw InternalError("point pool supports at most 16 fields");
    const double vlo = value(key.lo, field);
    const double vhi = value(key.hi, field);
    const double t = (threshold - vlo) / (vhi - vlo);

    double p[3], v[16];
    for (int i = 0; i < 3; ++i) {
        const double a0 = pos(key.lo)[i];
        p[i] = a0 + t * (pos(key.hi)[i] - a0);
    }
    for (int f = 0; f < n_fields_; ++f) {
        const double a0 = value(key.lo, f);
        v[f] = a0 + t * (value(key.hi, f) - a0);
    }
    v[field] = threshold;  // the cut point lies on the plane by definition

    const Handle h = add_base_point(p, v);
    cut_index_.emplace(key, h);
    return h;
}

Polytope make_triangle(Handle a, Handle b, Handle c) {
    Polytope p;
    p.verts = {a, b, c};
    return p;
}

Polytope make_tetrahedron(Handle a, Handle b, Handle c, Handle d) {
    Polytope p;
    p.verts = {a, b, c, d};
    p.faces = {{a, b, c}, {a, b, d}, {a, c, d}, {b, c, d}};
    return p;
}

namespace {

int side_of(const PointPool& pool, Handle h, int field, double threshold) {
    const double v = pool.value(h, field);
    if (v < threshold) return -1;
    if (v > threshold) return +1;
    return 0;
}

SplitOutcome split_polygon(const Polytope& poly, PointPool& pool, int field, double threshold,
                           std::uint32_t plane) {
    SplitOutcome out;
    const auto& loop = poly.verts;
    const size_t n = loop.size();

    bool any_below = false, any_above = false;
    std::vector<int> side(n);
    for (size_t i = 0; i < n; ++i) {
        side[i] = side_of(pool, loop[i], field, threshold);
        any_below |= side[i] < 0;
        any_above |= side[i] > 0;
    }
    if (!any_above) {
        out.below = poly;
        return out;
    }
    if (!any_below) {
        out.above = poly;
        return out;
    }

    auto& below = out.below.verts;
    auto& above = out.above.verts;
    for (size_t i = 0; i < n; ++i) {
        const size_t j = (i + 1) % n;
        if (side[i] <= 0) below.push_back(loop[i]);
        if (side[i] >= 0) above.push_back(loop[i]);
        if (side[i] * side[j] < 0) {
            const Handle w = pool.intern_cut(loop[i], loop[j], plane, field, threshold);
            below.push_back(w);
            above.push_back(w);
        }
    }
    if (below.size() < 3) below.clear();
    if (above.size() < 3) above.clear();
    return out;
}

// Splits each face loop and collects the two on-plane contact points per
// crossed face; chaining those contact pairs yields the cap polygon.
SplitOutcome split_polyhedron(const Polytope& poly, PointPool& pool, int field, double threshold,
                              std::uint32_t plane) {
    SplitOutcome out;

    bool any_below = false, any_above = false;
    for (Handle h : poly.verts) {
        const int s = side_of(pool, h, field, threshold);
        any_below |= s < 0;
        any_above |= s > 0;
    }
    if (!any_above) {
        out.below = poly;
        return out;
    }
    if (!any_below) {
        out.above = poly;
        return out;
    }

    std::vector<std::vector<Handle>> below_faces, above_faces;
    std::vector<std::pair<Handle, Handle>> cap_edges;

    for (const auto& loop : poly.faces) {
        const size_t n = loop.size();
        std::vector<int> side(n);
        for (size_t i = 0; i < n; ++i) side[i] = side_of(pool, loop[i], field, threshold);

        std::vector<Handle> bf, af, contact;
        for (size_t i = 0; i < n; ++i) {
            const size_t j = (i + 1) % n;
            if (side[i] <= 0) bf.push_back(loop[i]);
            if (side[i] >= 0) af.push_back(loop[i]);
            if (side[i] == 0) contact.push_back(loop[i]);
            if (side[i] * side[j] < 0) {
                const Handle w = pool.intern_cut(loop[i], loop[j], plane, field, threshold);
                bf.push_back(w);
                af.push_back(w);
                contact.push_back(w);
            }
        }
        if (bf.size() >= 3) below_faces.push_back(std::move(bf));
        if (af.size() >= 3) above_faces.push_back(std::move(af));

        std::sort(contact.begin(), contact.end());
        contact.erase(std::unique(contact.begin(), contact.end()), contact.end());
        if (contact.size() == 2) {
            cap_edges.emplace_back(contact[0], contact[1]);
        } else if (contact.size() > 2) {
            // Collinear degeneracy: the true segment endpoints are the
            // farthest-apart pair.
            double best = -1.0;
            std::pair<Handle, Handle> ends{contact[0], contact[1]};
            for (size_t a = 0; a < contact.size(); ++a)
                for (size_t b = a + 1; b < contact.size(); ++b) {
                    const double* pa = pool.pos(contact[a]);
                    const double* pb = pool.pos(contact[b]);
                    double d2 = 0.0;
                    for (int c = 0; c < 3; ++c) d2 += (pa[c] - pb[c]) * (pa[c] - pb[c]);
                    if (d2 > best) {
                        best = d2;
                        ends = {contact[a], contact[b]};
                    }
                }
            cap_edges.push_back(ends);
        }
    }

    // Chain the cap edges into a closed loop.
    std::vector<Handle> cap;
    if (!cap_edges.empty()) {
        std::sort(cap_edges.begin(), cap_edges.end());
        cap_edges.erase(std::unique(cap_edges.begin(), cap_edges.end()), cap_edges.end());
        std::unordered_map<Handle, std::vector<Handle>> adj;
        for (const auto& [a, b] : cap_edges) {
            if (a == b) continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        if (!adj.empty()) {
            Handle start = cap_edges.front().first;
            for (const auto& [a, b] : cap_edges) start = std::min({start, a, b});
            Handle prev = start, cur = start;
            cap.push_back(start);
            for (size_t guard = 0; guard <= adj.size(); ++guard) {
                const auto& nb = adj[cur];
                if (nb.size() != 2)
                    throw InternalError("clip cap is not a simple cycle");
                const Handle next = (nb[0] == prev) ? nb[1] : nb[0];
                if (next == start) break;
                cap.push_back(next);
                prev = cur;
                cur = next;
            }
            if (cap.size() != adj.size())
                throw InternalError("clip cap failed to close");
        }
    }
    if (cap.size() >= 3) {
        below_faces.push_back(cap);
        std::reverse(cap.begin(), cap.end());
        above_faces.push_back(cap);
    }

    auto finish = [](std::vector<std::vector<Handle>> faces, Polytope& dst) {
        if (faces.size() < 4) return;  // fewer faces cannot bound a 3D region
        std::vector<Handle> vs;
        for (const auto& f : faces) vs.insert(vs.end(), f.begin(), f.end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        dst.verts = std::move(vs);
        dst.faces = std::move(faces);
    };
    finish(std::move(below_faces), out.below);
    finish(std::move(above_faces), out.above);
    return out;
}

double polygon_area3(const std::vector<Handle>& loop, const PointPool& pool) {
    // Newell's formula; magnitude only.
    if (loop.size() < 3) return 0.0;
    double nx = 0.0, ny = 0.0, nz = 0.0;
    for (size_t i = 0; i < loop.size(); ++i) {
        const double* a = pool.pos(loop[i]);
        const double* b = pool.pos(loop[(i + 1) % loop.size()]);
        nx += (a[1] - b[1]) * (a[2] + b[2]);
        ny += (a[2] - b[2]) * (a[0] + b[0]);
        nz += (a[0] - b[0]) * (a[1] + b[1]);
    }
    return 0.5 * std::sqrt(nx * nx + ny * ny + nz * nz);
}

double polygon_area2(const std::vector<Handle>& loop, const PointPool& pool) {
    if (loop.size() < 3) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < loop.size(); ++i) {
        const double* a = pool.pos(loop[i]);
        const double* b = pool.pos(loop[(i + 1) % loop.size()]);
        acc += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * std::abs(acc);
}

}  // namespace

SplitOutcome split_by_field_plane(const Polytope& poly, PointPool& pool, int field,
                                  double threshold, std::uint32_t plane) {
    if (pool.dom_dim() == 2) return split_polygon(poly, pool, field, threshold, plane);
    return split_polyhedron(poly, pool, field, threshold, plane);
}

double polytope_measure(const Polytope& poly, const PointPool& pool) {
    if (poly.empty()) return 0.0;
    if (pool.dom_dim() == 2) return polygon_area2(poly.verts, pool);

    // Sum of pyramids from the vertex centroid over each face.  Valid for
    // convex polytopes with planar faces regardless of face winding.
    double c[3] = {0.0, 0.0, 0.0};
    for (Handle h : poly.verts)
        for (int i = 0; i < 3; ++i) c[i] += pool.pos(h)[i];
    for (int i = 0; i < 3; ++i) c[i] /= static_cast<double>(poly.verts.size());

    double vol = 0.0;
    for (const auto& loop : poly.faces) {
        double face_acc = 0.0;
        const double* p0 = pool.pos(loop[0]);
        for (size_t i = 1; i + 1 < loop.size(); ++i) {
            const double* p1 = pool.pos(loop[i]);
            const double* p2 = pool.pos(loop[i + 1]);
            double u[3], v[3], w[3];
            for (int k = 0; k < 3; ++k) {
                u[k] = p0[k] - c[k];
                v[k] = p1[k] - c[k];
                w[k] = p2[k] - c[k];
            }
            face_acc += u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                        u[2] * (v[0] * w[1] - v[1] * w[0]);
        }
        vol += std::abs(face_acc) / 6.0;
    }
    return vol;
}

void for_each_facet(const Polytope& poly, int dom_dim,
                    const std::function<void(const std::vector<Handle>&)>& fn) {
    if (poly.empty()) return;
    if (dom_dim == 2) {
        std::vector<Handle> edge(2);
        const auto& loop = poly.verts;
        for (size_t i = 0; i < loop.size(); ++i) {
            edge[0] = loop[i];
            edge[1] = loop[(i + 1) % loop.size()];
            fn(edge);
        }
    } else {
        for (const auto& f : poly.faces) fn(f);
    }
}

double facet_measure(const std::vector<Handle>& loop, const PointPool& pool, int dom_dim) {
    if (dom_dim == 2) {
        const double* a = pool.pos(loop[0]);
        const double* b = pool.pos(loop[1]);
        double d2 = 0.0;
        for (int c = 0; c < 3; ++c) d2 += (a[c] - b[c]) * (a[c] - b[c]);
        return std::sqrt(d2);
    }
    return polygon_area3(loop, pool);
}

}  // namespace mrs::geom
