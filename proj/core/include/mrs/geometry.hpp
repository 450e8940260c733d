#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace mrs::geom {

using Handle = std::uint32_t;

/// Identity of a clip point: the edge it subdivides plus the cutting plane.
/// Interning cut points under this key makes vertex identity exact across
/// fragments and across neighbouring simplices, so facet adjacency can be
/// decided combinatorially instead of by coordinate tolerances.
struct CutKey {
    Handle lo = 0, hi = 0;    // endpoint handles, lo < hi
    std::uint32_t plane = 0;  // encoded (field, breakpoint index)
    bool operator==(const CutKey&) const = default;
};

struct CutKeyHash {
    size_t operator()(const CutKey& k) const {
        std::uint64_t h = (std::uint64_t(k.lo) << 32) | k.hi;
        h ^= std::uint64_t(k.plane) * 0x9e3779b97f4a7c15ull;
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return static_cast<size_t>(h);
    }
};

constexpr std::uint32_t plane_id(int field, std::int64_t breakpoint_index) {
    return (static_cast<std::uint32_t>(field) << 25) |
           static_cast<std::uint32_t>(breakpoint_index);
}

/// Pool of polytope vertices: the mesh vertices first, then interned cut
/// points.  Position and field values of a cut point are computed once per
/// key with a canonical operand order (lo before hi), so every construction
/// of the same point is bit-identical.
class PointPool {
public:
    PointPool(int dom_dim, int n_fields) : dom_dim_(dom_dim), n_fields_(n_fields) {}

    int dom_dim() const { return dom_dim_; }
    int n_fields() const { return n_fields_; }

    Handle add_base_point(const double* pos, const double* vals);

    /// Cut of edge (a,b) by the plane {x : field(x) = threshold}.  Requires
    /// a strict straddle of the threshold by the endpoint values.
    Handle intern_cut(Handle a, Handle b, std::uint32_t plane, int field, double threshold);

    const double* pos(Handle h) const { return &pos_[std::size_t(h) * 3]; }
    double value(Handle h, int field) const { return vals_[std::size_t(h) * n_fields_ + field]; }
    const double* vals(Handle h) const { return &vals_[std::size_t(h) * n_fields_]; }
    std::size_t size() const { return pos_.size() / 3; }

private:
    int dom_dim_;
    int n_fields_;
    std::vector<double> pos_;   // 3 per point (z = 0 in 2D)
    std::vector<double> vals_;  // n_fields per point
    std::unordered_map<CutKey, Handle, CutKeyHash> cut_index_;
};

/// Convex polytope carried through half-space clipping.  In 2D the boundary
/// is the cyclic vertex loop itself; in 3D the faces are explicit loops.
struct Polytope {
    std::vector<Handle> verts;               // 2D: cyclic loop; 3D: vertex set
    std::vector<std::vector<Handle>> faces;  // 3D only

    bool empty() const { return verts.empty(); }
};

Polytope make_triangle(Handle a, Handle b, Handle c);
Polytope make_tetrahedron(Handle a, Handle b, Handle c, Handle d);

struct SplitOutcome {
    Polytope below, above;  // either may be empty when no points lie strictly on that side
};

/// Splits a convex polytope by the level set {field = threshold} of the
/// linear field interpolant.  Vertices strictly below the threshold go to
/// `below`, strictly above to `above`; on-plane vertices join both parts.
SplitOutcome split_by_field_plane(const Polytope& poly, PointPool& pool, int field,
                                  double threshold, std::uint32_t plane);

/// Area (2D) or volume (3D) of a convex polytope.
double polytope_measure(const Polytope& poly, const PointPool& pool);

/// The (d-1)-dimensional boundary facets of a polytope: edges of the loop in
/// 2D, faces in 3D.  Emitted as vertex loops.
void for_each_facet(const Polytope& poly, int dom_dim,
                    const std::function<void(const std::vector<Handle>&)>& fn);

/// Length (2D edge) or area (3D polygon) of a facet loop.
double facet_measure(const std::vector<Handle>& loop, const PointPool& pool, int dom_dim);

}  // namespace mrs::geom
