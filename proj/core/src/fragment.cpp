#include "mrs/fragment.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrs/error.hpp"

namespace mrs {

geom::PointPool make_mesh_pool(const MultiFieldDataset& ds) {
    geom::PointPool pool(ds.mesh.dim, ds.n_fields);
    const std::int64_t nv = ds.vertex_count();
    for (std::int64_t v = 0; v < nv; ++v)
        pool.add_base_point(ds.mesh.vertices[v].data(), &ds.samples[v * ds.n_fields]);
    return pool;
}

std::vector<Fragment> fragment_simplex(std::int64_t simplex, const MultiFieldDataset& ds,
                                       const Quantization& quant, geom::PointPool& pool) {
    if (ds.n_fields > 3)
        throw std::invalid_argument("exact fragmentation supports at most 3 fields");
    if (simplex < 0 || simplex >= ds.mesh.simplex_count())
        throw std::invalid_argument("simplex index out of range");

    const int d = ds.mesh.dim;
    const auto& sv = ds.mesh.simplices[simplex];
    geom::Polytope whole = (d == 2)
        ? geom::make_triangle(sv[0], sv[1], sv[2])
        : geom::make_tetrahedron(sv[0], sv[1], sv[2], sv[3]);

    // Pieces carry their partial bin tuple while remaining fields are cut.
    struct Piece {
        geom::Polytope poly;
        std::vector<std::int32_t> bins;
    };
    std::vector<Piece> pieces;
    pieces.push_back({std::move(whole), {}});

    for (int f = 0; f < ds.n_fields; ++f) {
        std::vector<Piece> next;
        next.reserve(pieces.size());
        for (auto& piece : pieces) {
            double vmin = pool.value(piece.poly.verts[0], f);
            double vmax = vmin;
            for (geom::Handle h : piece.poly.verts) {
                const double v = pool.value(h, f);
                vmin = std::min(vmin, v);
                vmax = std::max(vmax, v);
            }

            std::int32_t bin = quant.bin_of(f, vmin);
            geom::Polytope current = std::move(piece.poly);
            if (!quant.degenerate[f]) {
                const auto& bp = quant.breakpoints[f];
                // Interior breakpoints strictly inside the value range split
                // the piece; each split fixes the bin of the lower part.
                for (std::int32_t j = bin + 1; j + 1 < static_cast<std::int32_t>(bp.size()); ++j) {
                    const double thr = bp[j];
                    if (!(thr > vmin)) continue;
                    if (!(thr < vmax)) break;
                    auto parts = geom::split_by_field_plane(current, pool, f, thr,
                                                            geom::plane_id(f, j));
                    if (!parts.below.empty()) {
                        Piece p;
                        p.poly = std::move(parts.below);
                        p.bins = piece.bins;
                        p.bins.push_back(bin);
                        next.push_back(std::move(p));
                    }
                    current = std::move(parts.above);
                    bin = j;
                    if (current.empty()) break;
                }
            }
            if (!current.empty()) {
                Piece p;
                p.poly = std::move(current);
                p.bins = std::move(piece.bins);
                p.bins.push_back(bin);
                next.push_back(std::move(p));
            }
        }
        pieces = std::move(next);
    }

    const double zero_cutoff = 1e-14 * ds.mesh.simplex_measure[simplex];
    std::vector<Fragment> out;
    out.reserve(pieces.size());
    for (auto& piece : pieces) {
        const double m = geom::polytope_measure(piece.poly, pool);
        if (!(m > zero_cutoff)) continue;
        Fragment fr;
        fr.simplex = simplex;
        fr.intra = static_cast<std::int32_t>(out.size());
        fr.bins = std::move(piece.bins);
        fr.measure = m;
        fr.poly = std::move(piece.poly);
        out.push_back(std::move(fr));
    }
    return out;
}

std::vector<Fragment> fragment_simplex(std::int64_t simplex, const MultiFieldDataset& ds,
                                       const Quantization& quant) {
    geom::PointPool pool = make_mesh_pool(ds);
    return fragment_simplex(simplex, ds, quant, pool);
}

}  // namespace mrs
