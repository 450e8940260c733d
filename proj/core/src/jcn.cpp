#include "mrs/jcn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mrs/error.hpp"
#include "mrs/fragment.hpp"
#include "mrs/union_find.hpp"

// JCN construction:
//   1. fragment every simplex along the quantization boundaries;
//   2. index fragment facets by their vertex-handle sets; a facet held by
//      two fragments makes them facet-adjacent;
//   3. union facet-adjacent fragments with equal bin tuples; each class is
//      a joint contour (one graph node);
//   4. add an edge wherever facet-adjacent fragments have different bins.

namespace mrs {

std::vector<int> JcnGraph::degrees() const {
    std::vector<int> deg(nodes.size(), 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

namespace {

struct FacetVecHash {
    size_t operator()(const std::vector<geom::Handle>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (geom::Handle x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct FacetEntry {
    std::int32_t frag_a = -1;
    std::int32_t frag_b = -1;
    double measure = 0.0;
};

// Shared node/edge assembly once per-fragment bins and the adjacency pairs
// are known.
JcnGraph assemble_graph(int level, const MultiFieldDataset& ds, Quantization quant,
                        BuildMode mode, std::vector<FragmentRecord> records,
                        const std::vector<std::vector<std::int32_t>>& bins,
                        const std::vector<std::pair<std::int32_t, std::int32_t>>& adjacent) {
    const auto nfrag = static_cast<std::int32_t>(records.size());

    UnionFind uf(nfrag);
    for (const auto& [a, b] : adjacent)
        if (bins[a] == bins[b]) uf.unite(a, b);

    // Deterministic node order: (bin tuple, smallest member fragment id).
    // Fragment ids are already (simplex, intra)-lexicographic.
    std::vector<std::int32_t> smallest(nfrag, -1);
    std::vector<std::int32_t> roots;
    for (std::int32_t i = 0; i < nfrag; ++i) {
        const std::int32_t r = uf.find(i);
        if (smallest[r] == -1) {
            smallest[r] = i;  // ascending scan: first member is the smallest
            roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end(), [&](std::int32_t x, std::int32_t y) {
        if (bins[smallest[x]] != bins[smallest[y]]) return bins[smallest[x]] < bins[smallest[y]];
        return smallest[x] < smallest[y];
    });

    std::vector<std::int32_t> node_of(nfrag, -1);
    for (std::int32_t n = 0; n < static_cast<std::int32_t>(roots.size()); ++n)
        node_of[roots[n]] = n;

    JcnGraph g;
    g.level = level;
    g.n_fields = ds.n_fields;
    g.mode = mode;
    g.quant = std::move(quant);
    g.total_measure = ds.mesh.total_measure;
    g.fragments = std::move(records);
    g.nodes.resize(roots.size());
    for (std::int32_t n = 0; n < static_cast<std::int32_t>(roots.size()); ++n) {
        JcnNode& node = g.nodes[n];
        node.id = n;
        node.level = level;
        node.bin = bins[smallest[roots[n]]];
    }
    for (std::int32_t i = 0; i < nfrag; ++i)
        g.nodes[node_of[uf.find(i)]].fragment_ids.push_back(static_cast<std::uint32_t>(i));

    std::set<std::pair<std::int32_t, std::int32_t>> edge_set;
    for (const auto& [a, b] : adjacent) {
        if (bins[a] == bins[b]) continue;
        const std::int32_t u = node_of[uf.find(a)];
        const std::int32_t v = node_of[uf.find(b)];
        if (u == v) throw InternalError("edge endpoints collapsed into one node");
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    g.edges.assign(edge_set.begin(), edge_set.end());

    compute_attributes(g, ds);
    return g;
}

JcnGraph build_fragment_mode(const MultiFieldDataset& ds, int level) {
    Quantization quant = make_quantization(ds, level);
    geom::PointPool pool = make_mesh_pool(ds);
    const std::int64_t ns = ds.mesh.simplex_count();

    // Sequential sweep: the shared point pool interns cut points across
    // simplices, which is what makes facet identity global.
    std::vector<FragmentRecord> records;
    std::vector<std::vector<std::int32_t>> bins;
    std::vector<geom::Polytope> polys;
    for (std::int64_t s = 0; s < ns; ++s) {
        for (auto& fr : fragment_simplex(s, ds, quant, pool)) {
            records.push_back({fr.simplex, fr.intra, fr.measure});
            bins.push_back(std::move(fr.bins));
            polys.push_back(std::move(fr.poly));
        }
    }

    std::unordered_map<std::vector<geom::Handle>, std::int32_t, FacetVecHash> lookup;
    std::vector<FacetEntry> entries;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(polys.size()); ++i) {
        geom::for_each_facet(polys[i], ds.mesh.dim, [&](const std::vector<geom::Handle>& loop) {
            std::vector<geom::Handle> key(loop);
            std::sort(key.begin(), key.end());
            auto [it, inserted] =
                lookup.try_emplace(std::move(key), static_cast<std::int32_t>(entries.size()));
            if (inserted) {
                entries.push_back({i, -1, geom::facet_measure(loop, pool, ds.mesh.dim)});
            } else {
                FacetEntry& e = entries[it->second];
                if (e.frag_b != -1) throw InternalError("facet shared by more than two fragments");
                e.frag_b = i;
            }
        });
    }

    std::vector<std::pair<std::int32_t, std::int32_t>> adjacent;
    for (const auto& e : entries) {
        if (e.frag_b == -1) continue;  // boundary facet
        const double lim = 1e-12 * std::min(ds.mesh.simplex_measure[records[e.frag_a].simplex],
                                            ds.mesh.simplex_measure[records[e.frag_b].simplex]);
        if (e.measure > lim) adjacent.emplace_back(e.frag_a, e.frag_b);
    }

    return assemble_graph(level, ds, std::move(quant), BuildMode::fragment, std::move(records),
                          bins, adjacent);
}

JcnGraph build_vertex_mode(const MultiFieldDataset& ds, int level) {
    Quantization quant = make_quantization(ds, level);
    const std::int64_t ns = ds.mesh.simplex_count();
    const int nb = ds.mesh.dim + 1;

    std::vector<FragmentRecord> records(ns);
    std::vector<std::vector<std::int32_t>> bins(ns);
    std::vector<double> centroid(ds.n_fields);
    for (std::int64_t s = 0; s < ns; ++s) {
        records[s] = {s, 0, ds.mesh.simplex_measure[s]};
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (int j = 0; j < nb; ++j)
            for (int f = 0; f < ds.n_fields; ++f)
                centroid[f] += ds.sample(ds.mesh.simplices[s][j], f);
        for (int f = 0; f < ds.n_fields; ++f) centroid[f] /= nb;
        bins[s] = quant.bin_tuple(centroid);
    }

    // Mesh facets keyed by their sorted vertex ids; shared facet = adjacency.
    std::unordered_map<std::vector<geom::Handle>, std::int32_t, FacetVecHash> first_holder;
    std::vector<std::pair<std::int32_t, std::int32_t>> adjacent;
    for (std::int64_t s = 0; s < ns; ++s) {
        for (int skip = 0; skip < nb; ++skip) {
            std::vector<geom::Handle> key;
            key.reserve(nb - 1);
            for (int j = 0; j < nb; ++j)
                if (j != skip) key.push_back(static_cast<geom::Handle>(ds.mesh.simplices[s][j]));
            std::sort(key.begin(), key.end());
            auto [it, inserted] =
                first_holder.try_emplace(std::move(key), static_cast<std::int32_t>(s));
            if (!inserted)
                adjacent.emplace_back(it->second, static_cast<std::int32_t>(s));
        }
    }

    return assemble_graph(level, ds, std::move(quant), BuildMode::vertex, std::move(records),
                          bins, adjacent);
}

}  // namespace

JcnGraph build_jcn(const MultiFieldDataset& ds, int level, BuildMode mode) {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    if (mode == BuildMode::fragment) return build_fragment_mode(ds, level);
    return build_vertex_mode(ds, level);
}

void compute_attributes(JcnGraph& jcn, const MultiFieldDataset& ds) {
    if (jcn.n_fields != ds.n_fields)
        throw std::invalid_argument("attribute pass: dataset field count does not match graph");

    std::map<std::vector<std::int32_t>, int> bin_census;
    for (auto& node : jcn.nodes) ++bin_census[node.bin];

    const auto deg = jcn.degrees();
    for (auto& node : jcn.nodes) {
        double vol = 0.0;
        for (std::uint32_t fid : node.fragment_ids) vol += jcn.fragments[fid].measure;
        node.attrs.volume = vol / jcn.total_measure;

        double rm = 1.0;
        for (int f = 0; f < jcn.n_fields; ++f)
            rm *= jcn.quant.relative_bin_width(f, node.bin[f]);
        node.attrs.range_measure = std::min(rm, 1.0);

        node.attrs.component_count = bin_census[node.bin];
        node.attrs.degree = deg[node.id];
    }
}

}  // namespace mrs
