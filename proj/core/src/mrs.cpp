#include "mrs/mrs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "mrs/error.hpp"
#include "mrs/union_find.hpp"

namespace mrs {

namespace {

std::vector<std::int32_t> halved(const std::vector<std::int32_t>& bin,
                                 const std::vector<bool>& degenerate) {
    std::vector<std::int32_t> out(bin.size());
    for (size_t f = 0; f < bin.size(); ++f) out[f] = degenerate[f] ? 0 : bin[f] / 2;
    return out;
}

}  // namespace

std::pair<JcnGraph, std::vector<std::int32_t>> create_coarser_reeb_space(const JcnGraph& fine) {
    if (fine.level < 1) throw std::invalid_argument("no coarser level below level 0");

    const auto n = fine.node_count();
    std::vector<std::vector<std::int32_t>> coarse_bin(n);
    for (std::int32_t i = 0; i < n; ++i)
        coarse_bin[i] = halved(fine.nodes[i].bin, fine.quant.degenerate);

    // Nodes sharing a merged bin box and connected by fine edges collapse
    // into one coarse node.
    UnionFind uf(n);
    for (const auto& [a, b] : fine.edges)
        if (coarse_bin[a] == coarse_bin[b]) uf.unite(a, b);

    // Coarse node order: (bin tuple, smallest member fragment id).
    constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> marker(n, kUnseen);
    std::vector<std::int32_t> roots;
    for (std::int32_t i = 0; i < n; ++i) {
        const std::int32_t r = uf.find(i);
        if (marker[r] == kUnseen) roots.push_back(r);
        marker[r] = std::min(marker[r], fine.nodes[i].fragment_ids.front());
    }
    std::sort(roots.begin(), roots.end(), [&](std::int32_t x, std::int32_t y) {
        if (coarse_bin[x] != coarse_bin[y]) return coarse_bin[x] < coarse_bin[y];
        return marker[x] < marker[y];
    });

    std::vector<std::int32_t> node_of(n, -1);
    for (std::int32_t k = 0; k < static_cast<std::int32_t>(roots.size()); ++k)
        node_of[roots[k]] = k;

    JcnGraph coarse;
    coarse.level = fine.level - 1;
    coarse.n_fields = fine.n_fields;
    coarse.mode = fine.mode;
    coarse.quant = fine.quant.coarsened();
    coarse.total_measure = fine.total_measure;
    coarse.fragments = fine.fragments;  // same fragment universe
    coarse.nodes.resize(roots.size());

    std::vector<std::int32_t> parent(n, -1);
    for (std::int32_t i = 0; i < n; ++i) parent[i] = node_of[uf.find(i)];

    for (std::int32_t k = 0; k < static_cast<std::int32_t>(roots.size()); ++k) {
        JcnNode& nd = coarse.nodes[k];
        nd.id = k;
        nd.level = coarse.level;
        nd.bin = coarse_bin[roots[k]];
    }
    for (std::int32_t i = 0; i < n; ++i) {
        JcnNode& nd = coarse.nodes[parent[i]];
        nd.fragment_ids.insert(nd.fragment_ids.end(), fine.nodes[i].fragment_ids.begin(),
                               fine.nodes[i].fragment_ids.end());
        nd.attrs.volume += fine.nodes[i].attrs.volume;  // aggregate, not re-measured
    }
    for (auto& nd : coarse.nodes) std::sort(nd.fragment_ids.begin(), nd.fragment_ids.end());

    std::set<std::pair<std::int32_t, std::int32_t>> edge_set;
    for (const auto& [a, b] : fine.edges) {
        const std::int32_t u = parent[a], v = parent[b];
        if (u == v) continue;
        if (coarse.nodes[u].bin == coarse.nodes[v].bin)
            throw InternalError("coarse edge joins equal bins");
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    coarse.edges.assign(edge_set.begin(), edge_set.end());

    // Range measure, component census and degree follow from the coarse
    // graph itself; volume stays the aggregate of the children.
    std::map<std::vector<std::int32_t>, int> census;
    for (auto& nd : coarse.nodes) ++census[nd.bin];
    const auto deg = coarse.degrees();
    for (auto& nd : coarse.nodes) {
        double rm = 1.0;
        for (int f = 0; f < coarse.n_fields; ++f)
            rm *= coarse.quant.relative_bin_width(f, nd.bin[f]);
        nd.attrs.range_measure = std::min(rm, 1.0);
        nd.attrs.component_count = census[nd.bin];
        nd.attrs.degree = deg[nd.id];
    }

    return {std::move(coarse), std::move(parent)};
}

MrsStructure build_mrs(std::shared_ptr<const MultiFieldDataset> dataset, int n_levels,
                       BuildMode mode) {
    if (!dataset) throw std::invalid_argument("null dataset");
    if (n_levels < 1) throw std::invalid_argument("an MRS needs at least one level");

    MrsStructure mrs;
    mrs.n_levels = n_levels;
    mrs.dataset = dataset;
    mrs.jcns.resize(n_levels);
    mrs.parent_map.resize(n_levels);

    mrs.jcns[n_levels - 1] = build_jcn(*dataset, n_levels - 1, mode);
    for (int k = n_levels - 1; k >= 1; --k) {
        auto [coarse, parent] = create_coarser_reeb_space(mrs.jcns[k]);
        mrs.jcns[k - 1] = std::move(coarse);
        mrs.parent_map[k] = std::move(parent);
    }
    return mrs;
}

bool jcn_isomorphic(const JcnGraph& derived, const JcnGraph& direct, double rel_tol,
                    std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };

    if (derived.node_count() != direct.node_count())
        return fail("node counts differ: " + std::to_string(derived.node_count()) + " vs " +
                    std::to_string(direct.node_count()));
    if (derived.edges.size() != direct.edges.size())
        return fail("edge counts differ");

    // Within one simplex every bin tuple occurs at most once (bin slabs of
    // linear fields are convex), so (simplex, bin) identifies a direct node.
    std::map<std::pair<std::int64_t, std::vector<std::int32_t>>, std::int32_t> direct_lookup;
    for (const auto& nd : direct.nodes)
        for (std::uint32_t fid : nd.fragment_ids)
            direct_lookup[{direct.fragments[fid].simplex, nd.bin}] = nd.id;

    std::vector<std::int32_t> map_to_direct(derived.node_count(), -1);
    std::vector<char> used(direct.node_count(), 0);
    for (const auto& nd : derived.nodes) {
        std::int32_t target = -1;
        for (std::uint32_t fid : nd.fragment_ids) {
            const auto it =
                direct_lookup.find({derived.fragments[fid].simplex, nd.bin});
            if (it == direct_lookup.end())
                return fail("no direct node covers a derived fragment (node " +
                            std::to_string(nd.id) + ")");
            if (target == -1) target = it->second;
            else if (target != it->second)
                return fail("derived node " + std::to_string(nd.id) +
                            " spans two direct nodes");
        }
        if (direct.nodes[target].bin != nd.bin)
            return fail("bin mismatch for derived node " + std::to_string(nd.id));
        const double va = nd.attrs.volume, vb = direct.nodes[target].attrs.volume;
        if (std::abs(va - vb) > rel_tol * std::max({1.0, std::abs(va), std::abs(vb)}))
            return fail("volume mismatch for derived node " + std::to_string(nd.id));
        if (used[target])
            return fail("two derived nodes map to direct node " + std::to_string(target));
        used[target] = 1;
        map_to_direct[nd.id] = target;
    }

    std::set<std::pair<std::int32_t, std::int32_t>> mapped;
    for (const auto& [a, b] : derived.edges) {
        const std::int32_t u = map_to_direct[a], v = map_to_direct[b];
        mapped.emplace(std::min(u, v), std::max(u, v));
    }
    std::set<std::pair<std::int32_t, std::int32_t>> expected(direct.edges.begin(),
                                                             direct.edges.end());
    if (mapped != expected) return fail("edge relations differ under the correspondence");
    return true;
}

NestingReport verify_nesting(const MrsStructure& mrs) {
    NestingReport report;
    auto add = [&](const std::string& name, bool pass, std::string detail = "") {
        report.checks.push_back({name, pass, std::move(detail)});
    };

    // Parent-map totality and surjectivity.
    for (int k = 1; k < mrs.n_levels; ++k) {
        const auto& pm = mrs.parent_map[k];
        bool total = static_cast<std::int32_t>(pm.size()) == mrs.jcns[k].node_count();
        for (std::int32_t p : pm)
            total = total && p >= 0 && p < mrs.jcns[k - 1].node_count();
        add("parent-map totality (level " + std::to_string(k) + ")", total);

        std::vector<char> hit(mrs.jcns[k - 1].node_count(), 0);
        if (total)
            for (std::int32_t p : pm) hit[p] = 1;
        const bool surjective =
            total && std::all_of(hit.begin(), hit.end(), [](char c) { return c == 1; });
        add("parent-map surjectivity (level " + std::to_string(k) + ")", surjective);

        bool halving = total;
        if (total) {
            for (std::int32_t c = 0; c < mrs.jcns[k].node_count(); ++c) {
                const auto expect = halved(mrs.jcns[k].nodes[c].bin, mrs.jcns[k].quant.degenerate);
                if (mrs.jcns[k - 1].nodes[pm[c]].bin != expect) {
                    halving = false;
                    break;
                }
            }
        }
        add("bin halving (level " + std::to_string(k) + ")", halving);

        bool volumes = total;
        if (total) {
            std::vector<double> agg(mrs.jcns[k - 1].node_count(), 0.0);
            for (std::int32_t c = 0; c < mrs.jcns[k].node_count(); ++c)
                agg[pm[c]] += mrs.jcns[k].nodes[c].attrs.volume;
            for (std::int32_t p = 0; p < mrs.jcns[k - 1].node_count(); ++p) {
                const double v = mrs.jcns[k - 1].nodes[p].attrs.volume;
                if (std::abs(agg[p] - v) > 1e-9 * std::max(1.0, std::abs(v))) {
                    volumes = false;
                    break;
                }
            }
        }
        add("parent volume aggregation (level " + std::to_string(k) + ")", volumes);
    }

    for (int k = 0; k < mrs.n_levels; ++k) {
        double sum = 0.0;
        for (const auto& nd : mrs.jcns[k].nodes) sum += nd.attrs.volume;
        add("volume normalization (level " + std::to_string(k) + ")",
            std::abs(sum - 1.0) <= 1e-9, "sum = " + std::to_string(sum));
    }

    // Derived levels must be isomorphic to direct builds.
    if (mrs.dataset) {
        for (int k = 0; k + 1 < mrs.n_levels; ++k) {
            const JcnGraph direct = build_jcn(*mrs.dataset, k, mrs.jcns[k].mode);
            std::string why;
            const bool iso = jcn_isomorphic(mrs.jcns[k], direct, 1e-9, &why);
            add("derived-vs-direct isomorphism (level " + std::to_string(k) + ")", iso, why);
        }
    }

    return report;
}

}  // namespace mrs
