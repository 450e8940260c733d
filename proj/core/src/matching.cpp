#include "mrs/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrs/error.hpp"
#include "mrs/similarity.hpp"

namespace mrs {

MatchContext make_match_context(int level, const JcnGraph& f, const JcnGraph& g,
                                const Weights& w) {
    MatchContext ctx;
    ctx.level = level;
    ctx.f = &f;
    ctx.g = &g;
    ctx.weights = &w;
    ctx.mdrg_f = build_mdrg(f);
    ctx.mdrg_g = build_mdrg(g);
    ctx.labels_f.assign(f.n_fields, std::vector<std::int64_t>(f.node_count(), -1));
    ctx.labels_g.assign(g.n_fields, std::vector<std::int64_t>(g.node_count(), -1));
    ctx.matched_f.assign(f.node_count(), 0);
    ctx.matched_g.assign(g.node_count(), 0);
    ctx.next_label.assign(f.n_fields, 0);
    return ctx;
}

bool check_rules(std::int32_t m, std::int32_t n, const MatchContext& ctx) {
    if (ctx.matched_f[m] || ctx.matched_g[n]) return false;
    if (ctx.f->nodes[m].bin != ctx.g->nodes[n].bin) return false;
    if (ctx.level > 0) {
        const std::int32_t pf = (*ctx.parents_f)[m];
        const std::int32_t pg = (*ctx.parents_g)[n];
        const auto it = ctx.prev_pairs.find(pf);
        if (it == ctx.prev_pairs.end() || it->second != pg) return false;
    }
    for (int d = 0; d < ctx.f->n_fields; ++d) {
        const std::int64_t lf = ctx.labels_f[d][m];
        const std::int64_t lg = ctx.labels_g[d][n];
        if (lf != lg) return false;  // both empty (-1) or the same label
    }
    return true;
}

namespace {

void stamp_branch(std::vector<std::int64_t>& labels, const Mdrg& mdrg, int dim,
                  std::int32_t node, std::int64_t label) {
    const std::int32_t branch = mdrg.node_refs[dim][node].branch;
    for (std::int32_t member : mdrg.branch_members[dim][branch]) {
        if (labels[member] != -1 && labels[member] != label)
            throw InternalError("branch label reassignment");
        labels[member] = label;
    }
}

}  // namespace

void propagate_labels(const MatchPair& pair, MatchContext& ctx) {
    for (int d = 0; d < ctx.f->n_fields; ++d) {
        const std::int64_t lf = ctx.labels_f[d][pair.node_f];
        const std::int64_t lg = ctx.labels_g[d][pair.node_g];
        if (lf == -1 && lg == -1) {
            const std::int64_t fresh = ctx.next_label[d]++;
            stamp_branch(ctx.labels_f[d], ctx.mdrg_f, d, pair.node_f, fresh);
            stamp_branch(ctx.labels_g[d], ctx.mdrg_g, d, pair.node_g, fresh);
        } else if (lf == -1) {
            stamp_branch(ctx.labels_f[d], ctx.mdrg_f, d, pair.node_f, lg);
        } else if (lg == -1) {
            stamp_branch(ctx.labels_g[d], ctx.mdrg_g, d, pair.node_g, lf);
        } else if (lf != lg) {
            throw InternalError("label conflict on an accepted pair");
        }
    }
}

std::vector<MatchPair> create_matching_pairs(const MrsStructure& f, const MrsStructure& g,
                                             const Weights& w) {
    if (f.n_levels != g.n_levels)
        throw std::invalid_argument("matching needs equal resolution counts, got " +
                                    std::to_string(f.n_levels) + " vs " +
                                    std::to_string(g.n_levels));

    std::vector<MatchPair> mpairs;
    std::map<std::int32_t, std::int32_t> prev;

    for (int k = 0; k < f.n_levels; ++k) {
        MatchContext ctx = make_match_context(k, f.jcns[k], g.jcns[k], w);
        ctx.prev_pairs = std::move(prev);
        if (k > 0) {
            ctx.parents_f = &f.parent_map[k];
            ctx.parents_g = &g.parent_map[k];
        }

        std::map<std::vector<std::int32_t>, std::vector<std::int32_t>> g_by_bin;
        for (const auto& nd : g.jcns[k].nodes) g_by_bin[nd.bin].push_back(nd.id);

        // Volume-priority queue, realized as a static descending sort: no
        // priorities change during the sweep.
        std::vector<std::int32_t> order(f.jcns[k].node_count());
        for (std::int32_t i = 0; i < f.jcns[k].node_count(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
            const double va = f.jcns[k].nodes[a].attrs.volume;
            const double vb = f.jcns[k].nodes[b].attrs.volume;
            if (va != vb) return va > vb;
            return a < b;
        });

        std::map<std::int32_t, std::int32_t> level_pairs;
        for (std::int32_t m : order) {
            const auto it = g_by_bin.find(f.jcns[k].nodes[m].bin);
            if (it == g_by_bin.end()) continue;
            std::int32_t best = -1;
            double best_phi = -1.0;
            for (std::int32_t n : it->second) {
                if (!check_rules(m, n, ctx)) continue;
                const double phi =
                    node_similarity(f.jcns[k].nodes[m].attrs, g.jcns[k].nodes[n].attrs, w);
                if (phi > best_phi) {  // strict: ties keep the smallest id
                    best_phi = phi;
                    best = n;
                }
            }
            if (best < 0) continue;
            MatchPair pair{k, m, best};
            ctx.matched_f[m] = 1;
            ctx.matched_g[best] = 1;
            propagate_labels(pair, ctx);
            mpairs.push_back(pair);
            level_pairs[m] = best;
        }
        prev = std::move(level_pairs);
    }
    return mpairs;
}

}  // namespace mrs
