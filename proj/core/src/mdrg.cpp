#include "mrs/mdrg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "mrs/error.hpp"
#include "mrs/union_find.hpp"

namespace mrs {

std::vector<int> ReebGraphQ::degrees() const {
    std::vector<int> deg(nodes.size(), 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

ReebGraphQ quotient_reeb_graph(std::span<const std::int32_t> jcn_nodes, const JcnGraph& jcn,
                               int dim) {
    if (jcn_nodes.empty()) throw std::invalid_argument("empty node set");
    if (dim < 0 || dim >= jcn.n_fields) throw std::invalid_argument("field index out of range");

    std::vector<std::int32_t> local_of(jcn.node_count(), -1);
    std::vector<std::int32_t> scope(jcn_nodes.begin(), jcn_nodes.end());
    std::sort(scope.begin(), scope.end());
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(scope.size()); ++i)
        local_of[scope[i]] = i;

    UnionFind uf(static_cast<std::int32_t>(scope.size()));
    std::vector<std::pair<std::int32_t, std::int32_t>> crossing;  // local pairs
    for (const auto& [a, b] : jcn.edges) {
        const std::int32_t la = local_of[a], lb = local_of[b];
        if (la < 0 || lb < 0) continue;  // edge leaves the scope
        if (jcn.nodes[a].bin[dim] == jcn.nodes[b].bin[dim])
            uf.unite(la, lb);
        else
            crossing.emplace_back(la, lb);
    }

    // Class order: (active bin, smallest member JCN id).
    std::vector<std::int32_t> roots;
    std::vector<std::int32_t> first_member(scope.size(), -1);
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(scope.size()); ++i) {
        const std::int32_t r = uf.find(i);
        if (first_member[r] == -1) {
            first_member[r] = scope[i];
            roots.push_back(r);
        }
    }
    auto bin_of_root = [&](std::int32_t r) { return jcn.nodes[first_member[r]].bin[dim]; };
    std::sort(roots.begin(), roots.end(), [&](std::int32_t x, std::int32_t y) {
        if (bin_of_root(x) != bin_of_root(y)) return bin_of_root(x) < bin_of_root(y);
        return first_member[x] < first_member[y];
    });

    std::vector<std::int32_t> class_of(scope.size(), -1);
    for (std::int32_t k = 0; k < static_cast<std::int32_t>(roots.size()); ++k)
        class_of[roots[k]] = k;

    ReebGraphQ rg;
    rg.active_dim = dim;
    rg.nodes.resize(roots.size());
    for (std::int32_t k = 0; k < static_cast<std::int32_t>(roots.size()); ++k) {
        rg.nodes[k].id = k;
        rg.nodes[k].bin = bin_of_root(roots[k]);
    }
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(scope.size()); ++i)
        rg.nodes[class_of[uf.find(i)]].members.push_back(scope[i]);

    std::set<std::pair<std::int32_t, std::int32_t>> edge_set;
    for (const auto& [la, lb] : crossing) {
        const std::int32_t u = class_of[uf.find(la)];
        const std::int32_t v = class_of[uf.find(lb)];
        if (u == v) throw InternalError("reeb edge endpoints collapsed");
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    rg.edges.assign(edge_set.begin(), edge_set.end());
    return rg;
}

namespace {

struct Chain {
    std::vector<std::int32_t> interior;           // degree-<=2 nodes along the chain
    std::int32_t end_a = -1, end_b = -1;          // critical endpoints (-1 for cycles)
    std::int32_t adj_a = -1, adj_b = -1;          // chain node adjacent to each endpoint
    std::int32_t min_bin = 0;
    std::int32_t min_member = 0;

    std::pair<std::int32_t, std::int32_t> key() const { return {min_bin, min_member}; }
};

}  // namespace

std::vector<std::int32_t> branch_decompose(const ReebGraphQ& rg) {
    const auto n = static_cast<std::int32_t>(rg.nodes.size());
    std::vector<std::vector<std::int32_t>> adj(n);
    for (const auto& [a, b] : rg.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());

    auto is_critical = [&](std::int32_t v) { return adj[v].size() != 2; };

    auto chain_min = [&](Chain& c) {
        c.min_bin = std::numeric_limits<std::int32_t>::max();
        c.min_member = std::numeric_limits<std::int32_t>::max();
        auto absorb = [&](std::int32_t v) {
            if (v < 0) return;
            c.min_bin = std::min(c.min_bin, rg.nodes[v].bin);
            c.min_member = std::min(c.min_member, rg.nodes[v].members.front());
        };
        for (std::int32_t v : c.interior) absorb(v);
        absorb(c.end_a);
        absorb(c.end_b);
    };

    std::vector<Chain> chains;
    std::set<std::pair<std::int32_t, std::int32_t>> walked;  // directed edge marks
    auto mark = [&](std::int32_t u, std::int32_t v) { walked.insert({u, v}); };
    auto is_walked = [&](std::int32_t u, std::int32_t v) { return walked.count({u, v}) > 0; };

    // Chains between critical nodes.
    for (std::int32_t c = 0; c < n; ++c) {
        if (!is_critical(c)) continue;
        if (adj[c].empty()) {  // isolated node: a branch of its own
            Chain ch;
            ch.interior.push_back(c);
            chain_min(ch);
            chains.push_back(std::move(ch));
            continue;
        }
        for (std::int32_t first : adj[c]) {
            if (is_walked(c, first)) continue;
            Chain ch;
            ch.end_a = c;
            ch.adj_a = first;
            std::int32_t prev = c, cur = first;
            mark(prev, cur);
            while (!is_critical(cur)) {
                ch.interior.push_back(cur);
                const std::int32_t next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
                mark(cur, next);
                prev = cur;
                cur = next;
            }
            mark(cur, prev);  // block the reverse walk from the far endpoint
            ch.end_b = cur;
            ch.adj_b = prev;  // last interior node, or end_a on a single edge
            chain_min(ch);
            chains.push_back(std::move(ch));
        }
    }

    // Remaining unwalked regular nodes form pure cycles.
    std::vector<char> in_chain(n, 0);
    for (const auto& ch : chains)
        for (std::int32_t v : ch.interior) in_chain[v] = 1;
    for (std::int32_t v = 0; v < n; ++v) {
        if (is_critical(v) || in_chain[v]) continue;
        Chain ch;
        std::int32_t prev = -1, cur = v;
        do {
            ch.interior.push_back(cur);
            in_chain[cur] = 1;
            const std::int32_t next =
                (prev != -1 && adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        } while (cur != v);
        chain_min(ch);
        chains.push_back(std::move(ch));
    }

    // Attach each critical node to one incident chain: prefer chains
    // approaching from the lower-bin side, smallest chain key on ties.
    std::vector<std::int32_t> owner(n, -1);  // chain index per node
    for (size_t ci = 0; ci < chains.size(); ++ci)
        for (std::int32_t v : chains[ci].interior) owner[v] = static_cast<std::int32_t>(ci);

    for (std::int32_t c = 0; c < n; ++c) {
        if (!is_critical(c) || owner[c] != -1) continue;
        std::int32_t best = -1;
        bool best_from_below = false;
        auto consider = [&](std::int32_t ci, std::int32_t toward) {
            if (toward < 0) return;
            const bool from_below = rg.nodes[toward].bin < rg.nodes[c].bin;
            if (best == -1 || (from_below && !best_from_below) ||
                (from_below == best_from_below && chains[ci].key() < chains[best].key())) {
                best = ci;
                best_from_below = from_below;
            }
        };
        for (size_t ci = 0; ci < chains.size(); ++ci) {
            const Chain& ch = chains[ci];
            if (ch.end_a == c) consider(static_cast<std::int32_t>(ci), ch.adj_a);
            if (ch.end_b == c) consider(static_cast<std::int32_t>(ci), ch.adj_b);
        }
        if (best == -1) throw InternalError("critical node with no incident chain");
        owner[c] = best;
        chains[best].min_bin = std::min(chains[best].min_bin, rg.nodes[c].bin);
        chains[best].min_member =
            std::min(chains[best].min_member, rg.nodes[c].members.front());
    }

    // Renumber non-empty branches by (min bin, min member) of their final
    // membership.
    std::vector<std::pair<std::int32_t, std::int32_t>> keys(chains.size(),
                                                            {std::numeric_limits<std::int32_t>::max(),
                                                             std::numeric_limits<std::int32_t>::max()});
    for (std::int32_t v = 0; v < n; ++v) {
        auto& k = keys[owner[v]];
        k.first = std::min(k.first, rg.nodes[v].bin);
        k.second = std::min(k.second, rg.nodes[v].members.front());
    }
    std::vector<std::int32_t> order;
    for (std::int32_t ci = 0; ci < static_cast<std::int32_t>(chains.size()); ++ci)
        if (keys[ci].first != std::numeric_limits<std::int32_t>::max()) order.push_back(ci);
    std::sort(order.begin(), order.end(),
              [&](std::int32_t x, std::int32_t y) { return keys[x] < keys[y]; });
    std::vector<std::int32_t> branch_id(chains.size(), -1);
    for (std::int32_t r = 0; r < static_cast<std::int32_t>(order.size()); ++r)
        branch_id[order[r]] = r;

    std::vector<std::int32_t> out(n);
    for (std::int32_t v = 0; v < n; ++v) out[v] = branch_id[owner[v]];
    return out;
}

Mdrg build_mdrg(const JcnGraph& jcn) {
    Mdrg mdrg;
    mdrg.n_dims = jcn.n_fields;
    mdrg.graphs.resize(mdrg.n_dims);
    mdrg.node_refs.assign(mdrg.n_dims,
                          std::vector<Mdrg::NodeRef>(jcn.node_count()));
    mdrg.branch_members.resize(mdrg.n_dims);
    mdrg.child_graph.resize(mdrg.n_dims);

    std::vector<std::int32_t> all(jcn.node_count());
    for (std::int32_t i = 0; i < jcn.node_count(); ++i) all[i] = i;
    mdrg.graphs[0].push_back(quotient_reeb_graph(all, jcn, 0));

    for (int d = 0; d < mdrg.n_dims; ++d) {
        auto& layer = mdrg.graphs[d];
        mdrg.child_graph[d].resize(layer.size());
        std::int32_t branch_base = 0;
        for (std::int32_t gi = 0; gi < static_cast<std::int32_t>(layer.size()); ++gi) {
            const ReebGraphQ& rg = layer[gi];
            const auto branches = branch_decompose(rg);
            std::int32_t local_branches = 0;
            for (std::int32_t b : branches) local_branches = std::max(local_branches, b + 1);

            for (const auto& node : rg.nodes) {
                for (std::int32_t m : node.members) {
                    mdrg.node_refs[d][m] = {gi, node.id, branch_base + branches[node.id]};
                }
            }
            mdrg.branch_members[d].resize(branch_base + local_branches);
            for (const auto& node : rg.nodes) {
                auto& bucket = mdrg.branch_members[d][branch_base + branches[node.id]];
                bucket.insert(bucket.end(), node.members.begin(), node.members.end());
            }

            mdrg.child_graph[d][gi].assign(rg.nodes.size(), -1);
            if (d + 1 < mdrg.n_dims) {
                for (const auto& node : rg.nodes) {
                    mdrg.child_graph[d][gi][node.id] =
                        static_cast<std::int32_t>(mdrg.graphs[d + 1].size());
                    mdrg.graphs[d + 1].push_back(
                        quotient_reeb_graph(node.members, jcn, d + 1));
                }
            }
            branch_base += local_branches;
        }
    }

    for (auto& dim_buckets : mdrg.branch_members)
        for (auto& bucket : dim_buckets) std::sort(bucket.begin(), bucket.end());

    return mdrg;
}

}  // namespace mrs
