#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mrs/jcn.hpp"

namespace mrs {

/// Node of a quantized Reeb graph: a maximal set of JCN nodes sharing one
/// bin of the active field and connected through equal-bin JCN edges.
struct ReebNode {
    std::int32_t id = -1;
    std::int32_t bin = 0;                  // active-field bin
    std::vector<std::int32_t> members;     // JCN node ids, ascending
};

struct ReebGraphQ {
    int active_dim = 0;
    std::vector<ReebNode> nodes;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;  // first < second, sorted

    std::vector<int> degrees() const;
};

/// Quotient of a JCN node subset by the active field: union-find over edges
/// whose endpoints share the active-field bin, Reeb edges wherever an edge
/// crosses bins.
ReebGraphQ quotient_reeb_graph(std::span<const std::int32_t> jcn_nodes, const JcnGraph& jcn,
                               int dim);

/// Branch ids per Reeb node.  Branches are maximal chains of degree-<=2
/// nodes between critical nodes (degree 1 or >= 3); a critical node joins
/// the incident branch approaching from its lower-bin side (smallest branch
/// key on ties, any incident branch when no lower side exists).  Cycles
/// without critical nodes form a single branch.  Ids are ordered by
/// (minimum bin, minimum member JCN node id) of the branch.
std::vector<std::int32_t> branch_decompose(const ReebGraphQ& rg);

/// Hierarchical decomposition of a JCN into Reeb graphs, one dimension at a
/// time: dimension 0 covers the whole JCN; every Reeb node is then
/// decomposed by the next field.  Each JCN node belongs to exactly one Reeb
/// node and one branch per dimension.
struct Mdrg {
    int n_dims = 0;

    // graphs[d]: all Reeb graphs of dimension d, in construction order.
    std::vector<std::vector<ReebGraphQ>> graphs;

    struct NodeRef {
        std::int32_t graph = -1;   // index into graphs[d]
        std::int32_t node = -1;    // Reeb node id within that graph
        std::int32_t branch = -1;  // dimension-wide branch id
    };
    // node_refs[d][jcn node id]
    std::vector<std::vector<NodeRef>> node_refs;

    // branch_members[d][branch id] = JCN node ids carrying that branch.
    std::vector<std::vector<std::vector<std::int32_t>>> branch_members;

    // child_graph[d][graph][reeb node] = graph index at dimension d+1
    // (-1 at the last dimension).
    std::vector<std::vector<std::vector<std::int32_t>>> child_graph;
};

Mdrg build_mdrg(const JcnGraph& jcn);

}  // namespace mrs
