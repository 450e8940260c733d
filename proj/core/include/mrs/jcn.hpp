#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mrs/dataset.hpp"
#include "mrs/quantization.hpp"

namespace mrs {

/// How joint contours are extracted from the mesh.
///   fragment: exact convex clipping along quantization boundaries.
///   vertex:   whole simplices classified by their centroid bin (fast,
///             approximate; no sub-simplex geometry).
enum class BuildMode { fragment, vertex };

struct NodeAttrs {
    double volume = 0.0;        // fragment measure share of the whole mesh
    double range_measure = 1.0; // bin box share of the full range box
    int component_count = 1;    // nodes sharing this bin tuple at this level
    int degree = 0;
};

struct JcnNode {
    std::int32_t id = -1;
    std::vector<std::int32_t> bin;
    std::vector<std::uint32_t> fragment_ids;  // sorted, into JcnGraph::fragments
    NodeAttrs attrs;
    int level = 0;
};

/// Per-fragment bookkeeping kept with the graph: enough to re-identify a
/// fragment by (simplex, intra) and to aggregate volumes, without storing
/// geometry.
struct FragmentRecord {
    std::int64_t simplex = -1;
    std::int32_t intra = 0;
    double measure = 0.0;
};

/// Adjacency graph of joint contours at one quantization level.  Node ids
/// are assigned lexicographically by (bin tuple, smallest fragment id), so
/// identical inputs always produce identical graphs.
struct JcnGraph {
    int level = 0;
    int n_fields = 0;
    BuildMode mode = BuildMode::fragment;
    Quantization quant;
    std::vector<JcnNode> nodes;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;  // first < second, sorted
    double total_measure = 0.0;
    std::vector<FragmentRecord> fragments;

    std::int32_t node_count() const { return static_cast<std::int32_t>(nodes.size()); }
    std::vector<int> degrees() const;
};

JcnGraph build_jcn(const MultiFieldDataset& ds, int level, BuildMode mode = BuildMode::fragment);

/// Recomputes all node attributes in place from the graph structure, the
/// fragment table and the quantization.
void compute_attributes(JcnGraph& jcn, const MultiFieldDataset& ds);

}  // namespace mrs
