#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mrs/jcn.hpp"
#include "mrs/mdrg.hpp"
#include "mrs/mrs.hpp"

namespace mrs {

struct Weights;  // similarity.hpp

/// A matched node pair at one resolution level.  Matched nodes always share
/// their bin tuple, and no node appears in two pairs.
struct MatchPair {
    int level = 0;
    std::int32_t node_f = -1;
    std::int32_t node_g = -1;
};

/// Working state of the greedy matcher at one level: the MDRGs of both
/// sides, per-dimension branch labels (assigned once, never rewritten),
/// matched flags, and the accepted pairs of the previous level.
struct MatchContext {
    int level = 0;
    const JcnGraph* f = nullptr;
    const JcnGraph* g = nullptr;
    const Weights* weights = nullptr;
    Mdrg mdrg_f, mdrg_g;

    // labels_x[dim][node id]: -1 = unassigned.
    std::vector<std::vector<std::int64_t>> labels_f, labels_g;
    std::vector<char> matched_f, matched_g;
    std::vector<std::int64_t> next_label;  // per dimension

    // Previous-level pairs as a map (only consulted for level >= 1).
    std::map<std::int32_t, std::int32_t> prev_pairs;  // f parent id -> g parent id
    const std::vector<std::int32_t>* parents_f = nullptr;
    const std::vector<std::int32_t>* parents_g = nullptr;
};

MatchContext make_match_context(int level, const JcnGraph& f, const JcnGraph& g,
                                const Weights& w);

/// The four matching rules: both nodes unmatched, equal bin tuples, matched
/// parents (except at the coarsest level), and per-dimension branch-label
/// compatibility.
bool check_rules(std::int32_t m, std::int32_t n, const MatchContext& ctx);

/// After accepting a pair: per dimension, mint or copy the label and stamp
/// it onto every JCN node of the matched node's branch, on each side.
void propagate_labels(const MatchPair& pair, MatchContext& ctx);

/// Coarse-to-fine greedy matching over all levels: per level, f-side nodes
/// are visited by descending volume (ties by ascending id) and paired with
/// the rule-satisfying g-side candidate of maximal node similarity (ties by
/// ascending id).  Unmatched nodes contribute nothing.
std::vector<MatchPair> create_matching_pairs(const MrsStructure& f, const MrsStructure& g,
                                             const Weights& w);

}  // namespace mrs
