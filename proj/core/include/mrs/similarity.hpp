#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mrs/jcn.hpp"
#include "mrs/matching.hpp"
#include "mrs/mrs.hpp"

namespace mrs {

/// Attribute weights of the node similarity functional.  Each weight lies
/// in [0, 1] and the four must sum to 1.
struct Weights {
    double volume = 0.25;
    double range = 0.25;
    double b0 = 0.25;
    double degree = 0.25;

    void validate() const;  // throws std::invalid_argument

    static Weights equal() { return {0.25, 0.25, 0.25, 0.25}; }
    static Weights volume_only() { return {1, 0, 0, 0}; }
    static Weights range_only() { return {0, 1, 0, 0}; }
    static Weights b0_only() { return {0, 0, 1, 0}; }
    static Weights degree_only() { return {0, 0, 0, 1}; }

    /// Preset by name (equal|volume|range|b0|degree), or std::nullopt.
    static std::optional<Weights> preset(std::string_view name);

    /// Preset name or "w1,w2,w3,w4".
    static Weights parse(const std::string& text);
};

/// min/max ratio in [0, 1]; two zeros count as identical (ratio 1).
/// Negative inputs are rejected.
double ratio(double r1, double r2);

/// Weighted attribute similarity of two nodes, in [0, 1]; 1 exactly for
/// identical attributes.
double node_similarity(const NodeAttrs& a, const NodeAttrs& b, const Weights& w);

/// Volume-weighted sum of pair similarities over the matched pairs of one
/// level; 0 for an empty list, 1 for a complete self-match.
double level_similarity(std::span<const MatchPair> pairs, const JcnGraph& f, const JcnGraph& g,
                        const Weights& w);

/// Mean of the per-level similarities.
double mrs_similarity(std::span<const double> level_values);

struct SimilarityReport {
    Weights weights;
    struct Level {
        int k = 0;
        double phi = 0.0;
        int pair_count = 0;
    };
    std::vector<Level> levels;
    std::vector<MatchPair> pairs;
    std::vector<double> pair_phi;  // parallel to pairs
    double phi_bar = 0.0;
    bool symmetrized = false;
    double phi_bar_fg = 0.0;  // forward / reverse scores when symmetrized
    double phi_bar_gf = 0.0;
};

/// End-to-end comparison: match the two structures, evaluate the level and
/// overall similarities.  With `symmetrize`, the reverse-direction score is
/// averaged into phi_bar (the pair table stays forward).
SimilarityReport compare_mrs(const MrsStructure& f, const MrsStructure& g, const Weights& w,
                             bool symmetrize = false);

}  // namespace mrs
