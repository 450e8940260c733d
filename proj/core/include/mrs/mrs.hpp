#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mrs/jcn.hpp"

namespace mrs {

/// Multi-resolution Reeb space: joint contour nets at dyadic quantization
/// levels 0 .. N-1 plus parent maps between consecutive levels.  Every level
/// below the finest is derived by range merging, so all levels share the
/// finest level's fragment table.
struct MrsStructure {
    int n_levels = 0;
    std::vector<JcnGraph> jcns;  // index k = level k
    // parent_map[k][child node id] = parent node id at level k-1; defined
    // for k >= 1, parent_map[0] stays empty.
    std::vector<std::vector<std::int32_t>> parent_map;
    std::shared_ptr<const MultiFieldDataset> dataset;
};

/// Range merging for a coarser resolution: halves every bin interval pair,
/// unions fine nodes connected inside each merged bin box, and projects the
/// edges.  Returns the coarser graph and the child-to-parent map.
std::pair<JcnGraph, std::vector<std::int32_t>> create_coarser_reeb_space(const JcnGraph& fine);

/// Builds the finest JCN directly, then derives every coarser level.
MrsStructure build_mrs(std::shared_ptr<const MultiFieldDataset> dataset, int n_levels,
                       BuildMode mode = BuildMode::fragment);

struct NestingReport {
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Structural audit of a multi-resolution Reeb space: parent-map totality
/// and surjectivity, bin halving, volume aggregation, and per-level
/// isomorphism of the derived graphs against direct builds.
NestingReport verify_nesting(const MrsStructure& mrs);

/// Tests whether `derived` (a graph produced by range merging, carrying the
/// fine fragment table) is isomorphic to `direct` (a direct build at the
/// same level): bijective nodes with equal bins, volumes within rel_tol,
/// and identical edge relations under the correspondence.  The node
/// correspondence is fixed by fragment containment, so the check is exact.
bool jcn_isomorphic(const JcnGraph& derived, const JcnGraph& direct, double rel_tol = 1e-9,
                    std::string* why = nullptr);

}  // namespace mrs
