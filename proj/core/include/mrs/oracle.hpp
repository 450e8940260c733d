#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mrs/dataset.hpp"

namespace mrs {

/// Brute-force component census, for cross-checking joint contour nets:
/// evaluates the PL multi-field on a dense regular lattice, bins every
/// sample, and flood-fills same-bin lattice neighbours (axis connectivity).
/// Independent of the clipping / union-find construction; the only shared
/// machinery is the quantization breakpoints.
///
/// `samples_per_cell` is the total sample count per grid cell and must be
/// at least 8^d.
std::map<std::vector<std::int32_t>, int> rasterized_component_oracle(
    const MultiFieldDataset& ds, int level, int samples_per_cell);

/// Direct PL evaluation at a world point (locates the Kuhn simplex from the
/// coordinate order inside the cell).  Used by the oracle and by tests.
std::vector<double> evaluate_at_point(const MultiFieldDataset& ds, const double* point);

}  // namespace mrs
