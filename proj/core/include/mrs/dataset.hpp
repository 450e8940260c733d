#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mrs/grid.hpp"

namespace mrs {

/// Vertex-sampled multi-field over a structured grid, together with the
/// derived simplicial mesh and the per-field value ranges.  Immutable after
/// construction.
struct MultiFieldDataset {
    GridSpec grid;
    int n_fields = 0;
    std::vector<double> samples;  // vertex-major: all fields of vertex 0, then vertex 1, ...
    SimplicialMesh mesh;
    std::vector<std::array<double, 2>> range_box;  // per field: [min, max]

    double sample(std::int64_t vertex, int field) const {
        return samples[vertex * n_fields + field];
    }
    std::int64_t vertex_count() const { return grid.vertex_count(); }
};

/// Validates the sample block (count, finiteness), triangulates the grid and
/// computes the range box.  Throws DataError naming the offending vertex and
/// field when a sample is non-finite.
MultiFieldDataset make_dataset(GridSpec grid, int n_fields, std::vector<double> samples);

/// Piecewise-linear evaluation at barycentric coordinates within a simplex.
/// Coordinates must be non-negative and sum to 1 (tolerance 1e-9).
std::vector<double> evaluate(const MultiFieldDataset& ds, std::int64_t simplex,
                             std::span<const double> bary);

}  // namespace mrs
