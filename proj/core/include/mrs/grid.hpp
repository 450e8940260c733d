#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace mrs {

/// Regular structured grid over a 2D or 3D box.  Vertices are indexed
/// row-major with the last axis varying fastest.
struct GridSpec {
    std::vector<int> dims;        // per axis, each >= 2; 2 or 3 axes
    std::vector<double> spacing;  // per axis, each > 0
    std::vector<double> origin;   // per axis

    int dimension() const { return static_cast<int>(dims.size()); }
    std::int64_t vertex_count() const;
    std::int64_t cell_count() const;

    /// Flat vertex index of an axis-coordinate tuple (last axis fastest).
    std::int64_t vertex_index(const int* coord) const;

    /// World coordinates of a grid vertex.
    std::array<double, 3> vertex_position(const int* coord) const;

    /// Throws std::invalid_argument when the spec is unusable.
    void validate() const;

    /// Unit spacing, zero origin.
    static GridSpec regular(std::vector<int> dims);
};

/// Simplicial decomposition of a structured grid: triangles in 2D,
/// tetrahedra in 3D.
struct SimplicialMesh {
    int dim = 0;                                         // domain dimension
    std::vector<std::array<double, 3>> vertices;         // world coordinates
    std::vector<std::array<std::int32_t, 4>> simplices;  // dim+1 entries used
    std::vector<double> simplex_measure;                 // area / volume
    double total_measure = 0.0;

    std::int64_t simplex_count() const { return static_cast<std::int64_t>(simplices.size()); }
};

/// Freudenthal (Kuhn) decomposition: 2 triangles per quad cell, 6 tetrahedra
/// per cube cell.  Every cell is cut with the same diagonal orientation, so
/// neighbouring simplices share their facets exactly.
SimplicialMesh triangulate(const GridSpec& grid);

}  // namespace mrs
