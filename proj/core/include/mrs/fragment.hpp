#pragma once

#include <cstdint>
#include <vector>

#include "mrs/dataset.hpp"
#include "mrs/geometry.hpp"
#include "mrs/quantization.hpp"

namespace mrs {

/// One convex cell of a simplex partitioned along quantization boundaries.
/// Every interior point of the cell quantizes to `bins`.
struct Fragment {
    std::int64_t simplex = -1;
    std::int32_t intra = -1;         // rank within the simplex, lexicographic by bins
    std::vector<std::int32_t> bins;  // quantized value tuple
    double measure = 0.0;
    geom::Polytope poly;
};

/// Partitions one simplex into quantization cells by clipping it against
/// every interior breakpoint crossing the simplex's value range, field by
/// field.  Fragments are emitted in lexicographic bin order; degenerate
/// (zero-measure) cells are dropped.  The pool must contain the mesh
/// vertices of `ds` as its first handles (see make_mesh_pool).
std::vector<Fragment> fragment_simplex(std::int64_t simplex, const MultiFieldDataset& ds,
                                       const Quantization& quant, geom::PointPool& pool);

/// Convenience overload with a private pool (standalone / test use).
std::vector<Fragment> fragment_simplex(std::int64_t simplex, const MultiFieldDataset& ds,
                                       const Quantization& quant);

/// Pool seeded with all mesh vertices of the dataset, handle == vertex id.
geom::PointPool make_mesh_pool(const MultiFieldDataset& ds);

}  // namespace mrs
