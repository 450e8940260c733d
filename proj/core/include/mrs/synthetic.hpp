#pragma once

#include <cstdint>
#include <vector>

#include "mrs/dataset.hpp"

namespace mrs {

/// Bivariate (ring, height) field on a unit square: a Gaussian ridge along
/// a centered circle paired with the vertical coordinate.  At two bins per
/// field the joint contours are the ring band halves plus the split
/// inside/outside regions.
MultiFieldDataset gen_ring_height(int nx, int ny);

/// Scalar field whose level sets mimic the height function of a standing
/// double torus: two circular ridges side by side plus a slight vertical
/// tilt.
MultiFieldDataset gen_double_torus_height(int nx, int ny);

/// Seeded low-frequency trigonometric fields; smooth on coarse grids and
/// byte-reproducible per seed.  Supports 2 or 3 axes.
MultiFieldDataset gen_random_smooth(const std::vector<int>& dims, int n_fields,
                                    std::uint64_t seed);

/// Bivariate two-blob time series: the bridge between the blobs weakens
/// smoothly and collapses between steps split_step-1 and split_step, where
/// the high-bin joint contour splits in two.  All other steps drift mildly.
std::vector<MultiFieldDataset> gen_splitting_blobs(int nx, int ny, int steps, int split_step,
                                                   std::uint64_t seed);

}  // namespace mrs
