#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mrs/dataset.hpp"

namespace mrs {

/// Nested dyadic quantization of the per-field ranges.  At level k each
/// non-degenerate field range is split into 2^k half-open bins
/// [x_j, x_{j+1}), the last bin closed above so the range maximum lands in
/// bin 2^k - 1.  Breakpoints are computed as min + j*(max-min)/2^k, which
/// makes level k-1 breakpoints bit-identical to every second level-k
/// breakpoint.
struct Quantization {
    int level = 0;
    std::vector<std::vector<double>> breakpoints;  // per field; 2^k + 1 values
    std::vector<bool> degenerate;                  // constant field -> single bin 0

    int n_fields() const { return static_cast<int>(breakpoints.size()); }
    int bin_count(int field) const;

    /// Bin of a value, by breakpoint binary search (not arithmetic
    /// division, so nesting is exact).
    std::int32_t bin_of(int field, double value) const;

    std::vector<std::int32_t> bin_tuple(std::span<const double> values) const;

    /// Width of one bin relative to the full field range; 1 for degenerate
    /// fields.
    double relative_bin_width(int field, std::int32_t bin) const;

    /// The level-(k-1) quantization: every second breakpoint.
    Quantization coarsened() const;
};

Quantization make_quantization(const MultiFieldDataset& ds, int level);

}  // namespace mrs
