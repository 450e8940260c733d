#include "mrs/quantization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mrs {

int Quantization::bin_count(int field) const {
    return degenerate[field] ? 1 : static_cast<int>(breakpoints[field].size()) - 1;
}

std::int32_t Quantization::bin_of(int field, double value) const {
    if (degenerate[field]) return 0;
    const auto& bp = breakpoints[field];
    // Last breakpoint <= value; the final interval is closed above.
    auto it = std::upper_bound(bp.begin(), bp.end(), value);
    auto idx = static_cast<std::int64_t>(it - bp.begin()) - 1;
    idx = std::clamp<std::int64_t>(idx, 0, static_cast<std::int64_t>(bp.size()) - 2);
    return static_cast<std::int32_t>(idx);
}

std::vector<std::int32_t> Quantization::bin_tuple(std::span<const double> values) const {
    std::vector<std::int32_t> bins(values.size());
    for (size_t f = 0; f < values.size(); ++f) bins[f] = bin_of(static_cast<int>(f), values[f]);
    return bins;
}

double Quantization::relative_bin_width(int field, std::int32_t bin) const {
    if (degenerate[field]) return 1.0;
    const auto& bp = breakpoints[field];
    return (bp[bin + 1] - bp[bin]) / (bp.back() - bp.front());
}

Quantization Quantization::coarsened() const {
    if (level < 1) throw std::invalid_argument("no coarser level below level 0");
    Quantization q;
    q.level = level - 1;
    q.degenerate = degenerate;
    q.breakpoints.resize(breakpoints.size());
    for (size_t f = 0; f < breakpoints.size(); ++f) {
        if (degenerate[f]) {
            q.breakpoints[f] = breakpoints[f];
            continue;
        }
        const auto& bp = breakpoints[f];
        auto& out = q.breakpoints[f];
        out.reserve((bp.size() - 1) / 2 + 1);
        for (size_t j = 0; j < bp.size(); j += 2) out.push_back(bp[j]);
    }
    return q;
}

Quantization make_quantization(const MultiFieldDataset& ds, int level) {
    if (level < 0) throw std::invalid_argument("quantization level must be >= 0");
    if (level > 24) throw std::invalid_argument("quantization level too large");

    Quantization q;
    q.level = level;
    q.breakpoints.resize(ds.n_fields);
    q.degenerate.resize(ds.n_fields);

    const std::int64_t nbins = std::int64_t{1} << level;
    for (int f = 0; f < ds.n_fields; ++f) {
        const double lo = ds.range_box[f][0], hi = ds.range_box[f][1];
        if (lo == hi) {
            q.degenerate[f] = true;
            q.breakpoints[f] = {lo, hi};
            continue;
        }
        q.degenerate[f] = false;
        auto& bp = q.breakpoints[f];
        bp.resize(nbins + 1);
        const double width = (hi - lo) / static_cast<double>(nbins);
        for (std::int64_t j = 0; j <= nbins; ++j) bp[j] = lo + static_cast<double>(j) * width;
        bp.front() = lo;
        bp.back() = hi;
    }
    return q;
}

}  // namespace mrs
