#include "mrs/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mrs/quantization.hpp"

namespace mrs {

std::vector<double> evaluate_at_point(const MultiFieldDataset& ds, const double* point) {
    const int d = ds.grid.dimension();

    // Cell containing the point, clamped so boundary points stay inside.
    int cell[3] = {0, 0, 0};
    double local[3] = {0.0, 0.0, 0.0};
    for (int a = 0; a < d; ++a) {
        const double u = (point[a] - ds.grid.origin[a]) / ds.grid.spacing[a];
        int c = static_cast<int>(std::floor(u));
        c = std::clamp(c, 0, ds.grid.dims[a] - 2);
        cell[a] = c;
        local[a] = std::clamp(u - c, 0.0, 1.0);
    }

    // Kuhn simplex: axes sorted by descending local coordinate, ties by
    // axis index.  Barycentric weights follow from the sorted coordinates.
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.begin() + d, [&](int x, int y) {
        if (local[x] != local[y]) return local[x] > local[y];
        return x < y;
    });

    std::vector<double> out(ds.n_fields, 0.0);
    int corner[3] = {cell[0], cell[1], cell[2]};
    double prev = 1.0;
    for (int j = 0; j <= d; ++j) {
        const double cur = (j < d) ? local[order[j]] : 0.0;
        const double w = prev - cur;
        prev = cur;
        const std::int64_t v = ds.grid.vertex_index(corner);
        for (int f = 0; f < ds.n_fields; ++f) out[f] += w * ds.sample(v, f);
        if (j < d) ++corner[order[j]];
    }
    return out;
}

std::map<std::vector<std::int32_t>, int> rasterized_component_oracle(
    const MultiFieldDataset& ds, int level, int samples_per_cell) {
    const int d = ds.grid.dimension();
    const double min_spc = std::pow(8.0, d);
    if (samples_per_cell < static_cast<int>(min_spc))
        throw std::invalid_argument("oracle needs at least 8^d samples per cell");

    const int per_axis = std::max(
        8, static_cast<int>(std::ceil(std::pow(static_cast<double>(samples_per_cell), 1.0 / d))));

    const Quantization quant = make_quantization(ds, level);

    // Global sample lattice: per_axis samples per cell per axis, endpoints
    // included.
    int npts[3] = {1, 1, 1};
    std::int64_t total = 1;
    for (int a = 0; a < d; ++a) {
        npts[a] = (ds.grid.dims[a] - 1) * per_axis + 1;
        total *= npts[a];
    }

    auto flat = [&](const int* c) {
        std::int64_t idx = 0;
        for (int a = 0; a < d; ++a) idx = idx * npts[a] + c[a];
        return idx;
    };

    std::vector<std::int64_t> key(total);  // dense bin key per lattice point
    {
        std::vector<std::int64_t> strides(ds.n_fields, 1);
        for (int f = ds.n_fields - 2; f >= 0; --f)
            strides[f] = strides[f + 1] * quant.bin_count(f + 1);
        int c[3] = {0, 0, 0};
        double p[3] = {0.0, 0.0, 0.0};
        for (std::int64_t i = 0; i < total; ++i) {
            for (int a = 0; a < d; ++a)
                p[a] = ds.grid.origin[a] +
                       ds.grid.spacing[a] * (static_cast<double>(c[a]) / per_axis);
            const auto vals = evaluate_at_point(ds, p);
            std::int64_t k = 0;
            for (int f = 0; f < ds.n_fields; ++f) k += strides[f] * quant.bin_of(f, vals[f]);
            key[i] = k;
            for (int a = d - 1; a >= 0; --a) {
                if (++c[a] < npts[a]) break;
                c[a] = 0;
            }
        }
    }

    // Flood fill over axis neighbours with equal bin keys.
    std::map<std::vector<std::int32_t>, int> census;
    std::vector<char> seen(total, 0);
    std::vector<std::int64_t> stack;
    for (std::int64_t i = 0; i < total; ++i) {
        if (!seen[i]) {
            seen[i] = 1;
            stack.push_back(i);
            const std::int64_t k = key[i];
            while (!stack.empty()) {
                const std::int64_t cur = stack.back();
                stack.pop_back();
                // Decode lattice coordinates of cur.
                int cc[3] = {0, 0, 0};
                std::int64_t rem = cur;
                for (int a = d - 1; a >= 0; --a) {
                    cc[a] = static_cast<int>(rem % npts[a]);
                    rem /= npts[a];
                }
                for (int a = 0; a < d; ++a) {
                    for (int step = -1; step <= 1; step += 2) {
                        const int na = cc[a] + step;
                        if (na < 0 || na >= npts[a]) continue;
                        int nb[3] = {cc[0], cc[1], cc[2]};
                        nb[a] = na;
                        const std::int64_t ni = flat(nb);
                        if (!seen[ni] && key[ni] == k) {
                            seen[ni] = 1;
                            stack.push_back(ni);
                        }
                    }
                }
            }
            // Record one component for this bin tuple.
            std::vector<std::int32_t> bins(ds.n_fields);
            std::int64_t rem = k;
            for (int f = ds.n_fields - 1; f >= 0; --f) {
                bins[f] = static_cast<std::int32_t>(rem % quant.bin_count(f));
                rem /= quant.bin_count(f);
            }
            ++census[bins];
        }
    }
    return census;
}

}  // namespace mrs
