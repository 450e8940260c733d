#include "mrs/dataset.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mrs/error.hpp"

namespace mrs {

MultiFieldDataset make_dataset(GridSpec grid, int n_fields, std::vector<double> samples) {
    grid.validate();
    if (n_fields < 1) throw std::invalid_argument("dataset must have at least one field");

    const std::int64_t nv = grid.vertex_count();
    const std::int64_t expected = nv * n_fields;
    if (static_cast<std::int64_t>(samples.size()) != expected)
        throw DataError("sample count mismatch: expected " + std::to_string(expected) +
                        " values (" + std::to_string(nv) + " vertices x " +
                        std::to_string(n_fields) + " fields), got " +
                        std::to_string(samples.size()));

    MultiFieldDataset ds;
    ds.grid = std::move(grid);
    ds.n_fields = n_fields;
    ds.samples = std::move(samples);

    ds.range_box.assign(n_fields, {std::numeric_limits<double>::infinity(),
                                   -std::numeric_limits<double>::infinity()});
    for (std::int64_t v = 0; v < nv; ++v) {
        for (int f = 0; f < n_fields; ++f) {
            const double x = ds.samples[v * n_fields + f];
            if (!std::isfinite(x))
                throw DataError("non-finite sample at vertex " + std::to_string(v) +
                                ", field " + std::to_string(f));
            ds.range_box[f][0] = std::min(ds.range_box[f][0], x);
            ds.range_box[f][1] = std::max(ds.range_box[f][1], x);
        }
    }

    ds.mesh = triangulate(ds.grid);
    return ds;
}

std::vector<double> evaluate(const MultiFieldDataset& ds, std::int64_t simplex,
                             std::span<const double> bary) {
    if (simplex < 0 || simplex >= ds.mesh.simplex_count())
        throw std::invalid_argument("simplex index out of range");
    const int nb = ds.mesh.dim + 1;
    if (static_cast<int>(bary.size()) != nb)
        throw std::invalid_argument("expected " + std::to_string(nb) +
                                    " barycentric coordinates");
    double sum = 0.0;
    for (double a : bary) {
        if (a < 0.0) throw std::invalid_argument("barycentric coordinate outside the simplex");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("barycentric coordinates must sum to 1");

    const auto& s = ds.mesh.simplices[simplex];
    std::vector<double> out(ds.n_fields, 0.0);
    for (int j = 0; j < nb; ++j)
        for (int f = 0; f < ds.n_fields; ++f) out[f] += bary[j] * ds.sample(s[j], f);
    return out;
}

}  // namespace mrs
