#include "mrs/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mrs {

namespace {

constexpr double kPi = std::numbers::pi;

double gauss2(double x, double y, double cx, double cy, double sigma) {
    const double dx = x - cx, dy = y - cy;
    return std::exp(-(dx * dx + dy * dy) / (sigma * sigma));
}

// Fills a 2D dataset from a callable over unit-square coordinates.
template <typename Fn>
MultiFieldDataset fill2(int nx, int ny, int n_fields, Fn&& fn) {
    GridSpec grid = GridSpec::regular({nx, ny});
    std::vector<double> samples(static_cast<size_t>(nx) * ny * n_fields);
    for (int i = 0; i < nx; ++i) {
        const double x = static_cast<double>(i) / (nx - 1);
        for (int j = 0; j < ny; ++j) {
            const double y = static_cast<double>(j) / (ny - 1);
            const int c[2] = {i, j};
            const std::int64_t v = grid.vertex_index(c);
            fn(x, y, &samples[v * n_fields]);
        }
    }
    return make_dataset(std::move(grid), n_fields, std::move(samples));
}

}  // namespace

MultiFieldDataset gen_ring_height(int nx, int ny) {
    if (nx < 8 || ny < 8) throw std::invalid_argument("ring-height needs at least an 8x8 grid");
    const double R = 0.3, sigma = 0.1;
    return fill2(nx, ny, 2, [&](double x, double y, double* out) {
        const double r = std::sqrt((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5));
        out[0] = std::exp(-((r - R) / sigma) * ((r - R) / sigma));
        out[1] = y;
    });
}

MultiFieldDataset gen_double_torus_height(int nx, int ny) {
    if (nx < 16 || ny < 16)
        throw std::invalid_argument("double-torus-height needs at least a 16x16 grid");
    const double R = 0.14, sigma = 0.06;
    return fill2(nx, ny, 1, [&](double x, double y, double* out) {
        const double r1 = std::sqrt((x - 0.3) * (x - 0.3) + (y - 0.5) * (y - 0.5));
        const double r2 = std::sqrt((x - 0.7) * (x - 0.7) + (y - 0.5) * (y - 0.5));
        out[0] = std::exp(-((r1 - R) / sigma) * ((r1 - R) / sigma)) +
                 std::exp(-((r2 - R) / sigma) * ((r2 - R) / sigma)) + 0.05 * y;
    });
}

MultiFieldDataset gen_random_smooth(const std::vector<int>& dims, int n_fields,
                                    std::uint64_t seed) {
    GridSpec grid = GridSpec::regular(dims);
    const int d = grid.dimension();
    const std::int64_t nv = grid.vertex_count();
    std::vector<double> samples(nv * n_fields);

    constexpr int kModes = 4;
    struct Mode {
        double amp, phase;
        double freq[3];
    };
    std::vector<Mode> modes(static_cast<size_t>(n_fields) * kModes);
    for (int f = 0; f < n_fields; ++f) {
        std::mt19937_64 rng(seed * 1000003ull + static_cast<std::uint64_t>(f) + 1);
        std::uniform_real_distribution<double> amp(0.3, 1.0);
        std::uniform_real_distribution<double> freq(0.4, 1.2);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
        for (int m = 0; m < kModes; ++m) {
            Mode& md = modes[f * kModes + m];
            md.amp = amp(rng);
            md.phase = phase(rng);
            for (int a = 0; a < 3; ++a) md.freq[a] = (a < d) ? freq(rng) : 0.0;
        }
    }

    int c[3] = {0, 0, 0};
    for (std::int64_t v = 0; v < nv; ++v) {
        double u[3] = {0.0, 0.0, 0.0};
        for (int a = 0; a < d; ++a) u[a] = static_cast<double>(c[a]) / (dims[a] - 1);
        for (int f = 0; f < n_fields; ++f) {
            double acc = 0.0;
            for (int m = 0; m < kModes; ++m) {
                const Mode& md = modes[f * kModes + m];
                double arg = md.phase;
                for (int a = 0; a < d; ++a) arg += 2.0 * kPi * md.freq[a] * u[a];
                acc += md.amp * std::cos(arg);
            }
            samples[v * n_fields + f] = acc;
        }
        for (int a = d - 1; a >= 0; --a) {
            if (++c[a] < dims[a]) break;
            c[a] = 0;
        }
    }
    return make_dataset(std::move(grid), n_fields, std::move(samples));
}

std::vector<MultiFieldDataset> gen_splitting_blobs(int nx, int ny, int steps, int split_step,
                                                   std::uint64_t seed) {
    if (steps < 2) throw std::invalid_argument("a series needs at least 2 steps");
    if (split_step < 1 || split_step >= steps)
        throw std::invalid_argument("split step must lie within the series");
    if (nx < 12 || ny < 12)
        throw std::invalid_argument("splitting-blobs needs at least a 12x12 grid");

    // Per-seed jitter stays small so the bridge collapse (the only
    // topological event) always falls between split_step-1 and split_step.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const double jx = 0.015 * uni(rng);
    const double jy = 0.015 * uni(rng);
    const double jsigma = 1.0 + 0.08 * uni(rng);
    const double jh = 0.02 * uni(rng);
    const double drift_rate = 0.003 + 0.001 * uni(rng);

    const double sep = 0.36;
    const double sigma1 = 0.11 * jsigma;
    const double sigma2 = 0.12 * jsigma;
    const double bw_x = 0.12, bw_y = 0.055;

    std::vector<MultiFieldDataset> series;
    series.reserve(steps);
    for (int t = 0; t < steps; ++t) {
        // Bridge height: a gentle decline, then the collapse at the split.
        const double h = (t < split_step) ? 0.62 - 0.018 * t + jh
                                          : 0.25 - 0.018 * (t - split_step) + jh;
        const double dy = drift_rate * t;
        const double cx1 = 0.5 - sep / 2 + jx, cx2 = 0.5 + sep / 2 + jx;
        const double cy = 0.5 + jy + dy;

        series.push_back(fill2(nx, ny, 2, [&](double x, double y, double* out) {
            const double bridge =
                std::exp(-((x - 0.5 - jx) / bw_x) * ((x - 0.5 - jx) / bw_x) -
                         ((y - cy) / bw_y) * ((y - cy) / bw_y));
            out[0] = gauss2(x, y, cx1, cy, sigma1) + gauss2(x, y, cx2, cy, sigma1) + h * bridge;
            out[1] = gauss2(x, y, cx1, cy, sigma2) + gauss2(x, y, cx2, cy, sigma2) +
                     std::max(h - 0.1, 0.0) * bridge;
        }));
    }
    return series;
}

}  // namespace mrs
