#include "mrs/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mrs {

std::int64_t GridSpec::vertex_count() const {
    std::int64_t n = 1;
    for (int d : dims) n *= d;
    return n;
}

std::int64_t GridSpec::cell_count() const {
    std::int64_t n = 1;
    for (int d : dims) n *= (d - 1);
    return n;
}

std::int64_t GridSpec::vertex_index(const int* coord) const {
    std::int64_t idx = 0;
    for (size_t a = 0; a < dims.size(); ++a) idx = idx * dims[a] + coord[a];
    return idx;
}

std::array<double, 3> GridSpec::vertex_position(const int* coord) const {
    std::array<double, 3> p{0.0, 0.0, 0.0};
    for (size_t a = 0; a < dims.size(); ++a) p[a] = origin[a] + spacing[a] * coord[a];
    return p;
}

void GridSpec::validate() const {
    if (dims.size() != 2 && dims.size() != 3)
        throw std::invalid_argument("GridSpec: expected 2 or 3 axes, got " +
                                    std::to_string(dims.size()));
    if (spacing.size() != dims.size() || origin.size() != dims.size())
        throw std::invalid_argument("GridSpec: spacing/origin arity does not match dims");
    for (size_t a = 0; a < dims.size(); ++a) {
        if (dims[a] < 2)
            throw std::invalid_argument("GridSpec: axis " + std::to_string(a) +
                                        " has dim " + std::to_string(dims[a]) + " (< 2)");
        if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a]))
            throw std::invalid_argument("GridSpec: axis " + std::to_string(a) +
                                        " has non-positive spacing");
        if (!std::isfinite(origin[a]))
            throw std::invalid_argument("GridSpec: axis " + std::to_string(a) +
                                        " has non-finite origin");
    }
}

GridSpec GridSpec::regular(std::vector<int> dims) {
    GridSpec g;
    g.dims = std::move(dims);
    g.spacing.assign(g.dims.size(), 1.0);
    g.origin.assign(g.dims.size(), 0.0);
    g.validate();
    return g;
}

namespace {

double triangle_area(const std::array<double, 3>& a, const std::array<double, 3>& b,
                     const std::array<double, 3>& c) {
    const double ux = b[0] - a[0], uy = b[1] - a[1];
    const double vx = c[0] - a[0], vy = c[1] - a[1];
    return 0.5 * std::abs(ux * vy - uy * vx);
}

double tet_volume(const std::array<double, 3>& a, const std::array<double, 3>& b,
                  const std::array<double, 3>& c, const std::array<double, 3>& d) {
    double u[3], v[3], w[3];
    for (int i = 0; i < 3; ++i) {
        u[i] = b[i] - a[i];
        v[i] = c[i] - a[i];
        w[i] = d[i] - a[i];
    }
    const double det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                       u[2] * (v[0] * w[1] - v[1] * w[0]);
    return std::abs(det) / 6.0;
}

}  // namespace

SimplicialMesh triangulate(const GridSpec& grid) {
    grid.validate();
    const int d = grid.dimension();

    SimplicialMesh mesh;
    mesh.dim = d;
    mesh.vertices.resize(grid.vertex_count());

    if (d == 2) {
        const int n0 = grid.dims[0], n1 = grid.dims[1];
        for (int i0 = 0; i0 < n0; ++i0)
            for (int i1 = 0; i1 < n1; ++i1) {
                const int c[2] = {i0, i1};
                mesh.vertices[grid.vertex_index(c)] = grid.vertex_position(c);
            }
        mesh.simplices.reserve(grid.cell_count() * 2);
        // Each quad is split along the (0,0)-(1,1) cell diagonal.  The two
        // triangles are the Kuhn simplices for axis orders (0,1) and (1,0).
        const int axis_orders[2][2] = {{0, 1}, {1, 0}};
        for (int i0 = 0; i0 + 1 < n0; ++i0)
            for (int i1 = 0; i1 + 1 < n1; ++i1) {
                for (const auto& order : axis_orders) {
                    std::array<std::int32_t, 4> s{};
                    int c[2] = {i0, i1};
                    s[0] = static_cast<std::int32_t>(grid.vertex_index(c));
                    for (int j = 0; j < 2; ++j) {
                        ++c[order[j]];
                        s[j + 1] = static_cast<std::int32_t>(grid.vertex_index(c));
                    }
                    s[3] = -1;
                    mesh.simplices.push_back(s);
                }
            }
        mesh.simplex_measure.reserve(mesh.simplices.size());
        for (const auto& s : mesh.simplices)
            mesh.simplex_measure.push_back(
                triangle_area(mesh.vertices[s[0]], mesh.vertices[s[1]], mesh.vertices[s[2]]));
    } else {
        const int n0 = grid.dims[0], n1 = grid.dims[1], n2 = grid.dims[2];
        for (int i0 = 0; i0 < n0; ++i0)
            for (int i1 = 0; i1 < n1; ++i1)
                for (int i2 = 0; i2 < n2; ++i2) {
                    const int c[3] = {i0, i1, i2};
                    mesh.vertices[grid.vertex_index(c)] = grid.vertex_position(c);
                }
        // Kuhn subdivision: one tetrahedron per permutation of the axes, all
        // sharing the main diagonal of the cell.
        const int axis_orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        mesh.simplices.reserve(grid.cell_count() * 6);
        for (int i0 = 0; i0 + 1 < n0; ++i0)
            for (int i1 = 0; i1 + 1 < n1; ++i1)
                for (int i2 = 0; i2 + 1 < n2; ++i2) {
                    for (const auto& order : axis_orders) {
                        std::array<std::int32_t, 4> s{};
                        int c[3] = {i0, i1, i2};
                        s[0] = static_cast<std::int32_t>(grid.vertex_index(c));
                        for (int j = 0; j < 3; ++j) {
                            ++c[order[j]];
                            s[j + 1] = static_cast<std::int32_t>(grid.vertex_index(c));
                        }
                        mesh.simplices.push_back(s);
                    }
                }
        mesh.simplex_measure.reserve(mesh.simplices.size());
        for (const auto& s : mesh.simplices)
            mesh.simplex_measure.push_back(tet_volume(mesh.vertices[s[0]], mesh.vertices[s[1]],
                                                      mesh.vertices[s[2]], mesh.vertices[s[3]]));
    }

    mesh.total_measure = std::accumulate(mesh.simplex_measure.begin(), mesh.simplex_measure.end(), 0.0);
    return mesh;
}

}  // namespace mrs
