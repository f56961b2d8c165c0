#include "bivel/core/grid.hpp"

#include <cmath>
#include <string>

#include "bivel/core/errors.hpp"

namespace bivel::core {

Grid1D Grid1D::make(int n_cells, double length, Boundary boundary) {
    if (n_cells < 8) {
        throw ValidationError("Grid1D: need at least 8 cells, got " + std::to_string(n_cells));
    }
    if (!(length > 0.0)) {
        throw ValidationError("Grid1D: length must be positive");
    }
    return Grid1D{n_cells, length, boundary};
}

Field Grid1D::centers() const {
    Field x(static_cast<size_t>(n_cells));
    for (int i = 0; i < n_cells; ++i) {
        x[static_cast<size_t>(i)] = center(i);
    }
    return x;
}

Field gradient(const Grid1D& grid, const Field& f) {
    const int n = grid.n_cells;
    const double inv2dx = 1.0 / (2.0 * grid.dx());
    Field g(static_cast<size_t>(n));
    for (int i = 1; i + 1 < n; ++i) {
        g[i] = (f[i + 1] - f[i - 1]) * inv2dx;
    }
    if (grid.boundary == Boundary::periodic) {
        g[0] = (f[1] - f[n - 1]) * inv2dx;
        g[n - 1] = (f[0] - f[n - 2]) * inv2dx;
    } else {
        // 2nd-order one-sided stencils at the walls.
        g[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2dx;
        g[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2dx;
    }
    return g;
}

double integrate(const Grid1D& grid, const Field& f) {
    double sum = 0.0;
    for (double v : f) {
        sum += v;
    }
    return sum * grid.dx();
}

double integrate_abs(const Grid1D& grid, const Field& f) {
    double sum = 0.0;
    for (double v : f) {
        sum += std::abs(v);
    }
    return sum * grid.dx();
}

double max_abs(const Field& f) {
    double m = 0.0;
    for (double v : f) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

} // namespace bivel::core
