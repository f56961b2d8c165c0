/// @file grid.hpp
/// @brief Uniform 1-D cell-centered grid and 2nd-order derivative stencils.

#pragma once

#include <vector>

namespace bivel::core {

using Field = std::vector<double>;

enum class Boundary { periodic, reflective };

/// Uniform 1-D grid of cell centers x_i = (i + 1/2) dx, i = 0 .. n_cells-1.
struct Grid1D {
    int n_cells;
    double length;
    Boundary boundary;

    /// Validates n_cells >= 8 and length > 0; dx * n_cells == length by construction.
    static Grid1D make(int n_cells, double length, Boundary boundary = Boundary::periodic);

    double dx() const { return length / n_cells; }
    double center(int i) const { return (i + 0.5) * dx(); }
    Field centers() const;
};

/// 2nd-order first derivative of a cell-centered field.
///
/// Periodic grids wrap the central stencil; reflective grids fall back to
/// 2nd-order one-sided differences at the two boundary cells. The same
/// operator serves as the 1-D divergence of a cell-centered flux; on a
/// periodic grid the cell sum of the result telescopes to round-off, which is
/// what makes the conservative update exactly conservative.
Field gradient(const Grid1D& grid, const Field& f);

/// Convenience alias expressing intent when `f` is a flux.
inline Field divergence(const Grid1D& grid, const Field& flux) { return gradient(grid, flux); }

/// Cell sum times dx (midpoint quadrature).
double integrate(const Grid1D& grid, const Field& f);

/// Cell sum of |f| times dx.
double integrate_abs(const Grid1D& grid, const Field& f);

/// max_i |f_i|.
double max_abs(const Field& f);

} // namespace bivel::core
