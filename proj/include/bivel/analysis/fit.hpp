/// @file fit.hpp
/// @brief Least-squares line fits for scaling and convergence studies.

#pragma once

#include <vector>

namespace bivel::analysis {

/// Result of a least-squares straight-line fit y = slope * x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

/// Fits a straight line through (x, y) pairs; requires at least two points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Fits log(y) against log(x); requires positive x and y. The slope is the
/// power-law exponent of y ~ x^slope.
LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Observed order of accuracy from per-resolution error norms: the slope of
/// log(error) against log(1/cells). Requires positive errors; a sequence of
/// errors at or below round-off cannot support a fit and raises an error.
double fit_convergence_order(const std::vector<double>& cells,
                             const std::vector<double>& errors);

}  // namespace bivel::analysis
