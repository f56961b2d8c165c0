/// @file fit.cpp
/// @brief Least-squares line fits for scaling and convergence studies.

#include "bivel/analysis/fit.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "bivel/core/errors.hpp"

namespace bivel::analysis {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw core::ValidationError("fit_line: x and y sizes differ");
  }
  if (x.size() < 2) {
    throw core::ValidationError("fit_line: need at least two points, got " +
                                std::to_string(x.size()));
  }
  const auto n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) {
    throw core::ValidationError("fit_line: abscissae are all identical");
  }
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw core::ValidationError("fit_loglog: x and y sizes differ");
  }
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw core::ValidationError(
          "fit_loglog: nonpositive value at point " + std::to_string(i));
    }
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return fit_line(lx, ly);
}

double fit_convergence_order(const std::vector<double>& cells,
                             const std::vector<double>& errors) {
  std::vector<double> h(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!(cells[i] > 0.0)) {
      throw core::ValidationError("fit_convergence_order: cells must be positive");
    }
    h[i] = 1.0 / cells[i];
  }
  return fit_loglog(h, errors).slope;
}

}  // namespace bivel::analysis
