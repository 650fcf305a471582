#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "modcrown/errors.hpp"

namespace modcrown {

/// Ordinary least-squares line y = slope * x + intercept, with RMS residual.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

inline LinearFit linear_fit(const std::vector<double>& xs,
                            const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw ShapeError("linear_fit: coordinate vectors differ in length");
  const std::size_t n = xs.size();
  if (n < 2) throw FitError("linear_fit: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double nd = static_cast<double>(n);
  const double det = nd * sxx - sx * sx;
  if (det == 0.0) throw FitError("linear_fit: degenerate abscissas");
  LinearFit f;
  f.slope = (nd * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / nd;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (f.slope * xs[i] + f.intercept);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / nd);
  return f;
}

}  // namespace modcrown
