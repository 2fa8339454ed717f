#pragma once

#include <cmath>
#include <vector>

#include "distrig/errors.hpp"

namespace distrig {

struct LogLogFit {
  double slope = 0;
  double intercept = 0;
};

// Ordinary least squares of log(y) on log(x). Needs at least 3 points, all positive.
inline LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3) throw PreconditionError("log-log fit needs at least 3 (x, y) rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw PreconditionError("log-log fit needs positive values");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw PreconditionError("log-log fit needs at least two distinct sizes");
  LogLogFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

}  // namespace distrig
