// Copyright 2026 The cheshire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cheshire/fit.hpp"

#include <cmath>
#include <stdexcept>

#include "cheshire/errors.hpp"

namespace cheshire {

namespace {

void check_points(std::span<const DataPoint> points) {
  if (points.size() < 2) {
    throw TooFewPoints("line fit needs at least 2 points");
  }
  bool distinct = false;
  for (const auto& p : points) {
    if (p.x != points[0].x) {
      distinct = true;
      break;
    }
  }
  if (!distinct) {
    throw DegenerateAbscissa("line fit needs at least 2 distinct x values");
  }
}

FitResult fit_with_weights(std::span<const DataPoint> points, const double* weights) {
  const std::size_t n = points.size();
  double wsum = 0.0, xbar = 0.0, ybar = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights ? weights[i] : 1.0;
    wsum += w;
    xbar += w * points[i].x;
    ybar += w * points[i].y;
  }
  xbar /= wsum;
  ybar /= wsum;

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights ? weights[i] : 1.0;
    const double dx = points[i].x - xbar;
    sxx += w * dx * dx;
    sxy += w * dx * (points[i].y - ybar);
  }

  const double slope = sxy / sxx;
  const double intercept = ybar - slope * xbar;

  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights ? weights[i] : 1.0;
    const double r = points[i].y - intercept - slope * points[i].x;
    rss += w * r * r;
  }

  const double stderr_slope = n > 2 ? std::sqrt(rss / (double(n) - 2) / sxx) : 0.0;
  return FitResult{slope, intercept, stderr_slope, rss};
}

}  // namespace

FitResult least_squares_line(std::span<const DataPoint> points) {
  check_points(points);
  return fit_with_weights(points, nullptr);
}

FitResult weighted_least_squares_line(std::span<const DataPoint> points,
                                      std::span<const double> weights) {
  check_points(points);
  if (weights.size() != points.size()) {
    throw std::invalid_argument("one weight per point required");
  }
  for (double w : weights) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("weights must be positive");
    }
  }
  return fit_with_weights(points, weights.data());
}

WeakValueEstimate weak_value_estimate(const FitResult& f) {
  return WeakValueEstimate{-f.slope / 2, f.slope_stderr / 2};
}

}  // namespace cheshire
