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

#ifndef CHESHIRE_FIT_HPP
#define CHESHIRE_FIT_HPP

#include <span>

namespace cheshire {

struct DataPoint {
  double x;
  double y;
};

struct FitResult {
  double slope;
  double intercept;
  /// Standard OLS slope error from the residual variance with n - 2 degrees
  /// of freedom; defined as 0 for n = 2 (no residual information).
  double slope_stderr;
  /// Residual sum of squares.
  double rss;
};

/// Weak-value readout of a fitted incidence-vs-time line: minus half the
/// slope, with the slope's standard error propagated the same way.
struct WeakValueEstimate {
  double value;
  double std_error;
};

/// Ordinary least squares y = intercept + slope * x.
/// Throws TooFewPoints for n < 2 and DegenerateAbscissa when all x coincide.
FitResult least_squares_line(std::span<const DataPoint> points);

/// Weighted least squares minimizing sum w_i (y_i - a - b x_i)^2. Weights
/// must be positive and one per point; intended use is inverse Poisson
/// variances. slope_stderr uses the standard WLS formula 1/sqrt(Sxx_w)
/// scaled by the weighted residual variance.
FitResult weighted_least_squares_line(std::span<const DataPoint> points,
                                      std::span<const double> weights);

/// value = -slope/2, std_error = slope_stderr/2.
WeakValueEstimate weak_value_estimate(const FitResult& f);

}  // namespace cheshire

#endif
