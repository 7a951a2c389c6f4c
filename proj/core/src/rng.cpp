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

#include "cheshire/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace cheshire {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::next_double() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

Rng Rng::child(std::uint64_t stream) const {
  // stream -> seed + golden*(stream+1) is injective, and mix64 is a
  // bijection, so distinct stream indices always get distinct child seeds.
  return Rng(mix64(seed_ + kGolden * (stream + 1)));
}

namespace {

// Inversion by sequential search: one uniform, walk the cdf. Fine for small
// means; the loop length grows linearly with the mean.
std::uint64_t poisson_inversion(Rng& rng, double mean) {
  const double u = rng.next_double();
  double p = std::exp(-mean);
  double cdf = p;
  std::uint64_t k = 0;
  while (u > cdf) {
    ++k;
    p *= mean / double(k);
    cdf += p;
  }
  return k;
}

// Hormann's PTRS transformed rejection (W. Hormann, "The transformed
// rejection method for generating Poisson random variables", 1993). Expected
// uniforms per draw is below 2.5 for every mean >= 10.
std::uint64_t poisson_ptrs(Rng& rng, double mean) {
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);

  for (;;) {
    const double u = rng.next_double() - 0.5;
    const double v = rng.next_double();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) {
      return std::uint64_t(kf);
    }
    if (kf < 0.0 || (us < 0.013 && v > us)) {
      continue;
    }
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        kf * log_mean - mean - std::lgamma(kf + 1.0)) {
      return std::uint64_t(kf);
    }
  }
}

}  // namespace

std::uint64_t sample_poisson(Rng& rng, double mean) {
  if (mean < 0.0 || !std::isfinite(mean)) {
    throw std::domain_error("Poisson mean must be finite and non-negative");
  }
  if (mean == 0.0) {
    return 0;
  }
  return mean < 10.0 ? poisson_inversion(rng, mean) : poisson_ptrs(rng, mean);
}

}  // namespace cheshire
