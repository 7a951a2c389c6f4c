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

#ifndef CHESHIRE_RNG_HPP
#define CHESHIRE_RNG_HPP

#include <cstdint>

namespace cheshire {

/// Deterministic random stream with a fixed, documented algorithm
/// (SplitMix64: 64-bit counter advanced by the golden-ratio increment,
/// output through a murmur-style finalizer). std::mt19937 would also be
/// portable, but distributions in <random> are not specified bit-for-bit
/// across standard libraries, so both the generator and the samplers built
/// on it live here. Identical seeds give identical streams on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed), seed_(seed) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double next_double();

  /// Independent stream derived from (seed, stream index); derivation does
  /// not consume from this stream, so children can be split off in any
  /// order and in parallel.
  Rng child(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

/// One Poisson(mean) draw. Exact inversion by sequential search below
/// mean 10; Hormann's PTRS transformed rejection above (constant expected
/// draws per sample at any mean). mean = 0 returns 0; negative mean throws.
std::uint64_t sample_poisson(Rng& rng, double mean);

}  // namespace cheshire

#endif
