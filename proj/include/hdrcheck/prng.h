/*
 * Copyright 2026 The hdrcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HDRCHECK_PRNG_H
#define HDRCHECK_PRNG_H

#include <cstdint>
#include <optional>
#include <string_view>

namespace hdrcheck {

// Reproducible random streams. The algorithms are fixed (see
// docs/prng.md) so fixtures can be regenerated in any language:
//
//   seeding:  four successive SplitMix64 outputs from the 64-bit seed
//   core:     xoshiro256** 1.0
//   bounded:  rejection sampling, reject r < (2^64 - n) mod n, return r mod n
//   uniform:  (next() >> 11) * 2^-53
//   gaussian: Box-Muller on u1 = ((next() >> 11) + 1) * 2^-53 and u2 = uniform(),
//             cosine branch first, sine branch cached for the next call

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  static constexpr const char* kAlgorithm = "xoshiro256**-1.0/splitmix64";

  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t bounded(std::uint64_t n);
  // Uniform double in [0, 1).
  double uniform();
  // Standard normal deviate.
  double gaussian();

 private:
  std::uint64_t s_[4];
  std::optional<double> spare_;
};

// Named sub-seed: SplitMix64(seed ^ FNV-1a-64(name)).next().
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name);

}  // namespace hdrcheck

#endif  // HDRCHECK_PRNG_H
