// Copyright 2026 The logcut developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <random>

namespace logcut::rng {

// SplitMix64 finalizer, used to spread raw seed material before it is fed
// into an engine so that nearby seeds give unrelated streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Key for one work item, mixed from (seed, salts...). Salt order matters.
constexpr std::uint64_t derive_key(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> salts) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t s : salts) h = splitmix64(h ^ s);
  return h;
}

// Child engine for one work item. Every stochastic routine draws from a
// stream keyed by (seed, salts...) so that results do not depend on thread
// count or evaluation order.
inline std::mt19937_64 derive_stream(std::uint64_t seed,
                                     std::initializer_list<std::uint64_t> salts) {
  return std::mt19937_64{derive_key(seed, salts)};
}

// Uniform double in [0, 1) built from the top 53 bits of one engine output.
// The standard distributions are implementation defined, so results would
// not be reproducible across standard libraries; this mapping is fixed.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

// Unbiased index in [0, n) by rejection on the top bits.
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v = gen();
  while (v >= limit) v = gen();
  return v % n;
}

// Standard normal via Box-Muller, again to stay reproducible across
// standard library implementations.
inline double normal(std::mt19937_64& gen) {
  const double u1 = 1.0 - uniform01(gen);
  const double u2 = uniform01(gen);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace logcut::rng
