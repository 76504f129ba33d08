// Copyright 2026 The aoa-pl Authors. All rights reserved.
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

#ifndef AOA_RNG_HPP_
#define AOA_RNG_HPP_

#include <cstdint>
#include <random>

namespace aoa {

// All sampling goes through an explicit handle of this engine. The 64-bit
// Mersenne Twister is fully specified by the standard, so a seed replays
// bit-exactly on every conforming implementation.
using Rng = std::mt19937_64;

// Independent streams of one episode seed.
enum class Stream : std::uint64_t {
  kEnvironment = 0,
  kPolicy = 1,
  kRelabel = 2,
};

// SplitMix64 finalizer over (seed, stream); used to derive decorrelated
// sub-seeds so that the environment and the policy never share a stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, Stream stream) {
  return Rng(derive_seed(seed, static_cast<std::uint64_t>(stream)));
}

// Uniform double in [0, 1) from the top 53 bits. Portable, unlike
// std::uniform_real_distribution whose algorithm is implementation-defined.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection; n > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

}  // namespace aoa

#endif  // AOA_RNG_HPP_
