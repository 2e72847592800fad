// Copyright 2026 The mapc-csr Authors.
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

#ifndef MAPC_RNG_HPP_
#define MAPC_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace mapc {

// Every random draw in the library goes through an explicitly passed Rng;
// there is no global generator. The helpers below consume raw 64-bit words
// so results do not depend on the standard library's distribution
// implementations.
using Rng = std::mt19937_64;

// SplitMix64 finalizer applied to (seed, stream): independent, reproducible
// sub-stream seeds for per-AP / per-instance generators.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng& rng);

double uniform_real(Rng& rng, double lo, double hi);

// Uniform integer in [0, n). n must be positive.
std::size_t uniform_index(Rng& rng, std::size_t n);

template <typename RandomIt>
void shuffle(RandomIt first, RandomIt last, Rng& rng) {
  const auto n = static_cast<std::size_t>(last - first);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t k = uniform_index(rng, i);
    std::swap(first[static_cast<std::ptrdiff_t>(i - 1)],
              first[static_cast<std::ptrdiff_t>(k)]);
  }
}

}  // namespace mapc

#endif  // MAPC_RNG_HPP_
