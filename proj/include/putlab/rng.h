// Copyright 2026 The Putlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PUTLAB_RNG_H_
#define PUTLAB_RNG_H_

#include <cstdint>
#include <random>

#include "putlab/prior.h"
#include "putlab/product_space.h"

namespace putlab {

// Deterministic sub-seed for trial `index` of run `seed`, so trials can be
// reordered or parallelized without changing results.
inline std::uint64_t SubSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Random full-support prior over m one-coordinate symbols, sorted
// non-increasing. Mixing with the uniform keeps the smallest probability
// at least floor/m, away from degenerate corners.
Prior RandomSortedPrior(std::mt19937_64& rng, int m, double floor = 0.2);

// Random row-stochastic square mechanism with strictly positive entries.
Mechanism RandomMechanism(std::mt19937_64& rng, const ProductSpace& space);

}  // namespace putlab

#endif  // PUTLAB_RNG_H_
