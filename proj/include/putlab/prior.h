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

#ifndef PUTLAB_PRIOR_H_
#define PUTLAB_PRIOR_H_

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "putlab/product_space.h"

namespace putlab {

inline constexpr double kProbabilityTolerance = 1e-12;

// A full-support input distribution over a product space. Entries are
// renormalized exactly once at construction and never mutated afterwards.
class Prior {
 public:
  // Throws std::invalid_argument on a length mismatch, a non-positive entry
  // (full support is a standing assumption), or a total mass further than
  // 1e-6 from one before renormalization.
  Prior(ProductSpace space, std::vector<double> probs);

  static Prior Uniform(const ProductSpace& space);

  const ProductSpace& space() const { return space_; }
  std::int64_t size() const { return space_.size(); }
  double operator[](std::int64_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  double MinProbability() const;
  double MaxProbability() const;
  bool IsUniform(double tol = 1e-12) const;
  // Non-increasing under the coordinate order as stored.
  bool IsSortedNonIncreasing() const;

  nlohmann::json ToJson() const;
  static Prior FromJson(const nlohmann::json& j);

 private:
  ProductSpace space_;
  std::vector<double> probs_;
};

// The prior sorted non-increasing, together with the permutation applied:
// sorted[i] = original[perm[i]]. Provided because the order-sensitive local
// closed forms refuse unsorted input rather than permuting silently.
struct SortedPrior {
  Prior prior;
  std::vector<std::int64_t> permutation;
};
SortedPrior SortWithPermutation(const Prior& prior);

}  // namespace putlab

#endif  // PUTLAB_PRIOR_H_
