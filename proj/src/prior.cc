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

#include "putlab/prior.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace putlab {

Prior::Prior(ProductSpace space, std::vector<double> probs)
    : space_(space), probs_(std::move(probs)) {
  if (static_cast<std::int64_t>(probs_.size()) != space_.size()) {
    throw std::invalid_argument("prior length does not match m^n");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument(
          "priors must have full support (every entry strictly positive)");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw std::invalid_argument("prior mass is not close to one");
  }
  for (double& p : probs_) p /= sum;
}

Prior Prior::Uniform(const ProductSpace& space) {
  return Prior(space, std::vector<double>(
                          space.size(), 1.0 / static_cast<double>(space.size())));
}

double Prior::MinProbability() const {
  return *std::min_element(probs_.begin(), probs_.end());
}

double Prior::MaxProbability() const {
  return *std::max_element(probs_.begin(), probs_.end());
}

bool Prior::IsUniform(double tol) const {
  const double u = 1.0 / static_cast<double>(size());
  for (double p : probs_) {
    if (std::abs(p - u) > tol) return false;
  }
  return true;
}

bool Prior::IsSortedNonIncreasing() const {
  for (size_t i = 1; i < probs_.size(); ++i) {
    if (probs_[i] > probs_[i - 1] + kProbabilityTolerance) return false;
  }
  return true;
}

nlohmann::json Prior::ToJson() const {
  return nlohmann::json{
      {"m", space_.m()}, {"n", space_.n()}, {"probs", probs_}};
}

Prior Prior::FromJson(const nlohmann::json& j) {
  ProductSpace space(j.at("m").get<int>(), j.at("n").get<int>());
  return Prior(space, j.at("probs").get<std::vector<double>>());
}

SortedPrior SortWithPermutation(const Prior& prior) {
  std::vector<std::int64_t> perm(prior.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::int64_t a, std::int64_t b) {
                     return prior[a] > prior[b];
                   });
  std::vector<double> sorted(prior.size());
  for (std::int64_t i = 0; i < prior.size(); ++i) sorted[i] = prior[perm[i]];
  return SortedPrior{Prior(prior.space(), std::move(sorted)), std::move(perm)};
}

}  // namespace putlab
