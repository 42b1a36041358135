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

#ifndef PUTLAB_MECHANISM_H_
#define PUTLAB_MECHANISM_H_

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "putlab/prior.h"
#include "putlab/product_space.h"

namespace putlab {

// A randomizing mechanism: one row-stochastic conditional distribution
// Q(y|x) per input point. The output alphabet defaults to the synthetic
// one (size_out == space size); loss evaluation accepts any width, while
// distortion requires the synthetic output.
class Mechanism {
 public:
  // Rows are renormalized once at construction. Throws std::invalid_argument
  // on ragged rows, entries below -1e-12, or a row mass further than 1e-6
  // from one.
  Mechanism(ProductSpace space_in, std::vector<std::vector<double>> rows);

  const ProductSpace& space_in() const { return space_in_; }
  std::int64_t size_in() const { return space_in_.size(); }
  std::int64_t size_out() const { return size_out_; }
  bool IsSquare() const { return size_out_ == space_in_.size(); }

  double operator()(std::int64_t x, std::int64_t y) const {
    return rows_[x][y];
  }
  const std::vector<double>& row(std::int64_t x) const { return rows_[x]; }

  nlohmann::json ToJson() const;
  static Mechanism FromJson(const nlohmann::json& j);

 private:
  ProductSpace space_in_;
  std::int64_t size_out_;
  std::vector<std::vector<double>> rows_;
};

// E_{P,Q}[d(X,Y)] = sum_x sum_y P(x) Q(y|x) d(x,y); in [0, n].
// Throws if P and Q disagree on the space or Q is not square.
double ExpectedDistortion(const Mechanism& q, const Prior& p);

// sum_y Q(y|x) d(x,y) for a single input point (the distortion seen by a
// point mass at x).
double RowDistortion(const Mechanism& q, std::int64_t x);

// Merges output column b into column a, dropping b. The resulting mechanism
// has one output symbol fewer; no privacy loss ever increases under this map.
Mechanism MergeOutputs(const Mechanism& q, std::int64_t a, std::int64_t b);

}  // namespace putlab

#endif  // PUTLAB_MECHANISM_H_
