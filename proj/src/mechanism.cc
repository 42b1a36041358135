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

#include "putlab/mechanism.h"

#include <cmath>
#include <stdexcept>

namespace putlab {

Mechanism::Mechanism(ProductSpace space_in,
                     std::vector<std::vector<double>> rows)
    : space_in_(space_in), rows_(std::move(rows)) {
  if (static_cast<std::int64_t>(rows_.size()) != space_in_.size()) {
    throw std::invalid_argument("row count does not match m^n");
  }
  if (rows_.empty() || rows_[0].empty()) {
    throw std::invalid_argument("mechanism needs at least one output symbol");
  }
  size_out_ = static_cast<std::int64_t>(rows_[0].size());
  for (auto& row : rows_) {
    if (static_cast<std::int64_t>(row.size()) != size_out_) {
      throw std::invalid_argument("ragged mechanism rows");
    }
    double sum = 0.0;
    for (double& v : row) {
      if (!std::isfinite(v) || v < -kProbabilityTolerance) {
        throw std::invalid_argument("mechanism entries must be in [0,1]");
      }
      if (v < 0.0) v = 0.0;
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
      throw std::invalid_argument("mechanism row mass is not close to one");
    }
    for (double& v : row) v /= sum;
  }
}

nlohmann::json Mechanism::ToJson() const {
  return nlohmann::json{
      {"m", space_in_.m()}, {"n", space_in_.n()}, {"rows", rows_}};
}

Mechanism Mechanism::FromJson(const nlohmann::json& j) {
  ProductSpace space(j.at("m").get<int>(), j.at("n").get<int>());
  return Mechanism(space, j.at("rows").get<std::vector<std::vector<double>>>());
}

double ExpectedDistortion(const Mechanism& q, const Prior& p) {
  if (!(q.space_in() == p.space())) {
    throw std::invalid_argument("prior and mechanism live on different spaces");
  }
  if (!q.IsSquare()) {
    throw std::invalid_argument(
        "distortion needs the output in the same universe as the input");
  }
  double total = 0.0;
  for (std::int64_t x = 0; x < q.size_in(); ++x) {
    total += p[x] * RowDistortion(q, x);
  }
  return total;
}

double RowDistortion(const Mechanism& q, std::int64_t x) {
  const ProductSpace& space = q.space_in();
  double row_total = 0.0;
  for (std::int64_t y = 0; y < q.size_out(); ++y) {
    const double v = q(x, y);
    if (v > 0.0) row_total += v * space.HammingDistance(x, y);
  }
  return row_total;
}

Mechanism MergeOutputs(const Mechanism& q, std::int64_t a, std::int64_t b) {
  if (a == b || a < 0 || b < 0 || a >= q.size_out() || b >= q.size_out()) {
    throw std::invalid_argument("merge needs two distinct output columns");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(q.size_in());
  for (std::int64_t x = 0; x < q.size_in(); ++x) {
    std::vector<double> row;
    row.reserve(q.size_out() - 1);
    for (std::int64_t y = 0; y < q.size_out(); ++y) {
      if (y == b) continue;
      row.push_back(y == a ? q(x, a) + q(x, b) : q(x, y));
    }
    rows.push_back(std::move(row));
  }
  return Mechanism(q.space_in(), std::move(rows));
}

}  // namespace putlab
