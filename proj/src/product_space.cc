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

#include "putlab/product_space.h"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace putlab {

namespace {
std::atomic<std::int64_t> g_enumeration_cap{kDefaultEnumerationCap};
}  // namespace

std::int64_t EnumerationCap() { return g_enumeration_cap.load(); }

void SetEnumerationCap(std::int64_t cap) {
  if (cap < 2) {
    throw std::invalid_argument("enumeration cap must be at least 2");
  }
  g_enumeration_cap.store(cap);
}

ProductSpace::ProductSpace(int m, int n) : m_(m), n_(n) {
  if (m < 2) {
    throw std::invalid_argument("alphabet size m must be at least 2");
  }
  if (n < 1) {
    throw std::invalid_argument("coordinate count n must be at least 1");
  }
  const std::int64_t cap = EnumerationCap();
  std::int64_t size = 1;
  powers_.reserve(n + 1);
  powers_.push_back(1);
  for (int i = 0; i < n; ++i) {
    if (size > cap / m) {
      throw std::invalid_argument("m^n = " + std::to_string(m) + "^" +
                                  std::to_string(n) +
                                  " exceeds the enumeration cap " +
                                  std::to_string(cap));
    }
    size *= m;
    powers_.push_back(size);
  }
  size_ = size;
}

int ProductSpace::Digit(std::int64_t x, int pos) const {
  return static_cast<int>((x / powers_[pos]) % m_);
}

std::int64_t ProductSpace::WithDigit(std::int64_t x, int pos, int value) const {
  return x + (static_cast<std::int64_t>(value) - Digit(x, pos)) * powers_[pos];
}

int ProductSpace::HammingDistance(std::int64_t x, std::int64_t y) const {
  int d = 0;
  std::int64_t a = x;
  std::int64_t b = y;
  for (int i = 0; i < n_; ++i) {
    if (a % m_ != b % m_) ++d;
    a /= m_;
    b /= m_;
  }
  return d;
}

std::int64_t ProductSpace::NeighborCount(int l) const {
  if (l < 0 || l > n_) {
    throw std::invalid_argument("shell index out of [0, n]");
  }
  // C(n,l) * (m-1)^l; sizes stay within the cap since they sum to m^n.
  std::int64_t binom = 1;
  for (int i = 1; i <= l; ++i) {
    binom = binom * (n_ - i + 1) / i;
  }
  std::int64_t count = binom;
  for (int i = 0; i < l; ++i) count *= (m_ - 1);
  return count;
}

std::vector<std::int64_t> ProductSpace::Neighbors(std::int64_t x) const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<size_t>(n_) * (m_ - 1));
  for (int pos = 0; pos < n_; ++pos) {
    const int digit = Digit(x, pos);
    for (int v = 0; v < m_; ++v) {
      if (v == digit) continue;
      out.push_back(WithDigit(x, pos, v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace putlab
