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

#ifndef PUTLAB_PRODUCT_SPACE_H_
#define PUTLAB_PRODUCT_SPACE_H_

#include <cstdint>
#include <vector>

namespace putlab {

// Default ceiling on m^n. Spaces above the cap cannot be enumerated at desk
// scale, so construction fails fast instead of exhausting memory.
inline constexpr std::int64_t kDefaultEnumerationCap = 65536;

// Process-wide enumeration cap. The CLI overrides it from PUTLAB_CAP at
// startup; set it once before building any spaces.
std::int64_t EnumerationCap();
void SetEnumerationCap(std::int64_t cap);

// The finite data universe {1..m}^n under Hamming distance. Points are
// encoded as integers in [0, m^n) with base-m digits, one digit per
// coordinate.
class ProductSpace {
 public:
  // Throws std::invalid_argument if m < 2, n < 1, or m^n exceeds the cap.
  ProductSpace(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  std::int64_t size() const { return size_; }

  int Digit(std::int64_t x, int pos) const;
  std::int64_t WithDigit(std::int64_t x, int pos, int value) const;

  // Number of coordinates where x and y differ; in [0, n].
  int HammingDistance(std::int64_t x, std::int64_t y) const;

  // |{y : d(x,y) = l}| = C(n,l) (m-1)^l, the same for every x.
  std::int64_t NeighborCount(int l) const;

  // The n(m-1) points at Hamming distance one from x, in increasing order.
  std::vector<std::int64_t> Neighbors(std::int64_t x) const;

  bool operator==(const ProductSpace& other) const {
    return m_ == other.m_ && n_ == other.n_;
  }

 private:
  int m_;
  int n_;
  std::int64_t size_;
  std::vector<std::int64_t> powers_;  // powers_[i] = m^i
};

}  // namespace putlab

#endif  // PUTLAB_PRODUCT_SPACE_H_
