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

#ifndef PUTLAB_SOURCE_SET_H_
#define PUTLAB_SOURCE_SET_H_

#include <vector>

#include "putlab/mechanism.h"
#include "putlab/prior.h"
#include "putlab/product_space.h"

namespace putlab {

// Class I: the convex hull contains the uniform distribution.
// Class II: not Class I, and all members share a coordinate ordering.
// Class III: everything else.
enum class SourceClass { kClassI, kClassII, kClassIII };

// Prior knowledge about the input distribution: a single known prior, the
// whole probability simplex, or the convex hull of a finite family.
// Classification, theta, and eta are computed once at construction; instances
// are immutable.
class SourceSet {
 public:
  static SourceSet Singleton(Prior prior);
  static SourceSet FullSimplex(ProductSpace space);
  // Throws on an empty family or members over mismatched spaces.
  static SourceSet FiniteFamily(std::vector<Prior> members);

  const ProductSpace& space() const { return space_; }
  bool is_full_simplex() const { return full_simplex_; }
  bool is_singleton() const { return !full_simplex_ && members_.size() == 1; }
  // Empty for the full simplex.
  const std::vector<Prior>& members() const { return members_; }

  SourceClass class_tag() const { return class_tag_; }

  // theta = m^n * max_{P in hull} min_x P(x), in (0, 1]; equals 1 exactly for
  // Class I. The maximization runs over the convex hull of the members (the
  // hull is what the set denotes), via a small LP for finite families.
  double theta_star() const { return theta_star_; }
  // Largest coordinate of the hull point attaining theta.
  double eta() const { return eta_; }

  // Smallest coordinate over all members; the full simplex is represented by
  // its uniform member for this purpose.
  double min_member_probability() const { return min_member_probability_; }

 private:
  SourceSet(ProductSpace space, bool full_simplex, std::vector<Prior> members);

  ProductSpace space_;
  bool full_simplex_;
  std::vector<Prior> members_;
  SourceClass class_tag_;
  double theta_star_;
  double eta_;
  double min_member_probability_;
};

// True iff the expected distortion stays within budget for every prior the
// set can produce. For the full simplex the check runs at the vertex priors,
// which by linearity dominate the interior; a vertex at x reduces to the
// distortion of row x alone.
bool IsValid(const Mechanism& q, const SourceSet& source_set, double budget);

}  // namespace putlab

#endif  // PUTLAB_SOURCE_SET_H_
