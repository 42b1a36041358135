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

#ifndef PUTLAB_PRIVACY_NOTION_H_
#define PUTLAB_PRIVACY_NOTION_H_

#include <stdexcept>
#include <string>

namespace putlab {

enum class NotionKind {
  kDp,
  kApproxDp,
  kMaxInfo,
  kMaxLeakage,
  kRenyiDp,
  kSibsonMi,
  kMutualInfo,
};

// One of the seven supported privacy notions, with its parameter where the
// notion has one (delta for approximate DP, alpha for the Renyi/Sibson
// families). All losses are measured in nats.
class PrivacyNotion {
 public:
  static PrivacyNotion Dp() { return PrivacyNotion(NotionKind::kDp); }
  static PrivacyNotion ApproxDp(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
      throw std::invalid_argument("approximate DP needs delta in (0,1)");
    }
    PrivacyNotion n(NotionKind::kApproxDp);
    n.delta_ = delta;
    return n;
  }
  static PrivacyNotion MaxInfo() { return PrivacyNotion(NotionKind::kMaxInfo); }
  static PrivacyNotion MaxLeakage() {
    return PrivacyNotion(NotionKind::kMaxLeakage);
  }
  static PrivacyNotion RenyiDp(double alpha) {
    if (!(alpha > 1.0)) {
      throw std::invalid_argument("Renyi DP needs alpha > 1");
    }
    PrivacyNotion n(NotionKind::kRenyiDp);
    n.alpha_ = alpha;
    return n;
  }
  static PrivacyNotion SibsonMi(double alpha) {
    if (!(alpha > 1.0)) {
      throw std::invalid_argument("Sibson mutual information needs alpha > 1");
    }
    PrivacyNotion n(NotionKind::kSibsonMi);
    n.alpha_ = alpha;
    return n;
  }
  static PrivacyNotion MutualInfo() {
    return PrivacyNotion(NotionKind::kMutualInfo);
  }

  NotionKind kind() const { return kind_; }
  double delta() const { return delta_; }
  double alpha() const { return alpha_; }

  // Whether evaluating the loss needs the input distribution. The maximal
  // divergence family and maximal leakage are prior-free.
  bool prior_required() const {
    return kind_ == NotionKind::kMaxInfo || kind_ == NotionKind::kSibsonMi ||
           kind_ == NotionKind::kMutualInfo;
  }

  // Stable short label, e.g. "dp", "adp(0.1)", "rdp(2)".
  std::string Label() const;

 private:
  explicit PrivacyNotion(NotionKind kind) : kind_(kind) {}

  NotionKind kind_;
  double delta_ = 0.0;
  double alpha_ = 0.0;
};

}  // namespace putlab

#endif  // PUTLAB_PRIVACY_NOTION_H_
