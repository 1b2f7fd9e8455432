// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anyon/fusion_space.hpp"

#include <stdexcept>

namespace anyon {

FusionSpace::FusionSpace(const Theory& theory, std::vector<Charge> leaves,
                         Charge total)
    : theory_(&theory), leaves_(std::move(leaves)), total_(total) {
  if (leaves_.empty()) throw std::invalid_argument("no leaves");
  for (Charge l : leaves_)
    if (l > Theory::kMaxCharge) throw std::invalid_argument("charge out of range");
  if (total_ > Theory::kMaxCharge)
    throw std::invalid_argument("total charge out of range");

  const std::size_t m = leaves_.size();
  if (m == 1) {
    if (leaves_[0] == total_) basis_.push_back({});
    return;
  }
  if (m == 2) {
    if (theory_->fusion_allowed(leaves_[0], leaves_[1], total_))
      basis_.push_back({});
    return;
  }
  // Left-associated tree: running label after fusing leaf j+1 is tuple[j-1];
  // lexicographic enumeration comes from ascending channel order.
  std::vector<Charge> tuple(m - 2, 0);
  struct Frame {
    Charge running;
    std::vector<Charge> channels;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({leaves_[0], theory_->fusion_channels(leaves_[0], leaves_[1]), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next >= top.channels.size()) {
      stack.pop_back();
      continue;
    }
    Charge chosen = top.channels[top.next++];
    std::size_t depth = stack.size();  // this fixes tuple[depth-1]
    tuple[depth - 1] = chosen;
    if (depth == m - 2) {
      if (theory_->fusion_allowed(chosen, leaves_[m - 1], total_))
        basis_.push_back(tuple);
    } else {
      stack.push_back({chosen, theory_->fusion_channels(chosen, leaves_[depth + 1]), 0});
    }
  }
}

std::optional<unsigned> FusionSpace::index_of(const std::vector<Charge>& labels) const {
  for (unsigned i = 0; i < basis_.size(); ++i)
    if (basis_[i] == labels) return i;
  return std::nullopt;
}

std::string FusionSpace::describe() const {
  std::string out;
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(leaves_[i]);
  }
  out += " -> " + std::to_string(total_);
  return out;
}

}  // namespace anyon
