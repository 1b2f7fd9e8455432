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

#ifndef ANYONKIT_FUSION_SPACE_HPP_
#define ANYONKIT_FUSION_SPACE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "anyon/tqft.hpp"

namespace anyon {

/// Hilbert-space basis for an ordered anyon sequence with fixed total charge:
/// all admissible internal labelings of the left-associated standard tree,
/// in lexicographic order. With m leaves there are m-2 free internal edges
/// (none for m <= 2).
class FusionSpace {
 public:
  FusionSpace(const Theory& theory, std::vector<Charge> leaves, Charge total);

  const Theory& theory() const { return *theory_; }
  const std::vector<Charge>& leaves() const { return leaves_; }
  Charge total() const { return total_; }
  unsigned internal_edges() const {
    return leaves_.size() > 2 ? static_cast<unsigned>(leaves_.size()) - 2 : 0;
  }

  unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
  const std::vector<std::vector<Charge>>& basis() const { return basis_; }
  const std::vector<Charge>& label_tuple(unsigned index) const {
    return basis_.at(index);
  }
  std::optional<unsigned> index_of(const std::vector<Charge>& labels) const;

  /// Same leaf sequence and total charge (bases then agree by determinism).
  bool compatible(const FusionSpace& o) const {
    return leaves_ == o.leaves_ && total_ == o.total_;
  }

  std::string describe() const;  // e.g. "2,2,1,1 -> 0"

 private:
  const Theory* theory_;
  std::vector<Charge> leaves_;
  Charge total_;
  std::vector<std::vector<Charge>> basis_;
};

}  // namespace anyon

#endif  // ANYONKIT_FUSION_SPACE_HPP_
