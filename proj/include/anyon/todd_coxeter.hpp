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

#ifndef ANYONKIT_TODD_COXETER_HPP_
#define ANYONKIT_TODD_COXETER_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "anyon/presentation.hpp"

namespace anyon {

/// The enumeration ran out of room; inconclusive, not a property of the group.
class CosetLimitExceeded : public std::runtime_error {
 public:
  explicit CosetLimitExceeded(std::size_t limit)
      : std::runtime_error("coset limit exceeded (" + std::to_string(limit) +
                           "): group may have larger index or need a higher "
                           "limit") {}
};

struct CosetEnumResult {
  std::size_t index = 0;          // final number of cosets = [G : H]
  std::size_t total_defined = 0;  // cosets defined over the whole run
};

/// HLT-style coset enumeration with coincidence handling and a lookahead
/// pass when the table fills up. With an empty subgroup the returned index
/// is the order of the presented group. Deterministic for a fixed input.
CosetEnumResult todd_coxeter(const GroupPresentation& pres,
                             const std::vector<Word>& subgroup_words = {},
                             std::size_t max_cosets = 100000);

}  // namespace anyon

#endif  // ANYONKIT_TODD_COXETER_HPP_
