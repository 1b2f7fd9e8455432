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

#ifndef ANYONKIT_PRESENTATION_HPP_
#define ANYONKIT_PRESENTATION_HPP_

#include <map>
#include <string>
#include <vector>

#include "anyon/exact_matrix.hpp"
#include "anyon/report.hpp"

namespace anyon {

/// Word over the generators of a presentation: entries +-(index+1), negative
/// meaning the inverse of the generator.
using Word = std::vector<int>;

Word free_reduce(Word w);

/// Finitely presented group. Relators are stored freely reduced; generator
/// names are unique. Text grammar for words: `x6^3*t1*x18^-13`.
class GroupPresentation {
 public:
  GroupPresentation(std::vector<std::string> gens, std::vector<Word> relators);

  static GroupPresentation from_text(const std::string& text);
  std::string to_text() const;

  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return relators_; }

  /// Parses a word in the text grammar; throws std::invalid_argument for
  /// unknown generators or malformed syntax.
  Word parse_word(const std::string& text) const;
  std::string word_to_string(const Word& w) const;

  /// Permuted copy of the relator list (for order-independence checks).
  GroupPresentation with_relator_order(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<std::string> gens_;
  std::vector<Word> relators_;
};

/// Evaluates each relator as a matrix product under the assignment and checks
/// it equals the identity exactly; one report entry per relator.
/// Throws std::invalid_argument when a generator has no assigned matrix.
Report check_relations(const GroupPresentation& p,
                       const std::map<std::string, ExactMatrix>& assignment);

/// The four-generator presentation of the order-648 qutrit gate group
/// (C6 x C18) : S3 on x6, x18, t1, t2.
GroupPresentation qutrit_gate_group_presentation();

}  // namespace anyon

#endif  // ANYONKIT_PRESENTATION_HPP_
