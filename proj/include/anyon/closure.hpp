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

#ifndef ANYONKIT_CLOSURE_HPP_
#define ANYONKIT_CLOSURE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "anyon/exact_matrix.hpp"

namespace anyon {

/// Exact mode stores elements as given; mod-center mode identifies matrices
/// that differ by a cube root of unity, mirroring SU(3) vs PU(3) counting.
enum class ClosureMode { kExact, kModCenter };

/// Isomorphism-invariant summary of a finite matrix group, every field
/// computed by brute force. Conjugate groups must produce equal fingerprints.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::map<unsigned, std::size_t> element_order_histogram;
  std::size_t conjugacy_class_count = 0;
  std::size_t derived_subgroup_order = 0;

  bool operator==(const Fingerprint&) const = default;
  std::string to_json() const;
};

/// Finite closure of a set of unitary matrices under multiplication,
/// enumerated by deterministic BFS: the frontier is processed in insertion
/// order and products are taken in generator order, so the element numbering
/// is reproducible run to run.
class GroupClosure {
 public:
  /// Throws std::invalid_argument for non-unitary generators and
  /// std::runtime_error when the cap is exceeded (group may be infinite or
  /// the cap too small).
  static GroupClosure closure(const std::vector<ExactMatrix>& generators,
                              std::vector<std::string> names = {},
                              ClosureMode mode = ClosureMode::kExact,
                              std::size_t cap = 10000);

  std::size_t size() const { return elements_.size(); }
  ClosureMode mode() const { return mode_; }
  const ExactMatrix& element(std::size_t i) const { return elements_.at(i); }
  /// Shortest generator word found for element i, e.g. "G1t*FUMt"; the
  /// identity reports "1". Words evaluate back to the element exactly
  /// (up to the center in mod-center mode).
  std::string word(std::size_t i) const;
  ExactMatrix evaluate_word(std::size_t i) const;

  const std::vector<ExactMatrix>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  bool contains(const ExactMatrix& m) const;
  std::optional<std::size_t> index_of(const ExactMatrix& m) const;
  bool equal_as_sets(const GroupClosure& o) const;

  /// Element-wise P^-1 M P (or P^T M P when transpose is requested).
  GroupClosure conjugated(const ExactMatrix& p, bool use_transpose = false) const;

  /// Smallest k >= 1 with M^k == I (projectively so in mod-center mode).
  unsigned element_order(const ExactMatrix& m) const;

  /// Indices of elements commuting with every element.
  std::vector<std::size_t> center_indices() const;
  std::size_t diagonal_count() const;

  /// Verifies the group axioms hold for the enumerated set: identity present,
  /// every inverse present, and products land inside (exhaustive when
  /// size^2 <= budget, sampled otherwise).
  bool verify_group(std::size_t budget = 20000) const;

  Fingerprint fingerprint() const;

  std::string to_json(bool include_elements) const;

 private:
  GroupClosure() = default;
  ExactMatrix canonize(const ExactMatrix& m) const;
  std::size_t insert(const ExactMatrix& m);  // returns index

  ClosureMode mode_ = ClosureMode::kExact;
  std::vector<ExactMatrix> generators_;
  std::vector<std::string> names_;
  std::vector<ExactMatrix> elements_;
  std::vector<std::vector<unsigned>> words_;  // generator index sequences
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace anyon

#endif  // ANYONKIT_CLOSURE_HPP_
