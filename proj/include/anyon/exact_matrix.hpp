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

#ifndef ANYONKIT_EXACT_MATRIX_HPP_
#define ANYONKIT_EXACT_MATRIX_HPP_

#include <optional>
#include <string>
#include <vector>

#include "anyon/cyclotomic.hpp"

namespace anyon {

class StateVector;

/// Dense square matrix over a cyclotomic field. Everything is exact; the
/// gate catalog uses dims 2 and 3, fusion spaces of more anyons use the same
/// code path at larger sizes.
class ExactMatrix {
 public:
  ExactMatrix() : dim_(0), order_(0) {}
  ExactMatrix(unsigned dim, unsigned order);  // zero matrix

  static ExactMatrix identity(unsigned dim, unsigned order);
  static ExactMatrix from_rows(unsigned order,
                               const std::vector<std::vector<Cyclotomic>>& rows);
  static ExactMatrix diagonal(unsigned order, const std::vector<Cyclotomic>& d);

  unsigned dim() const { return dim_; }
  unsigned order() const { return order_; }

  const Cyclotomic& at(unsigned i, unsigned j) const;
  Cyclotomic& at(unsigned i, unsigned j);

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Cyclotomic& s) const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  StateVector apply(const StateVector& v) const;

  ExactMatrix transpose() const;
  ExactMatrix dagger() const;  // conjugate transpose
  Cyclotomic determinant() const;
  ExactMatrix inverse() const;  // throws std::domain_error when singular
  ExactMatrix pow(long e) const;

  bool is_unitary() const;  // M * M^dagger == I, exact
  bool is_diagonal() const;
  bool is_identity() const;

  /// The phase lambda with *this == lambda * o, if one exists.
  std::optional<Cyclotomic> scalar_multiple_of(const ExactMatrix& o) const;

  /// Deterministic representative of the scalar orbit {lambda * M} for
  /// lambda in the given scalar set: the lexicographically minimal flattened
  /// coordinate tuple. Idempotent.
  enum class ScalarSet { kCenterOfSU3, kAllUnits };
  ExactMatrix canonical_projective_form(ScalarSet scalars) const;

  /// Rescales a unitary by a root of unity to determinant one, choosing the
  /// lexicographically minimal valid rescaling. Throws std::domain_error
  /// ("phase outside field") when no root of unity in the field works.
  ExactMatrix su_normalize() const;

  /// Lexicographic order on flattened coordinates; total on same-shape
  /// matrices over one field.
  static int compare(const ExactMatrix& a, const ExactMatrix& b);

  /// Compact canonical byte form; equal matrices serialize identically.
  std::string canonical_key() const;

  /// JSON array-of-arrays of cyclotomic text forms.
  std::string to_json() const;
  static ExactMatrix from_json(const std::string& text);

  /// Paper-style matrix rendering with phase notation entries.
  std::string pretty() const;

 private:
  void check_shape(const ExactMatrix& o) const;
  unsigned dim_;
  unsigned order_;
  std::vector<Cyclotomic> e_;  // row-major
};

/// Exact state vector in a declared fusion-space basis.
class StateVector {
 public:
  StateVector() : order_(0) {}
  StateVector(unsigned order, std::vector<Cyclotomic> entries);
  static StateVector basis_state(unsigned dim, unsigned order, unsigned index);
  static StateVector zero(unsigned dim, unsigned order);

  unsigned dim() const { return static_cast<unsigned>(e_.size()); }
  unsigned order() const { return order_; }
  const Cyclotomic& at(unsigned i) const { return e_.at(i); }
  Cyclotomic& at(unsigned i) { return e_.at(i); }

  StateVector operator+(const StateVector& o) const;
  StateVector scaled(const Cyclotomic& s) const;
  bool operator==(const StateVector& o) const;

  /// Sum of entry * conj(entry); exact, real, nonnegative.
  Cyclotomic norm_sq() const;

  std::string to_json() const;

 private:
  unsigned order_;
  std::vector<Cyclotomic> e_;
};

/// All roots of unity contained in Q(zeta_n): the n-th roots for even n,
/// the 2n-th roots for odd n.
std::vector<Cyclotomic> roots_of_unity_in_field(unsigned order);

}  // namespace anyon

#endif  // ANYONKIT_EXACT_MATRIX_HPP_
