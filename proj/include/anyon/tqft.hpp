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

#ifndef ANYONKIT_TQFT_HPP_
#define ANYONKIT_TQFT_HPP_

#include <array>
#include <map>
#include <vector>

#include "anyon/exact_matrix.hpp"
#include "anyon/report.hpp"

namespace anyon {

/// Topological charge in the level-4 theory: 0..4 in the twice-spin
/// convention, 0 the vacuum, 4 the top label.
using Charge = unsigned;

/// Kauffman-Jones SU(2) level-4 category data, exact over Q(zeta_n).
///
/// The Kauffman variable A is a primitive 24th root of unity; two conjugate
/// conventions circulate, so the constructor tries e^{-i pi/12} and its
/// conjugate and keeps the one whose sigma_1 eigenvalues on four charge-2
/// anyons reproduce the published braid matrix up to a scalar. F-matrices are
/// produced in the unitary gauge (symmetric square-root-of-dimension
/// normalization); all of them are exactly unitary and satisfy the pentagon
/// and hexagon identities, which consistency_check() verifies by full
/// enumeration of admissible labels.
class Theory {
 public:
  static constexpr unsigned kLevel = 4;
  static constexpr Charge kMaxCharge = 4;

  explicit Theory(unsigned field_order = 72);

  unsigned field_order() const { return order_; }
  const Cyclotomic& kauffman_a() const { return a_; }

  /// Truncated angular-momentum rule: |a-b| <= c <= min(a+b, 8-a-b) with
  /// c = a+b (mod 2).
  bool fusion_allowed(Charge a, Charge b, Charge c) const;
  std::vector<Charge> fusion_channels(Charge a, Charge b) const;

  /// Positive quantum dimension d_a; d_0 = d_4 = 1, d_1 = d_3, d_2 = 2.
  const Cyclotomic& quantum_dimension(Charge a) const;

  /// Braid eigenvalue R^{ab}_c for the positive crossing; unit modulus.
  /// Throws std::invalid_argument on inadmissible triples.
  const Cyclotomic& r_symbol(Charge a, Charge b, Charge c) const;

  /// Ribbon twist of a single charge.
  const Cyclotomic& twist(Charge a) const;

  /// Unitary theta symbol sqrt(d_a d_b d_c); symmetric, positive real.
  Cyclotomic theta_symbol(Charge a, Charge b, Charge c) const;

  /// Unitary 6j symbol for ((a b)_e c)_d  ->  (a (b c)_f)_d, as the matrix
  /// m.at(row e, col f) over the admissible internal labels.
  struct FMatrix {
    std::vector<Charge> left;   // row labels e
    std::vector<Charge> right;  // column labels f
    ExactMatrix m;
    Cyclotomic entry_or_zero(Charge e, Charge f) const;
  };
  const FMatrix& f_matrix(Charge a, Charge b, Charge c, Charge d) const;

  /// Exhaustive coherence audit at this level: F-unitarity, vacuum F-moves,
  /// pentagon and both hexagons over every admissible label tuple, the ribbon
  /// identity, and the reproduction of the published sigma_1 eigenvalues.
  Report consistency_check() const;

  /// All F/R/theta/dimension tables as JSON (regression snapshots).
  std::string dump_json() const;

 private:
  void check_charge(Charge a) const;
  Cyclotomic tet(Charge ca, Charge cb, Charge ce, Charge cc, Charge cd,
                 Charge cf) const;

  unsigned order_;
  Cyclotomic a_;                       // Kauffman variable
  std::vector<Cyclotomic> dims_;       // positive quantum dimensions
  std::vector<Cyclotomic> twists_;
  std::map<std::array<Charge, 3>, Cyclotomic> r_;
  std::map<std::array<Charge, 4>, FMatrix> f_;
};

}  // namespace anyon

#endif  // ANYONKIT_TQFT_HPP_
