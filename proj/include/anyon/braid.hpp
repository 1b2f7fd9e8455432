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

#ifndef ANYONKIT_BRAID_HPP_
#define ANYONKIT_BRAID_HPP_

#include <string>
#include <utility>
#include <vector>

#include "anyon/fusion_space.hpp"

namespace anyon {

/// Sequence of braid generators sigma_i^{+-1}; index i >= 1 acts on strands
/// i, i+1. Text grammar: `s2:-1,s1:1` (comma-separated `s<i>:<sign>`).
struct BraidWord {
  std::vector<std::pair<unsigned, int>> moves;

  static BraidWord parse(const std::string& text);
  std::string to_string() const;
  void push(unsigned index, int sign) { moves.emplace_back(index, sign); }
};

/// A braid move or composite: exact unitary `matrix` mapping source-space
/// coordinates to target-space coordinates. Braiding permutes the leaf
/// charges, so source and target may be different spaces.
struct BraidStep {
  FusionSpace source;
  FusionSpace target;
  ExactMatrix matrix;
};

/// Matrix of sigma_i^{sign} on the space. Throws std::invalid_argument for
/// out-of-range strand indices.
BraidStep sigma_step(const FusionSpace& space, unsigned i, int sign);

/// Composite matrix of a whole braid word (rightmost move applied first...
/// i.e. moves[0] acts first), with leaf bookkeeping.
BraidStep compose_word(const FusionSpace& space, const BraidWord& word);

/// Exact unitary evolution of a state through a braid word; returns the
/// final state and the space it lives in.
std::pair<StateVector, FusionSpace> apply_word(const FusionSpace& space,
                                               const BraidWord& word,
                                               const StateVector& state);

/// Projects onto basis states whose label at the given internal edge
/// (1-based, <= internal_edges) equals `charge`; returns the unnormalized
/// projection and its exact Born weight.
std::pair<StateVector, Cyclotomic> project_internal(const FusionSpace& space,
                                                    unsigned edge, Charge charge,
                                                    const StateVector& state);

/// Conjugates a qutrit matrix from the (|0>,|2>,|4>) basis to the rotated
/// basis e1 = (|0>+|4>)/sqrt2, e2 = |2>, e3 = (|0>-|4>)/sqrt2. Applied to the
/// braid matrices G1, G2 this yields the published rotated forms exactly.
ExactMatrix change_basis_qutrit(const ExactMatrix& m);

/// Matrix of the single middle braid on (2,2,1,1 -> 0): maps the (|0>,|2>)
/// qubit onto the (|1>,|3>) basis of (2,1,2,1 -> 0).
BraidStep middle_braid_2211(const Theory& theory);

/// Ancilla preparation on the 1221 qubit via the 2211 middle braid plus a
/// search over the phase-only braids sigma_1, sigma_3.
struct AncillaResult {
  std::string target;               // "plus" or "minus"
  Charge start_label = 0;           // qubit prepared as |0> or |2>
  BraidWord word;                   // the full braid performed
  FusionSpace space;                // final space (leaves 1,2,2,1 on success)
  StateVector state;                // final state in that basis
  bool moduli_are_half;             // both |coeff|^2 == 1/2, exact
  bool target_reached;              // relative phase +-1 achieved on 1221
  Cyclotomic relative_phase;        // coeff(|3>) / coeff(|1>) of the result
  std::vector<Cyclotomic> reachable_relative_phases;  // on the 1221 qubit
  std::string to_json() const;
};
AncillaResult ancilla_protocol(const Theory& theory, bool plus);

}  // namespace anyon

#endif  // ANYONKIT_BRAID_HPP_
