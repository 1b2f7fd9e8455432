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

#ifndef ANYONKIT_VERIFY_HPP_
#define ANYONKIT_VERIFY_HPP_

#include <vector>

#include "anyon/catalog.hpp"
#include "anyon/identities.hpp"
#include "anyon/report.hpp"

namespace anyon {

/// Category coherence plus the derived-braid reproductions: pentagon/hexagon,
/// sigma_1/sigma_2 against the published qutrit matrices, the 1221 qubit
/// braid, the 2211 middle braid and full twist, and the ancilla protocol.
Report verify_tqft(const Catalog& cat);

/// Group-closure facts: orders 648/162, the Blichfeld set equality, N
/// membership, conjugation by O and by the antidiagonal swap, projective
/// counts 216/54, center, fingerprint agreement, generator-order determinism.
Report verify_closure(const Catalog& cat, std::size_t cap = 10000);

/// The ten relators under the matrix assignment plus coset enumeration
/// giving exactly 648, with relator-order robustness.
Report verify_presentation(const Catalog& cat);

/// identities + tqft + presentation + closure, in that order.
std::vector<Report> verify_all(const Catalog& cat, std::size_t cap = 10000);

}  // namespace anyon

#endif  // ANYONKIT_VERIFY_HPP_
