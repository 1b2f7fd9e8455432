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

#ifndef ANYONKIT_IDENTITIES_HPP_
#define ANYONKIT_IDENTITIES_HPP_

#include "anyon/catalog.hpp"
#include "anyon/report.hpp"

namespace anyon {

/// Smallest k >= 1 with m^k == I; throws std::runtime_error beyond the cap.
unsigned element_order(const ExactMatrix& m, unsigned cap = 100000);

/// Every displayed identity of the order-648 group analysis, run as an exact
/// matrix check: the Klein pair, the mixed diagonal generators x6/x18 and
/// their orders, the S3 of signed permutations, the decompositions of each
/// generator over the semidirect product, the Blichfeld generator identities,
/// the N = G2t^-4 family, cyclic intersections, and the order-108 diagonal
/// subgroup. Failures land in the report, nothing throws.
Report identity_suite(const Catalog& cat);

}  // namespace anyon

#endif  // ANYONKIT_IDENTITIES_HPP_
