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

#ifndef ANYONKIT_CATALOG_HPP_
#define ANYONKIT_CATALOG_HPP_

#include <string>
#include <vector>

#include "anyon/exact_matrix.hpp"

namespace anyon {

/// Named generator matrices of the order-648 qutrit gate group and its
/// relatives, written exactly over Q(zeta_n) with 72 | n.
///
/// Plain names (G1, G2, FUM) act on the qutrit basis (|0>, |2>, |4>); the
/// t-suffixed names (G1t, G2t, FUMt) and everything derived from them act on
/// the rotated basis ((|0>+|4>)/sqrt2, |2>, (|0>-|4>)/sqrt2). F18, E, Btilde
/// are the classical Blichfeld generators of D(18,1,1;2,1,1); F9 is the
/// analogous diagonal of the order-162 series. The x/t/c family is the
/// semidirect-product generating set: x6 and x18 span the diagonal C6 x C18,
/// t1/t2/t3/c1/c2 realize S3.
class Catalog {
 public:
  explicit Catalog(unsigned field_order = 72);

  unsigned field_order() const { return order_; }

  /// Lookup by name; throws std::invalid_argument for unknown names.
  const ExactMatrix& get(const std::string& name) const;
  bool has(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Test hook for negative controls: multiplies one entry of the named
  /// matrix by a nontrivial phase, which must make the verifiers fail.
  void corrupt(const std::string& name);

  const ExactMatrix& G1() const { return get("G1"); }
  const ExactMatrix& G2() const { return get("G2"); }
  const ExactMatrix& FUM() const { return get("FUM"); }
  const ExactMatrix& G1t() const { return get("G1t"); }
  const ExactMatrix& G2t() const { return get("G2t"); }
  const ExactMatrix& FUMt() const { return get("FUMt"); }
  const ExactMatrix& N() const { return get("N"); }
  const ExactMatrix& O() const { return get("O"); }
  const ExactMatrix& F18() const { return get("F18"); }
  const ExactMatrix& F9() const { return get("F9"); }
  const ExactMatrix& E() const { return get("E"); }
  const ExactMatrix& Btilde() const { return get("Btilde"); }

 private:
  unsigned order_;
  std::vector<std::pair<std::string, ExactMatrix>> entries_;
};

}  // namespace anyon

#endif  // ANYONKIT_CATALOG_HPP_
