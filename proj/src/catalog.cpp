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

#include "anyon/catalog.hpp"

#include <stdexcept>

namespace anyon {

Catalog::Catalog(unsigned field_order) : order_(field_order) {
  if (order_ % 72 != 0)
    throw std::invalid_argument(
        "catalog needs a field order divisible by 72 to hold e^{i*pi/9}, "
        "sqrt(2) and zeta_3");
  const unsigned n = order_;
  // phases as powers of zeta_72 = e^{i*pi/36}
  auto z = [&](long k) { return Cyclotomic::root_of_unity(n, k, 72); };
  const Cyclotomic zero = Cyclotomic::zero(n);
  const Cyclotomic one = Cyclotomic::one(n);
  const Cyclotomic half = Cyclotomic::rational(n, mpq_class(1, 2));
  const Cyclotomic inv_sqrt2 = Cyclotomic::sqrt_constant(n, 2) * half;

  const Cyclotomic s = z(28);   // e^{7i*pi/9}
  const Cyclotomic t = z(16);   // e^{4i*pi/9}
  const Cyclotomic w = z(24);   // e^{2i*pi/3}

  auto add = [&](const std::string& name, const ExactMatrix& m) {
    entries_.emplace_back(name, m);
  };

  ExactMatrix G1 = ExactMatrix::diagonal(n, {s, -t, -s});
  ExactMatrix G2 = ExactMatrix::from_rows(
      n, {{-half * t, s * inv_sqrt2, half * t},
          {s * inv_sqrt2, zero, s * inv_sqrt2},
          {half * t, s * inv_sqrt2, -half * t}});
  // FFO on (|0>,|2>,|4>): swaps |0> and |4>, scaled to determinant one.
  ExactMatrix FUM = ExactMatrix::from_rows(
      n, {{zero, zero, -w}, {zero, -w, zero}, {-w, zero, zero}});

  ExactMatrix G1t = ExactMatrix::from_rows(
      n, {{zero, zero, s}, {zero, -t, zero}, {s, zero, zero}});
  ExactMatrix G2t = ExactMatrix::from_rows(
      n, {{zero, s, zero}, {s, zero, zero}, {zero, zero, -t}});
  ExactMatrix FUMt = ExactMatrix::diagonal(n, {-w, -w, w});
  ExactMatrix Ngate = ExactMatrix::diagonal(n, {z(32), z(32), z(8)});

  ExactMatrix O = ExactMatrix::from_rows(
      n, {{inv_sqrt2, zero, -inv_sqrt2}, {zero, one, zero}, {inv_sqrt2, zero, inv_sqrt2}});

  ExactMatrix F18 = ExactMatrix::diagonal(n, {z(4), z(4), z(-8)});
  ExactMatrix F9 = ExactMatrix::diagonal(n, {z(8), z(8), z(-16)});
  ExactMatrix E = ExactMatrix::from_rows(
      n, {{zero, one, zero}, {zero, zero, one}, {one, zero, zero}});
  ExactMatrix Btilde = ExactMatrix::from_rows(
      n, {{-one, zero, zero}, {zero, zero, -one}, {zero, -one, zero}});

  ExactMatrix KleinA = FUMt.pow(3);
  ExactMatrix KleinB = G1t * KleinA * G1t.inverse();
  ExactMatrix x6 = Ngate.pow(2) * G1t.pow(2) * KleinA;
  ExactMatrix x18 = Ngate * KleinB;
  ExactMatrix t1 = G2t.pow(9);
  ExactMatrix t3 = G1t.pow(9);
  ExactMatrix t2 = G2t * G1t * G2t;
  ExactMatrix c1 = t3 * t1;
  ExactMatrix c2 = t1 * t3;

  add("G1", G1);
  add("G2", G2);
  add("FUM", FUM);
  add("G1t", G1t);
  add("G2t", G2t);
  add("FUMt", FUMt);
  add("N", Ngate);
  add("O", O);
  add("F18", F18);
  add("F9", F9);
  add("E", E);
  add("Btilde", Btilde);
  add("x6", x6);
  add("x18", x18);
  add("t1", t1);
  add("t2", t2);
  add("t3", t3);
  add("c1", c1);
  add("c2", c2);
  add("KleinA", KleinA);
  add("KleinB", KleinB);
}

const ExactMatrix& Catalog::get(const std::string& name) const {
  for (const auto& [k, m] : entries_)
    if (k == name) return m;
  throw std::invalid_argument("unknown catalog matrix: " + name);
}

bool Catalog::has(const std::string& name) const {
  for (const auto& [k, m] : entries_)
    if (k == name) return true;
  return false;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, m] : entries_) out.push_back(k);
  return out;
}

void Catalog::corrupt(const std::string& name) {
  for (auto& [k, m] : entries_) {
    if (k != name) continue;
    for (unsigned i = 0; i < m.dim(); ++i)
      for (unsigned j = 0; j < m.dim(); ++j) {
        if (m.at(i, j).is_zero()) continue;
        m.at(i, j) *= Cyclotomic::root_of_unity(order_, 1);
        return;
      }
  }
  throw std::invalid_argument("unknown catalog matrix: " + name);
}

}  // namespace anyon
