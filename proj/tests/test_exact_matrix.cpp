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

#include "anyon/exact_matrix.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

using anyon::Cyclotomic;
using anyon::ExactMatrix;
using anyon::StateVector;

namespace {

Cyclotomic random_scalar(std::mt19937& rng, unsigned order) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> expo(0, static_cast<int>(order) - 1);
  Cyclotomic acc = Cyclotomic::zero(order);
  for (int terms = 0; terms < 2; ++terms) {
    mpq_class q(num(rng), 2);
    q.canonicalize();
    acc += Cyclotomic::rational(order, q) *
           Cyclotomic::root_of_unity(order, expo(rng));
  }
  return acc;
}

ExactMatrix random_matrix(std::mt19937& rng, unsigned dim, unsigned order) {
  ExactMatrix m(dim, order);
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < dim; ++j) m.at(i, j) = random_scalar(rng, order);
  return m;
}

// Independent determinant oracle: the Leibniz permutation sum.
Cyclotomic leibniz_det(const ExactMatrix& m) {
  std::vector<unsigned> perm(m.dim());
  for (unsigned i = 0; i < m.dim(); ++i) perm[i] = i;
  Cyclotomic det = Cyclotomic::zero(m.order());
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < perm.size(); ++i)
      for (unsigned j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Cyclotomic term = Cyclotomic::one(m.order());
    for (unsigned i = 0; i < m.dim(); ++i) term *= m.at(i, perm[i]);
    det += (inversions % 2) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("determinant matches the Leibniz oracle") {
  std::mt19937 rng(42);
  for (unsigned dim : {2u, 3u, 4u, 5u}) {
    for (int trial = 0; trial < 4; ++trial) {
      ExactMatrix m = random_matrix(rng, dim, 12);
      CHECK(m.determinant() == leibniz_det(m));
    }
  }
}

TEST_CASE("inverse and multiply") {
  std::mt19937 rng(43);
  for (unsigned dim : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 6; ++trial) {
      ExactMatrix m = random_matrix(rng, dim, 12);
      if (m.determinant().is_zero()) continue;
      CHECK((m * m.inverse()).is_identity());
      CHECK((m.inverse() * m).is_identity());
    }
  }
  ExactMatrix z(3, 12);
  CHECK_THROWS_AS(z.inverse(), std::domain_error);
}

TEST_CASE("dagger inverts unitaries") {
  unsigned n = 72;
  Cyclotomic is2 =
      Cyclotomic::sqrt_constant(n, 2) * Cyclotomic::rational(n, mpq_class(1, 2));
  ExactMatrix h = ExactMatrix::from_rows(
      n, {{is2, is2}, {is2, -is2}});
  CHECK(h.is_unitary());
  CHECK(h.dagger() * h == ExactMatrix::identity(2, n));
  ExactMatrix notu = ExactMatrix::from_rows(
      n, {{Cyclotomic::integer(n, 2), Cyclotomic::zero(n)},
          {Cyclotomic::zero(n), Cyclotomic::one(n)}});
  CHECK(!notu.is_unitary());
}

TEST_CASE("scalar_multiple_of") {
  std::mt19937 rng(44);
  ExactMatrix a = random_matrix(rng, 3, 12);
  CHECK(a.scalar_multiple_of(a).value() == Cyclotomic::one(12));
  ExactMatrix minus = a.scaled(-Cyclotomic::one(12));
  CHECK(minus.scalar_multiple_of(a).value() == -Cyclotomic::one(12));
  Cyclotomic z = Cyclotomic::root_of_unity(12, 5);
  CHECK(a.scaled(z).scalar_multiple_of(a).value() == z);
  ExactMatrix b = a;
  b.at(0, 0) += Cyclotomic::one(12);
  CHECK(!b.scalar_multiple_of(a).has_value());
  // zero matrix edge cases
  ExactMatrix zero(3, 12);
  CHECK(zero.scalar_multiple_of(zero).has_value());
  CHECK(!a.scalar_multiple_of(zero).has_value());
}

TEST_CASE("scalar_multiple_of is symmetric and transitive on samples") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix a = random_matrix(rng, 2, 12);
    bool nonzero = false;
    for (unsigned i = 0; i < 2 && !nonzero; ++i)
      for (unsigned j = 0; j < 2; ++j)
        if (!a.at(i, j).is_zero()) { nonzero = true; break; }
    if (!nonzero) continue;
    Cyclotomic u = Cyclotomic::root_of_unity(12, trial % 12);
    Cyclotomic v = Cyclotomic::root_of_unity(12, (5 * trial) % 12);
    ExactMatrix b = a.scaled(u), c = b.scaled(v);
    auto ab = b.scalar_multiple_of(a);
    auto ba = a.scalar_multiple_of(b);
    CHECK(ab.value() * ba.value() == Cyclotomic::one(12));
    CHECK(c.scalar_multiple_of(a).value() == u * v);
  }
}

TEST_CASE("canonical projective form is constant on orbits and idempotent") {
  std::mt19937 rng(46);
  Cyclotomic zeta3 = Cyclotomic::root_of_unity(72, 1, 3);
  for (int trial = 0; trial < 8; ++trial) {
    ExactMatrix a = random_matrix(rng, 3, 72);
    ExactMatrix c1 = a.canonical_projective_form(ExactMatrix::ScalarSet::kCenterOfSU3);
    ExactMatrix c2 = a.scaled(zeta3).canonical_projective_form(
        ExactMatrix::ScalarSet::kCenterOfSU3);
    CHECK(c1 == c2);
    CHECK(c1.canonical_projective_form(ExactMatrix::ScalarSet::kCenterOfSU3) == c1);
    ExactMatrix u1 = a.canonical_projective_form(ExactMatrix::ScalarSet::kAllUnits);
    ExactMatrix u2 = a.scaled(Cyclotomic::root_of_unity(72, 31))
                         .canonical_projective_form(ExactMatrix::ScalarSet::kAllUnits);
    CHECK(u1 == u2);
  }
}

TEST_CASE("su_normalize") {
  unsigned n = 72;
  ExactMatrix minus_id = ExactMatrix::identity(3, n).scaled(-Cyclotomic::one(n));
  ExactMatrix fixed = minus_id.su_normalize();
  CHECK(fixed.determinant().is_one());
  CHECK(fixed.scalar_multiple_of(minus_id).has_value());
  // already determinant one: result stays in the same scalar orbit
  ExactMatrix d = ExactMatrix::diagonal(
      n, {Cyclotomic::root_of_unity(n, 32), Cyclotomic::root_of_unity(n, 32),
          Cyclotomic::root_of_unity(n, 8)});
  CHECK(d.determinant().is_one());
  ExactMatrix dn = d.su_normalize();
  CHECK(dn.determinant().is_one());
  CHECK(dn.scalar_multiple_of(d).has_value());
}

TEST_CASE("su_normalize reports roots that escape the field") {
  unsigned n = 72;
  // determinant zeta_72 has no cube root among the roots of unity in the field
  ExactMatrix a = ExactMatrix::diagonal(
      n, {Cyclotomic::root_of_unity(n, 1), Cyclotomic::one(n), Cyclotomic::one(n)});
  CHECK(a.is_unitary());
  CHECK_THROWS_WITH_AS(a.su_normalize(), doctest::Contains("phase outside field"),
                       std::domain_error);
  // and the center scalar set needs a cube root of unity in the field
  ExactMatrix b = ExactMatrix::identity(2, 8);
  CHECK_THROWS_AS(b.canonical_projective_form(ExactMatrix::ScalarSet::kCenterOfSU3),
                  std::domain_error);
}

TEST_CASE("matrix serialization round-trips") {
  std::mt19937 rng(47);
  ExactMatrix a = random_matrix(rng, 3, 72);
  CHECK(ExactMatrix::from_json(a.to_json()) == a);
  ExactMatrix b = a;
  CHECK(a.canonical_key() == b.canonical_key());
  b.at(2, 2) += Cyclotomic::one(72);
  CHECK(a.canonical_key() != b.canonical_key());
}

TEST_CASE("state vectors") {
  unsigned n = 72;
  Cyclotomic is2 =
      Cyclotomic::sqrt_constant(n, 2) * Cyclotomic::rational(n, mpq_class(1, 2));
  StateVector plus = StateVector::basis_state(3, n, 0).scaled(is2) +
                     StateVector::basis_state(3, n, 2).scaled(is2);
  CHECK(plus.norm_sq().is_one());
  StateVector e1 = StateVector::basis_state(3, n, 0);
  CHECK(e1.norm_sq().is_one());
  ExactMatrix perm = ExactMatrix::from_rows(
      n, {{Cyclotomic::zero(n), Cyclotomic::one(n), Cyclotomic::zero(n)},
          {Cyclotomic::one(n), Cyclotomic::zero(n), Cyclotomic::zero(n)},
          {Cyclotomic::zero(n), Cyclotomic::zero(n), Cyclotomic::one(n)}});
  CHECK(perm.apply(e1) == StateVector::basis_state(3, n, 1));
  CHECK_THROWS_AS(perm.apply(StateVector::basis_state(2, n, 0)),
                  std::invalid_argument);
}
