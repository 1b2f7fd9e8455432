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

#include "anyon/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "doctest.h"

using anyon::Cyclotomic;
using anyon::euler_phi;

namespace {

Cyclotomic random_element(std::mt19937& rng, unsigned order, int span = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Cyclotomic acc = Cyclotomic::zero(order);
  for (unsigned k = 0; k < euler_phi(order); ++k) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    acc += Cyclotomic::rational(order, q) * Cyclotomic::root_of_unity(order, k);
  }
  return acc;
}

}  // namespace

TEST_CASE("phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(72) == 24);
  CHECK(euler_phi(144) == 48);
}

TEST_CASE("roots of unity basics") {
  CHECK(Cyclotomic::root_of_unity(72, 0) == Cyclotomic::one(72));
  CHECK(Cyclotomic::root_of_unity(72, 36) == -Cyclotomic::one(72));
  // e^{7 i pi / 9} = zeta_72^28, the recurring phase of G1 and G2
  Cyclotomic s = Cyclotomic::root_of_unity(72, 28);
  auto f = s.to_complex();
  CHECK(std::abs(f.real() - std::cos(7 * M_PI / 9)) < 1e-12);
  CHECK(std::abs(f.imag() - std::sin(7 * M_PI / 9)) < 1e-12);
  CHECK(s.multiplicative_order().value() == 72 / std::gcd(28, 72));
}

TEST_CASE("roots of unity have exact multiplicative order") {
  for (unsigned order : {8u, 9u, 72u}) {
    for (unsigned k = 0; k < order; ++k) {
      Cyclotomic z = Cyclotomic::root_of_unity(order, k);
      unsigned expect = order / std::gcd(k, order);
      CHECK(z.multiplicative_order(200).value() == expect);
    }
  }
}

TEST_CASE("subfield roots and mismatched orders") {
  // zeta_8 inside Q(zeta_72)
  Cyclotomic z8 = Cyclotomic::root_of_unity(72, 1, 8);
  CHECK(z8 == Cyclotomic::root_of_unity(72, 9));
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(72, 1, 5), std::invalid_argument);
  Cyclotomic a = Cyclotomic::one(72), b = Cyclotomic::one(9);
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
  CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
}

TEST_CASE("unit modulus and normalization identities") {
  Cyclotomic s = Cyclotomic::root_of_unity(72, 28);  // e^{7 i pi/9}
  CHECK(s.conj() * s == Cyclotomic::one(72));

  Cyclotomic inv_sqrt2 =
      Cyclotomic::sqrt_constant(72, 2) * Cyclotomic::rational(72, mpq_class(1, 2));
  CHECK(inv_sqrt2 * inv_sqrt2 + inv_sqrt2 * inv_sqrt2 == Cyclotomic::one(72));

  // "Both matrices have order 9": e^{8 i pi / 9} = zeta_72^32
  Cyclotomic z = Cyclotomic::root_of_unity(72, 32);
  Cyclotomic acc = z;
  for (int i = 1; i < 9; ++i) acc *= z;
  CHECK(acc == Cyclotomic::one(72));
  CHECK(z.multiplicative_order().value() == 9);
}

TEST_CASE("sqrt constants square back exactly") {
  for (unsigned m : {2u, 3u, 6u}) {
    Cyclotomic v = Cyclotomic::sqrt_constant(72, m);
    CHECK(v * v == Cyclotomic::integer(72, m));
    CHECK(v.to_complex().real() > 0);  // positive real embedding
    CHECK(std::abs(v.to_complex().imag()) < 1e-12);
  }
}

TEST_CASE("sqrt(2) does not live in Q(zeta_9)") {
  // Independent oracle: 19 = 1 (mod 9), so F_19 contains a primitive ninth
  // root of unity and reduction mod 19 embeds Z[zeta_9]. Euler's criterion
  // gives 2^((19-1)/2) = -1 (mod 19), so 2 is a non-square there, hence has
  // no square root in Q(zeta_9) either.
  CHECK(19 % 9 == 1);
  long pw = 1;
  for (int i = 0; i < 9; ++i) pw = (pw * 2) % 19;
  CHECK(pw == 18);  // = -1 mod 19
  CHECK_THROWS_WITH_AS(Cyclotomic::sqrt_constant(9, 2),
                       doctest::Contains("field too small"), std::domain_error);
}

TEST_CASE("field axioms on sampled triples") {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 25; ++trial) {
    unsigned order = (trial % 2) ? 72 : 12;
    Cyclotomic a = random_element(rng, order);
    Cyclotomic b = random_element(rng, order);
    Cyclotomic c = random_element(rng, order);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic::one(order));
    }
  }
}

TEST_CASE("conjugation is an involutive field automorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic a = random_element(rng, 72);
    Cyclotomic b = random_element(rng, 72);
    CHECK(a.conj().conj() == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).is_real());
  }
}

TEST_CASE("serialization round-trips bytewise") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic a = random_element(rng, 72, 9);
    std::string s = a.to_string();
    Cyclotomic back = Cyclotomic::parse(s);
    CHECK(back == a);
    CHECK(back.to_string() == s);
  }
  Cyclotomic h = Cyclotomic::rational(72, mpq_class(-3, 4));
  CHECK(h.to_string().substr(0, 12) == "cyc(72)[-3/4");
}

TEST_CASE("pretty forms") {
  CHECK(Cyclotomic::zero(72).pretty_root_form().value() == "0");
  CHECK(Cyclotomic::one(72).pretty_root_form().value() == "1");
  CHECK(Cyclotomic::root_of_unity(72, 28).pretty_root_form().value() ==
        "zeta(72)^28");
  Cyclotomic v = Cyclotomic::rational(72, mpq_class(-1, 2)) *
                 Cyclotomic::root_of_unity(72, 16);
  CHECK(v.pretty_root_form().value() == "-1/2*zeta(72)^16");
  CHECK(v.pretty_phase() == "-1/2*e^{4i\\pi/9}");
  // sqrt(2) itself is not rational * root of unity
  CHECK(!Cyclotomic::sqrt_constant(72, 2).pretty_root_form().has_value());
  Cyclotomic g2entry = Cyclotomic::root_of_unity(72, 28) *
                       Cyclotomic::sqrt_constant(72, 2) *
                       Cyclotomic::rational(72, mpq_class(1, 2));
  CHECK(g2entry.pretty_phase() == "e^{7i\\pi/9}/\\sqrt{2}");
}

TEST_CASE("float embedding accuracy") {
  CHECK(Cyclotomic::one(72).to_complex() == std::complex<double>(1.0, 0.0));
  auto i = Cyclotomic::root_of_unity(72, 18).to_complex();
  CHECK(std::abs(i.real()) < 1e-12);
  CHECK(std::abs(i.imag() - 1.0) < 1e-12);
  auto r = Cyclotomic::sqrt_constant(72, 2).to_complex();
  CHECK(std::abs(r.real() / 2 - 0.7071067811865476) < 1e-12);
  // stays accurate for the largest supported-by-contract order
  auto big = Cyclotomic::root_of_unity(144, 1).to_complex();
  CHECK(std::abs(big.real() - std::cos(2 * M_PI / 144)) < 1e-12);
  CHECK(std::abs(big.imag() - std::sin(2 * M_PI / 144)) < 1e-12);
}

TEST_CASE("inverse of zero and division semantics") {
  CHECK_THROWS_AS(Cyclotomic::zero(72).inverse(), std::domain_error);
  Cyclotomic a = Cyclotomic::root_of_unity(72, 5) +
                 Cyclotomic::rational(72, mpq_class(2, 3));
  CHECK(a.inverse() * a == Cyclotomic::one(72));
  CHECK(a.pow(-3) * a.pow(3) == Cyclotomic::one(72));
}

TEST_CASE("compare is a total order compatible with equality") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic a = random_element(rng, 12);
    Cyclotomic b = random_element(rng, 12);
    int ab = Cyclotomic::compare(a, b);
    int ba = Cyclotomic::compare(b, a);
    CHECK(ab == -ba);
    CHECK((ab == 0) == (a == b));
  }
}
