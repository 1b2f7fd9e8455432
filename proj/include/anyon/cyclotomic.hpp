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

#ifndef ANYONKIT_CYCLOTOMIC_HPP_
#define ANYONKIT_CYCLOTOMIC_HPP_

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace anyon {

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Coordinates are taken over the power basis 1, zeta, ..., zeta^{phi(n)-1}
/// after reduction modulo the n-th cyclotomic polynomial, stored as a common
/// denominator and a vector of integer numerators. The representation is
/// canonical: two values are equal iff their stored coordinates are identical,
/// so equality, hashing and serialization are all exact. No floating point
/// enters any arithmetic path; to_complex() exists for display only.
class Cyclotomic {
 public:
  Cyclotomic() : order_(0) {}  // unusable sentinel; assign before use

  static Cyclotomic zero(unsigned order);
  static Cyclotomic one(unsigned order);
  static Cyclotomic integer(unsigned order, long v);
  static Cyclotomic rational(unsigned order, const mpq_class& v);

  /// zeta_n^k inside Q(zeta_order); n must divide the ambient order.
  static Cyclotomic root_of_unity(unsigned order, long k, unsigned n);
  static Cyclotomic root_of_unity(unsigned order, long k);

  /// Exact square root of m in {2,3,6}, positive real embedding.
  /// Throws std::domain_error("field too small") when the root does not lie
  /// in Q(zeta_order).
  static Cyclotomic sqrt_constant(unsigned order, unsigned m);

  unsigned order() const { return order_; }
  unsigned degree() const { return static_cast<unsigned>(num_.size()); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;
  bool is_real() const;  // fixed by complex conjugation

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Complex conjugation, zeta -> zeta^{-1}. An involutive field automorphism.
  Cyclotomic conj() const;

  /// Multiplicative inverse via extended gcd with the cyclotomic polynomial.
  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  Cyclotomic pow(long e) const;

  /// a * conj(a); exact, real, nonnegative.
  Cyclotomic norm_sq() const;

  /// Multiplicative order, or nullopt if it exceeds `cap`.
  std::optional<unsigned> multiplicative_order(unsigned cap = 1000) const;

  /// Total order on field elements, lexicographic over the coordinate
  /// rationals. Used for canonical representatives of scalar orbits.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Canonical text form `cyc(n)[c0, c1, ...]` with rationals as `p/q`.
  /// Round-trips bit-exactly through parse().
  std::string to_string() const;
  static Cyclotomic parse(const std::string& text);

  /// `r*zeta(n)^k` when the value is a rational multiple of a root of unity.
  std::optional<std::string> pretty_root_form() const;

  /// Paper-style phase notation (`e^{7i\pi/9}`, `-1/2*e^{4i\pi/9}`, ...) when
  /// the value is rational * root of unity, possibly over sqrt(2) or sqrt(3).
  std::string pretty_phase() const;

  /// Display-only float embedding (zeta_n = exp(2*pi*i/n)).
  std::complex<double> to_complex() const;

  /// Exact rational coordinate over the power basis.
  mpq_class coordinate(unsigned i) const;

 private:
  Cyclotomic(unsigned order, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  static void check_same_field(const Cyclotomic& a, const Cyclotomic& b);

  unsigned order_;
  std::vector<mpz_class> num_;  // length phi(order_)
  mpz_class den_;               // > 0, coprime to the content of num_
};

/// Euler phi, exposed because fusion spaces and tests size things with it.
unsigned euler_phi(unsigned n);

}  // namespace anyon

#endif  // ANYONKIT_CYCLOTOMIC_HPP_
