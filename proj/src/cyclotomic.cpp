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

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace anyon {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Integer polynomials, dense, little-endian coefficients.
using IPoly = std::vector<mpz_class>;

void ipoly_trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly c(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

// Exact division of integer polynomials; quotient must be integral.
IPoly ipoly_divexact(IPoly num, const IPoly& den) {
  ipoly_trim(num);
  IPoly q;
  if (num.empty()) return q;
  if (den.empty() || num.size() < den.size())
    throw std::logic_error("cyclotomic polynomial division underflow");
  q.assign(num.size() - den.size() + 1, mpz_class(0));
  for (size_t shift = num.size() - den.size() + 1; shift-- > 0;) {
    mpz_class lead = num[shift + den.size() - 1];
    if (lead == 0) continue;
    mpz_class coef = lead / den.back();
    if (coef * den.back() != lead)
      throw std::logic_error("cyclotomic polynomial division not exact");
    q[shift] = coef;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= coef * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("cyclotomic polynomial remainder");
  return q;
}

// Phi_n via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
IPoly cyclotomic_polynomial(unsigned n, std::map<unsigned, IPoly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IPoly num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  IPoly den{1};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    den = ipoly_mul(den, cyclotomic_polynomial(d, cache));
  }
  IPoly phi = ipoly_divexact(std::move(num), den);
  cache[n] = phi;
  return phi;
}

struct FieldData {
  unsigned order = 0;
  unsigned phi = 0;
  IPoly minpoly;  // Phi_n, monic, degree phi
  // x^e mod Phi_n for 0 <= e < n and for phi <= e <= 2*phi-2 (integer rows).
  std::vector<std::vector<mpz_class>> zeta_pow;  // e in [0, n)
  std::vector<std::vector<mpz_class>> red_row;   // e-phi in [0, phi-1)
};

const FieldData& field_data(unsigned order) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<FieldData>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(order);
  if (it != registry.end()) return *it->second;
  if (order == 0) throw std::invalid_argument("field order must be positive");

  auto fd = std::make_unique<FieldData>();
  fd->order = order;
  std::map<unsigned, IPoly> cache;
  fd->minpoly = cyclotomic_polynomial(order, cache);
  fd->phi = static_cast<unsigned>(fd->minpoly.size()) - 1;
  const unsigned phi = fd->phi;

  // Iterate x^e -> x^{e+1} with reduction by the monic minimal polynomial.
  std::vector<mpz_class> cur(phi, mpz_class(0));
  cur[0] = 1;
  unsigned span = std::max(order, 2 * phi - 1);
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(span);
  rows.push_back(cur);
  for (unsigned e = 1; e < span; ++e) {
    std::vector<mpz_class> next(phi, mpz_class(0));
    mpz_class lead = cur[phi - 1];
    for (unsigned j = phi - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = 0;
    if (lead != 0) {
      for (unsigned j = 0; j < phi; ++j) next[j] -= lead * fd->minpoly[j];
    }
    rows.push_back(next);
    cur = std::move(next);
  }
  fd->zeta_pow.assign(rows.begin(), rows.begin() + order);
  fd->red_row.clear();
  for (unsigned e = phi; e <= 2 * phi - 2; ++e) fd->red_row.push_back(rows[e]);

  const FieldData& ref = *fd;
  registry[order] = std::move(fd);
  return ref;
}

mpz_class vec_content(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

// Rational polynomials for the extended-gcd inverse path.
using QPoly = std::vector<mpq_class>;

void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), mpq_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qpoly_trim(a);
  return a;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  qpoly_trim(c);
  return c;
}

// Division with remainder; returns quotient, leaves remainder in `a`.
QPoly qpoly_divmod(QPoly& a, const QPoly& b) {
  QPoly q;
  if (a.size() >= b.size()) {
    q.assign(a.size() - b.size() + 1, mpq_class(0));
    for (size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
      if (a[shift + b.size() - 1] == 0) continue;
      mpq_class coef = a[shift + b.size() - 1] / b.back();
      q[shift] = coef;
      for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= coef * b[j];
    }
  }
  qpoly_trim(a);
  qpoly_trim(q);
  return q;
}

std::string rational_str(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<mpz_class> num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  if (den_ == 0) throw std::logic_error("zero denominator");
  mpz_class g = gcd(vec_content(num_), den_);
  if (g == 0) {
    den_ = 1;  // all-zero numerators
    return;
  }
  if (g > 1) {
    for (auto& x : num_) x /= g;
    den_ /= g;
  }
}

void Cyclotomic::check_same_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("cyclotomic field order mismatch: " +
                                std::to_string(a.order_) + " vs " +
                                std::to_string(b.order_));
}

Cyclotomic Cyclotomic::zero(unsigned order) {
  const FieldData& fd = field_data(order);
  return Cyclotomic(order, std::vector<mpz_class>(fd.phi, mpz_class(0)), 1);
}

Cyclotomic Cyclotomic::one(unsigned order) { return integer(order, 1); }

Cyclotomic Cyclotomic::integer(unsigned order, long v) {
  const FieldData& fd = field_data(order);
  std::vector<mpz_class> num(fd.phi, mpz_class(0));
  num[0] = v;
  return Cyclotomic(order, std::move(num), 1);
}

Cyclotomic Cyclotomic::rational(unsigned order, const mpq_class& v) {
  const FieldData& fd = field_data(order);
  mpq_class c = v;
  c.canonicalize();
  std::vector<mpz_class> num(fd.phi, mpz_class(0));
  num[0] = c.get_num();
  return Cyclotomic(order, std::move(num), c.get_den());
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long k, unsigned n) {
  if (n == 0 || order % n != 0)
    throw std::invalid_argument("root order " + std::to_string(n) +
                                " does not divide field order " +
                                std::to_string(order));
  const FieldData& fd = field_data(order);
  long stride = static_cast<long>(order / n);
  long e = (k % static_cast<long>(n)) * stride;
  if (e < 0) e += order;
  return Cyclotomic(order, fd.zeta_pow[static_cast<unsigned>(e)], 1);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long k) {
  return root_of_unity(order, k, order);
}

Cyclotomic Cyclotomic::sqrt_constant(unsigned order, unsigned m) {
  // sqrt(2) = zeta_8 + zeta_8^{-1}, sqrt(3) = zeta_12 + zeta_12^{-1}; both are
  // 2*cos of the respective angle, hence the positive real root.
  auto need = [&](unsigned n) {
    if (order % n != 0)
      throw std::domain_error("field too small: sqrt(" + std::to_string(m) +
                              ") requires order divisible by " +
                              std::to_string(n));
  };
  switch (m) {
    case 2:
      need(8);
      return root_of_unity(order, 1, 8) + root_of_unity(order, -1, 8);
    case 3:
      need(12);
      return root_of_unity(order, 1, 12) + root_of_unity(order, -1, 12);
    case 6:
      need(24);
      return sqrt_constant(order, 2) * sqrt_constant(order, 3);
    default:
      throw std::invalid_argument("sqrt_constant supports m in {2,3,6}");
  }
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : num_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (den_ != 1 || num_.empty() || num_[0] != 1) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

std::optional<mpq_class> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

bool Cyclotomic::is_real() const { return conj() == *this; }

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same_field(*this, o);
  mpz_class g = gcd(den_, o.den_);
  mpz_class la = o.den_ / g, lb = den_ / g;
  std::vector<mpz_class> num(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) num[i] = num_[i] * la + o.num_[i] * lb;
  return Cyclotomic(order_, std::move(num), den_ * la);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  std::vector<mpz_class> num(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) num[i] = -num_[i];
  return Cyclotomic(order_, std::move(num), den_);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same_field(*this, o);
  const FieldData& fd = field_data(order_);
  const unsigned phi = fd.phi;
  std::vector<mpz_class> conv(2 * phi - 1, mpz_class(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (num_[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (o.num_[j] == 0) continue;
      conv[i + j] += num_[i] * o.num_[j];
    }
  }
  std::vector<mpz_class> num(conv.begin(), conv.begin() + phi);
  for (unsigned e = phi; e < 2 * phi - 1; ++e) {
    if (conv[e] == 0) continue;
    const auto& row = fd.red_row[e - phi];
    for (unsigned j = 0; j < phi; ++j)
      if (row[j] != 0) num[j] += conv[e] * row[j];
  }
  return Cyclotomic(order_, std::move(num), den_ * o.den_);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return order_ == o.order_ && den_ == o.den_ && num_ == o.num_;
}

Cyclotomic Cyclotomic::conj() const {
  const FieldData& fd = field_data(order_);
  std::vector<mpz_class> num(fd.phi, mpz_class(0));
  for (unsigned k = 0; k < fd.phi; ++k) {
    if (num_[k] == 0) continue;
    const auto& row = fd.zeta_pow[(order_ - k) % order_];
    for (unsigned j = 0; j < fd.phi; ++j)
      if (row[j] != 0) num[j] += num_[k] * row[j];
  }
  return Cyclotomic(order_, std::move(num), den_);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  const FieldData& fd = field_data(order_);
  // Extended Euclid over Q[x]: u*a + v*Phi = gcd = nonzero constant.
  QPoly r0(fd.minpoly.size());
  for (size_t i = 0; i < fd.minpoly.size(); ++i) r0[i] = mpq_class(fd.minpoly[i]);
  QPoly r1(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) r1[i] = mpq_class(num_[i], den_);
  qpoly_trim(r1);
  QPoly s0{}, s1{mpq_class(1)};  // coefficients of `a` in r0, r1
  while (r1.size() > 1) {
    QPoly rem = r0;
    QPoly q = qpoly_divmod(rem, r1);
    QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::logic_error("reducible cyclotomic polynomial?");
  mpq_class c = r1[0];  // u*a == c (mod Phi), c constant nonzero
  std::vector<mpz_class> num(fd.phi, mpz_class(0));
  mpz_class den = 1;
  // inverse = s1 / c, as an exact rational polynomial of degree < phi.
  mpz_class common = 1;
  for (auto& coef : s1) {
    coef /= c;
    coef.canonicalize();
    common = lcm(common, coef.get_den());
  }
  for (size_t i = 0; i < s1.size(); ++i)
    num[i] = s1[i].get_num() * (common / s1[i].get_den());
  den = common;
  return Cyclotomic(order_, std::move(num), std::move(den));
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = *this;
  if (e < 0) {
    base = inverse();
    e = -e;
  }
  Cyclotomic acc = one(order_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::norm_sq() const { return *this * conj(); }

std::optional<unsigned> Cyclotomic::multiplicative_order(unsigned cap) const {
  Cyclotomic acc = *this;
  for (unsigned k = 1; k <= cap; ++k) {
    if (acc.is_one()) return k;
    acc *= *this;
  }
  return std::nullopt;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_field(a, b);
  for (size_t i = 0; i < a.num_.size(); ++i) {
    // compare a.num[i]/a.den vs b.num[i]/b.den exactly
    mpz_class lhs = a.num_[i] * b.den_;
    mpz_class rhs = b.num_[i] * a.den_;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
  }
  return 0;
}

mpq_class Cyclotomic::coordinate(unsigned i) const {
  mpq_class q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

std::string Cyclotomic::to_string() const {
  std::string out = "cyc(" + std::to_string(order_) + ")[";
  for (size_t i = 0; i < num_.size(); ++i) {
    if (i) out += ", ";
    mpq_class q(num_[i], den_);
    q.canonicalize();
    out += rational_str(q);
  }
  out += "]";
  return out;
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  size_t p = text.find("cyc(");
  if (p == std::string::npos) throw std::invalid_argument("bad cyclotomic literal: " + text);
  size_t close = text.find(')', p);
  size_t open = text.find('[', p);
  size_t end = text.find(']', p);
  if (close == std::string::npos || open == std::string::npos || end == std::string::npos)
    throw std::invalid_argument("bad cyclotomic literal: " + text);
  unsigned order = static_cast<unsigned>(std::stoul(text.substr(p + 4, close - p - 4)));
  const FieldData& fd = field_data(order);
  std::vector<mpq_class> coords;
  std::string body = text.substr(open + 1, end - open - 1);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    coords.emplace_back(tok);
    coords.back().canonicalize();
  }
  if (coords.size() != fd.phi)
    throw std::invalid_argument("expected " + std::to_string(fd.phi) +
                                " coordinates for cyc(" + std::to_string(order) + ")");
  mpz_class den = 1;
  for (const auto& c : coords) den = lcm(den, c.get_den());
  std::vector<mpz_class> num(fd.phi);
  for (size_t i = 0; i < coords.size(); ++i)
    num[i] = coords[i].get_num() * (den / coords[i].get_den());
  return Cyclotomic(order, std::move(num), std::move(den));
}

std::optional<std::string> Cyclotomic::pretty_root_form() const {
  if (is_zero()) return "0";
  for (unsigned k = 0; k < order_; ++k) {
    Cyclotomic q = *this * root_of_unity(order_, -static_cast<long>(k));
    if (auto r = q.as_rational()) {
      std::string s = rational_str(*r);
      if (k == 0) return s;
      std::string root = "zeta(" + std::to_string(order_) + ")";
      if (k > 1) root += "^" + std::to_string(k);
      if (*r == 1) return root;
      if (*r == -1) return "-" + root;
      return s + "*" + root;
    }
  }
  return std::nullopt;
}

namespace {

// Renders q * e^{2*pi*i*k/n} in exponential phase notation.
std::string phase_str(const mpq_class& q, unsigned k, unsigned n,
                      const std::string& radical_suffix) {
  mpq_class r = q;
  r.canonicalize();
  std::string mag;
  bool neg = r < 0;
  if (neg) r = -r;
  if (r != 1 || (k == 0 && radical_suffix.empty())) mag = rational_str(r);

  std::string phase;
  if (k != 0) {
    // 2k/n reduced as a multiple of pi
    unsigned g = std::gcd(2 * k, n);
    unsigned p = 2 * k / g, qq = n / g;
    std::string num = (p == 1) ? "i\\pi" : std::to_string(p) + "i\\pi";
    phase = "e^{" + num + (qq == 1 ? "" : "/" + std::to_string(qq)) + "}";
  }
  std::string out = neg ? "-" : "";
  if (!mag.empty() && !phase.empty())
    out += mag + "*" + phase;
  else
    out += mag + phase;
  if (!radical_suffix.empty()) out += radical_suffix;
  if (out == "-" || out.empty()) out += "1";
  return out;
}

}  // namespace

std::string Cyclotomic::pretty_phase() const {
  if (is_zero()) return "0";
  for (unsigned k = 0; k < order_; ++k) {
    Cyclotomic rot = *this * root_of_unity(order_, -static_cast<long>(k));
    if (auto r = rot.as_rational()) return phase_str(*r, k, order_, "");
  }
  // try rational * root / sqrt(m) for entries with radical denominators
  for (unsigned m : {2u, 3u, 6u}) {
    if ((m == 2 && order_ % 8) || (m == 3 && order_ % 12) || (m == 6 && order_ % 24))
      continue;
    Cyclotomic scaled = *this * sqrt_constant(order_, m);
    for (unsigned k = 0; k < order_; ++k) {
      Cyclotomic rot = scaled * root_of_unity(order_, -static_cast<long>(k));
      if (auto r = rot.as_rational())
        return phase_str(*r, k, order_, "/\\sqrt{" + std::to_string(m) + "}");
    }
  }
  return to_string();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<long double> acc(0.0L, 0.0L);
  long double dden = den_.get_d();
  for (size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    long double angle = 2.0L * static_cast<long double>(kPi) *
                        static_cast<long double>(k) / static_cast<long double>(order_);
    long double c = num_[k].get_d();
    acc += std::complex<long double>(c * std::cos(angle), c * std::sin(angle));
  }
  acc /= dden;
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace anyon
