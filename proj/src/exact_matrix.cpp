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
#include <sstream>
#include <stdexcept>

namespace anyon {

ExactMatrix::ExactMatrix(unsigned dim, unsigned order)
    : dim_(dim), order_(order), e_(dim * dim, Cyclotomic::zero(order)) {}

ExactMatrix ExactMatrix::identity(unsigned dim, unsigned order) {
  ExactMatrix m(dim, order);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = Cyclotomic::one(order);
  return m;
}

ExactMatrix ExactMatrix::from_rows(unsigned order,
                                   const std::vector<std::vector<Cyclotomic>>& rows) {
  unsigned dim = static_cast<unsigned>(rows.size());
  ExactMatrix m(dim, order);
  for (unsigned i = 0; i < dim; ++i) {
    if (rows[i].size() != dim) throw std::invalid_argument("ragged matrix rows");
    for (unsigned j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::diagonal(unsigned order, const std::vector<Cyclotomic>& d) {
  unsigned dim = static_cast<unsigned>(d.size());
  ExactMatrix m(dim, order);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = d[i];
  return m;
}

const Cyclotomic& ExactMatrix::at(unsigned i, unsigned j) const {
  return e_.at(i * dim_ + j);
}

Cyclotomic& ExactMatrix::at(unsigned i, unsigned j) { return e_.at(i * dim_ + j); }

void ExactMatrix::check_shape(const ExactMatrix& o) const {
  if (dim_ != o.dim_ || order_ != o.order_)
    throw std::invalid_argument("matrix shape or field mismatch");
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  check_shape(o);
  ExactMatrix r(dim_, order_);
  for (unsigned i = 0; i < dim_; ++i) {
    for (unsigned k = 0; k < dim_; ++k) {
      const Cyclotomic& a = at(i, k);
      if (a.is_zero()) continue;
      for (unsigned j = 0; j < dim_; ++j) {
        const Cyclotomic& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  check_shape(o);
  ExactMatrix r = *this;
  for (unsigned i = 0; i < dim_ * dim_; ++i) r.e_[i] += o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  check_shape(o);
  ExactMatrix r = *this;
  for (unsigned i = 0; i < dim_ * dim_; ++i) r.e_[i] += -o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& s) const {
  ExactMatrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return dim_ == o.dim_ && order_ == o.order_ && e_ == o.e_;
}

StateVector ExactMatrix::apply(const StateVector& v) const {
  if (v.dim() != dim_ || v.order() != order_)
    throw std::invalid_argument("matrix/vector dimension mismatch");
  std::vector<Cyclotomic> out(dim_, Cyclotomic::zero(order_));
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) {
      if (at(i, j).is_zero() || v.at(j).is_zero()) continue;
      out[i] += at(i, j) * v.at(j);
    }
  return StateVector(order_, std::move(out));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(dim_, order_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::dagger() const {
  ExactMatrix r(dim_, order_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

Cyclotomic ExactMatrix::determinant() const {
  if (dim_ == 0) return Cyclotomic::one(order_);
  if (dim_ == 1) return at(0, 0);
  if (dim_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (dim_ == 3) {
    // cofactor expansion along the first row
    Cyclotomic det = Cyclotomic::zero(order_);
    det += at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
    det += -(at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)));
    det += at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    return det;
  }
  // generic path: exact Gaussian elimination
  std::vector<Cyclotomic> a = e_;
  Cyclotomic det = Cyclotomic::one(order_);
  for (unsigned col = 0; col < dim_; ++col) {
    unsigned pivot = col;
    while (pivot < dim_ && a[pivot * dim_ + col].is_zero()) ++pivot;
    if (pivot == dim_) return Cyclotomic::zero(order_);
    if (pivot != col) {
      for (unsigned j = 0; j < dim_; ++j)
        std::swap(a[pivot * dim_ + j], a[col * dim_ + j]);
      det = -det;
    }
    Cyclotomic p = a[col * dim_ + col];
    det *= p;
    Cyclotomic pinv = p.inverse();
    for (unsigned i = col + 1; i < dim_; ++i) {
      Cyclotomic f = a[i * dim_ + col];
      if (f.is_zero()) continue;
      f *= pinv;
      for (unsigned j = col; j < dim_; ++j)
        a[i * dim_ + j] += -(f * a[col * dim_ + j]);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  // Gauss-Jordan on [A | I]; exact pivots over the field.
  std::vector<Cyclotomic> a = e_;
  ExactMatrix inv = identity(dim_, order_);
  for (unsigned col = 0; col < dim_; ++col) {
    unsigned pivot = col;
    while (pivot < dim_ && a[pivot * dim_ + col].is_zero()) ++pivot;
    if (pivot == dim_) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (unsigned j = 0; j < dim_; ++j) {
        std::swap(a[pivot * dim_ + j], a[col * dim_ + j]);
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Cyclotomic pinv = a[col * dim_ + col].inverse();
    for (unsigned j = 0; j < dim_; ++j) {
      a[col * dim_ + j] *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (unsigned i = 0; i < dim_; ++i) {
      if (i == col) continue;
      Cyclotomic f = a[i * dim_ + col];
      if (f.is_zero()) continue;
      for (unsigned j = 0; j < dim_; ++j) {
        a[i * dim_ + j] += -(f * a[col * dim_ + j]);
        inv.at(i, j) += -(f * inv.at(col, j));
      }
    }
  }
  return inv;
}

ExactMatrix ExactMatrix::pow(long e) const {
  ExactMatrix base = *this;
  if (e < 0) {
    base = inverse();
    e = -e;
  }
  ExactMatrix acc = identity(dim_, order_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool ExactMatrix::is_unitary() const { return (*this * dagger()).is_identity(); }

bool ExactMatrix::is_diagonal() const {
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<Cyclotomic> ExactMatrix::scalar_multiple_of(const ExactMatrix& o) const {
  if (dim_ != o.dim_ || order_ != o.order_) return std::nullopt;
  // lambda from the first nonzero entry of o, then verify everywhere
  std::optional<Cyclotomic> lambda;
  for (unsigned i = 0; i < dim_ * dim_ && !lambda; ++i) {
    if (!o.e_[i].is_zero()) lambda = e_[i] * o.e_[i].inverse();
  }
  if (!lambda) {
    // o == 0: equal only if *this == 0 too
    for (const auto& x : e_)
      if (!x.is_zero()) return std::nullopt;
    return Cyclotomic::one(order_);
  }
  for (unsigned i = 0; i < dim_ * dim_; ++i)
    if (e_[i] != *lambda * o.e_[i]) return std::nullopt;
  return lambda;
}

std::vector<Cyclotomic> roots_of_unity_in_field(unsigned order) {
  std::vector<Cyclotomic> out;
  if (order % 2 == 0) {
    out.reserve(order);
    for (unsigned k = 0; k < order; ++k)
      out.push_back(Cyclotomic::root_of_unity(order, k));
  } else {
    out.reserve(2 * order);
    for (unsigned k = 0; k < order; ++k) {
      Cyclotomic z = Cyclotomic::root_of_unity(order, k);
      out.push_back(z);
      out.push_back(-z);
    }
  }
  return out;
}

ExactMatrix ExactMatrix::canonical_projective_form(ScalarSet scalars) const {
  std::vector<Cyclotomic> lambdas;
  if (scalars == ScalarSet::kCenterOfSU3) {
    if (order_ % 3 != 0)
      throw std::domain_error("field too small: center of SU(3) needs zeta_3");
    for (unsigned k = 0; k < 3; ++k)
      lambdas.push_back(Cyclotomic::root_of_unity(order_, k, 3));
  } else {
    lambdas = roots_of_unity_in_field(order_);
  }
  std::optional<ExactMatrix> result;
  for (const auto& lam : lambdas) {
    ExactMatrix candidate = scaled(lam);
    if (!result || compare(candidate, *result) < 0) result = candidate;
  }
  return *result;
}

ExactMatrix ExactMatrix::su_normalize() const {
  Cyclotomic det = determinant();
  if (det.is_zero()) throw std::domain_error("singular matrix");
  std::optional<ExactMatrix> result;
  for (const auto& lam : roots_of_unity_in_field(order_)) {
    if (!(lam.pow(dim_) * det).is_one()) continue;
    ExactMatrix candidate = scaled(lam);
    if (!result || compare(candidate, *result) < 0) result = candidate;
  }
  if (!result) throw std::domain_error("phase outside field");
  return *result;
}

int ExactMatrix::compare(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_ || a.order_ != b.order_)
    throw std::invalid_argument("comparing matrices of different shape");
  for (unsigned i = 0; i < a.dim_ * a.dim_; ++i) {
    int c = Cyclotomic::compare(a.e_[i], b.e_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string ExactMatrix::canonical_key() const {
  std::string out = std::to_string(dim_) + "@" + std::to_string(order_) + ":";
  for (const auto& x : e_) {
    out += x.to_string();
    out += ";";
  }
  return out;
}

std::string ExactMatrix::to_json() const {
  std::string out = "[";
  for (unsigned i = 0; i < dim_; ++i) {
    if (i) out += ",";
    out += "[";
    for (unsigned j = 0; j < dim_; ++j) {
      if (j) out += ",";
      out += "\"" + at(i, j).to_string() + "\"";
    }
    out += "]";
  }
  out += "]";
  return out;
}

ExactMatrix ExactMatrix::from_json(const std::string& text) {
  // minimal parser for the array-of-arrays-of-strings shape emitted above
  std::vector<std::vector<Cyclotomic>> rows;
  size_t pos = 0;
  auto skip = [&](char c) {
    pos = text.find(c, pos);
    if (pos == std::string::npos) throw std::invalid_argument("bad matrix JSON");
    ++pos;
  };
  skip('[');
  while (true) {
    size_t open = text.find('[', pos);
    size_t close = text.find(']', pos);
    if (close == std::string::npos) throw std::invalid_argument("bad matrix JSON");
    if (open == std::string::npos || close < open) break;
    pos = open + 1;
    std::vector<Cyclotomic> row;
    while (true) {
      size_t q1 = text.find('"', pos);
      size_t end = text.find(']', pos);
      if (q1 == std::string::npos || (end != std::string::npos && end < q1)) {
        pos = end + 1;
        break;
      }
      size_t q2 = text.find('"', q1 + 1);
      if (q2 == std::string::npos) throw std::invalid_argument("bad matrix JSON");
      row.push_back(Cyclotomic::parse(text.substr(q1 + 1, q2 - q1 - 1)));
      pos = q2 + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix JSON");
  return from_rows(rows[0][0].order(), rows);
}

std::string ExactMatrix::pretty() const {
  std::ostringstream out;
  std::vector<std::vector<std::string>> cells(dim_);
  size_t width = 0;
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) {
      cells[i].push_back(at(i, j).pretty_phase());
      width = std::max(width, cells[i].back().size());
    }
  for (unsigned i = 0; i < dim_; ++i) {
    out << "[ ";
    for (unsigned j = 0; j < dim_; ++j) {
      out << cells[i][j];
      out << std::string(width - cells[i][j].size() + (j + 1 < dim_ ? 2 : 0), ' ');
    }
    out << "]";
    if (i + 1 < dim_) out << "\n";
  }
  return out.str();
}

StateVector::StateVector(unsigned order, std::vector<Cyclotomic> entries)
    : order_(order), e_(std::move(entries)) {}

StateVector StateVector::basis_state(unsigned dim, unsigned order, unsigned index) {
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<Cyclotomic> e(dim, Cyclotomic::zero(order));
  e[index] = Cyclotomic::one(order);
  return StateVector(order, std::move(e));
}

StateVector StateVector::zero(unsigned dim, unsigned order) {
  return StateVector(order, std::vector<Cyclotomic>(dim, Cyclotomic::zero(order)));
}

StateVector StateVector::operator+(const StateVector& o) const {
  if (dim() != o.dim() || order_ != o.order_)
    throw std::invalid_argument("state vector shape mismatch");
  std::vector<Cyclotomic> e(e_);
  for (unsigned i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return StateVector(order_, std::move(e));
}

StateVector StateVector::scaled(const Cyclotomic& s) const {
  std::vector<Cyclotomic> e(e_);
  for (auto& x : e) x *= s;
  return StateVector(order_, std::move(e));
}

bool StateVector::operator==(const StateVector& o) const {
  return order_ == o.order_ && e_ == o.e_;
}

Cyclotomic StateVector::norm_sq() const {
  Cyclotomic acc = Cyclotomic::zero(order_);
  for (const auto& x : e_) {
    if (x.is_zero()) continue;
    acc += x * x.conj();
  }
  return acc;
}

std::string StateVector::to_json() const {
  std::string out = "[";
  for (unsigned i = 0; i < dim(); ++i) {
    if (i) out += ",";
    out += "\"" + e_[i].to_string() + "\"";
  }
  out += "]";
  return out;
}

}  // namespace anyon
