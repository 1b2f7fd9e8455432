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

#include "anyon/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace anyon {

ExactMatrix GroupClosure::canonize(const ExactMatrix& m) const {
  if (mode_ == ClosureMode::kModCenter)
    return m.canonical_projective_form(ExactMatrix::ScalarSet::kCenterOfSU3);
  return m;
}

std::size_t GroupClosure::insert(const ExactMatrix& m) {
  std::string key = m.canonical_key();
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  elements_.push_back(m);
  index_.emplace(std::move(key), elements_.size() - 1);
  return elements_.size() - 1;
}

GroupClosure GroupClosure::closure(const std::vector<ExactMatrix>& generators,
                                   std::vector<std::string> names,
                                   ClosureMode mode, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  for (const auto& g : generators) {
    if (g.dim() != generators[0].dim() || g.order() != generators[0].order())
      throw std::invalid_argument("generator shape mismatch");
    if (!g.is_unitary()) throw std::invalid_argument("generator is not unitary");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < generators.size(); ++i)
      names.push_back("g" + std::to_string(i));
  }
  if (names.size() != generators.size())
    throw std::invalid_argument("generator/name count mismatch");

  GroupClosure c;
  c.mode_ = mode;
  c.generators_ = generators;
  c.names_ = std::move(names);

  ExactMatrix id = ExactMatrix::identity(generators[0].dim(), generators[0].order());
  c.insert(c.canonize(id));
  c.words_.push_back({});

  for (std::size_t cur = 0; cur < c.elements_.size(); ++cur) {
    for (std::size_t j = 0; j < c.generators_.size(); ++j) {
      ExactMatrix prod = c.canonize(c.elements_[cur] * c.generators_[j]);
      std::size_t before = c.elements_.size();
      std::size_t idx = c.insert(prod);
      if (idx == before) {  // new element
        if (c.elements_.size() > cap)
          throw std::runtime_error(
              "closure cap exceeded: group may be infinite or cap too small");
        std::vector<unsigned> w = c.words_[cur];
        w.push_back(static_cast<unsigned>(j));
        c.words_.push_back(std::move(w));
      }
    }
  }
  return c;
}

std::string GroupClosure::word(std::size_t i) const {
  const auto& w = words_.at(i);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += names_[w[k]];
  }
  return out;
}

ExactMatrix GroupClosure::evaluate_word(std::size_t i) const {
  ExactMatrix acc =
      ExactMatrix::identity(generators_[0].dim(), generators_[0].order());
  for (unsigned j : words_.at(i)) acc = acc * generators_[j];
  return canonize(acc);
}

bool GroupClosure::contains(const ExactMatrix& m) const {
  return index_of(m).has_value();
}

std::optional<std::size_t> GroupClosure::index_of(const ExactMatrix& m) const {
  auto it = index_.find(canonize(m).canonical_key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool GroupClosure::equal_as_sets(const GroupClosure& o) const {
  if (size() != o.size()) return false;
  for (const auto& [key, idx] : index_)
    if (o.index_.find(key) == o.index_.end()) return false;
  return true;
}

GroupClosure GroupClosure::conjugated(const ExactMatrix& p, bool use_transpose) const {
  ExactMatrix left = use_transpose ? p.transpose() : p.inverse();
  GroupClosure out;
  out.mode_ = mode_;
  out.names_ = names_;
  for (const auto& g : generators_) out.generators_.push_back(left * g * p);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    out.insert(canonize(left * elements_[i] * p));
    out.words_.push_back(words_[i]);
  }
  if (out.elements_.size() != elements_.size())
    throw std::runtime_error("conjugation collapsed distinct elements");
  return out;
}

unsigned GroupClosure::element_order(const ExactMatrix& m) const {
  ExactMatrix id = canonize(
      ExactMatrix::identity(m.dim(), m.order()));
  ExactMatrix acc = canonize(m);
  for (unsigned k = 1; k <= 100000; ++k) {
    if (acc == id) return k;
    acc = canonize(acc * m);
  }
  throw std::runtime_error("element order cap exceeded");
}

std::vector<std::size_t> GroupClosure::center_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    bool central = true;
    for (const auto& g : generators_) {
      if (canonize(elements_[i] * g) != canonize(g * elements_[i])) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(i);
  }
  return out;
}

std::size_t GroupClosure::diagonal_count() const {
  std::size_t n = 0;
  for (const auto& m : elements_)
    if (m.is_diagonal()) ++n;
  return n;
}

bool GroupClosure::verify_group(std::size_t budget) const {
  ExactMatrix id =
      ExactMatrix::identity(generators_[0].dim(), generators_[0].order());
  if (!contains(id)) return false;
  for (const auto& m : elements_)
    if (!contains(m.dagger())) return false;  // unitary inverse
  if (size() * size() <= budget) {
    for (const auto& a : elements_)
      for (const auto& b : elements_)
        if (!contains(a * b)) return false;
    return true;
  }
  std::size_t step = size() * size() / budget + 1;
  std::size_t k = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (k++ % step == 0 && !contains(elements_[i] * elements_[j])) return false;
  return true;
}

Fingerprint GroupClosure::fingerprint() const {
  Fingerprint fp;
  fp.order = size();
  fp.center_order = center_indices().size();
  for (const auto& m : elements_) ++fp.element_order_histogram[element_order(m)];

  // conjugacy classes: orbits of conjugation by the generators
  std::vector<char> seen(size(), 0);
  std::vector<ExactMatrix> gen_inv;
  for (const auto& g : generators_) gen_inv.push_back(g.dagger());
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++fp.conjugacy_class_count;
    std::vector<std::size_t> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < generators_.size(); ++j) {
        ExactMatrix conj = canonize(gen_inv[j] * elements_[cur] * generators_[j]);
        std::size_t idx = index_of(conj).value();
        if (!seen[idx]) {
          seen[idx] = 1;
          stack.push_back(idx);
        }
      }
    }
  }

  // derived subgroup: normal closure of the generator commutators. Close the
  // generating set under subgroup products, then adjoin any conjugates that
  // escaped and re-close until stable.
  std::vector<ExactMatrix> span;
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      span.push_back(canonize(a.dagger() * b.dagger() * a * b));
  std::vector<std::size_t> members;
  while (true) {
    std::vector<char> in_derived(size(), 0);
    members.clear();
    auto add = [&](const ExactMatrix& m) {
      std::size_t idx = index_of(m).value();
      if (!in_derived[idx]) {
        in_derived[idx] = 1;
        members.push_back(idx);
      }
    };
    add(canonize(ExactMatrix::identity(generators_[0].dim(), generators_[0].order())));
    for (std::size_t head = 0; head < members.size(); ++head) {
      ExactMatrix x = elements_[members[head]];
      for (const auto& s : span) add(canonize(x * s));
    }
    bool stable = true;
    for (std::size_t idx : members) {
      for (std::size_t j = 0; j < generators_.size() && stable; ++j) {
        ExactMatrix conj = canonize(gen_inv[j] * elements_[idx] * generators_[j]);
        if (!in_derived[index_of(conj).value()]) {
          span.push_back(conj);
          stable = false;
        }
      }
      if (!stable) break;
    }
    if (stable) break;
  }
  fp.derived_subgroup_order = members.size();
  return fp;
}

std::string Fingerprint::to_json() const {
  std::string out = "{\"order\":" + std::to_string(order) +
                    ",\"center_order\":" + std::to_string(center_order) +
                    ",\"element_order_histogram\":{";
  bool first = true;
  for (const auto& [ord, count] : element_order_histogram) {
    if (!first) out += ",";
    first = false;
    out += "\"" + std::to_string(ord) + "\":" + std::to_string(count);
  }
  out += "},\"conjugacy_class_count\":" + std::to_string(conjugacy_class_count) +
         ",\"derived_subgroup_order\":" + std::to_string(derived_subgroup_order) + "}";
  return out;
}

std::string GroupClosure::to_json(bool include_elements) const {
  std::string out = "{\"order\":" + std::to_string(size()) + ",\"mode\":\"" +
                    (mode_ == ClosureMode::kExact ? "exact" : "pu") +
                    "\",\"generators\":[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ",";
    out += "\"" + names_[i] + "\"";
  }
  out += "]";
  if (include_elements) {
    out += ",\"elements\":[";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ",";
      out += "{\"matrix\":" + elements_[i].to_json() + ",\"word\":\"" + word(i) +
             "\",\"order\":" + std::to_string(element_order(elements_[i])) + "}";
    }
    out += "]";
  }
  out += ",\"fingerprint\":" + fingerprint().to_json() + "}";
  return out;
}

}  // namespace anyon
