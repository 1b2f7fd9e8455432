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

#include "anyon/todd_coxeter.hpp"

#include <deque>

namespace anyon {

namespace {

// Column encoding: generator g -> 2g, its inverse -> 2g+1.
inline int inv_col(int col) { return col ^ 1; }

std::vector<int> word_to_cols(const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (int letter : w)
    cols.push_back(letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1);
  return cols;
}

class Enumerator {
 public:
  Enumerator(std::size_t ngens, std::size_t limit)
      : ncols_(2 * ngens), limit_(limit) {
    // coset numbers are 1-based; slot 0 is unused
    tab_.push_back(std::vector<int>(ncols_, 0));
    p_.push_back(0);
    new_coset();  // coset 1
  }

  struct LimitHit {};

  int rep(int k) {
    int l = k;
    while (p_[l] != l) l = p_[l];
    int m = k;
    while (p_[m] != l) {
      int t = p_[m];
      p_[m] = l;
      m = t;
    }
    return l;
  }

  bool alive(int k) { return p_[k] == k; }

  void merge(int k, int l) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --live_;
    q_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!q_.empty()) {
      int gamma = q_.front();
      q_.pop_front();
      for (int x = 0; x < static_cast<int>(ncols_); ++x) {
        int delta = tab_[gamma][x];
        if (delta == 0) continue;
        tab_[delta][inv_col(x)] = 0;
        int mu = rep(gamma);
        int nu = rep(delta);
        if (tab_[mu][x] != 0)
          merge(nu, tab_[mu][x]);
        else if (tab_[nu][inv_col(x)] != 0)
          merge(mu, tab_[nu][inv_col(x)]);
        else {
          tab_[mu][x] = nu;
          tab_[nu][inv_col(x)] = mu;
        }
      }
    }
  }

  int define(int alpha, int x) {
    if (tab_.size() - 1 >= limit_) throw LimitHit{};
    int n = new_coset();
    tab_[alpha][x] = n;
    tab_[n][inv_col(x)] = alpha;
    return n;
  }

  // Scans relator w from alpha; fills gaps with new cosets when `fill`.
  void scan(int alpha, const std::vector<int>& w, bool fill) {
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && tab_[f][w[i]] != 0) f = tab_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab_[b][inv_col(w[j])] != 0) b = tab_[b][inv_col(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {  // deduction closes the gap
        tab_[f][w[i]] = b;
        tab_[b][inv_col(w[i])] = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  // Renumbers live cosets consecutively, dropping dead rows.
  void compact() {
    std::vector<int> remap(tab_.size(), 0);
    int next = 0;
    for (std::size_t k = 1; k < tab_.size(); ++k)
      if (alive(static_cast<int>(k))) remap[k] = ++next;
    std::vector<std::vector<int>> fresh;
    fresh.push_back(std::vector<int>(ncols_, 0));
    fresh.resize(next + 1, std::vector<int>(ncols_, 0));
    for (std::size_t k = 1; k < tab_.size(); ++k) {
      if (!alive(static_cast<int>(k))) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        int d = tab_[k][x];
        fresh[remap[k]][x] = d == 0 ? 0 : remap[rep(d)];
      }
    }
    tab_ = std::move(fresh);
    p_.assign(tab_.size(), 0);
    for (std::size_t k = 0; k < p_.size(); ++k) p_[k] = static_cast<int>(k);
  }

  std::size_t run(const std::vector<std::vector<int>>& relators,
                  const std::vector<std::vector<int>>& subgroup) {
    for (const auto& w : subgroup)
      if (!w.empty()) scan(1, w, true);
    std::size_t last_lookahead_live = SIZE_MAX;
    int alpha = 1;
    while (alpha < static_cast<int>(tab_.size())) {
      if (alive(alpha)) {
        try {
          bool died = false;
          for (const auto& r : relators) {
            scan(alpha, r, true);
            if (!alive(alpha)) {
              died = true;
              break;
            }
          }
          if (!died) {
            for (int x = 0; x < static_cast<int>(ncols_); ++x)
              if (tab_[alpha][x] == 0) define(alpha, x);
          }
        } catch (const LimitHit&) {
          // lookahead: deduce and collapse without defining, then compact
          for (int beta = 1; beta < static_cast<int>(tab_.size()); ++beta) {
            if (!alive(beta)) continue;
            for (const auto& r : relators) {
              scan(beta, r, false);
              if (!alive(beta)) break;
            }
          }
          if (live_ >= last_lookahead_live || live_ >= limit_)
            throw CosetLimitExceeded(limit_);
          last_lookahead_live = live_;
          compact();
          alpha = 0;  // restart scan over the compacted table
        }
      }
      ++alpha;
    }
    return live_;
  }

  std::size_t total_defined() const { return defined_; }

 private:
  int new_coset() {
    tab_.push_back(std::vector<int>(ncols_, 0));
    p_.push_back(static_cast<int>(tab_.size()) - 1);
    ++live_;
    ++defined_;
    return static_cast<int>(tab_.size()) - 1;
  }

  std::size_t ncols_;
  std::size_t limit_;
  std::vector<std::vector<int>> tab_;
  std::vector<int> p_;
  std::deque<int> q_;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
};

}  // namespace

CosetEnumResult todd_coxeter(const GroupPresentation& pres,
                             const std::vector<Word>& subgroup_words,
                             std::size_t max_cosets) {
  Enumerator en(pres.generators().size(), max_cosets);
  std::vector<std::vector<int>> rels;
  for (const auto& r : pres.relators())
    if (!r.empty()) rels.push_back(word_to_cols(r));
  std::vector<std::vector<int>> subs;
  for (const auto& w : subgroup_words) subs.push_back(word_to_cols(w));
  CosetEnumResult result;
  result.index = en.run(rels, subs);
  result.total_defined = en.total_defined();
  return result;
}

}  // namespace anyon
