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

#include "anyon/braid.hpp"

#include <map>
#include <stdexcept>

namespace anyon {

namespace {

// Sign convention for the fusion-tree basis: a basis vector carries a factor
// of -1 for each internal edge labeled 2. The F-matrices themselves stay in
// the unital gauge (vacuum moves are identities there); resigning the tree
// vectors is what aligns the derived braid matrices with the published
// qutrit and qubit forms up to one global phase. No unital vertex regauge
// can do this: the all-charge-2 F-matrix sign pattern is gauge-invariant.
int internal_label_sign(Charge x) { return x == 2 ? -1 : 1; }

}  // namespace

BraidWord BraidWord::parse(const std::string& text) {
  BraidWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    std::size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("bad braid move (want s<i>:<sign>): " + tok);
    std::size_t colon = tok.find(':');
    unsigned idx;
    int sign = 1;
    try {
      idx = static_cast<unsigned>(std::stoul(tok.substr(1, colon - 1)));
      if (colon != std::string::npos) sign = std::stoi(tok.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid move (want s<i>:<sign>): " + tok);
    }
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("braid sign must be 1 or -1: " + tok);
    w.push(idx, sign);
  }
  return w;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (k) out += ",";
    out += "s" + std::to_string(moves[k].first) + ":" +
           (moves[k].second > 0 ? "1" : "-1");
  }
  return out;
}

BraidStep sigma_step(const FusionSpace& space, unsigned i, int sign) {
  const Theory& th = space.theory();
  const auto& leaves = space.leaves();
  const unsigned m = static_cast<unsigned>(leaves.size());
  if (i < 1 || i >= m)
    throw std::invalid_argument("strand index out of range: " + std::to_string(i));
  if (sign != 1 && sign != -1) throw std::invalid_argument("braid sign must be +-1");

  std::vector<Charge> out_leaves = leaves;
  std::swap(out_leaves[i - 1], out_leaves[i]);
  FusionSpace target(th, std::move(out_leaves), space.total());
  if (target.dim() != space.dim())
    throw std::logic_error("braiding changed the space dimension");

  const Charge xi = leaves[i - 1], xj = leaves[i];
  ExactMatrix mat(space.dim(), th.field_order());
  std::map<std::array<Charge, 4>, ExactMatrix> inv_cache;

  for (unsigned col = 0; col < space.dim(); ++col) {
    const auto& t = space.label_tuple(col);
    if (i == 1) {
      Charge c = (m == 2) ? space.total() : t[0];
      Cyclotomic coeff = sign > 0 ? th.r_symbol(xi, xj, c)
                                  : th.r_symbol(xj, xi, c).inverse();
      mat.at(target.index_of(t).value(), col) = coeff;
      continue;
    }
    Charge prev = (i == 2) ? leaves[0] : t[i - 3];
    Charge cur = t[i - 2];
    Charge next = (i == m - 1) ? space.total() : t[i - 1];
    const auto& f_fwd = th.f_matrix(prev, xi, xj, next);
    const auto& f_bwd = th.f_matrix(prev, xj, xi, next);
    auto cache_key = std::array<Charge, 4>{prev, xj, xi, next};
    auto it = inv_cache.find(cache_key);
    if (it == inv_cache.end())
      it = inv_cache.emplace(cache_key, f_bwd.m.inverse()).first;
    const ExactMatrix& f_bwd_inv = it->second;

    for (std::size_t jf = 0; jf < f_fwd.right.size(); ++jf) {
      Charge f = f_fwd.right[jf];
      Cyclotomic coeff = f_fwd.entry_or_zero(cur, f);
      if (coeff.is_zero()) continue;
      coeff *= sign > 0 ? th.r_symbol(xi, xj, f) : th.r_symbol(xj, xi, f).inverse();
      // rows of f_bwd^-1 are indexed by f_bwd.right, which holds f too
      std::size_t frow = 0;
      while (frow < f_bwd.right.size() && f_bwd.right[frow] != f) ++frow;
      if (frow == f_bwd.right.size())
        throw std::logic_error("fusion channel missing after strand swap");
      for (std::size_t ic = 0; ic < f_bwd.left.size(); ++ic) {
        Cyclotomic contrib =
            coeff * f_bwd_inv.at(static_cast<unsigned>(frow), static_cast<unsigned>(ic));
        if (contrib.is_zero()) continue;
        std::vector<Charge> tp = t;
        tp[i - 2] = f_bwd.left[ic];
        if (internal_label_sign(cur) * internal_label_sign(tp[i - 2]) < 0)
          contrib = -contrib;
        mat.at(target.index_of(tp).value(), col) += contrib;
      }
    }
  }
  return {space, std::move(target), std::move(mat)};
}

BraidStep compose_word(const FusionSpace& space, const BraidWord& word) {
  FusionSpace cur = space;
  ExactMatrix total = ExactMatrix::identity(space.dim(), space.theory().field_order());
  for (const auto& [idx, sign] : word.moves) {
    BraidStep step = sigma_step(cur, idx, sign);
    total = step.matrix * total;
    cur = std::move(step.target);
  }
  return {space, std::move(cur), std::move(total)};
}

std::pair<StateVector, FusionSpace> apply_word(const FusionSpace& space,
                                               const BraidWord& word,
                                               const StateVector& state) {
  if (state.dim() != space.dim())
    throw std::invalid_argument("state dimension does not match the space");
  BraidStep all = compose_word(space, word);
  return {all.matrix.apply(state), std::move(all.target)};
}

std::pair<StateVector, Cyclotomic> project_internal(const FusionSpace& space,
                                                    unsigned edge, Charge charge,
                                                    const StateVector& state) {
  if (edge < 1 || edge > space.internal_edges())
    throw std::invalid_argument("internal edge index out of range");
  if (state.dim() != space.dim())
    throw std::invalid_argument("state dimension does not match the space");
  StateVector out = StateVector::zero(space.dim(), state.order());
  for (unsigned k = 0; k < space.dim(); ++k)
    if (space.label_tuple(k)[edge - 1] == charge) out.at(k) = state.at(k);
  return {out, out.norm_sq()};
}

ExactMatrix change_basis_qutrit(const ExactMatrix& m) {
  if (m.dim() != 3) throw std::invalid_argument("qutrit basis change needs dim 3");
  unsigned n = m.order();
  Cyclotomic is2 =
      Cyclotomic::sqrt_constant(n, 2) * Cyclotomic::rational(n, mpq_class(1, 2));
  Cyclotomic zero = Cyclotomic::zero(n), one = Cyclotomic::one(n);
  ExactMatrix basis = ExactMatrix::from_rows(
      n, {{is2, zero, is2}, {zero, one, zero}, {is2, zero, -is2}});
  return basis.transpose() * m * basis;
}

BraidStep middle_braid_2211(const Theory& theory) {
  FusionSpace space(theory, {2, 2, 1, 1}, 0);
  return sigma_step(space, 2, 1);
}

AncillaResult ancilla_protocol(const Theory& theory, bool plus) {
  const unsigned n = theory.field_order();
  FusionSpace start_space(theory, {2, 2, 1, 1}, 0);
  Charge start_label = plus ? 0 : 2;
  unsigned start_index = start_space.index_of({start_label, 1}).value();

  BraidStep mb = middle_braid_2211(theory);
  StateVector state = mb.matrix.apply(
      StateVector::basis_state(start_space.dim(), n, start_index));

  struct Node {
    FusionSpace space;
    StateVector state;
    BraidWord word;
  };
  auto rel_phase = [](const StateVector& v) {
    return v.at(1) * v.at(0).inverse();
  };
  auto key_of = [&](const FusionSpace& sp, const StateVector& v) {
    std::string k;
    for (Charge c : sp.leaves()) k += std::to_string(c);
    return k + "|" + rel_phase(v).to_string();
  };

  BraidWord base;
  base.push(2, 1);
  std::vector<Node> queue{{mb.target, state, base}};
  std::map<std::string, std::size_t> seen{{key_of(mb.target, state), 0}};

  const std::vector<Charge> qubit_leaves{1, 2, 2, 1};
  std::vector<Cyclotomic> reachable;
  std::optional<Node> hit;
  Cyclotomic want = plus ? Cyclotomic::one(n) : -Cyclotomic::one(n);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    Node cur = queue[head];
    if (cur.space.leaves() == qubit_leaves) {
      Cyclotomic rho = rel_phase(cur.state);
      bool known = false;
      for (const auto& r : reachable) known = known || r == rho;
      if (!known) reachable.push_back(rho);
      if (!hit && rho == want) hit = cur;
    }
    for (unsigned idx : {1u, 3u}) {
      for (int sign : {1, -1}) {
        BraidStep step = sigma_step(cur.space, idx, sign);
        StateVector next = step.matrix.apply(cur.state);
        std::string key = key_of(step.target, next);
        if (seen.count(key)) continue;
        seen.emplace(key, queue.size());
        BraidWord w = cur.word;
        w.push(idx, sign);
        queue.push_back({std::move(step.target), std::move(next), std::move(w)});
      }
    }
  }

  const Node& result = hit ? *hit : queue.front();
  Cyclotomic half = Cyclotomic::rational(n, mpq_class(1, 2));
  AncillaResult out{plus ? "plus" : "minus",
                    start_label,
                    result.word,
                    result.space,
                    result.state,
                    result.state.at(0).norm_sq() == half &&
                        result.state.at(1).norm_sq() == half,
                    hit.has_value(),
                    rel_phase(result.state),
                    reachable};
  return out;
}

std::string AncillaResult::to_json() const {
  std::string out = "{\"target\":\"" + target + "\",\"start\":\"" +
                    std::to_string(start_label) + "\",\"word\":\"" +
                    word.to_string() + "\",\"space\":\"" + space.describe() +
                    "\",\"state\":" + state.to_json() +
                    ",\"moduli_are_half\":" + (moduli_are_half ? "true" : "false") +
                    ",\"target_reached\":" + (target_reached ? "true" : "false") +
                    ",\"relative_phase\":\"" + relative_phase.to_string() +
                    "\",\"reachable_relative_phases\":[";
  for (std::size_t i = 0; i < reachable_relative_phases.size(); ++i) {
    if (i) out += ",";
    out += "\"" + reachable_relative_phases[i].to_string() + "\"";
  }
  out += "]}";
  return out;
}

}  // namespace anyon
