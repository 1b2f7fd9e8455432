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

#include "anyon/catalog.hpp"
#include "doctest.h"

using anyon::BraidStep;
using anyon::BraidWord;
using anyon::Catalog;
using anyon::Charge;
using anyon::Cyclotomic;
using anyon::ExactMatrix;
using anyon::FusionSpace;
using anyon::StateVector;
using anyon::Theory;

namespace {

const Theory& theory() {
  static Theory th(72);
  return th;
}

const Catalog& catalog() {
  static Catalog cat(72);
  return cat;
}

// Independent dimension oracle: count admissible labelings by recursion on
// the running charge.
unsigned count_paths(const Theory& th, const std::vector<Charge>& leaves,
                     Charge running, std::size_t at, Charge total) {
  if (at == leaves.size()) return running == total ? 1 : 0;
  unsigned n = 0;
  for (Charge c = 0; c <= Theory::kMaxCharge; ++c)
    if (th.fusion_allowed(running, leaves[at], c))
      n += count_paths(th, leaves, c, at + 1, total);
  return n;
}

}  // namespace

TEST_CASE("fusion space enumeration") {
  const Theory& th = theory();
  FusionSpace qutrit(th, {2, 2, 2, 2}, 0);
  CHECK(qutrit.dim() == 3);
  CHECK(qutrit.basis() == std::vector<std::vector<Charge>>{{0, 2}, {2, 2}, {4, 2}});

  CHECK(FusionSpace(th, {1, 1}, 0).dim() == 1);
  CHECK(FusionSpace(th, {1, 2}, 0).dim() == 0);  // empty space is allowed
  CHECK(FusionSpace(th, {1, 2, 2, 1}, 0).dim() == 2);
  CHECK(FusionSpace(th, {2, 2, 1, 1}, 0).basis() ==
        std::vector<std::vector<Charge>>{{0, 1}, {2, 1}});

  FusionSpace six(th, {2, 2, 2, 2, 1, 1}, 0);
  CHECK(six.dim() == 8);  // frozen regression value
  SUBCASE("dimensions agree with the recursive counting oracle") {
    for (const auto& leaves : std::vector<std::vector<Charge>>{
             {2, 2, 2, 2}, {2, 2, 1, 1}, {1, 2, 2, 1}, {2, 2, 2, 2, 1, 1},
             {1, 1, 1}, {4, 2, 2, 2}, {3, 3, 1}}) {
      for (Charge total = 0; total <= 4; ++total) {
        FusionSpace sp(th, leaves, total);
        CHECK(sp.dim() == count_paths(th, leaves, leaves[0], 1, total));
      }
    }
  }
}

TEST_CASE("sigma matrices are unitary and invert cleanly") {
  const Theory& th = theory();
  FusionSpace six(th, {2, 2, 2, 2, 1, 1}, 0);
  for (unsigned i = 1; i <= 5; ++i) {
    BraidStep fwd = sigma_step(six, i, 1);
    CHECK(fwd.matrix.is_unitary());
    BraidStep bwd = sigma_step(fwd.target, i, -1);
    CHECK((bwd.matrix * fwd.matrix).is_identity());
  }
  CHECK_THROWS_AS(sigma_step(six, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sigma_step(six, 6, 1), std::invalid_argument);
  CHECK_THROWS_AS(sigma_step(six, 1, 2), std::invalid_argument);
}

TEST_CASE("derived qutrit braids match the published matrices up to phase") {
  const Theory& th = theory();
  FusionSpace qutrit(th, {2, 2, 2, 2}, 0);
  BraidStep s1 = sigma_step(qutrit, 1, 1);
  BraidStep s2 = sigma_step(qutrit, 2, 1);
  auto l1 = s1.matrix.scalar_multiple_of(catalog().G1());
  auto l2 = s2.matrix.scalar_multiple_of(catalog().G2());
  REQUIRE(l1.has_value());
  REQUIRE(l2.has_value());
  CHECK((*l1 * l1->conj()).is_one());
  CHECK(*l1 == *l2);  // both carry the same determinant phase
  // derived via F-conjugation of the R-diagonal: same data as f_matrix
  ExactMatrix f = th.f_matrix(2, 2, 2, 2).m;
  ExactMatrix diag = ExactMatrix::diagonal(
      72, {th.r_symbol(2, 2, 0), th.r_symbol(2, 2, 2), th.r_symbol(2, 2, 4)});
  ExactMatrix conj = f * diag * f.dagger();
  ExactMatrix sign = ExactMatrix::diagonal(
      72, {Cyclotomic::one(72), -Cyclotomic::one(72), Cyclotomic::one(72)});
  CHECK(s2.matrix == sign * conj * sign);  // tree-basis sign convention
}

TEST_CASE("braid relations hold on the four- and six-anyon spaces") {
  const Theory& th = theory();
  for (const auto& leaves : std::vector<std::vector<Charge>>{
           {2, 2, 2, 2}, {2, 2, 2, 2, 1, 1}}) {
    FusionSpace sp(th, leaves, 0);
    unsigned strands = static_cast<unsigned>(leaves.size());
    for (unsigned i = 1; i + 1 < strands; ++i) {
      std::string si = std::to_string(i), sj = std::to_string(i + 1);
      BraidStep lhs =
          compose_word(sp, BraidWord::parse("s" + si + ":1,s" + sj + ":1,s" + si + ":1"));
      BraidStep rhs =
          compose_word(sp, BraidWord::parse("s" + sj + ":1,s" + si + ":1,s" + sj + ":1"));
      CHECK(lhs.target.leaves() == rhs.target.leaves());
      CHECK(lhs.matrix == rhs.matrix);
    }
    for (unsigned i = 1; i < strands; ++i)
      for (unsigned j = i + 2; j < strands; ++j) {
        std::string si = std::to_string(i), sj = std::to_string(j);
        BraidStep lhs = compose_word(sp, BraidWord::parse("s" + si + ":1,s" + sj + ":1"));
        BraidStep rhs = compose_word(sp, BraidWord::parse("s" + sj + ":1,s" + si + ":1"));
        CHECK(lhs.matrix == rhs.matrix);
      }
  }
}

TEST_CASE("apply_word bookkeeping") {
  const Theory& th = theory();
  FusionSpace qutrit(th, {2, 2, 2, 2}, 0);
  StateVector e1 = StateVector::basis_state(3, 72, 0);
  auto [same, sp0] = apply_word(qutrit, BraidWord{}, e1);
  CHECK(same == e1);
  CHECK(sp0.leaves() == qutrit.leaves());
  auto [back, sp1] = apply_word(qutrit, BraidWord::parse("s2:1,s2:-1"), e1);
  CHECK(back == e1);
  CHECK_THROWS_AS(apply_word(qutrit, BraidWord{}, StateVector::basis_state(2, 72, 0)),
                  std::invalid_argument);
  CHECK(BraidWord::parse("s2:-1,s1:1").to_string() == "s2:-1,s1:1");
  CHECK_THROWS_AS(BraidWord::parse("x1:1"), std::invalid_argument);
}

TEST_CASE("four inverse middle braids implement the N gate in the new basis") {
  const Theory& th = theory();
  FusionSpace qutrit(th, {2, 2, 2, 2}, 0);
  BraidStep word = compose_word(qutrit, BraidWord::parse("s2:-1,s2:-1,s2:-1,s2:-1"));
  ExactMatrix rotated = change_basis_qutrit(word.matrix);
  auto lam = rotated.scalar_multiple_of(catalog().N());
  REQUIRE(lam.has_value());
  CHECK((*lam * lam->conj()).is_one());
}

TEST_CASE("change of basis reproduces the rotated generators exactly") {
  CHECK(change_basis_qutrit(catalog().G1()) == catalog().G1t());
  CHECK(change_basis_qutrit(catalog().G2()) == catalog().G2t());
  CHECK(change_basis_qutrit(catalog().FUM()) == catalog().FUMt());
  CHECK(change_basis_qutrit(ExactMatrix::identity(3, 72)) ==
        ExactMatrix::identity(3, 72));
  CHECK_THROWS_AS(change_basis_qutrit(ExactMatrix::identity(2, 72)),
                  std::invalid_argument);
}

TEST_CASE("middle braid on 2211 matches the published matrix up to phase") {
  const Theory& th = theory();
  BraidStep mb = middle_braid_2211(th);
  CHECK(mb.source.leaves() == std::vector<Charge>{2, 2, 1, 1});
  CHECK(mb.target.leaves() == std::vector<Charge>{2, 1, 2, 1});
  CHECK(mb.target.basis() == std::vector<std::vector<Charge>>{{1, 1}, {3, 1}});
  CHECK(mb.matrix.is_unitary());

  unsigned n = 72;
  Cyclotomic is2 =
      Cyclotomic::sqrt_constant(n, 2) * Cyclotomic::rational(n, mpq_class(1, 2));
  ExactMatrix published = ExactMatrix::from_rows(
      n, {{Cyclotomic::root_of_unity(n, 24) * is2, is2},
          {Cyclotomic::root_of_unity(n, -30) * is2,
           -Cyclotomic::root_of_unity(n, 18) * is2}});
  auto lam = mb.matrix.scalar_multiple_of(published);
  REQUIRE(lam.has_value());
  CHECK((*lam * lam->conj()).is_one());

  SUBCASE("column norms and moduli") {
    Cyclotomic half = Cyclotomic::rational(n, mpq_class(1, 2));
    for (unsigned col = 0; col < 2; ++col) {
      Cyclotomic norm = mb.matrix.at(0, col).norm_sq() + mb.matrix.at(1, col).norm_sq();
      CHECK(norm.is_one());
      CHECK(mb.matrix.at(0, col).norm_sq() == half);
    }
  }
}

TEST_CASE("the full middle twist swaps the 2211 qubit states") {
  const Theory& th = theory();
  FusionSpace sp(th, {2, 2, 1, 1}, 0);
  BraidStep twist = compose_word(sp, BraidWord::parse("s2:1,s2:1"));
  CHECK(twist.target.leaves() == sp.leaves());
  CHECK(twist.matrix.at(0, 0).is_zero());
  CHECK(twist.matrix.at(1, 1).is_zero());
  CHECK(!twist.matrix.at(0, 1).is_zero());
  CHECK(!twist.matrix.at(1, 0).is_zero());
}

TEST_CASE("qubit 1221 braids") {
  const Theory& th = theory();
  FusionSpace q(th, {1, 2, 2, 1}, 0);
  unsigned n = 72;
  Cyclotomic half = Cyclotomic::rational(n, mpq_class(1, 2));
  Cyclotomic is3h = Cyclotomic::sqrt_constant(n, 3) * half *
                    Cyclotomic::root_of_unity(n, 18);
  ExactMatrix published =
      ExactMatrix::from_rows(n, {{-half, is3h}, {is3h, -half}});
  // the published crossing is the inverse one in this artifact's convention
  BraidStep s2 = sigma_step(q, 2, -1);
  CHECK(s2.matrix == published);
  BraidStep s2fwd = sigma_step(q, 2, 1);
  CHECK(s2fwd.matrix == published.dagger());
  // sigma_1 only introduces phases
  BraidStep s1 = sigma_step(q, 1, 1);
  CHECK(s1.matrix.is_diagonal());
}

TEST_CASE("internal projections") {
  const Theory& th = theory();
  FusionSpace qutrit(th, {2, 2, 2, 2}, 0);
  unsigned n = 72;
  StateVector q2 = StateVector::basis_state(3, n, 1);
  auto [kept, p] = project_internal(qutrit, 1, 2, q2);
  CHECK(kept == q2);
  CHECK(p.is_one());

  Cyclotomic is2 =
      Cyclotomic::sqrt_constant(n, 2) * Cyclotomic::rational(n, mpq_class(1, 2));
  StateVector mix = StateVector::basis_state(3, n, 0).scaled(is2) +
                    StateVector::basis_state(3, n, 2).scaled(is2);
  auto [half_state, prob] = project_internal(qutrit, 1, 0, mix);
  CHECK(prob == Cyclotomic::rational(n, mpq_class(1, 2)));
  CHECK(half_state.at(0) == is2);
  CHECK(half_state.at(2).is_zero());
  CHECK_THROWS_AS(project_internal(qutrit, 3, 0, q2), std::invalid_argument);
}

TEST_CASE("middle braids on 4222 and 0222 act on the charge-2 line by one common phase") {
  const Theory& th = theory();
  Cyclotomic phase = Cyclotomic::zero(72);
  for (Charge first : {4u, 0u}) {
    FusionSpace sp(th, {first, 2, 2, 2}, 2);
    BraidStep s2 = sigma_step(sp, 2, 1);
    // the charge-2 internal line is preserved with a scalar phase
    unsigned idx = sp.index_of({2, 2}).value();
    StateVector line = StateVector::basis_state(sp.dim(), 72, idx);
    StateVector out = s2.matrix.apply(line);
    auto [projected, weight] = project_internal(s2.target, 2, 2, out);
    CHECK(weight.is_one());
    Cyclotomic this_phase = out.at(idx);
    CHECK((this_phase * this_phase.conj()).is_one());
    if (phase.is_zero())
      phase = this_phase;
    else
      CHECK(phase == this_phase);  // same phase whether 4222 or 0222
  }
  // in this gauge the common phase is e^{4 i pi/3}, the published value
  CHECK(phase == Cyclotomic::root_of_unity(72, 48));
}

TEST_CASE("six-anyon protocol runs: twists commute and open a charge-2 line") {
  const Theory& th = theory();
  FusionSpace six(th, {2, 2, 2, 2, 1, 1}, 0);
  // a full twist on strands 4,5 commutes with braids that do not touch them
  for (const char* other : {"s1:1", "s2:1"}) {
    BraidStep a = compose_word(six, BraidWord::parse(std::string("s4:1,s4:1,") + other));
    BraidStep b = compose_word(six, BraidWord::parse(std::string(other) + ",s4:1,s4:1"));
    CHECK(a.matrix == b.matrix);
  }
  // start as qutrit |2> next to a vacuum pair of 1s: internal labels (2,2,0,1)
  unsigned start = six.index_of({2, 2, 0, 1}).value();
  StateVector state = StateVector::basis_state(six.dim(), 72, start);
  auto [after, sp] = apply_word(six, BraidWord::parse("s4:1,s4:1"), state);
  CHECK(sp.leaves() == six.leaves());
  // the twist opens a charge-2 line between the qutrit and the pair
  auto [on2, weight] = project_internal(sp, 3, 2, after);
  CHECK(!weight.is_zero());
  CHECK(after.norm_sq().is_one());
}

TEST_CASE("ancilla protocol certifies both targets") {
  const Theory& th = theory();
  for (bool plus : {true, false}) {
    anyon::AncillaResult res = ancilla_protocol(th, plus);
    CHECK(res.moduli_are_half);
    CHECK(res.target_reached);
    CHECK(res.space.leaves() == std::vector<Charge>{1, 2, 2, 1});
    Cyclotomic want = plus ? Cyclotomic::one(72) : -Cyclotomic::one(72);
    CHECK(res.relative_phase == want);
    // reachable relative phases on the 1221 qubit are exactly +-1
    CHECK(res.reachable_relative_phases.size() == 2);
    // protocol starts with the middle braid
    CHECK(res.word.moves.front() == std::pair<unsigned, int>{2u, 1});
    // the word replays to the reported state
    FusionSpace start(th, {2, 2, 1, 1}, 0);
    StateVector init = StateVector::basis_state(2, 72, plus ? 0 : 1);
    auto [state, sp] = apply_word(start, res.word, init);
    CHECK(state == res.state);
    CHECK(sp.leaves() == res.space.leaves());
    CHECK(res.to_json().find("\"target_reached\":true") != std::string::npos);
  }
}
