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

#include "anyon/verify.hpp"

#include <optional>

#include "anyon/braid.hpp"
#include "anyon/closure.hpp"
#include "anyon/presentation.hpp"
#include "anyon/todd_coxeter.hpp"
#include "anyon/tqft.hpp"

namespace anyon {

Report verify_tqft(const Catalog& cat) {
  const unsigned n = cat.field_order();
  Theory th(n);
  Report rep = th.consistency_check();
  rep.suite = "tqft";

  FusionSpace qutrit(th, {2, 2, 2, 2}, 0);
  BraidStep s1 = sigma_step(qutrit, 1, 1);
  BraidStep s2 = sigma_step(qutrit, 2, 1);
  auto l1 = s1.matrix.scalar_multiple_of(cat.G1());
  auto l2 = s2.matrix.scalar_multiple_of(cat.G2());
  rep.add("derived sigma_1 matches G1 up to a phase", l1.has_value(),
          l1 ? "phase " + l1->pretty_phase() : "");
  rep.add("derived sigma_2 matches G2 up to a phase", l2.has_value(),
          l2 ? "phase " + l2->pretty_phase() : "");

  // qubit 1221: the published braid matrix (inverse crossing convention)
  Cyclotomic half = Cyclotomic::rational(n, mpq_class(1, 2));
  Cyclotomic is3h = Cyclotomic::sqrt_constant(n, 3) * half *
                    Cyclotomic::root_of_unity(n, 18, 72);
  ExactMatrix published_qubit =
      ExactMatrix::from_rows(n, {{-half, is3h}, {is3h, -half}});
  FusionSpace q1221(th, {1, 2, 2, 1}, 0);
  auto lq = sigma_step(q1221, 2, -1).matrix.scalar_multiple_of(published_qubit);
  rep.add("qubit 1221 braid matches the published matrix up to a phase",
          lq.has_value(), lq ? "phase " + lq->pretty_phase() : "");
  rep.add("sigma_1 on the qubit is diagonal",
          sigma_step(q1221, 1, 1).matrix.is_diagonal());

  Cyclotomic is2 = Cyclotomic::sqrt_constant(n, 2) * half;
  ExactMatrix published_mb = ExactMatrix::from_rows(
      n, {{Cyclotomic::root_of_unity(n, 24, 72) * is2, is2},
          {Cyclotomic::root_of_unity(n, -30, 72) * is2,
           -Cyclotomic::root_of_unity(n, 18, 72) * is2}});
  BraidStep mb = middle_braid_2211(th);
  auto lm = mb.matrix.scalar_multiple_of(published_mb);
  rep.add("2211 middle braid matches the published matrix up to a phase",
          lm.has_value(), lm ? "phase " + lm->pretty_phase() : "");

  FusionSpace s2211(th, {2, 2, 1, 1}, 0);
  BraidStep twist = compose_word(s2211, BraidWord::parse("s2:1,s2:1"));
  rep.add("full middle twist on 2211 swaps |0> and |2> (zero diagonal)",
          twist.matrix.at(0, 0).is_zero() && twist.matrix.at(1, 1).is_zero() &&
              !twist.matrix.at(0, 1).is_zero());

  // the same scalar phase on the charge-2 line, 4222 versus 0222
  Cyclotomic phase4 = Cyclotomic::zero(n), phase0 = Cyclotomic::zero(n);
  for (Charge first : {4u, 0u}) {
    FusionSpace sp(th, {first, 2, 2, 2}, 2);
    unsigned idx = sp.index_of({2, 2}).value();
    StateVector out = sigma_step(sp, 2, 1).matrix.apply(
        StateVector::basis_state(sp.dim(), n, idx));
    (first == 4 ? phase4 : phase0) = out.at(idx);
  }
  rep.add("middle braids on 4222 and 0222 give one common charge-2 phase",
          phase4 == phase0 && phase4 == Cyclotomic::root_of_unity(n, 48, 72),
          "phase " + phase4.pretty_phase());

  for (bool plus : {true, false}) {
    AncillaResult res = ancilla_protocol(th, plus);
    rep.add(std::string("ancilla ") + (plus ? "plus" : "minus") +
                ": both moduli exactly 1/sqrt(2) and target phase reached",
            res.moduli_are_half && res.target_reached,
            "word " + res.word.to_string());
  }

  // N via braiding: four inverse middle braids in the rotated basis
  BraidStep four = compose_word(qutrit, BraidWord::parse("s2:-1,s2:-1,s2:-1,s2:-1"));
  auto ln = change_basis_qutrit(four.matrix).scalar_multiple_of(cat.N());
  rep.add("four inverse middle braids give N in the rotated basis (up to phase)",
          ln.has_value(), ln ? "phase " + ln->pretty_phase() : "");

  rep.add("basis change carries G1, G2, FUM to their rotated forms exactly",
          change_basis_qutrit(cat.G1()) == cat.G1t() &&
              change_basis_qutrit(cat.G2()) == cat.G2t() &&
              change_basis_qutrit(cat.FUM()) == cat.FUMt());
  return rep;
}

Report verify_closure(const Catalog& cat, std::size_t cap) {
  Report rep;
  rep.suite = "closure";
  const unsigned n = cat.field_order();
  auto guarded = [&rep](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      rep.add(name, false, e.what());
    }
  };

  std::optional<GroupClosure> gt, fr;
  guarded("|<G1t, G2t, FUMt>| = 648", [&] {
    gt = GroupClosure::closure({cat.G1t(), cat.G2t(), cat.FUMt()},
                               {"G1t", "G2t", "FUMt"}, ClosureMode::kExact, cap);
    rep.add("|<G1t, G2t, FUMt>| = 648", gt->size() == 648,
            "found " + std::to_string(gt->size()));
    rep.add("N belongs to the closure", gt->contains(cat.N()));
    rep.add("closure set passes the group axioms", gt->verify_group());
    GroupClosure permuted = GroupClosure::closure(
        {cat.FUMt(), cat.G1t(), cat.G2t()}, {"FUMt", "G1t", "G2t"},
        ClosureMode::kExact, cap);
    rep.add("closure is independent of generator order", gt->equal_as_sets(permuted));
    bool words_ok = true;
    for (std::size_t i = 0; i < gt->size(); i += 13)
      words_ok = words_ok && gt->evaluate_word(i) == gt->element(i);
    rep.add("provenance words evaluate back to their elements", words_ok);
    rep.add("center of the 648 group has order 3", gt->center_indices().size() == 3);
  });

  guarded("the Blichfeld generators give the identical set of 648 matrices", [&] {
    GroupClosure blich = GroupClosure::closure({cat.F18(), cat.E(), cat.Btilde()},
                                               {"F18", "E", "Btilde"},
                                               ClosureMode::kExact, cap);
    rep.add("the Blichfeld generators give the identical set of 648 matrices",
            blich.size() == 648 && gt && gt->equal_as_sets(blich));
  });

  guarded("|<G1, G2>| = 162", [&] {
    GroupClosure braid_only = GroupClosure::closure({cat.G1(), cat.G2()},
                                                    {"G1", "G2"},
                                                    ClosureMode::kExact, cap);
    rep.add("|<G1, G2>| = 162", braid_only.size() == 162,
            "found " + std::to_string(braid_only.size()));
    rep.add("the braid-only group contains the scalar cube roots",
            braid_only.contains(ExactMatrix::identity(3, n).scaled(
                Cyclotomic::root_of_unity(n, 1, 3))));
  });

  guarded("|<G1, G2, FUM>| = 648", [&] {
    fr = GroupClosure::closure({cat.G1(), cat.G2(), cat.FUM()}, {"G1", "G2", "FUM"},
                               ClosureMode::kExact, cap);
    rep.add("|<G1, G2, FUM>| = 648", fr->size() == 648);
    rep.add("O^T Fr O equals the rotated-basis group as a set",
            gt && fr->conjugated(cat.O(), /*use_transpose=*/true).equal_as_sets(*gt));
    ExactMatrix p(3, n);
    p.at(0, 2) = Cyclotomic::one(n);
    p.at(1, 1) = Cyclotomic::one(n);
    p.at(2, 0) = Cyclotomic::one(n);
    rep.add("swapping first and third rows and columns preserves the Freedman set",
            fr->conjugated(p, /*use_transpose=*/true).equal_as_sets(*fr));
  });

  guarded("projective closure has 216 gates", [&] {
    GroupClosure gt_pu = GroupClosure::closure({cat.G1t(), cat.G2t(), cat.FUMt()},
                                               {"G1t", "G2t", "FUMt"},
                                               ClosureMode::kModCenter, cap);
    rep.add("projective closure has 216 gates", gt_pu.size() == 216,
            "found " + std::to_string(gt_pu.size()));
  });
  guarded("projective braid-only closure has 54 gates", [&] {
    GroupClosure braid_pu = GroupClosure::closure({cat.G1(), cat.G2()}, {"G1", "G2"},
                                                  ClosureMode::kModCenter, cap);
    rep.add("projective braid-only closure has 54 gates", braid_pu.size() == 54,
            "found " + std::to_string(braid_pu.size()));
  });

  guarded("fingerprints of the two 648 realizations agree", [&] {
    if (!gt || !fr) throw std::runtime_error("closures unavailable");
    Fingerprint fgt = gt->fingerprint();
    Fingerprint ffr = fr->fingerprint();
    rep.add("fingerprints of the two 648 realizations agree", fgt == ffr,
            fgt.to_json());
  });
  return rep;
}

Report verify_presentation(const Catalog& cat) {
  GroupPresentation pres = qutrit_gate_group_presentation();
  std::map<std::string, ExactMatrix> assign = {{"x6", cat.get("x6")},
                                               {"x18", cat.get("x18")},
                                               {"t1", cat.get("t1")},
                                               {"t2", cat.get("t2")}};
  Report rep = check_relations(pres, assign);
  rep.suite = "presentation";
  for (auto& c : rep.checks) c.name = "relator " + c.name + " holds in matrices";

  CosetEnumResult enumerated = todd_coxeter(pres);
  rep.add("coset enumeration over the trivial subgroup gives 648",
          enumerated.index == 648, "found " + std::to_string(enumerated.index));

  std::vector<std::size_t> perm(pres.relators().size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
  rep.add("enumeration is independent of relator order",
          todd_coxeter(pres.with_relator_order(perm)).index == 648);
  return rep;
}

std::vector<Report> verify_all(const Catalog& cat, std::size_t cap) {
  return {identity_suite(cat), verify_tqft(cat), verify_presentation(cat),
          verify_closure(cat, cap)};
}

}  // namespace anyon
