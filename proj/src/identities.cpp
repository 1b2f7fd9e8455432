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

#include "anyon/identities.hpp"

#include <set>
#include <stdexcept>

#include "anyon/closure.hpp"

namespace anyon {

unsigned element_order(const ExactMatrix& m, unsigned cap) {
  ExactMatrix acc = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  throw std::runtime_error("element order cap exceeded");
}

Report identity_suite(const Catalog& cat) {
  Report rep;
  rep.suite = "identities";
  const unsigned n = cat.field_order();
  auto z = [&](long k) { return Cyclotomic::root_of_unity(n, k, 72); };
  const Cyclotomic one = Cyclotomic::one(n);
  const ExactMatrix id = ExactMatrix::identity(3, n);

  const ExactMatrix& G1t = cat.G1t();
  const ExactMatrix& G2t = cat.G2t();
  const ExactMatrix& FUMt = cat.FUMt();
  const ExactMatrix& N = cat.N();
  const ExactMatrix& KA = cat.get("KleinA");
  const ExactMatrix& KB = cat.get("KleinB");

  // closures can legitimately blow the cap on corrupted inputs; report that
  // as a named failure instead of aborting the suite
  auto guarded = [&rep](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      rep.add(name, false, e.what());
    }
  };

  rep.add("(FUMt)^3 is diag(-1,-1,1)",
          FUMt.pow(3) == ExactMatrix::diagonal(n, {-one, -one, one}));
  rep.add("G1t (FUMt)^3 G1t^-1 is diag(1,-1,-1)",
          G1t * FUMt.pow(3) * G1t.inverse() ==
              ExactMatrix::diagonal(n, {one, -one, -one}));
  rep.add("Klein pair commutes with itself",
          KA * KB == KB * KA && element_order(KA) == 2 && element_order(KB) == 2);
  guarded("Klein pair generates a four-group", [&] {
    GroupClosure klein = GroupClosure::closure({KA, KB}, {"A", "B"});
    rep.add("Klein pair generates a four-group", klein.size() == 4);
  });

  rep.add("G1t^2 is diag(e^{-4i pi/9}, e^{8i pi/9}, e^{-4i pi/9})",
          G1t.pow(2) == ExactMatrix::diagonal(n, {z(-16), z(32), z(-16)}));
  ExactMatrix mixed = N.pow(2) * G1t.pow(2);
  rep.add("N^2 G1t^2 is diag(e^{4i pi/3}, e^{2i pi/3}, 1)",
          mixed == ExactMatrix::diagonal(n, {z(48), z(24), one}));
  rep.add("(N^2 G1t^2)^2 is diag(e^{2i pi/3}, e^{4i pi/3}, 1)",
          mixed.pow(2) == ExactMatrix::diagonal(n, {z(24), z(48), one}));

  guarded("cyclic subgroup intersections", [&] {
    // cyclic subgroup intersections, by enumeration of both cyclic groups
    GroupClosure a = GroupClosure::closure({mixed}, {"m"});
    GroupClosure b = GroupClosure::closure({N}, {"N"});
    std::size_t common = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (b.contains(a.element(i))) ++common;
    rep.add("<N^2 G1t^2> meets <N> only in the identity", common == 1,
            "intersection size " + std::to_string(common));

    GroupClosure g1sq = GroupClosure::closure({G1t.pow(2)}, {"s"});
    std::size_t common2 = 0;
    bool center_only = true;
    for (std::size_t i = 0; i < g1sq.size(); ++i)
      if (b.contains(g1sq.element(i))) {
        ++common2;
        if (!g1sq.element(i).scalar_multiple_of(id).has_value()) center_only = false;
      }
    rep.add("<G1t^2> meets <N> exactly in the scalar cube roots",
            common2 == 3 && center_only, "intersection size " + std::to_string(common2));

    bool klein_disjoint = true;
    for (const auto* cyc : {&a, &b})
      for (std::size_t i = 0; i < cyc->size(); ++i) {
        const ExactMatrix& m = cyc->element(i);
        if (!m.is_identity() && element_order(m) == 2) klein_disjoint = false;
      }
    rep.add("odd-order cyclic pieces avoid the Klein group", klein_disjoint);
  });

  {
    Cyclotomic zero = Cyclotomic::zero(n);
    ExactMatrix t3 = ExactMatrix::from_rows(
        n, {{zero, zero, -one}, {zero, -one, zero}, {-one, zero, zero}});
    ExactMatrix t1 = ExactMatrix::from_rows(
        n, {{zero, -one, zero}, {-one, zero, zero}, {zero, zero, -one}});
    ExactMatrix t2 = ExactMatrix::from_rows(
        n, {{-one, zero, zero}, {zero, zero, -one}, {zero, -one, zero}});
    rep.add("G1t^9 is the displayed signed permutation", cat.get("t3") == t3);
    rep.add("G2t^9 is the displayed signed permutation", cat.get("t1") == t1);
    rep.add("G2t G1t G2t is the displayed signed permutation", cat.get("t2") == t2);

    // the S3 of transposition/cycle matrices: closed and of the right shape
    std::vector<ExactMatrix> s3 = {id,           cat.get("t1"), cat.get("t2"),
                                   cat.get("t3"), cat.get("c1"), cat.get("c2")};
    std::set<std::string> keys;
    for (const auto& m : s3) keys.insert(m.canonical_key());
    bool closed = keys.size() == 6;
    for (const auto& x : s3)
      for (const auto& y : s3) closed = closed && keys.count((x * y).canonical_key());
    bool orders_ok = element_order(cat.get("t1")) == 2 &&
                     element_order(cat.get("t2")) == 2 &&
                     element_order(cat.get("t3")) == 2 &&
                     element_order(cat.get("c1")) == 3 &&
                     element_order(cat.get("c2")) == 3;
    bool nonabelian = cat.get("t1") * cat.get("t2") != cat.get("t2") * cat.get("t1");
    bool cycles_from_transpositions = cat.get("c1") == cat.get("t3") * cat.get("t1") &&
                                      cat.get("c2") == cat.get("t1") * cat.get("t3");
    rep.add("{t1,t2,t3,c1,c2,1} is a symmetric group on three letters",
            closed && orders_ok && nonabelian && cycles_from_transpositions);
  }

  rep.add("G1t = N^-10 (N^2 G1t^2)^5 G1t^9",
          G1t == N.pow(-10) * mixed.pow(5) * G1t.pow(9));
  rep.add("(FUMt)^4 = N^3", FUMt.pow(4) == N.pow(3));
  rep.add("FUMt = N^3 (FUMt)^-3", FUMt == N.pow(3) * FUMt.pow(-3));
  rep.add("N^2 G2t^2 = (FUMt)^2", N.pow(2) * G2t.pow(2) == FUMt.pow(2));
  rep.add("G2t^2 = N^-2 (FUMt)^2", G2t.pow(2) == N.pow(-2) * FUMt.pow(2));
  rep.add("G2t = (G2t^2)^5 G2t^9", G2t == G2t.pow(2).pow(5) * G2t.pow(9));
  rep.add("F(18,1,1) = (FUMt)^3 N^-1", cat.F18() == FUMt.pow(3) * N.inverse());
  rep.add("E = G2t^9 G1t^9", cat.E() == G2t.pow(9) * G1t.pow(9));
  rep.add("Btilde = G2t G1t G2t", cat.Btilde() == G2t * G1t * G2t);
  rep.add("N = F(9,1,1)^4", N == cat.F9().pow(4));
  rep.add("F(9,1,1) = G2t^8", cat.F9() == G2t.pow(8));
  rep.add("N = G2t^-4", N == G2t.pow(-4));
  rep.add("F(9,1,1)^-1 = G2t t1", cat.F9().inverse() == G2t * cat.get("t1"));

  rep.add("element orders (N:9, G1t:18, G2t:18, FUMt:6, x6:6, x18:18)",
          element_order(N) == 9 && element_order(G1t) == 18 &&
              element_order(G2t) == 18 && element_order(FUMt) == 6 &&
              element_order(cat.get("x6")) == 6 &&
              element_order(cat.get("x18")) == 18);
  rep.add("x6 and x18 commute",
          cat.get("x6") * cat.get("x18") == cat.get("x18") * cat.get("x6"));
  rep.add("x6 = N^2 G1t^2 (FUMt)^3", cat.get("x6") == mixed * FUMt.pow(3));
  rep.add("x18 = N G1t (FUMt)^3 G1t^-1",
          cat.get("x18") == N * G1t * FUMt.pow(3) * G1t.inverse());

  guarded("diagonal subgroup analysis", [&] {
    GroupClosure gt = GroupClosure::closure({G1t, G2t, FUMt}, {"G1t", "G2t", "FUMt"});
    std::size_t diag = gt.diagonal_count();
    rep.add("the diagonal subgroup of the 648 group has 108 elements", diag == 108,
            "found " + std::to_string(diag));
    GroupClosure delta = GroupClosure::closure({cat.get("x6"), cat.get("x18")},
                                               {"x6", "x18"});
    bool inside = true;
    for (std::size_t i = 0; i < delta.size(); ++i)
      inside = inside && gt.contains(delta.element(i)) &&
               delta.element(i).is_diagonal();
    rep.add("<x6> x <x18> realizes the full diagonal subgroup",
            delta.size() == 108 && inside);
    // intersection of the two cyclic factors is trivial
    GroupClosure x6c = GroupClosure::closure({cat.get("x6")}, {"x6"});
    GroupClosure x18c = GroupClosure::closure({cat.get("x18")}, {"x18"});
    std::size_t common = 0;
    for (std::size_t i = 0; i < x6c.size(); ++i)
      if (x18c.contains(x6c.element(i))) ++common;
    rep.add("the C6 and C18 factors intersect trivially", common == 1);

    auto center = gt.center_indices();
    bool scalars = true;
    for (std::size_t idx : center)
      scalars = scalars && gt.element(idx).scalar_multiple_of(id).has_value();
    rep.add("the center is the scalar cube roots of unity",
            center.size() == 3 && scalars);
  });
  return rep;
}

}  // namespace anyon
