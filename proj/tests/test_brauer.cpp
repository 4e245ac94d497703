// Copyright 2026 The wittgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "wittgauss/brauer.hpp"

using namespace wittgauss;
using namespace wittgauss::brauer;

namespace {

std::uint32_t find(const FiniteGroup& g, const Perm& p) {
  const auto& ps = g.permutations();
  return static_cast<std::uint32_t>(std::find(ps.begin(), ps.end(), p) - ps.begin());
}

CyclotomicInt integer(std::int64_t v) { return CyclotomicInt::from_int(1, v); }

// Induced character by the coset formula: sum over left coset reps t of
// psi(t^{-1} x t) when it lies in H.
CyclotomicInt coset_induced_value(const ClassFunction& psi, std::uint32_t x) {
  const FiniteGroup& G = *psi.group();
  const Subgroup& H = psi.domain();
  std::vector<bool> seen(G.order(), false);
  CyclotomicInt s = integer(0);
  for (std::uint32_t t = 0; t < G.order(); ++t) {
    if (seen[t]) continue;
    for (auto h : H.elements()) seen[G.mul(t, h)] = true;
    const std::uint32_t y = G.conjugate(t, x);
    if (H.contains(y)) s += psi.at(y);
  }
  return s;
}

// Leibniz expansion over all permutations.
CyclotomicInt leibniz_det(const CycloMatrix& m) {
  std::vector<unsigned> p(m.dim());
  std::iota(p.begin(), p.end(), 0u);
  CyclotomicInt s = integer(0);
  do {
    int sign = 1;
    for (unsigned i = 0; i < p.size(); ++i)
      for (unsigned j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) sign = -sign;
    CyclotomicInt t = integer(sign);
    for (unsigned i = 0; i < p.size() && !t.is_zero(); ++i) t *= m.at(i, p[i]);
    s += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

CyclotomicInt eval(const EulerPoly& p, std::int64_t t) {
  CyclotomicInt s = integer(0), tk = integer(1);
  for (const auto& c : p.coeffs()) {
    s += c * tk;
    tk = BigInt(t) * tk;
  }
  return s;
}

}  // namespace

TEST_CASE("Finite groups: orders, classes, lattices") {
  struct Row {
    const char* name;
    unsigned order, classes, subgroups;
  };
  for (const Row& r : {Row{"S3", 6, 3, 6}, Row{"D4", 8, 5, 10}, Row{"Q8", 8, 5, 6}, Row{"A4", 12, 4, 10},
                       Row{"S4", 24, 5, 30}, Row{"C6", 6, 6, 4}}) {
    CAPTURE(r.name);
    const GroupPtr g = named_group(r.name);
    CHECK(g->order() == r.order);
    CHECK(g->verify_axioms());
    CHECK(g->classes().size() == r.classes);
    CHECK(subgroup_lattice(*g).size() == r.subgroups);
    for (std::size_t i = 1; i < g->classes().size(); ++i) CHECK(g->classes()[i - 1][0] < g->classes()[i][0]);
    for (std::uint32_t x = 0; x < g->order(); ++x) CHECK(g->mul(x, g->inv(x)) == 0);
  }
  CHECK_THROWS_AS(named_group("X9"), std::invalid_argument);
}

TEST_CASE("Finite groups: Cayley tables") {
  // Z/4 with the identity stored at id 2.
  const std::uint32_t lbl[4] = {2, 0, 3, 1};  // residue -> id
  std::vector<std::vector<std::uint32_t>> t(4, std::vector<std::uint32_t>(4));
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) t[lbl[a]][lbl[b]] = lbl[(a + b) % 4];
  const FiniteGroup g = FiniteGroup::from_cayley(t, "C4");
  CHECK(g.order() == 4);
  CHECK(g.classes().size() == 4);
  std::multiset<std::uint32_t> orders;
  for (std::uint32_t x = 0; x < 4; ++x) orders.insert(g.elem_order(x));
  CHECK(orders == std::multiset<std::uint32_t>{1, 2, 4, 4});
  t[0][0] = t[0][1];
  CHECK_THROWS_AS(FiniteGroup::from_cayley(t), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("Induction and restriction") {
  const GroupPtr g = symmetric_group(3);
  const std::uint32_t c3 = find(*g, {1, 2, 0}), t = find(*g, {1, 0, 2});
  const Subgroup G = Subgroup::whole(*g), A3 = Subgroup::generated(*g, {c3});
  const ClassFunction psi = linear_character(g, A3, {c3}, 3, {1});
  const ClassFunction ind = induce(psi);
  CHECK(ind.degree() == integer(2));
  CHECK(ind.at(c3) == integer(-1));
  CHECK(ind.at(t) == integer(0));
  CHECK(ind.is_class_function());
  for (std::uint32_t x = 0; x < g->order(); ++x) CHECK(ind.at(x) == coset_induced_value(psi, x));

  const ClassFunction chi = induce(ClassFunction::constant(g, A3, 1));
  CHECK(induce(chi) == chi);  // H = G
  CHECK(restrict(chi, G) == chi);
  CHECK(induce(ClassFunction::constant(g, Subgroup::trivial(*g), 1)) == ClassFunction::regular(g, G));

  // Every induced linear character of every group agrees with the coset formula.
  for (const char* name : {"D4", "Q8", "A4"}) {
    const GroupPtr h = named_group(name);
    for (const auto& sub : subgroup_lattice(*h))
      for (const auto& lin : linear_characters(h, sub)) {
        const ClassFunction i = induce(lin);
        for (std::uint32_t x = 0; x < h->order(); ++x) CHECK(i.at(x) == coset_induced_value(lin, x));
      }
  }
  CHECK_THROWS_AS(Subgroup(*g, {0, c3}), std::invalid_argument);
  CHECK_THROWS_AS(restrict(psi, G), std::invalid_argument);
  CHECK_THROWS_AS(linear_character(g, A3, {c3}, 3, {0}) + linear_character(g, Subgroup::generated(*g, {t}), {t}, 2, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(linear_character(g, Subgroup::generated(*g, {t}), {t}, 4, {1}), std::invalid_argument);
}

TEST_CASE("Linear characters: counts equal the abelianization order") {
  struct Row {
    const char* name;
    std::size_t count;
  };
  for (const Row& r : {Row{"S3", 2}, Row{"D4", 4}, Row{"Q8", 4}, Row{"A4", 3}, Row{"S4", 2}, Row{"C6", 6}}) {
    const GroupPtr g = named_group(r.name);
    const auto lin = linear_characters(g, Subgroup::whole(*g));
    CHECK(lin.size() == r.count);
    for (std::size_t i = 0; i < lin.size(); ++i)
      for (std::size_t j = 0; j < lin.size(); ++j)
        CHECK(inner_product(lin[i], lin[j]) == integer(i == j ? 1 : 0));
  }
}

TEST_CASE("Frobenius reciprocity, |G| <= 24") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4", "C6", "D6"}) {
    CAPTURE(name);
    const ReciprocitySweep r = reciprocity_sweep(named_group(name));
    CHECK(r.pairs > 0);
    CHECK(r.pass());
  }
}

TEST_CASE("Double cosets") {
  const GroupPtr g = symmetric_group(3);
  const std::uint32_t c3 = find(*g, {1, 2, 0}), t = find(*g, {1, 0, 2});
  const Subgroup G = Subgroup::whole(*g), E = Subgroup::trivial(*g);
  const Subgroup A3 = Subgroup::generated(*g, {c3}), C2 = Subgroup::generated(*g, {t});
  CHECK(double_cosets(*g, A3, C2) == std::vector<std::uint32_t>{0});
  CHECK(double_cosets(*g, G, C2).size() == 1);
  CHECK(double_cosets(*g, C2, E).size() == 3);
  for (const char* name : {"S3", "D4", "A4"}) {
    const GroupPtr h = named_group(name);
    const auto lat = subgroup_lattice(*h);
    for (const auto& a : lat)
      for (const auto& b : lat) {
        // Partition: the sets H g D for the representatives cover G disjointly.
        std::size_t total = 0;
        std::set<std::uint32_t> all;
        const auto reps = double_cosets(*h, a, b);
        for (auto x : reps) {
          std::set<std::uint32_t> cls;
          for (auto u : a.elements())
            for (auto v : b.elements()) cls.insert(h->mul(h->mul(u, x), v));
          CHECK(*cls.begin() == x);
          total += cls.size();
          all.insert(cls.begin(), cls.end());
        }
        CHECK(total == h->order());
        CHECK(all.size() == h->order());
        CHECK(std::is_sorted(reps.begin(), reps.end()));
      }
  }
}

TEST_CASE("Mackey decomposition over full lattices") {
  const GroupPtr g = symmetric_group(3);
  const Subgroup G = Subgroup::whole(*g);
  const ClassFunction one = ClassFunction::constant(g, G, 1);
  const MackeyResult r = mackey_check(one, G);
  CHECK(r.pass);
  CHECK(r.reps.size() == 1);
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    CAPTURE(name);
    const MackeySweep s = mackey_sweep(named_group(name));
    CHECK(s.triples > 0);
    CHECK(s.pass());
  }
  const MackeySweep serial = mackey_sweep(named_group("A4"), 1), threaded = mackey_sweep(named_group("A4"), 4);
  CHECK(serial.triples == threaded.triples);
}

TEST_CASE("Frobenius determinant on induced representations") {
  CHECK(frob_det_induced(5, 1, 5, 2, 3) == CyclotomicInt::zeta(5, 6));
  CHECK(frob_det_induced(4, 2, 2, 1, 1) == integer(1));  // -psi(Frob^2) with psi(Frob^2) = -1
  // C_12, f = 3, psi of order 4 on <Frob^3>.
  CHECK(frob_det_induced(12, 3, 4, 1, 2) == CyclotomicInt::zeta(4, 2));
  std::size_t cases = 0;
  for (unsigned f = 1; f <= 6; ++f)
    for (unsigned ord = 1; ord <= 8; ++ord)
      for (unsigned e = 1; e <= 4; ++e)
        for (unsigned a = 0; a < ord; ++a) {
          const unsigned N = f * ord;
          const CyclotomicInt d = frob_det_induced(N, f, ord, a, e);
          CHECK(d == frob_det_formula(f, ord, a, e));
          if (f <= 4 && e <= 2) CHECK(d == leibniz_det(frob_matrix(f, CyclotomicInt::zeta(ord, a)).pow(e)));
          ++cases;
        }
  CHECK(cases == 6 * 36 * 4);
  CHECK_THROWS_AS(frob_det_induced(10, 3, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(frob_det_induced(6, 3, 4, 1, 1), std::invalid_argument);
}

TEST_CASE("Determinants: memoized Laplace against Leibniz") {
  CycloMatrix m(5, 12);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) m.at(i, j) = CyclotomicInt::zeta(12, (3 * i + 5 * j * j + i * j) % 12) + integer(i == j);
  CHECK(m.det() == leibniz_det(m));
}

TEST_CASE("Euler polynomials from power traces") {
  // Newton recovers det(1 - M T) for a 3x3 diagonal matrix diag(1, -1, i).
  const CyclotomicInt i = CyclotomicInt::zeta(4, 1);
  std::vector<CyclotomicInt> tr;
  for (unsigned k = 1; k <= 6; ++k) tr.push_back(integer(1) + integer(k % 2 ? -1 : 1) + i.pow(k));
  const EulerPoly expect = EulerPoly::binomial(integer(1), 1) * EulerPoly::binomial(integer(-1), 1) *
                           EulerPoly::binomial(i, 1);
  CHECK(det_one_minus(tr) == expect);
  CHECK(expect.degree() == 3);
}

TEST_CASE("Euler inductivity and the sign ledger on the record corpus") {
  const auto corpus = record_corpus();
  CHECK(corpus.size() >= 15);
  for (const auto& rec : corpus) {
    CAPTURE(rec.name);
    CHECK(rec.consistent());
    CHECK(rec.degree_identity());
    CHECK(rec.target.is_class_function());
    for (std::uint32_t frob = 0; frob < rec.group->order(); ++frob) {
      CHECK(rec.place_degree_identity(frob));
      const EulerCheck ec = euler_inductivity_check(rec, frob);
      CHECK(ec.factored_equal);
      CHECK(ec.target_equal);
      for (unsigned e = 1; e <= 4; ++e) CHECK(sign_ledger(rec, frob, e).agree());
    }
  }
}

TEST_CASE("Euler inductivity: worked examples") {
  const GroupPtr g = symmetric_group(3);
  const std::uint32_t c3 = find(*g, {1, 2, 0}), t = find(*g, {1, 0, 2});
  const Subgroup G = Subgroup::whole(*g), E = Subgroup::trivial(*g), A3 = Subgroup::generated(*g, {c3});
  const EulerPoly one_minus_t = EulerPoly::binomial(integer(1), 1);

  VirtualInductionRecord triv{"trivial", g, {{1, G, ClassFunction::constant(g, G, 1)}}, ClassFunction::constant(g, G, 1)};
  EulerCheck ec = euler_inductivity_check(triv, t);
  REQUIRE(ec.lhs.size() == 1);
  CHECK(ec.lhs[0].poly == one_minus_t);
  CHECK(ec.rhs[0].poly == one_minus_t);

  // Regular representation, D = <(12)>: three places of degree 2; the rhs
  // is det(1 - P T) for the 6x6 left-multiplication matrix, checked at integers.
  VirtualInductionRecord reg{"regular", g, {{1, E, ClassFunction::constant(g, E, 1)}}, ClassFunction::regular(g, G)};
  ec = euler_inductivity_check(reg, t);
  CHECK(ec.pass());
  CHECK(ec.lhs.size() == 3);
  for (const auto& f : ec.lhs) CHECK(f.poly == EulerPoly::binomial(integer(1), 2));
  for (std::int64_t x : {2, 3, -5}) {
    CycloMatrix m(6, 1);
    for (std::uint32_t a = 0; a < 6; ++a) {
      m.at(a, a) += integer(1);
      m.at(g->mul(t, a), a) -= integer(x);
    }
    CHECK(m.det() == eval(ec.rhs[0].poly, x));
  }

  // Two-dimensional irreducible as Ind_{A3} psi with D = <(12)>: (1 - T)(1 + T).
  const ClassFunction psi = linear_character(g, A3, {c3}, 3, {1});
  VirtualInductionRecord two{"two", g, {{1, A3, psi}}, induce(psi)};
  ec = euler_inductivity_check(two, t);
  CHECK(ec.pass());
  CHECK(ec.rhs[0].poly == one_minus_t * EulerPoly::binomial(integer(-1), 1));

  VirtualInductionRecord bad = two;
  bad.target = ClassFunction::constant(g, G, 2);
  CHECK_THROWS_AS(euler_inductivity_check(bad, t), std::invalid_argument);
}

TEST_CASE("Sign ledger: degenerate cases") {
  for (const auto& rec : record_corpus()) {
    const SignLedger trivial_d = sign_ledger(rec, 0, 3);  // D = {e}: all f = 1
    CHECK(trivial_d.dh_sign == 1);
    CHECK(trivial_d.frob_sign == 1);
    for (std::uint32_t frob = 0; frob < rec.group->order(); ++frob) {
      const SignLedger even = sign_ledger(rec, frob, 2);
      CHECK(even.dh_sign == 1);
      CHECK(even.frob_sign == 1);
    }
  }
}

TEST_CASE("Random cyclic-D records") {
  unsigned nontrivial_sign = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const RandomCase rc = random_case(seed);
    CAPTURE(rc.record.name);
    CHECK(rc.record.consistent());
    CHECK(rc.record.degree_identity());
    CHECK(rc.record.place_degree_identity(rc.frob));
    CHECK(euler_inductivity_check(rc.record, rc.frob).pass());
    const SignLedger s = sign_ledger(rc.record, rc.frob, rc.e);
    CHECK(s.agree());
    nontrivial_sign += s.dh_sign < 0;
  }
  CHECK(nontrivial_sign > 0);
  CHECK(random_case(7).record.name == random_case(7).record.name);
}
