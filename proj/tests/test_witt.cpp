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

#include <map>
#include <memory>
#include <set>

#include "doctest.h"
#include "oracles/witt_polynomials.hpp"
#include "wittgauss/witt.hpp"

using namespace wittgauss;
using namespace wittgauss::witt;
using ff::FiniteField;

namespace {

std::vector<WittRing> rings(std::uint32_t max_q, unsigned max_n,
                            std::uint64_t bound = kDefaultEnumerationBound) {
  std::vector<WittRing> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned k = 1; ipow(p, k) <= max_q; ++k)
      for (unsigned n = 1; n <= max_n; ++n)
        if (ipow(ipow(p, k), n) <= bound) out.push_back(WittRing::make(FiniteField::make(p, k), n, bound));
  return out;
}

}  // namespace

TEST_CASE("gr_modulus lifts the field modulus and X is a Teichmuller root") {
  for (const auto& R : rings(64, 3)) {
    CAPTURE(R.q());
    CAPTURE(R.length());
    const auto& g = R.gr_modulus();
    const auto& f = R.base().modulus();
    REQUIRE(g.size() == f.size());
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] % R.p() == f[i]);
    CHECK(g.back() == 1);
    if (R.degree() > 1) {
      const auto X = R.from_coeffs({0, 1});
      CHECK(R.pow(X, R.q()) == X);
      CHECK(R.teichmuller(R.base().characteristic()) == X);
    }
    CHECK(R.size() == ipow(R.q(), R.length()));
    std::uint32_t units = 0;
    for (std::uint32_t x = 0; x < R.size(); ++x) units += R.is_unit(x);
    CHECK(units == R.unit_count());
  }
}

TEST_CASE("worked examples for addition and Teichmuller lifts") {
  const auto F2 = FiniteField::make(2, 1), F3 = FiniteField::make(3, 1);
  const auto W2 = WittRing::make(F2, 2), W3 = WittRing::make(F3, 2);
  const auto one2 = W2.teichmuller(1);
  const auto two = W2.add(one2, one2);
  CHECK(two == W2.from_int(2));
  CHECK(W2.witt_coords(two) == std::vector<std::uint32_t>{0, 1});

  const auto one3 = W3.teichmuller(1);
  const auto three = W3.add(W3.add(one3, one3), one3);
  CHECK(three == W3.from_int(3));
  CHECK(W3.witt_coords(three) == std::vector<std::uint32_t>{0, 1});
  CHECK(W3.teichmuller(2) == 8);
  CHECK(W3.teichmuller(0) == 0);
  CHECK(W3.teichmuller(1) == 1);

  auto x = W3.element(5);
  CHECK(x + W3.element(0) == x);
  CHECK_THROWS_AS(x + W2.element(1), std::invalid_argument);
}

TEST_CASE("Galois-ring arithmetic agrees with universal Witt polynomials (q <= 9, n <= 3)") {
  for (const auto& R : rings(9, 3)) {
    const unsigned n = R.length();
    const std::uint32_t p = R.p(), q = R.q();
    CAPTURE(q);
    CAPTURE(n);
    const auto S = oracle::witt_polynomials(p, n, false);
    const auto P = oracle::witt_polynomials(p, n, true);
    std::vector<oracle::FieldFunction> fs, fp;
    for (unsigned j = 0; j < n; ++j) {
      fs.emplace_back(S[j], p, q);
      fp.emplace_back(P[j], p, q);
    }
    std::vector<std::vector<std::uint32_t>> coords(R.size());
    for (std::uint32_t x = 0; x < R.size(); ++x) {
      coords[x] = R.witt_coords(x);
      REQUIRE(R.from_witt_coords(coords[x]) == x);
    }
    std::vector<std::uint32_t> args(2 * n);
    for (std::uint32_t x = 0; x < R.size(); ++x)
      for (std::uint32_t y = 0; y < R.size(); ++y) {
        for (unsigned i = 0; i < n; ++i) {
          args[i] = coords[x][i];
          args[n + i] = coords[y][i];
        }
        const auto& sum = coords[R.add(x, y)];
        const auto& prod = coords[R.mul(x, y)];
        for (unsigned j = 0; j < n; ++j) {
          REQUIRE(sum[j] == fs[j](R.base(), args));
          REQUIRE(prod[j] == fp[j](R.base(), args));
        }
      }
  }
}

TEST_CASE("p = 2 addition law in Witt coordinates") {
  for (unsigned k = 1; k <= 3; ++k) {
    const auto F = FiniteField::make(2, k);
    const auto R = WittRing::make(F, 2);
    for (std::uint32_t x = 0; x < R.size(); ++x)
      for (std::uint32_t y = 0; y < R.size(); ++y) {
        auto a = R.witt_coords(x), b = R.witt_coords(y);
        std::vector<std::uint32_t> expect{F.add(a[0], b[0]),
                                          F.sub(F.add(a[1], b[1]), F.mul(a[0], b[0]))};
        REQUIRE(R.witt_coords(R.add(x, y)) == expect);
      }
  }
}

TEST_CASE("Teichmuller lift is a multiplicative section") {
  for (const auto& R : rings(64, 3)) {
    const auto& F = R.base();
    for (std::uint32_t a = 0; a < F.size(); ++a) {
      REQUIRE(R.reduce(R.teichmuller(a)) == a);
      if (a != 0) REQUIRE(R.pow(R.teichmuller(a), R.q() - 1) == R.one());
      for (std::uint32_t b = 0; b < F.size(); ++b)
        REQUIRE(R.teichmuller(F.mul(a, b)) == R.mul(R.teichmuller(a), R.teichmuller(b)));
    }
  }
}

TEST_CASE("p = 2 Teichmuller square identity") {
  for (unsigned k = 1; k <= 4; ++k) {
    const auto F = FiniteField::make(2, k);
    const auto R = WittRing::make(F, 2);
    for (std::uint32_t a = 0; a < F.size(); ++a)
      for (std::uint32_t b = 0; b < F.size(); ++b) {
        auto lhs = R.sub(R.sub(R.pow(R.teichmuller(F.add(a, b)), 2), R.teichmuller(F.mul(a, a))),
                         R.teichmuller(F.mul(b, b)));
        REQUIRE(lhs == R.mul_int(R.teichmuller(F.mul(a, b)), -2));
      }
  }
}

TEST_CASE("inverse, valuation and ring axioms") {
  for (const auto& R : rings(27, 3)) {
    for (std::uint32_t x = 0; x < R.size(); ++x) {
      if (R.is_unit(x)) REQUIRE(R.mul(x, R.inv(x)) == R.one());
      else REQUIRE_THROWS_AS(R.inv(x), std::domain_error);
      REQUIRE((R.valuation(x) == 0) == R.is_unit(x));
    }
    const std::uint32_t step = 1 + R.size() / 40;
    for (std::uint32_t x = 0; x < R.size(); x += step)
      for (std::uint32_t y = 1; y < R.size(); y += step)
        for (std::uint32_t z = 2; z < R.size(); z += step) {
          REQUIRE(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
          REQUIRE(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
        }
  }
}

TEST_CASE("frobenius is a ring automorphism lifting x -> x^p") {
  for (const auto& R : rings(64, 3)) {
    for (std::uint32_t x = 0; x < R.size(); ++x) {
      REQUIRE(R.reduce(R.frobenius(x)) == R.base().frobenius(R.reduce(x)));
      REQUIRE(R.frobenius_pow(x, R.degree()) == x);
    }
    for (std::uint32_t a = 0; a < R.q(); ++a)
      REQUIRE(R.frobenius(R.teichmuller(a)) == R.pow(R.teichmuller(a), R.p()));
  }
}

TEST_CASE("projection") {
  const auto W3 = WittRing::make(FiniteField::make(3, 1), 2);
  const auto W31 = W3.truncate(1);
  CHECK(W3.project(4, W31) == 1);
  CHECK(project(W3.element(7), 2) == W3.element(7));
  CHECK_THROWS_AS(W3.truncate(3), std::out_of_range);
  CHECK_THROWS_AS(W3.truncate(0), std::out_of_range);
  for (const auto& R : rings(25, 3)) {
    for (unsigned r = 1; r <= R.length(); ++r) {
      const auto T = R.truncate(r);
      std::uint32_t kernel = 0;
      for (std::uint32_t x = 0; x < R.size(); ++x) {
        if (R.is_unit(x) && R.project(x, T) == T.one()) ++kernel;
        for (std::uint32_t y = 0; y < R.size(); y += 1 + R.size() / 64) {
          REQUIRE(R.project(R.mul(x, y), T) == T.mul(R.project(x, T), R.project(y, T)));
          REQUIRE(R.project(R.add(x, y), T) == T.add(R.project(x, T), R.project(y, T)));
        }
      }
      CHECK(kernel == ipow(R.q(), R.length() - r));
    }
  }
}

TEST_CASE("unit decomposition") {
  const auto W3 = WittRing::make(FiniteField::make(3, 1), 2);
  auto d1 = unit_decompose(W3, 1, 1);
  CHECK(d1.z == 1);
  CHECK(d1.w == 0);
  auto d4 = unit_decompose(W3, 4, 1);
  CHECK(d4.z == 1);
  CHECK(d4.w == 1);
  CHECK_THROWS_AS(unit_decompose(W3, 3, 1), std::domain_error);
  for (const auto& R : rings(25, 3)) {
    for (unsigned r = 1; r < R.length(); ++r)
      for (std::uint32_t u = 0; u < R.size(); ++u) {
        if (!R.is_unit(u)) continue;
        auto d = unit_decompose(R, u, r);
        REQUIRE(unit_recompose(R, d, r) == u);
      }
  }
}

TEST_CASE("1 + p^{n-r} w~ does not depend on the lift of w") {
  for (const auto& R : rings(9, 3)) {
    for (unsigned r = 1; r < R.length(); ++r) {
      const auto T = R.truncate(r);
      const std::int64_t pr = ipow(R.p(), r);
      const std::int64_t shift = ipow(R.p(), R.length() - r);
      for (std::uint32_t w = 0; w < T.size(); ++w) {
        const auto base = R.shift_up(w, T);
        for (std::uint32_t t = 0; t < R.size(); t += 3) {
          const auto other = R.add(R.lift(w, T), R.mul_int(t, pr));
          REQUIRE(R.mul_int(other, shift) == base);
        }
      }
    }
  }
}

TEST_CASE("lift section") {
  for (const auto& R : rings(27, 3)) {
    for (unsigned m = 1; m <= R.length(); ++m) {
      LiftSection L(R, m);
      for (std::uint32_t z = 0; z < L.source().size(); ++z) REQUIRE(R.project(L(z), L.source()) == z);
    }
  }
  // Subfield compatibility: lifts of W_m(F') stay inside W_n(F').
  for (auto [p, ks, s] : {std::tuple{2u, 1u, 3u}, {2u, 2u, 2u}, {3u, 1u, 2u}, {3u, 1u, 3u}, {5u, 1u, 2u}}) {
    const auto Fs = FiniteField::make(p, ks), Fb = FiniteField::make(p, ks * s);
    for (unsigned n = 2; n <= 3; ++n) {
      if (ipow(Fb.size(), n) > kDefaultEnumerationBound) continue;
      for (unsigned m = 1; m < n; ++m) {
        auto small_tower = std::make_shared<WittExtension>(WittRing::make(Fs, m), WittRing::make(Fb, m));
        auto full_tower = std::make_shared<WittExtension>(WittRing::make(Fs, n), WittRing::make(Fb, n));
        LiftSection L(small_tower, full_tower);
        for (std::uint32_t z = 0; z < L.source().size(); ++z) {
          const auto zt = L(z);
          REQUIRE(L.target().project(zt, L.source()) == z);
          if (small_tower->restrict(z)) REQUIRE(full_tower->restrict(zt).has_value());
        }
      }
    }
  }
}

TEST_CASE("norm and trace for unramified extensions") {
  struct Case { std::uint32_t p; unsigned k, n, s; };
  for (auto c : {Case{2, 1, 2, 2}, Case{2, 1, 2, 3}, Case{2, 2, 2, 2}, Case{3, 1, 2, 2}, Case{3, 1, 2, 3},
                 Case{5, 1, 2, 2}, Case{2, 1, 3, 2}, Case{3, 1, 3, 2}, Case{2, 1, 4, 2}}) {
    CAPTURE(c.p);
    CAPTURE(c.k);
    CAPTURE(c.n);
    CAPTURE(c.s);
    const auto Fs = FiniteField::make(c.p, c.k), Fb = FiniteField::make(c.p, c.k * c.s);
    WittExtension E(WittRing::make(Fs, c.n), WittRing::make(Fb, c.n));
    const auto& S = E.sub();
    const auto& B = E.ext();
    for (std::uint32_t x = 0; x < S.size(); ++x) {
      REQUIRE(E.norm(E.embed(x)) == S.pow(x, c.s));
      REQUIRE(E.trace(E.embed(x)) == S.mul_int(x, c.s));
      for (std::uint32_t y = 0; y < S.size(); y += 3) {
        REQUIRE(E.embed(S.mul(x, y)) == B.mul(E.embed(x), E.embed(y)));
        REQUIRE(E.embed(S.add(x, y)) == B.add(E.embed(x), E.embed(y)));
      }
    }
    const auto S1 = S.truncate(1);
    const auto B1 = B.truncate(1);
    WittExtension E1(S1, B1);
    std::map<std::uint32_t, std::uint32_t> fibres;
    for (std::uint32_t y = 0; y < B.size(); ++y) {
      const auto ny = E.norm(y);
      REQUIRE(S.is_unit(ny) == B.is_unit(y));
      if (B.is_unit(y)) ++fibres[ny];
      for (std::uint32_t z = 0; z < B.size(); z += 11) {
        REQUIRE(E.norm(B.mul(y, z)) == S.mul(ny, E.norm(z)));
        REQUIRE(E.trace(B.add(y, z)) == S.add(E.trace(y), E.trace(z)));
      }
      // Functoriality with the projection to length 1.
      if (y % 17 == 0) {
        REQUIRE(S.project(ny, S1) == E1.norm(B.project(y, B1)));
        REQUIRE(S.project(E.trace(y), S1) == E1.trace(B.project(y, B1)));
      }
    }
    REQUIRE(fibres.size() == S.unit_count());
    for (auto [u, cnt] : fibres) REQUIRE(cnt == B.unit_count() / S.unit_count());

    if (c.n % 2 == 0) {
      const unsigned r = c.n / 2;
      const auto Br = B.truncate(r);
      const auto Sr = S.truncate(r);
      WittExtension Er(Sr, Br);
      for (std::uint32_t w = 0; w < Br.size(); ++w) {
        const auto lhs = E.norm(B.add(B.one(), B.shift_up(w, Br)));
        const auto rhs = S.add(S.one(), S.shift_up(Er.trace(w), Sr));
        REQUIRE(lhs == rhs);
      }
    }
  }
  const auto W = WittRing::make(FiniteField::make(3, 1), 2);
  CHECK_THROWS_AS(witt_norm(W.element(1), WittExtension(W, WittRing::make(FiniteField::make(3, 2), 2))),
                  std::invalid_argument);
}

TEST_CASE("trace pairing is perfect for p^k <= 64, r <= 3") {
  for (const auto& R : rings(64, 3, UINT32_MAX)) {
    CAPTURE(R.q());
    CAPTURE(R.length());
    const auto G = R.trace_gram();
    CHECK(zmod::invertible(G, R.p()));
    if (R.size() <= 729) {
      // Brute force: x -> (y -> Tr(xy)) is injective.
      for (std::uint32_t x = 1; x < R.size(); ++x) {
        bool nonzero = false;
        for (std::uint32_t y = 0; y < R.size() && !nonzero; ++y) nonzero = R.trace_to_prime(R.mul(x, y)) != 0;
        REQUIRE(nonzero);
      }
    }
  }
}
