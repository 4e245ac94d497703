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

#include <cmath>
#include <random>

#include "doctest.h"
#include "wittgauss/cyclo.hpp"

using namespace wittgauss;
using namespace wittgauss::cyclo;

namespace {

using BigPoly = std::vector<BigInt>;

// Phi_m by recursive division of x^m - 1 by Phi_d for proper divisors d.
std::vector<std::int64_t> phi_by_division(unsigned m) {
  BigPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    auto den = phi_by_division(d);
    BigPoly q(num.size() - den.size() + 1, 0);
    for (std::size_t i = num.size(); i-- >= den.size();) {
      const BigInt c = num[i];
      q[i - den.size() + 1] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[i - den.size() + 1 + j] -= c * den[j];
      if (i == den.size() - 1) break;
    }
    num = q;
  }
  std::vector<std::int64_t> out;
  for (auto& c : num) out.push_back(static_cast<std::int64_t>(c));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// Schoolbook product followed by long division by Phi_m.
BigPoly naive_mul(const CyclotomicInt& a, const CyclotomicInt& b) {
  const auto phi = cyclotomic_poly(a.order());
  BigPoly r(a.coeffs().size() + b.coeffs().size(), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  const std::size_t f = phi.size() - 1;
  for (std::size_t d = r.size(); d-- > f;) {
    const BigInt c = r[d];
    for (std::size_t i = 0; i <= f; ++i) r[d - f + i] -= c * phi[i];
  }
  r.resize(f);
  return r;
}

CyclotomicInt random_element(unsigned m, std::mt19937_64& rng, int spread) {
  std::vector<std::int64_t> counts(m, 0);
  std::uniform_int_distribution<int> d(-spread, spread);
  for (auto& c : counts) c = d(rng);
  return CyclotomicInt::from_exponent_counts(m, counts);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  for (unsigned m = 1; m <= 120; ++m) {
    CAPTURE(m);
    REQUIRE(cyclotomic_poly(m) == phi_by_division(m));
    REQUIRE(cyclotomic_poly(m).size() == euler_phi(m) + 1);
  }
}

TEST_CASE("embedding") {
  CHECK(CyclotomicInt::zeta(2, 1).embed(4) == CyclotomicInt::zeta(4, 2));
  CHECK(CyclotomicInt::zeta(4, 2) == CyclotomicInt::from_int(1, -1));
  CHECK(CyclotomicInt::zeta(3, 1).embed(12) == CyclotomicInt::zeta(12, 4));
  CHECK_THROWS_AS(CyclotomicInt::zeta(3, 1).embed(8), std::invalid_argument);
  std::mt19937_64 rng(11);
  for (unsigned m : {4u, 6u, 9u, 12u, 20u, 24u, 40u}) {
    for (unsigned big : {m * 2, m * 3, m * 5}) {
      auto x = random_element(m, rng, 5);
      auto y = x.embed(big);
      auto back = y.restrict_to(m);
      REQUIRE(back.has_value());
      REQUIRE(*back == x);
      REQUIRE(back->order() == m);
    }
  }
  // zeta_8 is not in Z[zeta_4].
  CHECK_FALSE(CyclotomicInt::zeta(8, 1).restrict_to(4).has_value());
  // sqrt(2) = zeta_8 + zeta_8^{-1} is not in Z[zeta_4] either.
  CHECK_FALSE((CyclotomicInt::zeta(8, 1) + CyclotomicInt::zeta(8, -1)).restrict_to(4).has_value());
  CHECK((CyclotomicInt::zeta(8, 2) + CyclotomicInt::zeta(8, 6)).restrict_to(1).has_value());
}

TEST_CASE("galois conjugation") {
  CHECK(CyclotomicInt::zeta(4, 1).galois_conj(-1) == -CyclotomicInt::zeta(4, 1));
  CHECK(CyclotomicInt::from_int(12, 7).galois_conj(5) == CyclotomicInt::from_int(12, 7));
  const auto g = CyclotomicInt::zeta(3, 1) - CyclotomicInt::zeta(3, 2);
  CHECK(g * g.conj() == CyclotomicInt::from_int(3, 3));
  CHECK_THROWS_AS(CyclotomicInt::zeta(12, 1).galois_conj(4), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (unsigned m : {5u, 8u, 12u, 15u, 16u, 36u}) {
    auto x = random_element(m, rng, 4);
    for (std::int64_t a = 1; a < m; ++a)
      for (std::int64_t b = 1; b < m; ++b) {
        if (std::gcd<std::int64_t>(a, m) != 1 || std::gcd<std::int64_t>(b, m) != 1) continue;
        REQUIRE(x.galois_conj(b).galois_conj(a) == x.galois_conj(a * b % m));
      }
  }
}

TEST_CASE("to_complex") {
  CHECK(CyclotomicInt::from_int(5, 1).to_complex() == std::complex<double>(1.0, 0.0));
  auto i = CyclotomicInt::zeta(4, 1).to_complex();
  CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-15);
  auto g = (CyclotomicInt::zeta(3, 1) - CyclotomicInt::zeta(3, 2)).to_complex();
  CHECK(std::abs(g - std::complex<double>(0, std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("root-of-unity sums vanish") {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 31u}) {
    CyclotomicInt s = CyclotomicInt::zero(p);
    for (unsigned i = 0; i < p; ++i) s += CyclotomicInt::zeta(p, i);
    REQUIRE(s.is_zero());
  }
  for (unsigned m : {4u, 12u, 24u, 25u, 200u}) {
    for (unsigned d = 1; d < m; ++d) {
      std::vector<std::int64_t> counts(m, 0);
      for (unsigned i = 0; i < m; ++i) counts[(std::uint64_t{d} * i) % m] += 1;
      REQUIRE(CyclotomicInt::from_exponent_counts(m, counts).is_zero());
    }
  }
}

TEST_CASE("multiplication matches the schoolbook oracle") {
  std::mt19937_64 rng(5);
  for (unsigned m : {1u, 2u, 3u, 8u, 12u, 25u, 30u, 36u, 105u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_element(m, rng, 50), b = random_element(m, rng, 50);
      REQUIRE((a * b).coeffs() == naive_mul(a, b));
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + a) == a * b + a * a);
    }
    // Coefficients beyond 64 bits take the arbitrary-precision path.
    auto a = random_element(m, rng, 9).pow(40);
    auto b = random_element(m, rng, 9).pow(37);
    REQUIRE((a * b).coeffs() == naive_mul(a, b));
  }
}

TEST_CASE("exponent counts, equality across orders, exact division") {
  std::vector<std::int64_t> counts(12, 0);
  counts[0] = 2;
  counts[3] = -1;
  counts[11] = 5;
  auto x = CyclotomicInt::from_exponent_counts(12, counts);
  auto y = CyclotomicInt::from_int(12, 2) - CyclotomicInt::zeta(12, 3) + 5 * CyclotomicInt::zeta(12, 11).pow(1);
  CHECK(x == y);
  CHECK(CyclotomicInt::from_int(6, 4) == CyclotomicInt::from_int(10, 4));
  CHECK(CyclotomicInt::zeta(6, 3) == CyclotomicInt::zeta(10, 5));
  CHECK((BigInt(6) * CyclotomicInt::zeta(9, 2)).exact_div(3) == BigInt(2) * CyclotomicInt::zeta(9, 2));
  CHECK_THROWS_AS(CyclotomicInt::zeta(9, 2).exact_div(2), std::domain_error);
  CHECK((CyclotomicInt::zeta(8, 1) + CyclotomicInt::zeta(12, 1)).order() == 24);
}
