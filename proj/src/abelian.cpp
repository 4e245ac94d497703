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

#include "wittgauss/abelian.hpp"

#include <numeric>
#include <stdexcept>

#include "wittgauss/common.hpp"

namespace wittgauss::abelian {

namespace {

std::uint32_t power(const Mul& mul, std::uint32_t identity, std::uint32_t x, std::uint64_t e) {
  std::uint32_t r = identity;
  while (e) {
    if (e & 1) r = mul(r, x);
    e >>= 1;
    if (e) x = mul(x, x);
  }
  return r;
}

}  // namespace

std::uint32_t Decomposition::exponent() const {
  std::uint32_t m = 1;
  for (auto o : orders) m = std::lcm(m, o);
  return m;
}

void decompose_p_group(std::uint32_t n, std::uint32_t identity, const Mul& mul, std::uint32_t p,
                       const std::vector<std::uint32_t>& members, Decomposition& out) {
  // span_exps[x] holds the exponents of x against the local basis, or is
  // empty when x is outside the span H built so far.
  std::vector<std::vector<std::uint32_t>> span_exps(n);
  std::vector<std::uint32_t> span{identity};
  span_exps[identity] = {};
  std::vector<bool> in_span(n, false);
  in_span[identity] = true;
  std::vector<std::uint32_t> gens, ords;

  while (span.size() < members.size()) {
    // h of maximal order modulo H; h^{p^a} in H.
    std::uint32_t best = identity, best_a = 0, best_y = identity;
    for (auto x : members) {
      if (in_span[x]) continue;
      std::uint32_t y = x, a = 0;
      while (!in_span[y]) {
        y = power(mul, identity, y, p);
        ++a;
      }
      if (a > best_a) {
        best = x;
        best_a = a;
        best_y = y;
      }
    }
    const auto pa = static_cast<std::uint32_t>(ipow(p, best_a));
    // Subtract a p^a-th root of h^{p^a} inside H so the new generator has
    // order exactly p^a and meets H trivially.
    const auto& c = span_exps[best_y];
    std::uint32_t g = best;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const std::uint32_t cj = j < c.size() ? c[j] : 0;
      if (cj % pa != 0) throw std::logic_error("abelian decomposition: non-divisible relation");
      const std::uint32_t e = (ords[j] - cj / pa % ords[j]) % ords[j];
      g = mul(g, power(mul, identity, gens[j], e));
    }
    if (power(mul, identity, g, pa) != identity) throw std::logic_error("abelian decomposition: order mismatch");

    const std::size_t old = span.size();
    std::uint32_t gi = identity;
    for (std::uint32_t i = 1; i < pa; ++i) {
      gi = mul(gi, g);
      for (std::size_t t = 0; t < old; ++t) {
        const std::uint32_t z = mul(span[t], gi);
        if (in_span[z]) throw std::logic_error("abelian decomposition: generator not independent");
        in_span[z] = true;
        auto exps = span_exps[span[t]];
        exps.resize(gens.size() + 1, 0);
        exps[gens.size()] = i;
        span_exps[z] = std::move(exps);
        span.push_back(z);
      }
    }
    gens.push_back(g);
    ords.push_back(pa);
  }
  // Largest factors first within each Sylow block.
  for (std::size_t j = gens.size(); j-- > 0;) {
    out.generators.push_back(gens[j]);
    out.orders.push_back(ords[j]);
  }
}

void fill_dlog(std::uint32_t n, std::uint32_t identity, const Mul& mul, Decomposition& out) {
  const std::uint32_t rank = out.rank();
  std::uint64_t total = 1;
  for (auto o : out.orders) total *= o;
  if (total != n) throw std::logic_error("abelian decomposition: order product mismatch");
  out.dlog.assign(std::size_t{n} * rank, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> e(rank, 0);
  std::uint32_t x = identity;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (seen[x]) throw std::logic_error("abelian decomposition: generators not a basis");
    seen[x] = true;
    for (std::uint32_t j = 0; j < rank; ++j) out.dlog[std::size_t{x} * rank + j] = e[j];
    // Mixed-radix increment, j = 0 fastest; x tracks prod g_j^{e_j}.
    for (std::uint32_t j = 0; j < rank; ++j) {
      x = mul(x, out.generators[j]);
      if (++e[j] < out.orders[j]) break;
      e[j] = 0;  // g_j^{ord_j} = 1, so x is already correct
    }
  }
}

Decomposition decompose(std::uint32_t n, std::uint32_t identity, const Mul& mul) {
  Decomposition out;
  for (auto ell : prime_factors(n)) {
    std::uint64_t part = 1;
    std::uint32_t m = n;
    while (m % ell == 0) {
      m /= static_cast<std::uint32_t>(ell);
      part *= ell;
    }
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < n; ++x)
      if (power(mul, identity, x, part) == identity) members.push_back(x);
    if (members.size() != part) throw std::logic_error("abelian decomposition: group is not abelian");
    decompose_p_group(n, identity, mul, static_cast<std::uint32_t>(ell), members, out);
  }
  fill_dlog(n, identity, mul, out);
  return out;
}

}  // namespace wittgauss::abelian
