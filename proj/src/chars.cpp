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

#include "wittgauss/chars.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wittgauss/zmod.hpp"

namespace wittgauss::chars {

// ---------------------------------------------------------------- UnitGroup

std::shared_ptr<const UnitGroup> UnitGroup::make(const witt::WittRing& ring, std::uint64_t bound) {
  if (ring.unit_count() > bound) throw BoundExceeded("UnitGroup: unit group exceeds enumeration bound");
  std::shared_ptr<UnitGroup> g(new UnitGroup(ring));
  const auto& F = ring.base();
  const std::uint32_t q = ring.q();

  // 1 + pW_n on dense ids.
  std::vector<Elem> u1;
  std::vector<std::int64_t> id(ring.size(), -1);
  for (Elem x = 0; x < ring.size(); ++x)
    if (ring.reduce(x) == 1) {
      id[x] = static_cast<std::int64_t>(u1.size());
      u1.push_back(x);
    }
  const auto n1 = static_cast<std::uint32_t>(u1.size());
  abelian::Mul mul = [&](std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(id[ring.mul(u1[a], u1[b])]);
  };
  abelian::Decomposition d;
  std::vector<std::uint32_t> all(n1);
  std::iota(all.begin(), all.end(), 0u);
  const auto one_id = static_cast<std::uint32_t>(id[ring.one()]);
  if (n1 > 1) abelian::decompose_p_group(n1, one_id, mul, ring.p(), all, d);
  abelian::fill_dlog(n1, one_id, mul, d);

  const bool has_mu = q > 2;
  if (has_mu) {
    g->gens_.push_back(ring.teichmuller(F.primitive()));
    g->orders_.push_back(q - 1);
  }
  for (std::size_t j = 0; j < d.generators.size(); ++j) {
    g->gens_.push_back(u1[d.generators[j]]);
    g->orders_.push_back(d.orders[j]);
  }
  for (auto o : g->orders_) g->exponent_ = std::lcm(g->exponent_, o);

  // u = [u mod p] * u1 with u1 in 1 + pW_n.
  std::vector<Elem> teich_inv(q, 0);
  for (std::uint32_t c = 1; c < q; ++c) teich_inv[c] = ring.teichmuller(F.inv(c));
  const std::size_t rank = g->gens_.size();
  g->dlog_.assign(std::size_t{ring.size()} * rank, 0);
  for (Elem x = 0; x < ring.size(); ++x) {
    const auto c = ring.reduce(x);
    if (c == 0) continue;
    std::uint32_t* out = &g->dlog_[std::size_t{x} * rank];
    std::size_t j = 0;
    if (has_mu) out[j++] = F.log(c);
    const auto v = static_cast<std::uint32_t>(id[ring.mul(x, teich_inv[c])]);
    for (std::uint32_t t = 0; t < d.rank(); ++t) out[j++] = d.dlog[std::size_t{v} * d.rank() + t];
  }
  return g;
}

std::vector<Elem> UnitGroup::filtration(unsigned m) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < ring_.size(); ++x) {
    if (!ring_.is_unit(x)) continue;
    if (m == 0 || ring_.valuation(ring_.sub(x, ring_.one())) >= m) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------- MultChar

MultChar::MultChar(UnitGroupPtr group, std::vector<std::uint32_t> exps)
    : group_(std::move(group)), exps_(std::move(exps)) {
  if (exps_.size() != group_->rank()) throw std::invalid_argument("MultChar: exponent vector has wrong length");
  const std::uint32_t M = group_->exponent();
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    const auto o = group_->orders()[j];
    exps_[j] %= o;
    weights_.push_back(static_cast<std::uint32_t>(std::uint64_t{exps_[j]} * (M / o) % M));
  }
}

bool MultChar::is_trivial() const {
  for (auto a : exps_)
    if (a != 0) return false;
  return true;
}

std::uint32_t MultChar::order() const {
  std::uint32_t m = 1;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    const auto o = group_->orders()[j];
    m = std::lcm(m, o / std::gcd(o, exps_[j]));
  }
  return m;
}

std::optional<std::uint32_t> MultChar::exponent(Elem x) const {
  const std::uint32_t* d = group_->dlog(x);
  if (!d) return std::nullopt;
  std::uint64_t e = 0;
  for (std::size_t j = 0; j < weights_.size(); ++j) e += std::uint64_t{weights_[j]} * d[j];
  return static_cast<std::uint32_t>(e % group_->exponent());
}

std::vector<std::int64_t> MultChar::exponent_table(std::uint32_t m) const {
  const std::uint32_t ord = order();
  if (m % ord != 0) throw std::invalid_argument("MultChar::exponent_table: modulus not a multiple of the order");
  const std::uint32_t step = group_->exponent() / ord;
  const auto& ring = group_->ring();
  std::vector<std::int64_t> out(ring.size(), -1);
  for (Elem x = 0; x < ring.size(); ++x)
    if (auto e = exponent(x)) out[x] = std::int64_t{*e / step} * (m / ord);
  return out;
}

cyclo::CyclotomicInt MultChar::value(Elem x) const {
  const std::uint32_t ord = order();
  auto e = exponent(x);
  if (!e) return cyclo::CyclotomicInt::zero(ord);
  return cyclo::CyclotomicInt::zeta(ord, *e / (group_->exponent() / ord));
}

unsigned MultChar::conductor_exp() const {
  const auto& ring = group_->ring();
  const unsigned n = ring.length();
  if (is_trivial()) return 0;
  // 1 + p^m W_n is generated by 1 + p^j X^i for j >= m, i < k.
  unsigned level = 1;
  for (unsigned j = n; j-- > 1;) {
    bool trivial = true;
    for (unsigned i = 0; i < ring.degree() && trivial; ++i) {
      std::vector<std::int64_t> c(ring.degree(), 0);
      c[i] = static_cast<std::int64_t>(ipow(ring.p(), j));
      c[0] += 1;
      trivial = *exponent(ring.from_coeffs(c)) == 0;
    }
    if (!trivial) {
      level = j + 1;
      break;
    }
  }
  return level;
}

MultChar MultChar::operator*(const MultChar& o) const {
  if (group_ != o.group_) throw std::invalid_argument("MultChar: characters of different groups");
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = (exps_[j] + o.exps_[j]) % group_->orders()[j];
  return {group_, e};
}

MultChar MultChar::inverse() const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = (group_->orders()[j] - exps_[j]) % group_->orders()[j];
  return {group_, e};
}

std::string MultChar::descriptor() const {
  std::ostringstream os;
  os << "{\"kind\":\"mult\",\"exps\":[";
  for (std::size_t j = 0; j < exps_.size(); ++j) os << (j ? "," : "") << exps_[j];
  os << "],\"conductor\":" << conductor_exp() << "}";
  return os.str();
}

std::vector<MultChar> enumerate_mult_chars(const UnitGroupPtr& group) {
  std::vector<MultChar> out;
  out.reserve(group->order());
  std::vector<std::uint32_t> e(group->rank(), 0);
  for (std::uint32_t t = 0; t < group->order(); ++t) {
    out.emplace_back(group, e);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (++e[j] < group->orders()[j]) break;
      e[j] = 0;
    }
  }
  return out;
}

MultChar inflate_by_norm(const MultChar& chi, const UnitGroupPtr& big, const witt::WittExtension& ext) {
  if (!(ext.sub() == chi.ring()) || !(ext.ext() == big->ring()))
    throw std::invalid_argument("inflate_by_norm: extension does not match the character rings");
  const std::uint32_t M = chi.group().exponent();
  std::vector<std::uint32_t> a;
  for (std::size_t j = 0; j < big->rank(); ++j) {
    const std::uint64_t e = *chi.exponent(ext.norm(big->generators()[j]));
    const std::uint64_t num = e * big->orders()[j];
    if (num % M != 0) throw std::logic_error("inflate_by_norm: value order does not divide generator order");
    a.push_back(static_cast<std::uint32_t>(num / M));
  }
  return {big, a};
}

// ---------------------------------------------------------------- AddChar

std::string to_string(Convention c) { return c == Convention::Appendix ? "appendix" : "global-sign"; }

std::string to_string(KappaEmbedding k) {
  switch (k) {
    case KappaEmbedding::Teichmuller: return "teichmuller";
    case KappaEmbedding::LeastResidue: return "least-residue";
    default: return "explicit";
  }
}

AddChar::AddChar(witt::WittRing ring, Elem kappa, Convention conv, KappaEmbedding embedding)
    : ring_(std::move(ring)), kappa_(kappa), conv_(conv), embedding_(embedding) {
  if (kappa_ >= ring_.size() || !ring_.is_unit(kappa_)) throw std::invalid_argument("AddChar: kappa must be a unit");
}

AddChar AddChar::from_field(const witt::WittRing& ring, ff::FiniteField::Elem c, KappaEmbedding embedding,
                            Convention conv) {
  if (c == 0 || c >= ring.q()) throw std::invalid_argument("AddChar: kappa must be in F_q^x");
  Elem kappa;
  if (embedding == KappaEmbedding::Teichmuller) {
    kappa = ring.teichmuller(c);
  } else {
    auto pc = ring.base().coeffs(c);
    kappa = ring.from_coeffs(std::vector<std::int64_t>(pc.begin(), pc.end()));
  }
  return {ring, kappa, conv, embedding};
}

std::uint32_t AddChar::exponent(Elem x) const {
  const std::uint32_t t = ring_.trace_to_prime(ring_.mul(kappa_, x));
  return sign() > 0 ? t : (ring_.pn() - t) % ring_.pn();
}

std::vector<std::uint32_t> AddChar::exponent_table() const {
  std::vector<std::uint32_t> out(ring_.size());
  for (Elem x = 0; x < ring_.size(); ++x) out[x] = exponent(x);
  return out;
}

cyclo::CyclotomicInt AddChar::value(Elem x) const { return cyclo::CyclotomicInt::zeta(ring_.pn(), exponent(x)); }

std::uint32_t AddChar::level_exponent(const witt::WittRing& level, Elem z) const {
  const auto shift = static_cast<std::uint32_t>(ipow(ring_.p(), ring_.length() - level.length()));
  return exponent(ring_.shift_up(z, level)) / shift;
}

AddChar AddChar::extend(const witt::WittExtension& ext) const {
  if (!(ext.sub() == ring_)) throw std::invalid_argument("AddChar::extend: extension base mismatch");
  return {ext.ext(), ext.embed(kappa_), conv_, embedding_};
}

std::string AddChar::descriptor() const {
  std::ostringstream os;
  os << "{\"kind\":\"add\",\"kappa\":[";
  auto c = ring_.coeffs(kappa_);
  for (std::size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
  os << "],\"embedding\":\"" << to_string(embedding_) << "\",\"convention\":\"" << to_string(conv_) << "\"}";
  return os.str();
}

// ---------------------------------------------------------------- epsilon

EpsilonChar solve_epsilon_char(const MultChar& chi, const AddChar& psi, unsigned r) {
  const auto& ring = chi.ring();
  if (!(psi.ring() == ring)) throw std::invalid_argument("solve_epsilon_char: rings differ");
  const unsigned n = ring.length();
  if (2 * (n - r) < n || r >= n) throw std::invalid_argument("solve_epsilon_char: need 2(n - r) >= n");
  EpsilonChar out;
  out.r = r;
  if (r == 0) return out;

  const witt::WittRing level = ring.truncate(r);
  const std::uint32_t pr = level.pn();
  const std::uint32_t M = chi.group().exponent();
  // chi(1 + p^{n-r} x~) as an exponent of zeta_{p^r}.
  auto chi_level = [&](Elem x) -> std::int64_t {
    const std::uint64_t e = *chi.exponent(ring.add(ring.one(), ring.shift_up(x, level)));
    if (e * pr % M != 0) throw std::logic_error("solve_epsilon_char: value outside mu_{p^r}");
    return static_cast<std::int64_t>(e * pr / M);
  };

  const unsigned k = ring.degree();
  zmod::Vec rhs(k);
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::int64_t> c(k, 0);
    c[i] = 1;
    rhs[i] = mod_floor(-psi.sign() * chi_level(level.from_coeffs(c)), pr);
  }
  // sign Tr(kappa_r eps X^i) = -c_i: solve G y = -sign c for y = kappa_r eps.
  auto y = zmod::solve(level.trace_gram(), rhs, ring.p(), pr);
  if (!y) throw std::logic_error("solve_epsilon_char: trace pairing degenerate");
  const Elem kappa_r = ring.project(psi.kappa(), level);
  out.level = level;
  out.epsilon = level.mul(level.inv(kappa_r), level.from_coeffs(*y));
  out.lift = ring.lift(out.epsilon, level);

  for (Elem x = 0; x < level.size(); ++x) {
    const std::int64_t want = psi.level_exponent(level, level.neg(level.mul(out.epsilon, x)));
    if (chi_level(x) != want) throw std::logic_error("solve_epsilon_char: pointwise verification failed");
  }
  return out;
}

}  // namespace wittgauss::chars
