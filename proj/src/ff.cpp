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

#include "wittgauss/ff.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittgauss::ff {

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  trim(r);
  return r;
}

Poly rem(Poly a, const Poly& m, std::uint32_t p) {
  Poly mm = m;
  trim(mm);
  if (mm.empty()) throw std::domain_error("poly::rem: zero modulus");
  trim(a);
  const std::size_t dm = mm.size() - 1;
  const auto lead_inv = static_cast<std::uint64_t>(inv_mod(mm.back(), p));
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * mm[i]) % p);
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const auto inv = static_cast<std::uint64_t>(inv_mod(a.back(), p));
    for (auto& c : a) c = static_cast<std::uint32_t>(c * inv % p);
  }
  return a;
}

namespace {
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) r = rem(mul(r, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}
}  // namespace

Poly x_pow_p_pow(unsigned e, const Poly& m, std::uint32_t p) {
  Poly r = rem(Poly{0, 1}, m, p);
  for (unsigned i = 0; i < e; ++i) r = powmod(r, p, m, p);
  return r;
}

bool is_irreducible(const Poly& monic, std::uint32_t p) {
  Poly f = monic;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const auto k = static_cast<unsigned>(f.size() - 1);
  const Poly x{0, 1};
  for (unsigned d : divisors(k)) {
    if (d == k) continue;
    Poly g = gcd(f, sub(x_pow_p_pow(d, f, p), x, p), p);
    if (g.size() != 1) return false;
  }
  return sub(x_pow_p_pow(k, f, p), rem(x, f, p), p).empty();
}

}  // namespace poly

FiniteField FiniteField::make(std::uint32_t p, unsigned k, std::uint64_t bound) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p is not prime");
  if (k < 1) throw std::invalid_argument("make_field: degree must be >= 1");
  const std::uint64_t q = ipow(p, k, bound);
  if (q > bound) throw BoundExceeded("make_field: p^k exceeds bound");
  for (std::uint64_t i = 0; i < q; ++i) {
    Poly f(k + 1, 0);
    std::uint64_t t = i;
    for (unsigned j = 0; j < k; ++j, t /= p) f[j] = static_cast<std::uint32_t>(t % p);
    f[k] = 1;
    if (poly::is_irreducible(f, p)) return build(p, std::move(f));
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

FiniteField FiniteField::with_modulus(std::uint32_t p, Poly modulus, std::uint64_t bound) {
  if (!is_prime(p)) throw std::invalid_argument("with_modulus: p is not prime");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("with_modulus: coefficient out of range");
  poly::trim(modulus);
  if (modulus.size() < 2) throw std::invalid_argument("with_modulus: degree must be >= 1");
  if (ipow(p, static_cast<unsigned>(modulus.size() - 1), bound) > bound)
    throw BoundExceeded("with_modulus: p^k exceeds bound");
  if (!poly::is_irreducible(modulus, p))
    throw std::invalid_argument("with_modulus: modulus is not monic irreducible");
  return build(p, std::move(modulus));
}

FiniteField FiniteField::build(std::uint32_t p, Poly modulus) {
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = static_cast<unsigned>(modulus.size() - 1);
  impl->q = static_cast<std::uint32_t>(ipow(p, impl->k));
  impl->modulus = std::move(modulus);
  const std::uint32_t q = impl->q;

  auto to_poly = [&](Elem x) {
    Poly c(impl->k, 0);
    for (unsigned j = 0; j < impl->k; ++j, x /= p) c[j] = x % p;
    poly::trim(c);
    return c;
  };
  auto from_poly = [&](const Poly& c) {
    Elem x = 0;
    for (std::size_t j = c.size(); j-- > 0;) x = x * p + c[j];
    return x;
  };
  auto slow_mul = [&](Elem a, Elem b) {
    return from_poly(poly::rem(poly::mul(to_poly(a), to_poly(b), p), impl->modulus, p));
  };

  // Smallest generator of the multiplicative group.
  const auto ell = prime_factors(q - 1);
  Elem g = 1;
  for (Elem cand = 1; cand < q; ++cand) {
    bool ok = true;
    for (auto l : ell) {
      Elem r = 1, b = cand;
      for (std::uint64_t e = (q - 1) / l; e; e >>= 1) {
        if (e & 1) r = slow_mul(r, b);
        b = slow_mul(b, b);
      }
      if (r == 1) { ok = false; break; }
    }
    if (ok) { g = cand; break; }
  }
  impl->exp.resize(q - 1);
  impl->log.assign(q, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    impl->exp[i] = cur;
    impl->log[cur] = i;
    cur = slow_mul(cur, g);
  }
  if (cur != 1) throw std::logic_error("FiniteField: generator order mismatch");
  return FiniteField(std::move(impl));
}

Poly FiniteField::coeffs(Elem x) const {
  Poly c(impl_->k, 0);
  for (unsigned j = 0; j < impl_->k; ++j, x /= impl_->p) c[j] = x % impl_->p;
  return c;
}

FiniteField::Elem FiniteField::from_coeffs(const Poly& c) const {
  Poly r = poly::rem(c, impl_->modulus, impl_->p);
  Elem x = 0;
  for (std::size_t j = r.size(); j-- > 0;) x = x * impl_->p + r[j];
  return x;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  const std::uint32_t p = impl_->p;
  if (p == 2) return a ^ b;
  Elem r = 0, place = 1;
  for (unsigned j = 0; j < impl_->k; ++j, a /= p, b /= p, place *= p)
    r += ((a % p + b % p) % p) * place;
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  const std::uint32_t p = impl_->p;
  if (p == 2) return a;
  Elem r = 0, place = 1;
  for (unsigned j = 0; j < impl_->k; ++j, a /= p, place *= p) r += ((p - a % p) % p) * place;
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  const std::uint32_t l = impl_->log[a];
  return impl_->exp[l == 0 ? 0 : impl_->q - 1 - l];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return impl_->exp[(std::uint64_t{impl_->log[a]} * (e % (impl_->q - 1))) % (impl_->q - 1)];
}

FiniteField::Elem FiniteField::trace_to_prime(Elem x) const {
  Elem s = 0, y = x;
  for (unsigned j = 0; j < impl_->k; ++j) {
    s = add(s, y);
    y = frobenius(y);
  }
  return s;
}

FieldElement FiniteField::element(Elem x) const {
  if (x >= impl_->q) throw std::out_of_range("FiniteField::element: index out of range");
  return FieldElement(*this, x);
}

FieldElement frobenius(const FieldElement& x) { return x.frobenius(); }

FieldEmbedding::FieldEmbedding(FiniteField sub, FiniteField ext)
    : sub_(std::move(sub)), ext_(std::move(ext)) {
  if (sub_.characteristic() != ext_.characteristic() || ext_.degree() % sub_.degree() != 0)
    throw std::invalid_argument("FieldEmbedding: not a subfield");
  s_ = ext_.degree() / sub_.degree();
  const std::uint32_t qs = sub_.size();
  image_.assign(qs, 0);
  if (sub_.degree() == 1) {
    for (std::uint32_t a = 0; a < qs; ++a) image_[a] = ext_.from_int(a);
  } else {
    const Poly& f = sub_.modulus();
    std::optional<FiniteField::Elem> beta;
    for (FiniteField::Elem y = 0; y < ext_.size() && !beta; ++y) {
      if (ext_.pow(y, qs) != y) continue;
      FiniteField::Elem v = 0;
      for (std::size_t j = f.size(); j-- > 0;) v = ext_.add(ext_.mul(v, y), ext_.from_int(f[j]));
      if (v == 0) beta = y;
    }
    if (!beta) throw std::logic_error("FieldEmbedding: no root of the sub-modulus");
    for (std::uint32_t a = 0; a < qs; ++a) {
      Poly c = sub_.coeffs(a);
      FiniteField::Elem v = 0;
      for (std::size_t j = c.size(); j-- > 0;) v = ext_.add(ext_.mul(v, *beta), ext_.from_int(c[j]));
      image_[a] = v;
    }
  }
  preimage_.assign(ext_.size(), -1);
  for (std::uint32_t a = 0; a < qs; ++a) preimage_[image_[a]] = a;
}

std::optional<FiniteField::Elem> FieldEmbedding::restrict(FiniteField::Elem y) const {
  if (preimage_[y] < 0) return std::nullopt;
  return static_cast<FiniteField::Elem>(preimage_[y]);
}

namespace {
FiniteField::Elem back_to_sub(FiniteField::Elem y, const FieldEmbedding& emb) {
  auto r = emb.restrict(y);
  if (!r) throw std::logic_error("relative trace/norm left the subfield");
  return *r;
}
}  // namespace

FiniteField::Elem rel_trace(FiniteField::Elem x, const FieldEmbedding& emb) {
  const FiniteField& E = emb.ext();
  FiniteField::Elem s = 0, y = x;
  for (unsigned j = 0; j < emb.relative_degree(); ++j) {
    s = E.add(s, y);
    y = E.pow(y, emb.sub().size());
  }
  return back_to_sub(s, emb);
}

FiniteField::Elem rel_norm(FiniteField::Elem x, const FieldEmbedding& emb) {
  const FiniteField& E = emb.ext();
  FiniteField::Elem s = 1, y = x;
  for (unsigned j = 0; j < emb.relative_degree(); ++j) {
    s = E.mul(s, y);
    y = E.pow(y, emb.sub().size());
  }
  return back_to_sub(s, emb);
}

FieldElement rel_trace(const FieldElement& x, const FieldEmbedding& emb) {
  if (!(x.field() == emb.ext())) throw std::invalid_argument("rel_trace: element not in the extension");
  return emb.sub().element(rel_trace(x.index(), emb));
}

FieldElement rel_norm(const FieldElement& x, const FieldEmbedding& emb) {
  if (!(x.field() == emb.ext())) throw std::invalid_argument("rel_norm: element not in the extension");
  return emb.sub().element(rel_norm(x.index(), emb));
}

}  // namespace wittgauss::ff
