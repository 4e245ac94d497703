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

#include "wittgauss/witt.hpp"

#include <stdexcept>

namespace wittgauss::witt {

namespace {

using Coeffs = std::vector<std::int64_t>;

// Reduces c modulo (m, monic g) in place, leaving exactly deg(g) entries.
void reduce_poly(Coeffs& c, const Coeffs& g, std::int64_t m) {
  const std::size_t k = g.size() - 1;
  for (std::size_t d = c.size(); d-- > k;) {
    const std::int64_t t = mod_floor(c[d], m);
    if (t == 0) continue;
    for (std::size_t i = 0; i < k; ++i) c[d - k + i] = (c[d - k + i] - t * g[i]) % m;
    c[d] = 0;
  }
  c.resize(k, 0);
  for (auto& v : c) v = mod_floor(v, m);
}

Coeffs mulmod_poly(const Coeffs& a, const Coeffs& b, const Coeffs& g, std::int64_t m) {
  Coeffs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
  }
  reduce_poly(r, g, m);
  return r;
}

Coeffs powmod_poly(Coeffs b, std::uint64_t e, const Coeffs& g, std::int64_t m) {
  Coeffs r(g.size() - 1, 0);
  r[0] = 1;
  reduce_poly(r, g, m);
  while (e) {
    if (e & 1) r = mulmod_poly(r, b, g, m);
    b = mulmod_poly(b, b, g, m);
    e >>= 1;
  }
  return r;
}

// Minimal polynomial over Z/m of t = x^{q^{n-1}} in (Z/m)[x]/(f0); t is the
// Teichmuller lift of the class of x, so the result lifts f0 mod p.
Coeffs teichmuller_modulus(const Coeffs& f0, std::uint64_t qn1, std::int64_t p, std::int64_t m) {
  const std::size_t k = f0.size() - 1;
  Coeffs x(k, 0);
  if (k == 1) x[0] = mod_floor(-f0[0], m);
  else x[1] = 1;
  const Coeffs t = powmod_poly(x, qn1, f0, m);
  std::vector<Coeffs> pw{Coeffs(k, 0)};
  pw[0][0] = 1;
  for (std::size_t i = 1; i <= k; ++i) pw.push_back(mulmod_poly(pw.back(), t, f0, m));
  zmod::Mat a(k, zmod::Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = pw[j][i];
  auto c = zmod::solve(a, pw[k], p, m);
  if (!c) throw std::logic_error("teichmuller_modulus: singular power matrix");
  Coeffs g(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) g[i] = mod_floor(-(*c)[i], m);
  g[k] = 1;
  return g;
}

}  // namespace

WittRing WittRing::make(const ff::FiniteField& base, unsigned n, std::uint64_t bound) {
  if (n < 1) throw std::invalid_argument("WittRing: length must be >= 1");
  auto impl = std::make_shared<Impl>(base);
  impl->n = n;
  impl->p = base.characteristic();
  impl->k = base.degree();
  impl->pn = static_cast<std::uint32_t>(ipow(impl->p, n, UINT32_MAX));
  const std::uint64_t size = ipow(base.size(), n, bound);
  if (size > bound) throw BoundExceeded("WittRing: q^n exceeds bound");
  impl->size = static_cast<std::uint32_t>(size);

  Coeffs f0(base.modulus().begin(), base.modulus().end());
  impl->modulus = teichmuller_modulus(f0, ipow(base.size(), n - 1), impl->p, impl->pn);

  const unsigned k = impl->k;
  const std::int64_t m = impl->pn;
  const Coeffs& g = impl->modulus;
  Coeffs xp(k, 0);
  if (k == 1) xp[0] = mod_floor(-g[0], m);
  else xp[1] = 1;
  xp = powmod_poly(xp, impl->p, g, m);
  impl->frob.assign(k, zmod::Vec(k, 0));
  Coeffs col(k, 0);
  col[0] = 1;
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned r = 0; r < k; ++r) impl->frob[r][i] = col[r];
    col = mulmod_poly(col, xp, g, m);
  }

  impl->trace_basis.assign(k, 0);
  WittRing ring(impl);
  for (unsigned i = 0; i < k; ++i) {
    Coeffs xi(k, 0);
    xi[i % k] = 1;
    if (k == 1) xi[0] = 1;
    Elem y = ring.from_coeffs(xi), s = 0;
    for (unsigned j = 0; j < k; ++j) {
      s = ring.add(s, y);
      y = ring.frobenius(y);
    }
    if (s >= impl->pn) throw std::logic_error("WittRing: trace left Z/p^n");
    impl->trace_basis[i] = s;
  }
  return ring;
}

std::vector<std::int64_t> WittRing::coeffs(Elem x) const {
  Coeffs c(impl_->k, 0);
  for (unsigned j = 0; j < impl_->k; ++j, x /= impl_->pn) c[j] = x % impl_->pn;
  return c;
}

WittRing::Elem WittRing::from_coeffs(const std::vector<std::int64_t>& c) const {
  Coeffs r = c;
  const std::int64_t m = impl_->pn;
  if (r.size() < impl_->k) r.resize(impl_->k, 0);
  for (auto& v : r) v = mod_floor(v, m);
  reduce_poly(r, impl_->modulus, m);
  Elem x = 0;
  for (std::size_t j = r.size(); j-- > 0;) x = x * impl_->pn + static_cast<Elem>(r[j]);
  return x;
}

WittRing::Elem WittRing::add(Elem a, Elem b) const {
  const std::uint32_t m = impl_->pn;
  Elem r = 0, place = 1;
  for (unsigned j = 0; j < impl_->k; ++j, a /= m, b /= m, place *= m)
    r += ((a % m + b % m) % m) * place;
  return r;
}

WittRing::Elem WittRing::neg(Elem a) const {
  const std::uint32_t m = impl_->pn;
  Elem r = 0, place = 1;
  for (unsigned j = 0; j < impl_->k; ++j, a /= m, place *= m) r += ((m - a % m) % m) * place;
  return r;
}

WittRing::Elem WittRing::sub(Elem a, Elem b) const { return add(a, neg(b)); }

WittRing::Elem WittRing::mul(Elem a, Elem b) const {
  if (impl_->k == 1) return static_cast<Elem>(std::uint64_t{a} * b % impl_->pn);
  return from_coeffs(mulmod_poly(coeffs(a), coeffs(b), impl_->modulus, impl_->pn));
}

WittRing::Elem WittRing::mul_int(Elem a, std::int64_t c) const {
  Coeffs v = coeffs(a);
  const std::int64_t cm = mod_floor(c, impl_->pn);
  for (auto& x : v) x = x * cm % impl_->pn;
  return from_coeffs(v);
}

WittRing::Elem WittRing::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

WittRing::Elem WittRing::inv(Elem a) const {
  const FElem d = reduce(a);
  if (d == 0) throw std::domain_error("WittRing::inv: not a unit");
  ff::Poly dc = impl_->base.coeffs(impl_->base.inv(d));
  Elem y = from_coeffs(Coeffs(dc.begin(), dc.end()));
  for (unsigned i = 0; i < impl_->n; ++i) y = mul(y, sub(from_int(2), mul(a, y)));
  if (mul(a, y) != one()) throw std::logic_error("WittRing::inv: Newton iteration failed");
  return y;
}

unsigned WittRing::valuation(Elem a) const {
  unsigned v = impl_->n;
  for (auto c : coeffs(a)) {
    if (c == 0) continue;
    unsigned t = 0;
    while (c % impl_->p == 0) { c /= impl_->p; ++t; }
    v = std::min(v, t);
  }
  return v;
}

WittRing::Elem WittRing::apply_linear(const zmod::Mat& m, Elem a) const {
  return from_coeffs(zmod::apply(m, coeffs(a), impl_->pn));
}

WittRing::Elem WittRing::frobenius_pow(Elem a, unsigned j) const {
  for (unsigned i = 0; i < j % impl_->k; ++i) a = frobenius(a);
  return a;
}

std::uint32_t WittRing::trace_to_prime(Elem a) const {
  std::int64_t s = 0;
  for (unsigned j = 0; j < impl_->k; ++j, a /= impl_->pn)
    s = (s + std::int64_t{a % impl_->pn} * impl_->trace_basis[j]) % impl_->pn;
  return static_cast<std::uint32_t>(s);
}

WittRing::Elem WittRing::teichmuller(FElem d) const {
  ff::Poly dc = impl_->base.coeffs(d);
  Elem y = from_coeffs(Coeffs(dc.begin(), dc.end()));
  for (unsigned i = 1; i < impl_->n; ++i) y = pow(y, q());
  return y;
}

WittRing::FElem WittRing::reduce(Elem a) const {
  // Digit j of a in base p^n, reduced mod p, becomes digit j in base p.
  FElem x = 0, scale = 1;
  for (unsigned j = 0; j < impl_->k; ++j, a /= impl_->pn, scale *= impl_->p)
    x += static_cast<FElem>(a % impl_->pn % impl_->p) * scale;
  return x;
}

WittRing WittRing::truncate(unsigned r) const {
  if (r < 1 || r > impl_->n) throw std::out_of_range("WittRing::truncate: length out of range");
  if (r == impl_->n) return *this;
  WittRing t = make(impl_->base, r, UINT32_MAX);
  for (unsigned i = 0; i <= impl_->k; ++i)
    if (t.impl_->modulus[i] != impl_->modulus[i] % t.impl_->pn)
      throw std::logic_error("WittRing::truncate: incompatible moduli");
  return t;
}

WittRing::Elem WittRing::project(Elem a, const WittRing& target) const {
  if (!(target.base() == base()) || target.length() > length())
    throw std::invalid_argument("project: target is not a truncation");
  Coeffs c = coeffs(a);
  return target.from_coeffs(c);
}

WittRing::Elem WittRing::lift(Elem z, const WittRing& source) const {
  if (!(source.base() == base()) || source.length() > length())
    throw std::invalid_argument("lift: source is not a truncation");
  return from_coeffs(source.coeffs(z));
}

WittRing::Elem WittRing::shift_up(Elem z, const WittRing& source) const {
  return mul_int(lift(z, source), ipow(impl_->p, impl_->n - source.length()));
}

std::vector<WittRing::FElem> WittRing::witt_coords(Elem a) const {
  std::vector<FElem> xs(impl_->n, 0);
  Elem r = a;
  std::int64_t pi = 1;
  for (unsigned i = 0; i < impl_->n; ++i, pi *= impl_->p) {
    Coeffs c = coeffs(r);
    FElem ai = 0;
    for (std::size_t j = c.size(); j-- > 0;) {
      if (c[j] % pi != 0) throw std::logic_error("witt_coords: divisibility lost");
      ai = ai * impl_->p + static_cast<FElem>((c[j] / pi) % impl_->p);
    }
    xs[i] = impl_->base.pow(ai, static_cast<std::uint64_t>(pi));
    r = sub(r, mul_int(teichmuller(ai), pi));
  }
  if (r != 0) throw std::logic_error("witt_coords: nonzero remainder");
  return xs;
}

WittRing::Elem WittRing::from_witt_coords(const std::vector<FElem>& xs) const {
  if (xs.size() != impl_->n) throw std::invalid_argument("from_witt_coords: wrong length");
  Elem r = 0;
  std::int64_t pi = 1;
  for (unsigned i = 0; i < impl_->n; ++i, pi *= impl_->p) {
    FElem y = xs[i];
    const unsigned back = (impl_->k - i % impl_->k) % impl_->k;
    for (unsigned t = 0; t < back; ++t) y = impl_->base.frobenius(y);
    r = add(r, mul_int(teichmuller(y), pi));
  }
  return r;
}

zmod::Mat WittRing::trace_gram() const {
  const unsigned k = impl_->k;
  zmod::Mat gm(k, zmod::Vec(k, 0));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) {
      Coeffs c(i + j + 1, 0);
      c[i + j] = 1;
      if (k == 1) c.assign(1, 1);
      gm[i][j] = trace_to_prime(from_coeffs(c));
    }
  return gm;
}

WittElement WittRing::element(Elem a) const {
  if (a >= impl_->size) throw std::out_of_range("WittRing::element: index out of range");
  return WittElement(*this, a);
}

void WittElement::check(const WittElement& a, const WittElement& b) {
  if (!(a.ring_ == b.ring_)) throw std::invalid_argument("WittElement: mismatched parent rings");
}

WittElement add(const WittElement& x, const WittElement& y) { return x + y; }
WittElement mul(const WittElement& x, const WittElement& y) { return x * y; }

WittElement teichmuller(const WittRing& ring, const ff::FieldElement& d) {
  if (!(d.field() == ring.base())) throw std::invalid_argument("teichmuller: field mismatch");
  return ring.element(ring.teichmuller(d.index()));
}

WittElement project(const WittElement& x, unsigned r) {
  WittRing t = x.ring().truncate(r);
  return t.element(x.ring().project(x.index(), t));
}

UnitDecomposition unit_decompose(const WittRing& ring, WittRing::Elem u, unsigned r) {
  const unsigned n = ring.length();
  if (r < 1 || r >= n) throw std::out_of_range("unit_decompose: need 1 <= r <= n-1");
  if (!ring.is_unit(u)) throw std::domain_error("unit_decompose: not a unit");
  const WittRing low = ring.truncate(n - r), top = ring.truncate(r);
  const WittRing::Elem z = ring.project(u, low);
  const WittRing::Elem v = ring.sub(ring.mul(u, ring.inv(ring.lift(z, low))), ring.one());
  const std::int64_t shift = ipow(ring.p(), n - r);
  Coeffs c = ring.coeffs(v);
  for (auto& x : c) {
    if (x % shift != 0) throw std::logic_error("unit_decompose: quotient not in 1 + p^{n-r}W");
    x /= shift;
  }
  return {z, top.from_coeffs(c)};
}

WittRing::Elem unit_recompose(const WittRing& ring, const UnitDecomposition& d, unsigned r) {
  const unsigned n = ring.length();
  const WittRing low = ring.truncate(n - r), top = ring.truncate(r);
  return ring.mul(ring.lift(d.z, low), ring.add(ring.one(), ring.shift_up(d.w, top)));
}

WittExtension::WittExtension(WittRing sub, WittRing ext)
    : sub_(std::move(sub)), ext_(std::move(ext)), femb_(sub_.base(), ext_.base()) {
  if (sub_.length() != ext_.length()) throw std::invalid_argument("WittExtension: lengths differ");
  const unsigned ks = sub_.degree();
  rel_frob_ = zmod::identity(ext_.degree());
  for (unsigned i = 0; i < ks; ++i) rel_frob_ = zmod::mul(ext_.impl_->frob, rel_frob_, ext_.pn());

  std::vector<WittRing::Elem> powers(ks, ext_.one());
  if (ks > 1) {
    const WittRing::Elem t = ext_.teichmuller(femb_.embed(sub_.base().characteristic()));
    for (unsigned i = 1; i < ks; ++i) powers[i] = ext_.mul(powers[i - 1], t);
    WittRing::Elem gt = 0, tp = ext_.one();
    for (unsigned i = 0; i <= ks; ++i) {
      gt = ext_.add(gt, ext_.mul_int(tp, sub_.gr_modulus()[i]));
      tp = ext_.mul(tp, t);
    }
    if (gt != 0) throw std::logic_error("WittExtension: image of X is not a root");
  }
  image_.assign(sub_.size(), 0);
  preimage_.assign(ext_.size(), -1);
  for (WittRing::Elem x = 0; x < sub_.size(); ++x) {
    auto c = sub_.coeffs(x);
    WittRing::Elem y = 0;
    for (unsigned i = 0; i < ks; ++i) y = ext_.add(y, ext_.mul_int(powers[i], c[i]));
    image_[x] = y;
    preimage_[y] = x;
  }
}

std::optional<WittRing::Elem> WittExtension::restrict(WittRing::Elem y) const {
  if (preimage_[y] < 0) return std::nullopt;
  return static_cast<WittRing::Elem>(preimage_[y]);
}

WittRing::Elem WittExtension::norm(WittRing::Elem y) const {
  WittRing::Elem r = ext_.one();
  for (unsigned j = 0; j < relative_degree(); ++j) {
    r = ext_.mul(r, y);
    y = relative_frobenius(y);
  }
  auto back = restrict(r);
  if (!back) throw std::logic_error("witt_norm: value outside the subring");
  return *back;
}

WittRing::Elem WittExtension::trace(WittRing::Elem y) const {
  WittRing::Elem r = 0;
  for (unsigned j = 0; j < relative_degree(); ++j) {
    r = ext_.add(r, y);
    y = relative_frobenius(y);
  }
  auto back = restrict(r);
  if (!back) throw std::logic_error("witt_trace: value outside the subring");
  return *back;
}

std::vector<WittRing::Elem> WittExtension::norm_table() const {
  std::vector<WittRing::Elem> t(ext_.size());
  for (WittRing::Elem y = 0; y < ext_.size(); ++y) t[y] = norm(y);
  return t;
}

WittElement witt_norm(const WittElement& x, const WittExtension& ext) {
  if (!(x.ring() == ext.ext())) throw std::invalid_argument("witt_norm: base not a registered subfield");
  return ext.sub().element(ext.norm(x.index()));
}

WittElement witt_trace(const WittElement& x, const WittExtension& ext) {
  if (!(x.ring() == ext.ext())) throw std::invalid_argument("witt_trace: base not a registered subfield");
  return ext.sub().element(ext.trace(x.index()));
}

LiftSection::LiftSection(WittRing target, unsigned source_length)
    : target_(target), source_(target.truncate(source_length)) {}

LiftSection::LiftSection(std::shared_ptr<const WittExtension> truncated_tower,
                         std::shared_ptr<const WittExtension> full_tower)
    : target_(full_tower->ext()),
      source_(truncated_tower->ext()),
      small_tower_(std::move(truncated_tower)),
      big_tower_(std::move(full_tower)) {
  if (!(small_tower_->sub().base() == big_tower_->sub().base()) ||
      !(source_.base() == target_.base()) || source_.length() > target_.length())
    throw std::invalid_argument("LiftSection: towers do not match");
}

WittRing::Elem LiftSection::operator()(WittRing::Elem z) const {
  if (small_tower_) {
    if (auto zs = small_tower_->restrict(z)) {
      const WittRing& bs = big_tower_->sub();
      return big_tower_->embed(bs.lift(*zs, small_tower_->sub()));
    }
  }
  return target_.lift(z, source_);
}

}  // namespace wittgauss::witt
