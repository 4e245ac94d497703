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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wittgauss/common.hpp"
#include "wittgauss/ff.hpp"
#include "wittgauss/zmod.hpp"

/// Truncated Witt vectors W_n(F_q), realized as the Galois ring
/// (Z/p^n)[X]/(g) where g is the minimal polynomial of the Teichmuller lift
/// of the generator of F_q. Witt coordinates are a derived view.
namespace wittgauss::witt {

class WittElement;

class WittRing {
 public:
  /// Element index: base-p^n digits are the coefficients of 1, X, ..., X^{k-1}.
  using Elem = std::uint32_t;
  using FElem = ff::FiniteField::Elem;

  static WittRing make(const ff::FiniteField& base, unsigned n,
                       std::uint64_t bound = kDefaultEnumerationBound);

  const ff::FiniteField& base() const { return impl_->base; }
  unsigned length() const { return impl_->n; }
  std::uint32_t p() const { return impl_->p; }
  unsigned degree() const { return impl_->k; }
  std::uint32_t q() const { return impl_->base.size(); }
  /// p^n, the characteristic.
  std::uint32_t pn() const { return impl_->pn; }
  /// q^n.
  std::uint32_t size() const { return impl_->size; }
  /// q^{n-1}(q-1).
  std::uint32_t unit_count() const { return impl_->size / q() * (q() - 1); }
  /// Monic degree-k lift of the field modulus, lowest degree first.
  const std::vector<std::int64_t>& gr_modulus() const { return impl_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t a) const { return static_cast<Elem>(mod_floor(a, impl_->pn)); }
  std::vector<std::int64_t> coeffs(Elem x) const;
  /// Reduces an arbitrary coefficient vector (any length) modulo (p^n, g).
  Elem from_coeffs(const std::vector<std::int64_t>& c) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem mul_int(Elem a, std::int64_t c) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_unit(Elem a) const { return reduce(a) != 0; }
  /// Throws std::domain_error for non-units.
  Elem inv(Elem a) const;
  /// p-adic valuation; n for zero.
  unsigned valuation(Elem a) const;

  /// Ring automorphism lifting x -> x^p on the residue field.
  Elem frobenius(Elem a) const { return apply_linear(impl_->frob, a); }
  /// Frobenius iterated j times.
  Elem frobenius_pow(Elem a, unsigned j) const;
  /// Tr down to W_n(F_p) = Z/p^n, as a residue in [0, p^n).
  std::uint32_t trace_to_prime(Elem a) const;

  Elem teichmuller(FElem d) const;
  /// Reduction to the residue field.
  FElem reduce(Elem a) const;

  /// Ring of length r over the same base field (1 <= r <= n).
  WittRing truncate(unsigned r) const;
  /// pr^n_r; `target` must be truncate(r).
  Elem project(Elem a, const WittRing& target) const;
  /// Least-residue lift of a coefficient vector from `source` = truncate(r).
  Elem lift(Elem z, const WittRing& source) const;
  /// p^{n-r} z~ for z in truncate(r); independent of the lift.
  Elem shift_up(Elem z, const WittRing& source) const;

  /// Witt coordinates (x_0, ..., x_{n-1}) with x = sum_i p^i [x_i^{p^{-i}}].
  std::vector<FElem> witt_coords(Elem a) const;
  Elem from_witt_coords(const std::vector<FElem>& xs) const;

  /// Gram matrix [Tr(X^i X^j)] over Z/p^n.
  zmod::Mat trace_gram() const;

  WittElement element(Elem a) const;

  friend bool operator==(const WittRing& a, const WittRing& b) {
    return a.impl_ == b.impl_ || (a.impl_->n == b.impl_->n && a.impl_->base == b.impl_->base);
  }

 private:
  struct Impl {
    explicit Impl(ff::FiniteField b) : base(std::move(b)) {}
    ff::FiniteField base;
    unsigned n = 0;
    std::uint32_t p = 0;
    unsigned k = 0;
    std::uint32_t pn = 0;
    std::uint32_t size = 0;
    std::vector<std::int64_t> modulus;  // length k+1, monic
    zmod::Mat frob;                     // column i = sigma(X^i)
    std::vector<std::int64_t> trace_basis;  // Tr(X^i) in Z/p^n
  };
  explicit WittRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  Elem apply_linear(const zmod::Mat& m, Elem a) const;
  friend class WittExtension;

  std::shared_ptr<const Impl> impl_;
};

/// Value-semantic element carrying its ring.
class WittElement {
 public:
  WittElement(WittRing ring, WittRing::Elem v) : ring_(std::move(ring)), v_(v) {}

  const WittRing& ring() const { return ring_; }
  WittRing::Elem index() const { return v_; }
  std::vector<std::int64_t> gr_coeffs() const { return ring_.coeffs(v_); }
  std::vector<WittRing::FElem> witt_coords() const { return ring_.witt_coords(v_); }
  bool is_unit() const { return ring_.is_unit(v_); }

  friend WittElement operator+(const WittElement& a, const WittElement& b) {
    check(a, b);
    return {a.ring_, a.ring_.add(a.v_, b.v_)};
  }
  friend WittElement operator-(const WittElement& a, const WittElement& b) {
    check(a, b);
    return {a.ring_, a.ring_.sub(a.v_, b.v_)};
  }
  friend WittElement operator*(const WittElement& a, const WittElement& b) {
    check(a, b);
    return {a.ring_, a.ring_.mul(a.v_, b.v_)};
  }
  WittElement operator-() const { return {ring_, ring_.neg(v_)}; }
  friend bool operator==(const WittElement& a, const WittElement& b) {
    return a.v_ == b.v_ && a.ring_ == b.ring_;
  }

 private:
  static void check(const WittElement& a, const WittElement& b);
  WittRing ring_;
  WittRing::Elem v_;
};

WittElement add(const WittElement& x, const WittElement& y);
WittElement mul(const WittElement& x, const WittElement& y);
WittElement teichmuller(const WittRing& ring, const ff::FieldElement& d);
WittElement project(const WittElement& x, unsigned r);

/// z~ (1 + p^{n-r} w~) = u with z = pr_{n-r}(u).
struct UnitDecomposition {
  WittRing::Elem z;  // unit of W_{n-r}
  WittRing::Elem w;  // element of W_r
};
UnitDecomposition unit_decompose(const WittRing& ring, WittRing::Elem u, unsigned r);
WittRing::Elem unit_recompose(const WittRing& ring, const UnitDecomposition& d, unsigned r);

/// W_n(F_q) inside W_n(F_{q^s}), compatible with the residue field embedding.
class WittExtension {
 public:
  WittExtension(WittRing sub, WittRing ext);

  const WittRing& sub() const { return sub_; }
  const WittRing& ext() const { return ext_; }
  const ff::FieldEmbedding& field_embedding() const { return femb_; }
  unsigned relative_degree() const { return femb_.relative_degree(); }

  WittRing::Elem embed(WittRing::Elem x) const { return image_[x]; }
  std::optional<WittRing::Elem> restrict(WittRing::Elem y) const;
  /// sigma^{k_sub}: generator of Gal(ext/sub).
  WittRing::Elem relative_frobenius(WittRing::Elem y) const { return ext_.apply_linear(rel_frob_, y); }

  WittRing::Elem norm(WittRing::Elem y) const;
  WittRing::Elem trace(WittRing::Elem y) const;
  /// norm() for every element of ext, indexed by element.
  std::vector<WittRing::Elem> norm_table() const;

 private:
  WittRing sub_, ext_;
  ff::FieldEmbedding femb_;
  zmod::Mat rel_frob_;
  std::vector<WittRing::Elem> image_;
  std::vector<std::int64_t> preimage_;
};

WittElement witt_norm(const WittElement& x, const WittExtension& ext);
WittElement witt_trace(const WittElement& x, const WittExtension& ext);

/// Maps W_m(F) to W_n(F) (m <= n) by least-residue coefficient lifts. With a
/// tower attached, elements of the subring are lifted in the subring first
/// so lifts of W_m(F') land in W_n(F').
class LiftSection {
 public:
  LiftSection(WittRing target, unsigned source_length);
  /// `truncated_tower` is W_m(F') in W_m(F), `full_tower` is W_n(F') in W_n(F).
  LiftSection(std::shared_ptr<const WittExtension> truncated_tower,
              std::shared_ptr<const WittExtension> full_tower);

  const WittRing& source() const { return source_; }
  const WittRing& target() const { return target_; }
  WittRing::Elem operator()(WittRing::Elem z) const;

 private:
  WittRing target_, source_;
  std::shared_ptr<const WittExtension> small_tower_, big_tower_;
};

}  // namespace wittgauss::witt
