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
#include <vector>

#include "wittgauss/common.hpp"

/// Finite fields F_{p^k} as F_p[x]/(f) with table-driven multiplication.
namespace wittgauss::ff {

/// Dense polynomial over F_p, lowest degree first.
using Poly = std::vector<std::uint32_t>;

namespace poly {
void trim(Poly& a);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly rem(Poly a, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// x^(p^e) mod m.
Poly x_pow_p_pow(unsigned e, const Poly& m, std::uint32_t p);
/// Irreducibility of a monic polynomial of degree >= 1 over F_p.
bool is_irreducible(const Poly& monic, std::uint32_t p);
}  // namespace poly

class FieldElement;

/// The field F_{p^k}. Elements are addressed by an index whose base-p digits
/// are the coefficients of the residue polynomial (constant term lowest).
/// Copies share one immutable table set.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Field with the lexicographically smallest monic irreducible modulus of
  /// degree k (coefficient vectors scanned in base-p counting order).
  static FiniteField make(std::uint32_t p, unsigned k,
                          std::uint64_t bound = kDefaultFieldBound);
  /// Field for an explicit monic modulus; rejects reducible input.
  static FiniteField with_modulus(std::uint32_t p, Poly modulus,
                                  std::uint64_t bound = kDefaultFieldBound);

  std::uint32_t characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->k; }
  std::uint32_t size() const { return impl_->q; }
  const Poly& modulus() const { return impl_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t a) const {
    return static_cast<Elem>(mod_floor(a, impl_->p));
  }
  Poly coeffs(Elem x) const;
  Elem from_coeffs(const Poly& c) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = impl_->log[a] + impl_->log[b];
    if (e >= impl_->q - 1) e -= impl_->q - 1;
    return impl_->exp[e];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// x -> x^p.
  Elem frobenius(Elem x) const { return pow(x, impl_->p); }
  Elem trace_to_prime(Elem x) const;
  bool in_prime_field(Elem x) const { return x < impl_->p; }

  /// Generator of the multiplicative group (smallest index).
  Elem primitive() const { return impl_->exp[1 % (impl_->q - 1)]; }
  /// Discrete log to the base `primitive()`; `a` must be nonzero.
  std::uint32_t log(Elem a) const { return impl_->log[a]; }
  Elem exp(std::uint64_t e) const { return impl_->exp[e % (impl_->q - 1)]; }

  FieldElement element(Elem x) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    unsigned k = 0;
    std::uint32_t q = 0;
    Poly modulus;
    std::vector<Elem> exp;           // exp[i] = g^i, i < q-1
    std::vector<std::uint32_t> log;  // log[g^i] = i
  };
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static FiniteField build(std::uint32_t p, Poly modulus);

  std::shared_ptr<const Impl> impl_;
};

/// Value-semantic element carrying its field.
class FieldElement {
 public:
  FieldElement(FiniteField field, FiniteField::Elem v) : field_(std::move(field)), v_(v) {}

  const FiniteField& field() const { return field_; }
  FiniteField::Elem index() const { return v_; }
  Poly coeffs() const { return field_.coeffs(v_); }

  FieldElement frobenius() const { return {field_, field_.frobenius(v_)}; }
  FieldElement inverse() const { return {field_, field_.inv(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(v_, e)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.field_, a.field_.add(a.v_, b.v_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.field_, a.field_.sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.field_, a.field_.mul(a.v_, b.v_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(v_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.v_ == b.v_ && a.field_ == b.field_;
  }

 private:
  FiniteField field_;
  FiniteField::Elem v_;
};

FieldElement frobenius(const FieldElement& x);

/// F_sub inside F_ext, fixed by sending the generator of F_sub to the
/// smallest-index root of its modulus among the elements of F_ext fixed by
/// the |F_sub|-power Frobenius.
class FieldEmbedding {
 public:
  FieldEmbedding(FiniteField sub, FiniteField ext);

  const FiniteField& sub() const { return sub_; }
  const FiniteField& ext() const { return ext_; }
  /// [F_ext : F_sub].
  unsigned relative_degree() const { return s_; }

  FiniteField::Elem embed(FiniteField::Elem x) const { return image_[x]; }
  std::optional<FiniteField::Elem> restrict(FiniteField::Elem y) const;
  bool contains(FiniteField::Elem y) const { return preimage_[y] >= 0; }

 private:
  FiniteField sub_, ext_;
  unsigned s_ = 1;
  std::vector<FiniteField::Elem> image_;
  std::vector<std::int64_t> preimage_;
};

/// Tr_{ext/sub}: sum of the Gal(ext/sub)-conjugates, returned in F_sub.
FiniteField::Elem rel_trace(FiniteField::Elem x, const FieldEmbedding& emb);
/// Nr_{ext/sub}: product of the Gal(ext/sub)-conjugates, returned in F_sub.
FiniteField::Elem rel_norm(FiniteField::Elem x, const FieldEmbedding& emb);

FieldElement rel_trace(const FieldElement& x, const FieldEmbedding& emb);
FieldElement rel_norm(const FieldElement& x, const FieldEmbedding& emb);

}  // namespace wittgauss::ff
