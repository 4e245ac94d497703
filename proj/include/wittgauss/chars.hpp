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
#include <string>
#include <vector>

#include "wittgauss/abelian.hpp"
#include "wittgauss/cyclo.hpp"
#include "wittgauss/witt.hpp"

/// Additive and multiplicative characters of W_n(F_q).
namespace wittgauss::chars {

using Elem = witt::WittRing::Elem;

/// W_n(F_q)^x = mu_{q-1} x (1 + pW_n), with a cyclic basis: generator 0 is
/// the Teichmuller lift of the field generator (absent for q = 2), the rest
/// are a basis of the p-group 1 + pW_n.
class UnitGroup {
 public:
  static std::shared_ptr<const UnitGroup> make(const witt::WittRing& ring,
                                               std::uint64_t bound = kDefaultEnumerationBound);

  const witt::WittRing& ring() const { return ring_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(gens_.size()); }
  const std::vector<Elem>& generators() const { return gens_; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  /// lcm of the generator orders.
  std::uint32_t exponent() const { return exponent_; }
  std::uint32_t order() const { return ring_.unit_count(); }
  /// Exponents of u against the basis; nullptr for non-units.
  const std::uint32_t* dlog(Elem u) const {
    static constexpr std::uint32_t kNoFactors = 0;
    if (!ring_.is_unit(u)) return nullptr;
    return gens_.empty() ? &kNoFactors : &dlog_[std::size_t{u} * gens_.size()];
  }
  /// Exponents of a known unit u; no unit check.
  const std::uint32_t* unit_dlog(Elem u) const {
    static constexpr std::uint32_t kNoFactors = 0;
    return gens_.empty() ? &kNoFactors : &dlog_[std::size_t{u} * gens_.size()];
  }
  /// 1 + p^m W_n as a list of elements (m >= 1), or all units for m = 0.
  std::vector<Elem> filtration(unsigned m) const;

 private:
  explicit UnitGroup(witt::WittRing ring) : ring_(std::move(ring)) {}
  witt::WittRing ring_;
  std::vector<Elem> gens_;
  std::vector<std::uint32_t> orders_;
  std::uint32_t exponent_ = 1;
  std::vector<std::uint32_t> dlog_;
};

using UnitGroupPtr = std::shared_ptr<const UnitGroup>;

/// chi(prod g_j^{d_j}) = prod exp(2 pi i a_j d_j / ord_j); zero off units.
class MultChar {
 public:
  MultChar(UnitGroupPtr group, std::vector<std::uint32_t> exps);

  const UnitGroup& group() const { return *group_; }
  const UnitGroupPtr& group_ptr() const { return group_; }
  const witt::WittRing& ring() const { return group_->ring(); }
  const std::vector<std::uint32_t>& exps() const { return exps_; }
  /// chi(g_j) = zeta_M^{weights()[j]}, M = group().exponent().
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  bool is_trivial() const;
  std::uint32_t order() const;

  /// chi(x) = zeta_M^e with M = group().exponent(); nullopt off units.
  std::optional<std::uint32_t> exponent(Elem x) const;
  /// Per-element exponents against zeta_m (m a multiple of the order), -1 off units.
  std::vector<std::int64_t> exponent_table(std::uint32_t m) const;
  cyclo::CyclotomicInt value(Elem x) const;

  /// Smallest m in [0, n] with chi trivial on 1 + p^m W_n.
  unsigned conductor_exp() const;

  MultChar operator*(const MultChar& o) const;
  MultChar inverse() const;
  friend bool operator==(const MultChar& a, const MultChar& b) {
    return a.group_ == b.group_ && a.exps_ == b.exps_;
  }

  /// {"kind":"mult","exps":[...],"conductor":e}
  std::string descriptor() const;

 private:
  UnitGroupPtr group_;
  std::vector<std::uint32_t> exps_;
  std::vector<std::uint32_t> weights_;  // a_j * M / ord_j mod M
};

/// All characters, exponent vectors in mixed radix with factor 0 fastest;
/// the trivial character comes first.
std::vector<MultChar> enumerate_mult_chars(const UnitGroupPtr& group);

/// chi o Nr for W_n(F_q) inside W_n(F_{q^s}); `big` is the unit group of ext.ext().
MultChar inflate_by_norm(const MultChar& chi, const UnitGroupPtr& big, const witt::WittExtension& ext);

/// psi_n^o(x) = zeta_{p^n}^x; appendix convention uses +1, the global
/// standard character uses -1 (its complex conjugate).
enum class Convention { Appendix, GlobalSign };
/// How kappa in F_q^x is placed in W_n(F_q).
enum class KappaEmbedding { Teichmuller, LeastResidue, Explicit };

std::string to_string(Convention c);
std::string to_string(KappaEmbedding k);

/// psi(x) = zeta_{p^n}^{sign Tr(kappa x)}.
class AddChar {
 public:
  AddChar(witt::WittRing ring, Elem kappa, Convention conv = Convention::Appendix,
          KappaEmbedding embedding = KappaEmbedding::Explicit);
  /// kappa = [c] or the least-residue lift of c in F_q^x.
  static AddChar from_field(const witt::WittRing& ring, ff::FiniteField::Elem c,
                            KappaEmbedding embedding = KappaEmbedding::Teichmuller,
                            Convention conv = Convention::Appendix);

  const witt::WittRing& ring() const { return ring_; }
  Elem kappa() const { return kappa_; }
  Convention convention() const { return conv_; }
  KappaEmbedding kappa_embedding() const { return embedding_; }
  int sign() const { return conv_ == Convention::Appendix ? 1 : -1; }

  /// psi(x) = zeta_{p^n}^{exponent(x)}.
  std::uint32_t exponent(Elem x) const;
  std::vector<std::uint32_t> exponent_table() const;
  cyclo::CyclotomicInt value(Elem x) const;
  /// psi_r(z) := psi(p^{n-r} z~) for z in `level` = W_r; result in [0, p^r).
  std::uint32_t level_exponent(const witt::WittRing& level, Elem z) const;
  /// Same kappa on the extension ring: psi o Tr_{ext/F_p}.
  AddChar extend(const witt::WittExtension& ext) const;

  /// {"kind":"add","kappa":[...],"embedding":...,"convention":...}
  std::string descriptor() const;

 private:
  witt::WittRing ring_;
  Elem kappa_;
  Convention conv_;
  KappaEmbedding embedding_;
};

/// Solution of chi(1 + p^{n-r} x~) = psi_r(-eps x) for all x in W_r.
struct EpsilonChar {
  unsigned r = 0;
  /// W_r; unset when r = 0.
  std::optional<witt::WittRing> level;
  /// eps in W_r (0 when r = 0).
  Elem epsilon = 0;
  /// Least-residue lift of eps to W_n; 1 when r = 0.
  Elem lift = 1;
  bool is_unit() const { return r == 0 || level->is_unit(epsilon); }
};

/// Requires 0 <= r and 2(n - r) >= n. Solves through the trace Gram matrix
/// and re-verifies pointwise; r = 0 returns the degenerate lift 1.
EpsilonChar solve_epsilon_char(const MultChar& chi, const AddChar& psi, unsigned r);

}  // namespace wittgauss::chars
