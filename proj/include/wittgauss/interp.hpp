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
#include <map>
#include <string>
#include <vector>

#include "wittgauss/brauer.hpp"
#include "wittgauss/common.hpp"

/// Exact exponent bookkeeping for the factors matched under Brauer
/// induction: multi-indices over CM types, infinity types, complex gamma
/// factors, periods and the modified Euler factors at unramified places.
namespace wittgauss::interp {

/// q * pi^pi_exp * i^i_exp * prod_s s^{syms[s]} with q > 0 and opaque symbols.
class PiMonomial {
 public:
  PiMonomial() = default;
  explicit PiMonomial(Rational coef, std::int64_t pi_exp = 0, std::int64_t i_exp = 0);
  static PiMonomial symbol(const std::string& name, std::int64_t e = 1);

  const Rational& coef() const { return coef_; }
  std::int64_t pi_exp() const { return pi_; }
  /// Residue mod 4; the sign of the rational part is folded in as i^2.
  unsigned i_exp() const { return i_; }
  const std::map<std::string, std::int64_t>& syms() const { return syms_; }

  PiMonomial& operator*=(const PiMonomial& o);
  friend PiMonomial operator*(PiMonomial a, const PiMonomial& b) { return a *= b; }
  /// Any integer power; negative powers invert the coefficient.
  PiMonomial pow(std::int64_t e) const;
  friend bool operator==(const PiMonomial& a, const PiMonomial& b);
  friend bool operator!=(const PiMonomial& a, const PiMonomial& b) { return !(a == b); }
  /// Value with every symbol set to 1; approximate, display only.
  double numeric_abs() const;
  std::string to_string() const;

 private:
  Rational coef_{1};
  std::int64_t pi_ = 0;
  unsigned i_ = 0;
  std::map<std::string, std::int64_t> syms_;
};

/// Projection Sigma_{F_j} -> Sigma_F, tau -> tau|_F, all fibers of size degree.
class CMTypeMap {
 public:
  /// Throws std::invalid_argument unless surjective with equal fibers.
  CMTypeMap(std::size_t target_size, std::vector<std::size_t> proj);
  /// tau -> tau mod target_size.
  static CMTypeMap standard(std::size_t target_size, unsigned degree);

  std::size_t source_size() const { return proj_.size(); }
  std::size_t target_size() const { return target_; }
  unsigned degree() const { return static_cast<unsigned>(proj_.size() / target_); }
  std::size_t operator()(std::size_t tau) const { return proj_.at(tau); }

 private:
  std::size_t target_;
  std::vector<std::size_t> proj_;
};

using MultiIndex = std::vector<std::int64_t>;
/// |a| = sum_sigma a_sigma.
std::int64_t abs_index(const MultiIndex& a);
/// (a o proj)_tau = a_{tau|_F}.
MultiIndex pullback(const MultiIndex& a, const CMTypeMap& map);

struct InfinityType {
  std::int64_t w = 0;
  MultiIndex r;
  /// -w - r_sigma <= -1 and r_sigma >= 0 for every sigma.
  bool admissible() const;
};

/// w unchanged, r pulled back along the projection.
InfinityType pushforward_infinity(const InfinityType& eta, const CMTypeMap& map);

/// 2 (m - 1)! / (2 pi)^m. Throws std::domain_error for m <= 0.
PiMonomial gamma_C(std::int64_t m);
/// prod_sigma Gamma_C(w + r_sigma)^{r_rho}. Throws std::domain_error if some
/// w + r_sigma <= 0.
PiMonomial arch_L(const InfinityType& eta, std::int64_t r_rho);

/// rho = sum_j a_j Ind psi_j with [F_j : F] = d_j; r_rho is the claimed
/// degree of rho. maps[j] realizes Sigma_{F_j} -> Sigma_F (standard if empty).
struct RecordSummary {
  std::vector<std::int64_t> a;
  std::vector<unsigned> d;
  std::int64_t r_rho = 0;
  std::vector<CMTypeMap> maps;

  /// sum_j a_j d_j = r_rho.
  bool degree_identity() const;
  CMTypeMap map(std::size_t j, std::size_t sigma_count) const;
};
/// a_j, (G : H_j) and the target degree of a Brauer record.
RecordSummary summarize(const brauer::VirtualInductionRecord& rec);

struct Matching {
  PiMonomial lhs, rhs;
  bool degree_identity = false;
  bool pass() const { return lhs == rhs; }
};

/// prod_j L((psi_j eta_j)_inf, 0)^{a_j} against L((rho (x) eta)_inf, 0).
Matching archimedean_matching(const RecordSummary& rec, const InfinityType& eta);
/// Opaque symbol for the period of kind `kind` of field `field` at index `idx`.
std::string period_symbol(const std::string& kind, const std::string& field, std::size_t idx);
/// Renames period symbols of `from` to those of `to` along tau -> tau|_F.
PiMonomial descend_periods(const PiMonomial& x, const std::string& from, const std::string& to,
                           const CMTypeMap& map);
/// prod_j (C_{p,F_j}^{w t_j + 2 r_j})^{a_j} against (C_{p,F}^{w t + 2 r})^{r_rho},
/// and the same for the modified complex periods.
Matching period_matching(const RecordSummary& rec, const InfinityType& eta);
/// prod_j ((-1)^{w d_j'} i^{|-w t_j - r_j|} / (2^{d_j'} (2 delta)^{r_j}))^{a_j}
/// against the same expression over F raised to r_rho, d_j' = |Sigma_{F_j}|.
Matching constants_matching(const RecordSummary& rec, const InfinityType& eta);

/// Random admissible eta and signed record with sum a_j d_j = r_rho >= 1.
struct LedgerCase {
  InfinityType eta;
  RecordSummary rec;
};
LedgerCase random_ledger_case(std::uint64_t seed);

struct LedgerSweep {
  std::uint64_t cases = 0, archimedean = 0, periods = 0, constants = 0;
  /// Degree-violating controls (r_rho +- 1) that were correctly rejected.
  std::uint64_t controls = 0, controls_rejected = 0;
  bool pass() const {
    return archimedean == cases && periods == cases && constants == cases && controls_rejected == controls;
  }
};
LedgerSweep ledger_sweep(std::uint64_t count, std::uint64_t seed, unsigned workers = 1);

/// Unramified place v with Frobenius `frob` in G and eta_v(Frob_v) = zeta_m^b.
struct UnramifiedPlace {
  std::uint32_t frob = 0;
  unsigned m = 1;
  std::int64_t b = 0;
};

struct EulMatching {
  /// prod_j prod_[g] (1 - (psi_j eta_j)(Frob) T^f)^{a_j} = det(1 - Frob eta T | V_rho).
  bool twisted = false;
  /// The same for the dual record sum_j a_j Ind (psi_j eta_j)^{-1}.
  bool dual = false;
  /// Dual factors equal the conjugates of the direct factors.
  bool dual_consistent = false;
  /// Both identities evaluated exactly at T = 1/q.
  bool specialized = false;
  bool pass() const { return twisted && dual && dual_consistent && specialized; }
};
/// The slots at v^c (s = 0) and at v for the dual (s = 1) of the modified
/// p-Euler factor; `q` is the residue field size used at T = 1/q.
EulMatching unramified_p_euler_matching(const brauer::VirtualInductionRecord& rec, const UnramifiedPlace& vc,
                                        const UnramifiedPlace& v, std::uint64_t q);

}  // namespace wittgauss::interp
