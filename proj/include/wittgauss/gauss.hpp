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

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittgauss/chars.hpp"
#include "wittgauss/cyclo.hpp"
#include "wittgauss/witt.hpp"

/// Gauss sums over W_n(F_q), their closed forms, the Davenport-Hasse
/// relation over Witt vectors and local epsilon factors.
namespace wittgauss::gauss {

using chars::AddChar;
using chars::Elem;
using chars::MultChar;
using cyclo::CyclotomicInt;
using FElem = ff::FiniteField::Elem;

/// lcm(p^n, ord chi): every value of chi * psi lies in Z[zeta_m].
unsigned ambient_order(const MultChar& chi, const AddChar& psi);

struct GaussSumResult {
  CyclotomicInt value;
  std::string char_descriptor;
  std::string add_descriptor;
  /// Number of ring elements enumerated (q^n: non-units contribute zero).
  std::uint64_t term_count = 0;
};

/// tau(chi) = sum over all x in W_n of chi(x) psi(x), chi extended by zero.
GaussSumResult gauss_sum(const MultChar& chi, const AddChar& psi);
/// tau(chi) for many chi on one unit group sharing one additive character.
/// Units are walked as exponent vectors against the group basis, so chi is
/// accumulated additively; psi is tabulated once.
class GaussSumTable {
 public:
  GaussSumTable(chars::UnitGroupPtr group, const AddChar& psi);
  /// Throws std::invalid_argument if chi lives on another group.
  CyclotomicInt operator()(const MultChar& chi) const;
  const AddChar& add_char() const { return psi_; }

 private:
  chars::UnitGroupPtr group_;
  AddChar psi_;
  /// psi exponent of prod g_j^{d_j}, indexed by d in mixed radix, d_0 fastest.
  std::vector<std::uint32_t> psi_by_dlog_;
};
/// Same value, enumerating units only.
CyclotomicInt gauss_sum_units(const MultChar& chi, const AddChar& psi);
/// Term-by-term cyclotomic products; slow reference.
CyclotomicInt gauss_sum_naive(const MultChar& chi, const AddChar& psi);

/// tau(chi o Nr) over W_n(F_{q^s}) for many chi sharing one extension and one
/// additive character; the norm and psi tables are built once.
class InflatedGaussSum {
 public:
  /// `psi` lives on ext.sub(); the sum uses psi.extend(ext).
  InflatedGaussSum(std::shared_ptr<const witt::WittExtension> ext, const AddChar& psi);
  CyclotomicInt operator()(const MultChar& chi) const;
  std::uint64_t term_count() const { return norm_.size(); }
  const AddChar& add_char() const { return psi_ext_; }

 private:
  std::shared_ptr<const witt::WittExtension> ext_;
  AddChar psi_ext_;
  std::vector<Elem> norm_;
  std::vector<std::uint32_t> psi_;
};

/// q^r chi(eps~) psi(eps~) for n = 2r and conductor exactly n.
/// Throws std::domain_error otherwise.
CyclotomicInt closed_form_even(const MultChar& chi, const AddChar& psi);
/// q^r chi(eps~) psi(eps~) sum_{delta in F_q} chi(1 + p^r[delta]) psi(p^r eps~ [delta])
/// for n = 2r + 1; exact 0 when r >= 1 and eps is not a unit.
CyclotomicInt closed_form_odd(const MultChar& chi, const AddChar& psi);
/// Odd closed form for chi o Nr over W_n(F_{q^nu}) built from the base eps.
CyclotomicInt closed_form_odd_extended(const MultChar& chi, const AddChar& psi, const witt::WittExtension& ext);
/// sum_{delta in F_{q^nu}} chi(Nr(1 + p^r[delta])) psi_ext(p^r eps~ [delta]), n = 2r + 1;
/// `ext` null means nu = 1.
CyclotomicInt odd_delta_sum(const MultChar& chi, const AddChar& psi, const chars::EpsilonChar& eps,
                            const witt::WittExtension* ext);

/// sigma_nu(-[w]) = sum_{delta in F_{q^nu}} psi_ext(-[w delta^2]) with psi on
/// W_2(F_q), p = 2. Value in Z[zeta_8]. Throws std::invalid_argument if p != 2.
CyclotomicInt quadratic_partial_sum(const AddChar& psi2, FElem w, unsigned nu);
/// -(-(1 + i))^{nu k}, recorded next to sigma but never asserted.
CyclotomicInt cited_partial_sum_constant(unsigned k, unsigned nu);

/// sum_{delta in F_{q^nu}} psi(w delta^2 / 2 + b delta) against
/// psi(-b^2 / (2w)) * (Nr(2/w) / p)^nu * tau(Legendre o Nr) over F_{q^nu}.
struct QuadraticReduction {
  CyclotomicInt shift;           // psi_ext(-b^2 / (2w))
  int legendre_sign = 1;         // (Nr_{F_q/F_p}(2/w) / p)^nu
  CyclotomicInt legendre_gauss;  // Gauss sum of the quadratic character of F_{q^nu}
  CyclotomicInt direct;          // the quadratic sum itself
  CyclotomicInt reduced() const { return BigInt(legendre_sign) * shift * legendre_gauss; }
  bool holds() const { return reduced() == direct; }
};
/// `psi1` lives on W_1(F_q), p odd; w in F_q^x, b in F_q.
QuadraticReduction quadratic_gauss_reduction(const AddChar& psi1, FElem w, FElem b, unsigned nu);

struct DHOptions {
  /// kappa = embedding(kappa_field) unless kappa_coeffs is set.
  FElem kappa_field = 1;
  chars::KappaEmbedding embedding = chars::KappaEmbedding::Teichmuller;
  std::optional<std::vector<std::int64_t>> kappa_coeffs;
  chars::Convention convention = chars::Convention::Appendix;
  unsigned workers = 1;
  std::uint64_t bound = kDefaultEnumerationBound;
};

struct DHCase {
  std::string char_descriptor;
  unsigned conductor = 0;
  CyclotomicInt lhs;  // tau(chi o Nr)
  CyclotomicInt rhs;  // (-1)^{n(s-1)} tau(chi)^s
  bool pass = false;
};

struct DHReport {
  std::uint32_t p = 0;
  unsigned k = 0, n = 0, s = 0;
  int sign = 1;
  std::string add_descriptor;
  std::uint64_t base_terms = 0, ext_terms = 0;
  std::vector<DHCase> cases;
  bool pass() const;
};

/// Both sides of tau(chi_{F_{q^s}}) = (-1)^{n(s-1)} tau(chi)^s for every chi.
/// Throws BoundExceeded when q^{ns} exceeds the bound.
DHReport dh_verify(std::uint32_t p, unsigned k, unsigned n, unsigned s, const DHOptions& opts = {});
/// AddChar on W_n(F_q) as selected by the options.
AddChar make_add_char(const witt::WittRing& ring, const DHOptions& opts);

/// scale * value with scale an exact rational.
struct ScaledCyclo {
  Rational scale{1};
  CyclotomicInt value;
  std::complex<double> to_complex() const;
  std::string to_string() const;
  friend bool operator==(const ScaledCyclo& a, const ScaledCyclo& b);
};

/// eta(uniformizer) = magnitude * zeta_{root_order}^{root_exp}.
struct UniformizerValue {
  unsigned root_order = 1;
  std::int64_t root_exp = 0;
  Rational magnitude{1};
};

struct EpsilonFactorResult {
  unsigned conductor_exp = 0;
  /// (q eta(w))^{-e} sum_{x in W_e^x} eta(x) psi^{(u)}(x).
  ScaledCyclo value;
  /// Riemann sum of the integral over units mod P^{e+1}, cell volume q^{-(e+1)}.
  ScaledCyclo via_integral;
  UniformizerValue uniformizer;
  Elem twist = 1;
  chars::Convention convention = chars::Convention::Appendix;
  bool routes_agree() const { return value == via_integral; }
};

/// epsilon^{-1} for a character of the unit group of conductor exponent e.
/// `eta` is its unit part on W_e(F_q); e = 0 requires eta trivial and gives 1.
/// Throws std::domain_error if eta does not have conductor exactly e.
EpsilonFactorResult local_epsilon(const MultChar& eta, const UniformizerValue& eta_pi, Elem twist, unsigned e,
                                  chars::Convention conv = chars::Convention::Appendix);

}  // namespace wittgauss::gauss
