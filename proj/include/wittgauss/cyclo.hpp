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
#include <optional>
#include <string>
#include <vector>

#include "wittgauss/common.hpp"

/// Exact arithmetic in Z[zeta_m] with canonical power-basis coordinates
/// reduced modulo the m-th cyclotomic polynomial.
namespace wittgauss::cyclo {

/// Coefficients of Phi_m, lowest degree first.
std::vector<std::int64_t> cyclotomic_poly(unsigned m);
unsigned euler_phi(unsigned m);

class CyclotomicInt {
 public:
  /// Zero of Z[zeta_1] = Z.
  CyclotomicInt() : m_(1), c_(1) {}

  static CyclotomicInt zero(unsigned m);
  static CyclotomicInt from_int(unsigned m, const BigInt& a);
  /// zeta_m^e for any integer e.
  static CyclotomicInt zeta(unsigned m, std::int64_t e);
  /// sum_e counts[e] zeta_m^e, counts of length m.
  static CyclotomicInt from_exponent_counts(unsigned m, const std::vector<std::int64_t>& counts);

  unsigned order() const { return m_; }
  /// Power-basis coordinates, length phi(m).
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const;
  std::optional<BigInt> as_integer() const;

  CyclotomicInt embed(unsigned target) const;
  /// zeta -> zeta^a; a must be coprime to m.
  CyclotomicInt galois_conj(std::int64_t a) const;
  CyclotomicInt conj() const { return galois_conj(-1); }
  /// The preimage under Z[zeta_d] -> Z[zeta_m] if this lies in the image.
  std::optional<CyclotomicInt> restrict_to(unsigned d) const;
  CyclotomicInt pow(std::uint64_t e) const;
  /// Divides every coordinate by `d`; throws if the division is not exact.
  CyclotomicInt exact_div(const BigInt& d) const;
  /// Numerical value at zeta_m = exp(2 pi i / m). Approximate; display only.
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  friend CyclotomicInt operator*(const BigInt& s, CyclotomicInt a);
  CyclotomicInt operator-() const;
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator!=(const CyclotomicInt& a, const CyclotomicInt& b) { return !(a == b); }

 private:
  CyclotomicInt(unsigned m, std::vector<BigInt> c) : m_(m), c_(std::move(c)) {}
  unsigned m_;
  std::vector<BigInt> c_;
};

CyclotomicInt embed(const CyclotomicInt& x, unsigned m);
CyclotomicInt galois_conj(const CyclotomicInt& x, std::int64_t a);
std::complex<double> to_complex(const CyclotomicInt& x);

}  // namespace wittgauss::cyclo
