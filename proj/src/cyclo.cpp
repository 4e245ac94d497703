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

#include "wittgauss/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wittgauss::cyclo {

namespace {

using Wide = __int128;

// Reduced power-basis form of zeta_m^e for each 0 <= e < m.
struct Table {
  unsigned m = 1;
  unsigned phi = 1;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> red;
  /// Nonzero coefficients of Phi_m below the leading term.
  std::vector<std::pair<std::uint32_t, std::int64_t>> phi_low;
  /// Bound on every intermediate coefficient when dividing a single monomial
  /// x^e (e < m) by Phi_m; 0 if it exceeds 2^62.
  std::int64_t div_max = 1;
};

std::shared_ptr<const Table> table_for(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const Table>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto t = std::make_shared<Table>();
  t->m = m;
  const auto phi_poly = cyclotomic_poly(m);
  t->phi = static_cast<unsigned>(phi_poly.size() - 1);
  const unsigned f = t->phi;
  std::vector<std::int64_t> cur(f, 0);
  cur[0] = 1;
  t->red.resize(m);
  for (unsigned e = 0; e < m; ++e) {
    for (unsigned i = 0; i < f; ++i)
      if (cur[i] != 0) t->red[e].emplace_back(i, cur[i]);
    const std::int64_t top = cur[f - 1];
    for (unsigned i = f; i-- > 1;) cur[i] = cur[i - 1] - top * phi_poly[i];
    cur[0] = -top * phi_poly[0];
  }
  for (unsigned j = 0; j < f; ++j)
    if (phi_poly[j] != 0) t->phi_low.emplace_back(j, phi_poly[j]);
  // Dividing x^{m-1} passes through shifted copies of every other monomial's states.
  std::vector<Wide> r(m, 0);
  r[m - 1] = 1;
  Wide worst = 1;
  for (unsigned i = m; i-- > f;) {
    const Wide c = r[i];
    if (c == 0) continue;
    for (auto [j, v] : t->phi_low) {
      Wide& x = r[i - f + j];
      x -= c * v;
      worst = std::max(worst, x < 0 ? -x : x);
    }
    if (worst > (Wide{1} << 62)) break;
  }
  t->div_max = worst > (Wide{1} << 62) ? 0 : static_cast<std::int64_t>(worst);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(t)).first->second;
}

BigInt to_big(Wide v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

unsigned bits(const BigInt& a) {
  return a == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(a))) + 1;
}

// sum_e buf[e] zeta^e in the power basis, by long division by Phi_m. The
// caller guarantees sum |buf[e]| * div_max < 2^126.
std::vector<BigInt> reduce_wide(const Table& t, std::vector<Wide>& buf) {
  for (unsigned i = t.m; i-- > t.phi;) {
    const Wide c = buf[i];
    if (c == 0) continue;
    for (auto [j, v] : t.phi_low) buf[i - t.phi + j] -= c * v;
  }
  std::vector<BigInt> out(t.phi);
  for (unsigned k = 0; k < t.phi; ++k) out[k] = to_big(buf[k]);
  return out;
}

std::vector<BigInt> reduce_big(const Table& t, std::vector<BigInt>& buf) {
  for (unsigned i = t.m; i-- > t.phi;) {
    if (buf[i] == 0) continue;
    const BigInt c = buf[i];
    for (auto [j, v] : t.phi_low) buf[i - t.phi + j] -= c * v;
  }
  buf.resize(t.phi);
  return std::move(buf);
}

/// Wide arithmetic is exact when the input mass times div_max fits.
bool fits_wide(const Table& t, unsigned mass_bits) {
  return t.div_max != 0 && mass_bits + bits(BigInt(t.div_max)) <= 125;
}

std::vector<BigInt> reduce(const Table& t, std::vector<BigInt> buf) {
  BigInt mass = 0;
  bool small = true;
  for (const auto& v : buf) {
    mass += boost::multiprecision::abs(v);
    small = small && bits(v) <= 62;
  }
  if (small && fits_wide(t, bits(mass))) {
    std::vector<Wide> w(buf.size());
    for (std::size_t i = 0; i < buf.size(); ++i) w[i] = static_cast<std::int64_t>(buf[i]);
    return reduce_wide(t, w);
  }
  return reduce_big(t, buf);
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_poly: m must be positive");
  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}.
  auto mobius = [](unsigned n) {
    int r = 1;
    for (auto p : prime_factors(n)) {
      if ((n / p) % p == 0) return 0;
      r = -r;
    }
    return r;
  };
  std::vector<std::int64_t> num{1};
  std::vector<unsigned> den;
  for (unsigned d : divisors(m)) {
    const int mu = mobius(m / d);
    if (mu == 1) {
      std::vector<std::int64_t> r(num.size() + d, 0);
      for (std::size_t i = 0; i < num.size(); ++i) {
        r[i + d] += num[i];
        r[i] -= num[i];
      }
      num = std::move(r);
    } else if (mu == -1) {
      den.push_back(d);
    }
  }
  for (unsigned d : den) {
    // Exact division by x^d - 1: q_i = q_{i+d} - r_{i+d} from the top.
    const std::size_t deg = num.size() - 1;
    std::vector<std::int64_t> q(deg - d + 1, 0);
    std::vector<std::int64_t> r = num;
    for (std::size_t i = deg; i >= d; --i) {
      const std::int64_t c = r[i];
      q[i - d] = c;
      r[i] -= c;
      r[i - d] += c;
      if (i == d) break;
    }
    for (auto v : r)
      if (v != 0) throw std::logic_error("cyclotomic_poly: inexact division");
    num = std::move(q);
  }
  return num;
}

unsigned euler_phi(unsigned m) {
  unsigned r = m;
  for (auto p : prime_factors(m)) r = r / static_cast<unsigned>(p) * static_cast<unsigned>(p - 1);
  return r;
}

CyclotomicInt CyclotomicInt::zero(unsigned m) {
  if (m == 0) throw std::invalid_argument("CyclotomicInt: order must be positive");
  return CyclotomicInt(m, std::vector<BigInt>(euler_phi(m)));
}

CyclotomicInt CyclotomicInt::from_int(unsigned m, const BigInt& a) {
  CyclotomicInt r = zero(m);
  r.c_[0] = a;
  return r;
}

CyclotomicInt CyclotomicInt::zeta(unsigned m, std::int64_t e) {
  auto t = table_for(m);
  CyclotomicInt r = zero(m);
  for (auto [i, v] : t->red[mod_floor(e, m)]) r.c_[i] = v;
  return r;
}

CyclotomicInt CyclotomicInt::from_exponent_counts(unsigned m, const std::vector<std::int64_t>& counts) {
  if (counts.size() != m) throw std::invalid_argument("from_exponent_counts: need m counts");
  auto t = table_for(m);
  BigInt mass = 0;
  for (auto c : counts) mass += c < 0 ? -c : c;
  if (fits_wide(*t, bits(mass))) {
    std::vector<Wide> buf(counts.begin(), counts.end());
    return CyclotomicInt(m, reduce_wide(*t, buf));
  }
  return CyclotomicInt(m, reduce(*t, std::vector<BigInt>(counts.begin(), counts.end())));
}

bool CyclotomicInt::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

std::optional<BigInt> CyclotomicInt::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

CyclotomicInt CyclotomicInt::embed(unsigned target) const {
  if (target == 0 || target % m_ != 0) throw std::invalid_argument("embed: order does not divide target");
  if (target == m_) return *this;
  auto t = table_for(target);
  const unsigned step = target / m_;
  std::vector<BigInt> buf(target);
  for (std::size_t i = 0; i < c_.size(); ++i) buf[i * step] = c_[i];
  return CyclotomicInt(target, reduce(*t, std::move(buf)));
}

CyclotomicInt CyclotomicInt::galois_conj(std::int64_t a) const {
  if (std::gcd(mod_floor(a, m_), std::int64_t{m_}) != 1 && m_ > 1)
    throw std::invalid_argument("galois_conj: exponent not coprime to the order");
  auto t = table_for(m_);
  std::vector<BigInt> buf(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) buf[mod_floor(a * static_cast<std::int64_t>(i), m_)] += c_[i];
  return CyclotomicInt(m_, reduce(*t, std::move(buf)));
}

std::optional<CyclotomicInt> CyclotomicInt::restrict_to(unsigned d) const {
  if (d == 0 || m_ % d != 0) throw std::invalid_argument("restrict_to: order does not divide");
  auto t = table_for(m_);
  const unsigned fd = euler_phi(d), fm = static_cast<unsigned>(c_.size());
  // Columns: images of zeta_d^j; last column: this element.
  std::vector<std::vector<Rational>> a(fm, std::vector<Rational>(fd + 1));
  for (unsigned j = 0; j < fd; ++j)
    for (auto [i, v] : t->red[j * (m_ / d)]) a[i][j] = v;
  for (unsigned i = 0; i < fm; ++i) a[i][fd] = c_[i];
  std::vector<unsigned> pivcol;
  unsigned row = 0;
  for (unsigned col = 0; col < fd && row < fm; ++col) {
    unsigned piv = row;
    while (piv < fm && a[piv][col] == 0) ++piv;
    if (piv == fm) continue;
    std::swap(a[row], a[piv]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (unsigned r = 0; r < fm; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (unsigned j = col; j <= fd; ++j) a[r][j] -= f * a[row][j];
    }
    pivcol.push_back(col);
    ++row;
  }
  for (unsigned r = row; r < fm; ++r)
    if (a[r][fd] != 0) return std::nullopt;
  CyclotomicInt y = zero(d);
  for (unsigned r = 0; r < row; ++r) {
    const Rational& v = a[r][fd];
    if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
    y.c_[pivcol[r]] = boost::multiprecision::numerator(v);
  }
  return y;
}

CyclotomicInt CyclotomicInt::pow(std::uint64_t e) const {
  CyclotomicInt r = from_int(m_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

CyclotomicInt CyclotomicInt::exact_div(const BigInt& d) const {
  if (d == 0) throw std::domain_error("exact_div: division by zero");
  CyclotomicInt r = *this;
  for (auto& v : r.c_) {
    if (v % d != 0) throw std::domain_error("exact_div: not divisible");
    v /= d;
  }
  return r;
}

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<long double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const long double ang = 2 * std::numbers::pi_v<long double> * static_cast<long double>(i) / m_;
    s += static_cast<long double>(c_[i]) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    a = boost::multiprecision::abs(a);
    first = false;
    if (i == 0) { os << a; continue; }
    if (a != 1) os << a << "*";
    os << "z" << m_;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  if (m_ != o.m_) {
    const unsigned l = std::lcm(m_, o.m_);
    *this = embed(l);
    return *this += o.embed(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) { return *this += -o; }

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CyclotomicInt operator*(const BigInt& s, CyclotomicInt a) {
  for (auto& v : a.c_) v *= s;
  return a;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
  if (m_ != o.m_) {
    const unsigned l = std::lcm(m_, o.m_);
    *this = embed(l);
    return *this *= o.embed(l);
  }
  auto t = table_for(m_);
  std::vector<std::pair<unsigned, const BigInt*>> na, nb;
  BigInt sa = 0, sb = 0;
  for (unsigned i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) { na.emplace_back(i, &c_[i]); sa += boost::multiprecision::abs(c_[i]); }
  for (unsigned i = 0; i < o.c_.size(); ++i)
    if (o.c_[i] != 0) { nb.emplace_back(i, &o.c_[i]); sb += boost::multiprecision::abs(o.c_[i]); }
  const unsigned ba = bits(sa), bb = bits(sb);
  std::vector<BigInt> out;
  if (ba <= 62 && bb <= 62 && fits_wide(*t, ba + bb)) {
    std::vector<Wide> buf(m_, 0);
    std::vector<std::pair<unsigned, std::int64_t>> sa64, sb64;
    for (auto [i, v] : na) sa64.emplace_back(i, static_cast<std::int64_t>(*v));
    for (auto [i, v] : nb) sb64.emplace_back(i, static_cast<std::int64_t>(*v));
    for (auto [i, x] : sa64)
      for (auto [j, y] : sb64) {
        unsigned e = i + j;
        if (e >= m_) e -= m_;
        buf[e] += static_cast<Wide>(x) * y;
      }
    out = reduce_wide(*t, buf);
  } else {
    std::vector<BigInt> buf(m_);
    for (auto [i, x] : na)
      for (auto [j, y] : nb) buf[(i + j) % m_] += *x * *y;
    out = reduce_big(*t, buf);
  }
  c_ = std::move(out);
  return *this;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const unsigned l = std::lcm(a.m_, b.m_);
  return a.embed(l).c_ == b.embed(l).c_;
}

CyclotomicInt embed(const CyclotomicInt& x, unsigned m) { return x.embed(m); }
CyclotomicInt galois_conj(const CyclotomicInt& x, std::int64_t a) { return x.galois_conj(a); }
std::complex<double> to_complex(const CyclotomicInt& x) { return x.to_complex(); }

}  // namespace wittgauss::cyclo
