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

#include "wittgauss/interp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wittgauss/parallel.hpp"

namespace wittgauss::interp {

using brauer::EulerPoly;
using cyclo::CyclotomicInt;

// PiMonomial

PiMonomial::PiMonomial(Rational coef, std::int64_t pi_exp, std::int64_t i_exp)
    : coef_(std::move(coef)), pi_(pi_exp), i_(static_cast<unsigned>(mod_floor(i_exp, 4))) {
  if (coef_ == 0) throw std::domain_error("PiMonomial: zero coefficient");
  if (coef_ < 0) coef_ = -coef_, i_ = (i_ + 2) % 4;
}

PiMonomial PiMonomial::symbol(const std::string& name, std::int64_t e) {
  PiMonomial m;
  if (e != 0) m.syms_[name] = e;
  return m;
}

PiMonomial& PiMonomial::operator*=(const PiMonomial& o) {
  coef_ *= o.coef_;
  pi_ += o.pi_;
  i_ = (i_ + o.i_) % 4;
  for (const auto& [s, e] : o.syms_) {
    const std::int64_t v = (syms_[s] += e);
    if (v == 0) syms_.erase(s);
  }
  return *this;
}

PiMonomial PiMonomial::pow(std::int64_t e) const {
  PiMonomial r;
  const std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Rational c = 1;
  for (std::uint64_t k = 0; k < n; ++k) c *= coef_;
  r.coef_ = e < 0 ? Rational(1) / c : c;
  r.pi_ = pi_ * e;
  r.i_ = static_cast<unsigned>(mod_floor(static_cast<std::int64_t>(i_) * e, 4));
  for (const auto& [s, v] : syms_)
    if (v * e != 0) r.syms_[s] = v * e;
  return r;
}

bool operator==(const PiMonomial& a, const PiMonomial& b) {
  return a.coef_ == b.coef_ && a.pi_ == b.pi_ && a.i_ == b.i_ && a.syms_ == b.syms_;
}

double PiMonomial::numeric_abs() const {
  return static_cast<double>(coef_) * std::pow(std::numbers::pi, static_cast<double>(pi_));
}

std::string PiMonomial::to_string() const {
  std::ostringstream os;
  os << coef_;
  if (pi_ != 0) os << " pi^" << pi_;
  if (i_ != 0) os << " i^" << i_;
  for (const auto& [s, e] : syms_) os << " " << s << "^" << e;
  return os.str();
}

// CM types and multi-indices

CMTypeMap::CMTypeMap(std::size_t target_size, std::vector<std::size_t> proj)
    : target_(target_size), proj_(std::move(proj)) {
  if (target_ == 0 || proj_.size() % target_ != 0) throw std::invalid_argument("CMTypeMap: fiber sizes differ");
  std::vector<std::size_t> fiber(target_, 0);
  for (auto s : proj_) {
    if (s >= target_) throw std::invalid_argument("CMTypeMap: projection out of range");
    ++fiber[s];
  }
  for (auto f : fiber)
    if (f != proj_.size() / target_) throw std::invalid_argument("CMTypeMap: fiber sizes differ");
}

CMTypeMap CMTypeMap::standard(std::size_t target_size, unsigned degree) {
  std::vector<std::size_t> proj(target_size * degree);
  for (std::size_t t = 0; t < proj.size(); ++t) proj[t] = t % target_size;
  return CMTypeMap(target_size, std::move(proj));
}

std::int64_t abs_index(const MultiIndex& a) {
  std::int64_t s = 0;
  for (auto v : a) s += v;
  return s;
}

MultiIndex pullback(const MultiIndex& a, const CMTypeMap& map) {
  if (a.size() != map.target_size()) throw std::invalid_argument("pullback: index set mismatch");
  MultiIndex out(map.source_size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = a[map(t)];
  return out;
}

bool InfinityType::admissible() const {
  return std::all_of(r.begin(), r.end(), [&](std::int64_t rs) { return -w - rs <= -1 && rs >= 0; });
}

InfinityType pushforward_infinity(const InfinityType& eta, const CMTypeMap& map) {
  return {eta.w, pullback(eta.r, map)};
}

// Gamma factors

PiMonomial gamma_C(std::int64_t m) {
  if (m <= 0) throw std::domain_error("gamma_C: pole at non-positive integer");
  BigInt fact = 1;
  for (std::int64_t k = 2; k < m; ++k) fact *= k;
  return PiMonomial(Rational(2 * fact, BigInt(1) << static_cast<unsigned>(m)), -m);
}

PiMonomial arch_L(const InfinityType& eta, std::int64_t r_rho) {
  PiMonomial out;
  for (auto rs : eta.r) out *= gamma_C(eta.w + rs).pow(r_rho);
  return out;
}

// Matching

bool RecordSummary::degree_identity() const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * d.at(j);
  return s == r_rho;
}

CMTypeMap RecordSummary::map(std::size_t j, std::size_t sigma_count) const {
  if (j < maps.size()) {
    const CMTypeMap& m = maps[j];
    if (m.target_size() != sigma_count || m.degree() != d.at(j))
      throw std::invalid_argument("RecordSummary: map does not match the degree");
    return m;
  }
  return CMTypeMap::standard(sigma_count, d.at(j));
}

RecordSummary summarize(const brauer::VirtualInductionRecord& rec) {
  RecordSummary s;
  for (const auto& t : rec.terms) {
    s.a.push_back(t.a);
    s.d.push_back(rec.group->order() / t.h.size());
  }
  const auto deg = rec.target.degree().as_integer();
  if (!deg) throw std::invalid_argument("summarize: target degree is not an integer");
  s.r_rho = static_cast<std::int64_t>(*deg);
  return s;
}

Matching archimedean_matching(const RecordSummary& rec, const InfinityType& eta) {
  Matching out;
  out.degree_identity = rec.degree_identity();
  for (std::size_t j = 0; j < rec.a.size(); ++j)
    out.lhs *= arch_L(pushforward_infinity(eta, rec.map(j, eta.r.size())), 1).pow(rec.a[j]);
  out.rhs = arch_L(eta, rec.r_rho);
  return out;
}

std::string period_symbol(const std::string& kind, const std::string& field, std::size_t idx) {
  return kind + ":" + field + ":" + std::to_string(idx);
}

PiMonomial descend_periods(const PiMonomial& x, const std::string& from, const std::string& to,
                           const CMTypeMap& map) {
  PiMonomial out(x.coef(), x.pi_exp(), x.i_exp());
  for (const auto& [s, e] : x.syms()) {
    const auto a = s.find(':'), b = s.rfind(':');
    if (a != std::string::npos && b > a && s.substr(a + 1, b - a - 1) == from) {
      const std::size_t tau = std::stoul(s.substr(b + 1));
      out *= PiMonomial::symbol(period_symbol(s.substr(0, a), to, map(tau)), e);
    } else {
      out *= PiMonomial::symbol(s, e);
    }
  }
  return out;
}

namespace {

/// C^{w t + 2 r} over one field for each period kind.
PiMonomial period_power(const InfinityType& eta, const std::string& field) {
  PiMonomial out;
  for (const char* kind : {"C_p", "Omega_inf"})
    for (std::size_t s = 0; s < eta.r.size(); ++s)
      out *= PiMonomial::symbol(period_symbol(kind, field, s), eta.w + 2 * eta.r[s]);
  return out;
}

/// (-1)^{w d} i^{|-w t - r|} / (2^d (2 delta)^r) over one field, d = |Sigma|.
PiMonomial constants(const InfinityType& eta, const std::string& field) {
  const auto d = static_cast<std::int64_t>(eta.r.size());
  std::int64_t i_exp = 2 * eta.w * d;
  for (auto rs : eta.r) i_exp += -eta.w - rs;
  PiMonomial out(Rational(1, BigInt(1) << static_cast<unsigned>(d)), 0, i_exp);
  for (std::size_t s = 0; s < eta.r.size(); ++s) out *= PiMonomial::symbol(period_symbol("2delta", field, s), -eta.r[s]);
  return out;
}

}  // namespace

Matching period_matching(const RecordSummary& rec, const InfinityType& eta) {
  Matching out;
  out.degree_identity = rec.degree_identity();
  for (std::size_t j = 0; j < rec.a.size(); ++j) {
    const CMTypeMap map = rec.map(j, eta.r.size());
    const std::string fj = "F" + std::to_string(j + 1);
    // Periods of F_j at tau equal those of F at tau|_F.
    out.lhs *= descend_periods(period_power(pushforward_infinity(eta, map), fj), fj, "F", map).pow(rec.a[j]);
  }
  out.rhs = period_power(eta, "F").pow(rec.r_rho);
  return out;
}

Matching constants_matching(const RecordSummary& rec, const InfinityType& eta) {
  Matching out;
  out.degree_identity = rec.degree_identity();
  for (std::size_t j = 0; j < rec.a.size(); ++j) {
    const CMTypeMap map = rec.map(j, eta.r.size());
    const std::string fj = "F" + std::to_string(j + 1);
    // tau(2 delta) = (tau|_F)(2 delta) since delta lies in F.
    out.lhs *= descend_periods(constants(pushforward_infinity(eta, map), fj), fj, "F", map).pow(rec.a[j]);
  }
  out.rhs = constants(eta, "F").pow(rec.r_rho);
  return out;
}

LedgerCase random_ledger_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  LedgerCase c;
  const std::size_t sigmas = static_cast<std::size_t>(uniform(1, 3));
  c.eta.w = uniform(-2, 6);
  for (std::size_t s = 0; s < sigmas; ++s) c.eta.r.push_back(uniform(std::max<std::int64_t>(0, 1 - c.eta.w), 4));
  do {
    c.rec = {};
    const auto terms = static_cast<std::size_t>(uniform(1, 5));
    for (std::size_t j = 0; j < terms; ++j) {
      std::int64_t a = uniform(-3, 2);
      c.rec.a.push_back(a >= 0 ? a + 1 : a);
      c.rec.d.push_back(static_cast<unsigned>(uniform(1, 4)));
    }
    c.rec.r_rho = 0;
    for (std::size_t j = 0; j < terms; ++j) c.rec.r_rho += c.rec.a[j] * c.rec.d[j];
  } while (c.rec.r_rho < 1);
  for (std::size_t j = 0; j < c.rec.a.size(); ++j) {
    // A shuffled projection with equal fibers.
    std::vector<std::size_t> proj(sigmas * c.rec.d[j]);
    for (std::size_t t = 0; t < proj.size(); ++t) proj[t] = t % sigmas;
    for (std::size_t t = proj.size(); t > 1; --t) std::swap(proj[t - 1], proj[rng() % t]);
    c.rec.maps.emplace_back(sigmas, std::move(proj));
  }
  return c;
}

LedgerSweep ledger_sweep(std::uint64_t count, std::uint64_t seed, unsigned workers) {
  std::vector<LedgerSweep> slot(count);
  parallel_for(count, workers, [&](std::size_t i) {
    const LedgerCase c = random_ledger_case(seed * 1000003u + i);
    LedgerSweep& s = slot[i];
    s.cases = 1;
    s.archimedean = archimedean_matching(c.rec, c.eta).pass();
    s.periods = period_matching(c.rec, c.eta).pass();
    s.constants = constants_matching(c.rec, c.eta).pass();
    for (std::int64_t delta : {-1, 1}) {
      RecordSummary bad = c.rec;
      bad.r_rho += delta;
      ++s.controls;
      // Gamma factors carry pi^{-(w + r_sigma)} with w + r_sigma >= 1, so any
      // degree mismatch shows in the pi exponent.
      if (!archimedean_matching(bad, c.eta).pass()) ++s.controls_rejected;
    }
  });
  LedgerSweep total;
  for (const auto& s : slot) {
    total.cases += s.cases;
    total.archimedean += s.archimedean;
    total.periods += s.periods;
    total.constants += s.constants;
    total.controls += s.controls;
    total.controls_rejected += s.controls_rejected;
  }
  return total;
}

// Modified Euler factors at unramified places

namespace {

EulerPoly scale_variable(const EulerPoly& p, const CyclotomicInt& c) {
  std::vector<CyclotomicInt> out;
  CyclotomicInt ck = CyclotomicInt::from_int(1, 1);
  for (const auto& v : p.coeffs()) {
    out.push_back(v * ck);
    ck *= c;
  }
  return EulerPoly::from_coeffs(std::move(out));
}

EulerPoly conj_poly(const EulerPoly& p) {
  std::vector<CyclotomicInt> out;
  for (const auto& v : p.coeffs()) out.push_back(v.conj());
  return EulerPoly::from_coeffs(std::move(out));
}

/// q^D P(1/q).
CyclotomicInt eval_reciprocal(const EulerPoly& p, std::uint64_t q, unsigned D) {
  CyclotomicInt s = CyclotomicInt::zero(p.order());
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    BigInt w = 1;
    for (std::size_t i = k; i < D; ++i) w *= q;
    s += w * c[k];
  }
  return s;
}

struct Side {
  EulerPoly num, den;
};

Side multiply_out(const std::vector<brauer::EulerFactor>& fs) {
  Side s;
  for (const auto& f : fs) {
    if (f.exponent >= 0) s.num = s.num * f.poly.pow(static_cast<unsigned>(f.exponent));
    else s.den = s.den * f.poly.pow(static_cast<unsigned>(-f.exponent));
  }
  return s;
}

struct SlotResult {
  std::vector<brauer::EulerFactor> lhs;
  bool series_equal = false;
  bool specialized = false;
};

/// prod (1 - psi^g(Frob^f) eta^f T^f)^{a_j} against the target power series
/// with traces chi(Frob^k) eta^k, and the factored rhs at T = 1/q.
SlotResult slot(const brauer::VirtualInductionRecord& rec, const UnramifiedPlace& pl, std::uint64_t q) {
  const brauer::FiniteGroup& G = *rec.group;
  const CyclotomicInt eta = CyclotomicInt::zeta(pl.m, pl.b);
  SlotResult out;
  for (const auto& p : brauer::places(rec, pl.frob))
    out.lhs.push_back({EulerPoly::binomial(p.psi_frob * eta.pow(p.f), p.f), rec.terms[p.term].a});
  const brauer::EulerCheck ec = brauer::euler_inductivity_check(rec, pl.frob);
  std::vector<brauer::EulerFactor> rhs;
  for (const auto& f : ec.rhs) rhs.push_back({scale_variable(f.poly, eta), f.exponent});
  const Side l = multiply_out(out.lhs), r = multiply_out(rhs);

  unsigned bound = 0;
  for (const auto& t : rec.terms) bound += static_cast<unsigned>(std::abs(t.a)) * (G.order() / t.h.size());
  const unsigned len = l.num.degree() + l.den.degree() + bound + 1;
  std::vector<CyclotomicInt> traces;
  for (unsigned k = 1; k <= len; ++k) traces.push_back(rec.target.at(G.pow(pl.frob, k)) * eta.pow(k));
  out.series_equal = l.num == (brauer::det_one_minus(traces) * l.den).truncate(len);

  const EulerPoly a = l.num * r.den, b = r.num * l.den;
  const unsigned D = std::max(a.degree(), b.degree());
  out.specialized = eval_reciprocal(a, q, D) == eval_reciprocal(b, q, D);
  return out;
}

brauer::VirtualInductionRecord dual_record(const brauer::VirtualInductionRecord& rec) {
  brauer::VirtualInductionRecord d = rec;
  d.name = rec.name + " dual";
  for (auto& t : d.terms) t.psi = t.psi.conj();
  d.target = rec.target.conj();
  return d;
}

}  // namespace

EulMatching unramified_p_euler_matching(const brauer::VirtualInductionRecord& rec, const UnramifiedPlace& vc,
                                        const UnramifiedPlace& v, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("unramified_p_euler_matching: q >= 2");
  EulMatching out;
  const SlotResult at_vc = slot(rec, vc, q);
  const UnramifiedPlace v_dual{v.frob, v.m, -v.b};
  const SlotResult at_v_dual = slot(dual_record(rec), v_dual, q);
  const SlotResult at_v = slot(rec, v, q);
  out.twisted = at_vc.series_equal;
  out.dual = at_v_dual.series_equal;
  out.specialized = at_vc.specialized && at_v_dual.specialized;
  out.dual_consistent = at_v.lhs.size() == at_v_dual.lhs.size();
  for (std::size_t i = 0; out.dual_consistent && i < at_v.lhs.size(); ++i)
    out.dual_consistent = conj_poly(at_v.lhs[i].poly) == at_v_dual.lhs[i].poly &&
                          at_v.lhs[i].exponent == at_v_dual.lhs[i].exponent;
  return out;
}

}  // namespace wittgauss::interp
