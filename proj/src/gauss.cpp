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

#include "wittgauss/gauss.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wittgauss/parallel.hpp"

namespace wittgauss::gauss {

namespace {

// chi(x) as an exponent of zeta_m (ord chi | m), or -1 off units.
std::int64_t chi_exp(const MultChar& chi, Elem x, unsigned m) {
  const auto e = chi.exponent(x);
  if (!e) return -1;
  const std::uint32_t ord = chi.order();
  return std::int64_t{*e / (chi.group().exponent() / ord)} * (m / ord);
}

std::int64_t psi_exp(const AddChar& psi, Elem x, unsigned m) {
  return std::int64_t{psi.exponent(x)} * (m / psi.ring().pn());
}

// q^r chi(eps~) psi(eps~) in Z[zeta_m].
CyclotomicInt leading_factor(const MultChar& chi, const AddChar& psi, const chars::EpsilonChar& eps, unsigned m) {
  const auto& R = chi.ring();
  const std::int64_t c = chi_exp(chi, eps.lift, m);
  if (c < 0) return CyclotomicInt::zero(m);
  return BigInt(ipow(R.q(), eps.r)) * CyclotomicInt::zeta(m, c + psi_exp(psi, eps.lift, m));
}

}  // namespace

unsigned ambient_order(const MultChar& chi, const AddChar& psi) {
  if (!(chi.ring() == psi.ring())) throw std::invalid_argument("gauss: characters live on different rings");
  return std::lcm(psi.ring().pn(), chi.order());
}

GaussSumTable::GaussSumTable(chars::UnitGroupPtr group, const AddChar& psi)
    : group_(std::move(group)), psi_(psi) {
  const auto& R = psi.ring();
  if (!(group_->ring() == R)) throw std::invalid_argument("GaussSumTable: group and character rings differ");
  const auto& ords = group_->orders();
  psi_by_dlog_.assign(group_->order(), 0);
  for (Elem x = 0; x < R.size(); ++x) {
    if (!R.is_unit(x)) continue;  // chi vanishes off units
    const std::uint32_t* d = group_->unit_dlog(x);
    std::size_t idx = 0;
    for (std::size_t j = ords.size(); j-- > 0;) idx = idx * ords[j] + d[j];
    psi_by_dlog_[idx] = psi.exponent(x);
  }
}

CyclotomicInt GaussSumTable::operator()(const MultChar& chi) const {
  if (chi.group_ptr() != group_) throw std::invalid_argument("GaussSumTable: character on another group");
  const unsigned m = ambient_order(chi, psi_);
  const std::uint64_t ord = chi.order(), down = group_->exponent() / ord, up = m / ord;
  const std::uint64_t step = m / psi_.ring().pn();
  // chi(g_j) = zeta_m^{w_j}; each weight is a multiple of M / ord.
  const auto& ords = group_->orders();
  const std::size_t rank = ords.size();
  std::vector<std::uint64_t> w(rank);
  for (std::size_t j = 0; j < rank; ++j) w[j] = chi.weights()[j] / down * up % m;
  std::vector<std::uint32_t> d(rank, 0);
  std::vector<std::int64_t> counts(m, 0);
  std::uint64_t e = 0;  // chi exponent of the current unit
  for (std::size_t idx = 0; idx < psi_by_dlog_.size(); ++idx) {
    std::uint64_t t = e + step * psi_by_dlog_[idx];
    if (t >= m) t %= m;
    ++counts[t];
    // Odometer step; wrapping digit j subtracts ord_j * w_j = 0 mod m.
    for (std::size_t j = 0; j < rank; ++j) {
      e += w[j];
      if (e >= m) e -= m;
      if (++d[j] < ords[j]) break;
      d[j] = 0;
    }
  }
  return CyclotomicInt::from_exponent_counts(m, counts);
}

GaussSumResult gauss_sum(const MultChar& chi, const AddChar& psi) {
  return {GaussSumTable(chi.group_ptr(), psi)(chi), chi.descriptor(), psi.descriptor(), chi.ring().size()};
}

CyclotomicInt gauss_sum_units(const MultChar& chi, const AddChar& psi) {
  const unsigned m = ambient_order(chi, psi);
  const auto units = chi.group().filtration(0);
  std::vector<std::int64_t> counts(m, 0);
  for (Elem x : units) ++counts[(chi_exp(chi, x, m) + psi_exp(psi, x, m)) % m];
  return CyclotomicInt::from_exponent_counts(m, counts);
}

CyclotomicInt gauss_sum_naive(const MultChar& chi, const AddChar& psi) {
  const unsigned m = ambient_order(chi, psi);
  CyclotomicInt s = CyclotomicInt::zero(m);
  for (Elem x = 0; x < chi.ring().size(); ++x) s += chi.value(x) * psi.value(x);
  return s;
}

// ---------------------------------------------------------------- inflated sums

InflatedGaussSum::InflatedGaussSum(std::shared_ptr<const witt::WittExtension> ext, const AddChar& psi)
    : ext_(std::move(ext)), psi_ext_(psi.extend(*ext_)) {
  norm_ = ext_->norm_table();
  psi_ = psi_ext_.exponent_table();
}

CyclotomicInt InflatedGaussSum::operator()(const MultChar& chi) const {
  if (!(chi.ring() == ext_->sub())) throw std::invalid_argument("InflatedGaussSum: character ring mismatch");
  const unsigned pn = psi_ext_.ring().pn();
  const unsigned m = std::lcm(pn, chi.order());
  const auto table = chi.exponent_table(m);
  const std::int64_t step = m / pn;
  std::vector<std::int64_t> counts(m, 0);
  for (std::size_t y = 0; y < norm_.size(); ++y) {
    const std::int64_t c = table[norm_[y]];
    if (c < 0) continue;
    ++counts[(c + psi_[y] * step) % m];
  }
  return CyclotomicInt::from_exponent_counts(m, counts);
}

// ---------------------------------------------------------------- closed forms

CyclotomicInt closed_form_even(const MultChar& chi, const AddChar& psi) {
  const auto& R = chi.ring();
  const unsigned n = R.length();
  if (n % 2 != 0) throw std::domain_error("closed_form_even: length must be even");
  if (chi.conductor_exp() != n) throw std::domain_error("closed_form_even: conductor is not p^n");
  const auto eps = chars::solve_epsilon_char(chi, psi, n / 2);
  return leading_factor(chi, psi, eps, ambient_order(chi, psi));
}

CyclotomicInt odd_delta_sum(const MultChar& chi, const AddChar& psi, const chars::EpsilonChar& eps,
                            const witt::WittExtension* ext) {
  const auto& R = chi.ring();
  if (R.length() != 2 * eps.r + 1) throw std::invalid_argument("odd_delta_sum: length must be 2r + 1");
  const unsigned m = ambient_order(chi, psi);
  const witt::WittRing& big = ext ? ext->ext() : R;
  const AddChar psi_b = ext ? psi.extend(*ext) : psi;
  const Elem lift = ext ? ext->embed(eps.lift) : eps.lift;
  const auto pr = static_cast<std::int64_t>(ipow(R.p(), eps.r));
  std::vector<std::int64_t> counts(m, 0);
  for (FElem d = 0; d < big.q(); ++d) {
    const Elem t = big.teichmuller(d);
    const Elem u = big.add(big.one(), big.mul_int(t, pr));
    const std::int64_t c = chi_exp(chi, ext ? ext->norm(u) : u, m);
    if (c < 0) continue;
    ++counts[(c + psi_exp(psi_b, big.mul_int(big.mul(lift, t), pr), m)) % m];
  }
  return CyclotomicInt::from_exponent_counts(m, counts);
}

CyclotomicInt closed_form_odd(const MultChar& chi, const AddChar& psi) {
  const unsigned n = chi.ring().length();
  if (n % 2 != 1) throw std::domain_error("closed_form_odd: length must be odd");
  const auto eps = chars::solve_epsilon_char(chi, psi, n / 2);
  const unsigned m = ambient_order(chi, psi);
  if (!eps.is_unit()) return CyclotomicInt::zero(m);
  return leading_factor(chi, psi, eps, m) * odd_delta_sum(chi, psi, eps, nullptr);
}

CyclotomicInt closed_form_odd_extended(const MultChar& chi, const AddChar& psi, const witt::WittExtension& ext) {
  const unsigned n = chi.ring().length();
  if (n % 2 != 1) throw std::domain_error("closed_form_odd_extended: length must be odd");
  const auto eps = chars::solve_epsilon_char(chi, psi, n / 2);
  const unsigned m = ambient_order(chi, psi);
  if (!eps.is_unit()) return CyclotomicInt::zero(m);
  return leading_factor(chi, psi, eps, m).pow(ext.relative_degree()) * odd_delta_sum(chi, psi, eps, &ext);
}

// ---------------------------------------------------------------- quadratic sums

CyclotomicInt quadratic_partial_sum(const AddChar& psi2, FElem w, unsigned nu) {
  const auto& R = psi2.ring();
  if (R.p() != 2 || R.length() != 2) throw std::invalid_argument("quadratic_partial_sum: needs W_2 over characteristic 2");
  if (w == 0 || w >= R.q() || nu == 0) throw std::invalid_argument("quadratic_partial_sum: w must be a unit, nu >= 1");
  const auto E = ff::FiniteField::make(2, R.degree() * nu, kDefaultEnumerationBound);
  const auto big = witt::WittRing::make(E, 2);
  const witt::WittExtension ext(R, big);
  const AddChar psi_b = psi2.extend(ext);
  const FElem wb = ext.field_embedding().embed(w);
  std::vector<std::int64_t> counts(4, 0);
  for (FElem d = 0; d < E.size(); ++d)
    ++counts[psi_b.exponent(big.neg(big.teichmuller(E.mul(wb, E.mul(d, d)))))];
  return CyclotomicInt::from_exponent_counts(4, counts).embed(8);
}

CyclotomicInt cited_partial_sum_constant(unsigned k, unsigned nu) {
  const auto one_plus_i = CyclotomicInt::from_int(4, 1) + CyclotomicInt::zeta(4, 1);
  return (-(-one_plus_i).pow(std::uint64_t{k} * nu)).embed(8);
}

QuadraticReduction quadratic_gauss_reduction(const AddChar& psi1, FElem w, FElem b, unsigned nu) {
  const auto& R = psi1.ring();
  const std::uint32_t p = R.p();
  if (p == 2) throw std::invalid_argument("quadratic_gauss_reduction: p must be odd");
  if (R.length() != 1) throw std::invalid_argument("quadratic_gauss_reduction: psi must live on W_1");
  const auto& F = R.base();
  if (w == 0 || w >= F.size() || b >= F.size() || nu == 0)
    throw std::invalid_argument("quadratic_gauss_reduction: w must be a unit, b in F_q, nu >= 1");
  const auto E = ff::FiniteField::make(p, R.degree() * nu, kDefaultEnumerationBound);
  const auto big = witt::WittRing::make(E, 1);
  const witt::WittExtension ext(R, big);
  const AddChar psi_b = psi1.extend(ext);
  const auto& emb = ext.field_embedding();
  const FElem wb = emb.embed(w), bb = emb.embed(b), half = E.inv(E.from_int(2));
  auto psi_at = [&](FElem x) { return psi_b.exponent(big.teichmuller(x)); };

  QuadraticReduction out;
  std::vector<std::int64_t> counts(p, 0);
  for (FElem d = 0; d < E.size(); ++d)
    ++counts[psi_at(E.add(E.mul(half, E.mul(wb, E.mul(d, d))), E.mul(bb, d)))];
  out.direct = CyclotomicInt::from_exponent_counts(p, counts);

  const FElem shift_arg = E.neg(E.mul(half, E.mul(E.inv(wb), E.mul(bb, bb))));
  out.shift = CyclotomicInt::zeta(p, psi_at(shift_arg));

  const auto Fp = ff::FiniteField::make(p, 1);
  auto legendre = [&](FElem a) { return a == 0 ? 0 : (Fp.pow(a, (p - 1) / 2) == 1 ? 1 : -1); };
  const FElem nr = ff::rel_norm(F.mul(F.from_int(2), F.inv(w)), ff::FieldEmbedding(Fp, F));
  out.legendre_sign = (nu % 2 == 0) ? 1 : legendre(nr);

  const ff::FieldEmbedding prime(Fp, E);
  std::fill(counts.begin(), counts.end(), 0);
  for (FElem x = 1; x < E.size(); ++x) counts[psi_at(x)] += legendre(ff::rel_norm(x, prime));
  out.legendre_gauss = CyclotomicInt::from_exponent_counts(p, counts);
  return out;
}

// ---------------------------------------------------------------- Davenport-Hasse

bool DHReport::pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return !cases.empty();
}

AddChar make_add_char(const witt::WittRing& ring, const DHOptions& opts) {
  if (opts.kappa_coeffs)
    return AddChar(ring, ring.from_coeffs(*opts.kappa_coeffs), opts.convention, chars::KappaEmbedding::Explicit);
  return AddChar::from_field(ring, opts.kappa_field, opts.embedding, opts.convention);
}

DHReport dh_verify(std::uint32_t p, unsigned k, unsigned n, unsigned s, const DHOptions& opts) {
  if (!is_prime(p) || k == 0 || n == 0 || s == 0) throw std::invalid_argument("dh_verify: need prime p and k, n, s >= 1");
  const std::uint64_t q = ipow(p, k, opts.bound);
  ipow(q, n * s, opts.bound);
  const auto F = ff::FiniteField::make(p, k, std::max<std::uint64_t>(opts.bound, kDefaultFieldBound));
  const auto E = ff::FiniteField::make(p, k * s, std::max<std::uint64_t>(opts.bound, kDefaultFieldBound));
  const auto small = witt::WittRing::make(F, n, opts.bound);
  const auto big = witt::WittRing::make(E, n, opts.bound);
  const auto group = chars::UnitGroup::make(small, opts.bound);
  const auto chars_list = chars::enumerate_mult_chars(group);
  const AddChar psi = make_add_char(small, opts);
  const auto ext = std::make_shared<const witt::WittExtension>(small, big);
  const auto base = std::make_shared<const witt::WittExtension>(small, small);
  const InflatedGaussSum tau_base(base, psi), tau_ext(ext, psi);

  DHReport rep;
  rep.p = p;
  rep.k = k;
  rep.n = n;
  rep.s = s;
  rep.sign = (n * (s - 1)) % 2 ? -1 : 1;
  rep.add_descriptor = psi.descriptor();
  rep.base_terms = small.size();
  rep.ext_terms = big.size();
  rep.cases.resize(chars_list.size());
  parallel_for(chars_list.size(), opts.workers, [&](std::size_t i) {
    const auto& chi = chars_list[i];
    DHCase& c = rep.cases[i];
    c.char_descriptor = chi.descriptor();
    c.conductor = chi.conductor_exp();
    c.lhs = tau_ext(chi);
    c.rhs = BigInt(rep.sign) * tau_base(chi).pow(s);
    c.pass = c.lhs == c.rhs;
  });
  return rep;
}

// ---------------------------------------------------------------- local epsilon

std::complex<double> ScaledCyclo::to_complex() const {
  return value.to_complex() * static_cast<double>(scale);
}

std::string ScaledCyclo::to_string() const {
  if (scale == 1) return value.to_string();
  std::ostringstream os;
  os << scale << " * (" << value.to_string() << ")";
  return os.str();
}

bool operator==(const ScaledCyclo& a, const ScaledCyclo& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return BigInt(numerator(a.scale) * denominator(b.scale)) * a.value ==
         BigInt(numerator(b.scale) * denominator(a.scale)) * b.value;
}

EpsilonFactorResult local_epsilon(const MultChar& eta, const UniformizerValue& eta_pi, Elem twist, unsigned e,
                                  chars::Convention conv) {
  if (eta_pi.root_order == 0 || eta_pi.magnitude == 0)
    throw std::invalid_argument("local_epsilon: uniformizer value must be nonzero");
  EpsilonFactorResult out;
  out.conductor_exp = e;
  out.uniformizer = eta_pi;
  out.twist = twist;
  out.convention = conv;
  if (e == 0) {
    if (!eta.is_trivial()) throw std::domain_error("local_epsilon: e = 0 needs an unramified character");
    out.value = {Rational(1), CyclotomicInt::from_int(1, 1)};
    out.via_integral = out.value;
    return out;
  }
  const auto& R = eta.ring();
  if (R.length() != e || eta.conductor_exp() != e)
    throw std::domain_error("local_epsilon: character must have conductor exponent exactly e on W_e");
  if (twist >= R.size() || !R.is_unit(twist)) throw std::invalid_argument("local_epsilon: twist must be a unit");

  const AddChar psi(R, twist, conv);
  const unsigned m = std::lcm(ambient_order(eta, psi), eta_pi.root_order);
  // eta(w)^{-e} on the root-of-unity part.
  const auto root = CyclotomicInt::zeta(m, -eta_pi.root_exp * std::int64_t{e} * (m / eta_pi.root_order));
  const Rational q_e(BigInt(ipow(R.q(), e)));
  Rational mag_pow = 1;
  for (unsigned i = 0; i < e; ++i) mag_pow *= eta_pi.magnitude;

  // (N v eta(w))^{-e} sum_{x in W_e^x} eta(x) psi^{(u)}(x).
  out.value.scale = 1 / (mag_pow * q_e);
  out.value.value = gauss_sum_units(eta, psi).embed(m) * root;

  // Integral over units of eta(w^{-e} x) e_std(w^{-e} (-u) x) dx, with
  // e_std the conjugate convention, as a Riemann sum over units mod P^{e+1}.
  const auto fine = witt::WittRing::make(R.base(), e + 1, UINT32_MAX);
  const AddChar std_char(R, R.neg(twist),
                         conv == chars::Convention::Appendix ? chars::Convention::GlobalSign : chars::Convention::Appendix);
  std::vector<std::int64_t> counts(m, 0);
  for (Elem x = 0; x < fine.size(); ++x) {
    if (!fine.is_unit(x)) continue;
    const Elem y = fine.project(x, R);
    ++counts[(chi_exp(eta, y, m) + psi_exp(std_char, y, m)) % m];
  }
  out.via_integral.scale = 1 / (mag_pow * q_e * R.q());
  out.via_integral.value = CyclotomicInt::from_exponent_counts(m, counts) * root;
  return out;
}

}  // namespace wittgauss::gauss
