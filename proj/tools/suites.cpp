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

#include "suites.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <memory>
#include <sstream>
#include <tuple>

#include "wittgauss/brauer.hpp"
#include "wittgauss/gauss.hpp"
#include "wittgauss/interp.hpp"
#include "wittgauss/parallel.hpp"
#include "wittgauss/witt.hpp"
#include "wittgauss/zmod.hpp"

namespace wittgauss::cli {

using chars::AddChar;
using chars::Convention;
using chars::Elem;
using chars::KappaEmbedding;
using chars::MultChar;
using cyclo::CyclotomicInt;
using witt::WittRing;

namespace {

std::uint32_t parse_uint(const std::string& text, const std::string& flag) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ConfigError(flag + ": expected a non-negative integer, got '" + text + "'");
  const unsigned long long v = std::stoull(text);
  if (v > std::numeric_limits<std::uint32_t>::max()) throw ConfigError(flag + ": value too large");
  return static_cast<std::uint32_t>(v);
}

std::int64_t parse_coeff(std::string text) {
  bool neg = false;
  if (!text.empty() && text[0] == '-') neg = true, text.erase(0, 1);
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) base = 16, text.erase(0, 2);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used, base);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw ConfigError("--kappa: bad coefficient '" + text + "'");
  return neg ? -v : v;
}

Json parse_descriptor(const std::string& d) { return Json::parse(d); }

Json scaled_json(const gauss::ScaledCyclo& x) {
  std::ostringstream os;
  os << x.scale;
  return Json{{"scale", os.str()}, {"value", cyclo_json(x.value)}};
}

gauss::DHOptions dh_options(const SuiteConfig& cfg) {
  gauss::DHOptions o;
  o.convention = cfg.convention;
  o.embedding = cfg.kappa.embedding;
  o.kappa_field = cfg.kappa.field_elem;
  if (cfg.kappa.embedding == KappaEmbedding::Explicit) o.kappa_coeffs = cfg.kappa.coeffs;
  o.workers = cfg.workers;
  o.bound = cfg.bound;
  return o;
}

/// The additive character selected by the config, rejecting kappa that is
/// not a unit of `ring`.
AddChar config_add_char(const WittRing& ring, const SuiteConfig& cfg) {
  if (cfg.kappa.embedding == KappaEmbedding::Explicit) {
    if (!ring.is_unit(ring.from_coeffs(cfg.kappa.coeffs)))
      throw ConfigError("--kappa: " + cfg.kappa.to_string() + " is not a unit of W_" +
                        std::to_string(ring.length()) + "(F_" + std::to_string(ring.q()) + ")");
  } else if (cfg.kappa.field_elem == 0 || cfg.kappa.field_elem >= ring.q()) {
    throw ConfigError("--kappa: field element " + std::to_string(cfg.kappa.field_elem) + " is not in F_" +
                      std::to_string(ring.q()) + "^x");
  }
  return gauss::make_add_char(ring, dh_options(cfg));
}

struct RingPoint {
  std::uint32_t p;
  unsigned k, n;
};

/// (p, k, n) points of the grid with q^n <= bound; the rest go to `skipped`.
std::vector<RingPoint> ring_points(const SuiteConfig& cfg, Json& skipped, unsigned max_n = UINT32_MAX) {
  std::vector<RingPoint> out;
  for (auto p : cfg.p)
    for (auto k : cfg.k)
      for (auto n : cfg.n) {
        if (n > max_n) continue;
        try {
          ipow(ipow(p, k, cfg.bound), n, cfg.bound);
          out.push_back({p, k, n});
        } catch (const BoundExceeded&) {
          skipped.push_back(Json{{"p", p}, {"k", k}, {"n", n}});
        }
      }
  return out;
}

WittRing make_ring(std::uint32_t p, unsigned k, unsigned n, std::uint64_t bound) {
  return WittRing::make(ff::FiniteField::make(p, k, std::max(bound, kDefaultFieldBound)), n, bound);
}

void tally(Section& s, Json rec, bool pass) {
  rec["pass"] = pass;
  s.cases.push_back(std::move(rec));
  ++s.total;
  s.passed += pass ? 1 : 0;
}

/// Per-character Gauss sum data shared by the closed-form and absolute-value checks.
struct RingChars {
  WittRing ring;
  AddChar psi;
  std::vector<MultChar> chars;
  std::vector<CyclotomicInt> tau;
};

RingChars ring_chars(const RingPoint& pt, const SuiteConfig& cfg) {
  const WittRing R = make_ring(pt.p, pt.k, pt.n, cfg.bound);
  const auto group = chars::UnitGroup::make(R, cfg.bound);
  RingChars rc{R, config_add_char(R, cfg), chars::enumerate_mult_chars(group), {}};
  rc.tau.resize(rc.chars.size());
  const gauss::GaussSumTable tau(group, rc.psi);
  parallel_for(rc.chars.size(), cfg.workers, [&](std::size_t i) { rc.tau[i] = tau(rc.chars[i]); });
  return rc;
}

const std::vector<std::string>& mackey_groups() {
  static const std::vector<std::string> g{"S3", "D4", "Q8", "A4"};
  return g;
}
const std::vector<std::string>& reciprocity_groups() {
  static const std::vector<std::string> g{"S3", "C6", "D4", "Q8", "C8", "A4", "D6", "S4"};
  return g;
}

}  // namespace

// ---------------------------------------------------------------- config

std::vector<std::uint32_t> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  std::uint32_t lo, hi;
  if (dots == std::string::npos) {
    lo = hi = parse_uint(text, flag);
  } else {
    lo = parse_uint(text.substr(0, dots), flag);
    hi = parse_uint(text.substr(dots + 2), flag);
  }
  if (lo > hi) throw ConfigError(flag + ": empty range '" + text + "'");
  if (hi - lo > 4096) throw ConfigError(flag + ": range '" + text + "' too long");
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::string KappaSpec::to_string() const {
  if (embedding != KappaEmbedding::Explicit)
    return chars::to_string(embedding) + ":" + std::to_string(field_elem);
  std::string s = "unit:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(coeffs[i]);
  return s;
}

KappaSpec parse_kappa(const std::string& text) {
  KappaSpec k;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "teichmuller" || head == "least-residue") {
    k.embedding = head == "teichmuller" ? KappaEmbedding::Teichmuller : KappaEmbedding::LeastResidue;
    if (colon != std::string::npos) k.field_elem = parse_uint(tail, "--kappa");
    else if (head == "least-residue") throw ConfigError("--kappa: least-residue needs a field element");
    if (k.field_elem == 0) throw ConfigError("--kappa: kappa must be nonzero");
    return k;
  }
  if (head == "unit" && !tail.empty()) {
    k.embedding = KappaEmbedding::Explicit;
    std::stringstream ss(tail);
    for (std::string item; std::getline(ss, item, ',');) k.coeffs.push_back(parse_coeff(item));
    return k;
  }
  throw ConfigError("--kappa: expected teichmuller[:c], least-residue:c or unit:c0,c1,..., got '" + text + "'");
}

Convention parse_convention(const std::string& text) {
  if (text == "appendix") return Convention::Appendix;
  if (text == "global-sign") return Convention::GlobalSign;
  throw ConfigError("--convention: expected appendix or global-sign, got '" + text + "'");
}

void SuiteConfig::validate() const {
  for (auto v : p)
    if (!is_prime(v)) throw ConfigError("--p: " + std::to_string(v) + " is not prime");
  auto positive = [](const std::vector<std::uint32_t>& xs, const char* flag) {
    if (xs.empty()) throw ConfigError(std::string(flag) + ": empty");
    for (auto v : xs)
      if (v == 0) throw ConfigError(std::string(flag) + ": values must be >= 1");
  };
  positive(k, "--k");
  positive(n, "--n");
  positive(s, "--s");
  if (p.empty()) throw ConfigError("--p: empty");
  if (workers == 0) throw ConfigError("--workers: must be >= 1");
  if (bound < 2 || bound > (1ull << 24)) throw ConfigError("--bound: must lie in [2, 2^24]");
  if (closed_form != "even" && closed_form != "odd" && closed_form != "all")
    throw ConfigError("--closed-form: expected even, odd or all");
}

Json SuiteConfig::conventions() const {
  return Json{{"additive_sign", chars::to_string(convention)},
              {"kappa", kappa.to_string()},
              {"bound", bound},
              {"seed", seed}};
}

// ---------------------------------------------------------------- reports

Json cyclo_json(const CyclotomicInt& x) {
  Json c = Json::array();
  for (const auto& v : x.coeffs()) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
      c.push_back(static_cast<std::int64_t>(v));
    else
      c.push_back(v.str());
  }
  return Json{{"m", x.order()}, {"c", std::move(c)}};
}

std::string digest(const std::vector<std::string>& parts) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& s : parts) {
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    h = (h ^ 0xff) * 1099511628211ull;  // separator
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

Json Section::to_json() const {
  Json j{{"name", name}, {"identity", identity}, {"cases", cases}};
  if (!skipped.empty()) j["skipped"] = skipped;
  j["totals"] = Json{{"cases", total}, {"passed", passed}, {"failed", total - passed}};
  j["pass"] = pass();
  return j;
}

bool Report::pass() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.pass(); });
}

Json Report::to_json() const {
  Json secs = Json::array();
  std::uint64_t total = 0, passed = 0;
  for (const auto& s : sections) {
    secs.push_back(s.to_json());
    total += s.total;
    passed += s.passed;
  }
  return Json{{"tool", "wittgauss"},
              {"version", kToolVersion},
              {"schema", kSchemaVersion},
              {"suite", suite},
              {"conventions", conventions},
              {"sections", std::move(secs)},
              {"totals", Json{{"cases", total}, {"passed", passed}, {"failed", total - passed}}},
              {"pass", pass()}};
}

// ---------------------------------------------------------------- Davenport-Hasse

Section run_dh(const SuiteConfig& cfg) {
  Section sec{"davenport-hasse", "tau(chi o Nr) over W_n(F_{q^s}) = (-1)^{n(s-1)} tau(chi)^s", {}, {}, 0, 0};
  const auto opts = dh_options(cfg);
  for (auto p : cfg.p)
    for (auto k : cfg.k)
      for (auto n : cfg.n)
        for (auto s : cfg.s) {
          try {
            ipow(ipow(p, k, cfg.bound), n * s, cfg.bound);
          } catch (const BoundExceeded&) {
            sec.skipped.push_back(Json{{"p", p}, {"k", k}, {"n", n}, {"s", s}});
            continue;
          }
          config_add_char(make_ring(p, k, n, cfg.bound), cfg);
          const gauss::DHReport rep = gauss::dh_verify(p, k, n, s, opts);
          const Json point{{"p", p}, {"k", k}, {"n", n}, {"s", s}, {"sign", rep.sign},
                           {"add_char", parse_descriptor(rep.add_descriptor)}};
          if (cfg.detailed) {
            for (const auto& c : rep.cases) {
              Json rec = point;
              rec["char"] = parse_descriptor(c.char_descriptor);
              rec["conductor"] = c.conductor;
              rec["lhs"] = cyclo_json(c.lhs);
              rec["rhs"] = cyclo_json(c.rhs);
              tally(sec, std::move(rec), c.pass);
            }
            continue;
          }
          std::vector<std::string> parts;
          std::uint64_t ok = 0;
          for (const auto& c : rep.cases) {
            parts.push_back(c.lhs.to_string());
            ok += c.pass ? 1 : 0;
          }
          Json rec = point;
          rec["characters"] = rep.cases.size();
          rec["passed"] = ok;
          rec["digest"] = digest(parts);
          tally(sec, std::move(rec), rep.pass());
        }
  return sec;
}

// ---------------------------------------------------------------- closed forms and absolute values

Section run_closed_forms(const SuiteConfig& cfg) {
  Section sec{"closed-forms",
              "even n: tau = q^r chi(eps~) psi(eps~) at full conductor; odd n: tau = q^r chi(eps~) psi(eps~) "
              "times the delta-sum",
              {}, {}, 0, 0};
  for (const auto& pt : ring_points(cfg, sec.skipped)) {
    const bool even = pt.n % 2 == 0;
    if ((even && cfg.closed_form == "odd") || (!even && cfg.closed_form == "even")) continue;
    const RingChars rc = ring_chars(pt, cfg);
    std::vector<std::optional<CyclotomicInt>> cf(rc.chars.size());
    parallel_for(rc.chars.size(), cfg.workers, [&](std::size_t i) {
      const auto& chi = rc.chars[i];
      if (!even) cf[i] = gauss::closed_form_odd(chi, rc.psi);
      else if (chi.conductor_exp() == pt.n) cf[i] = gauss::closed_form_even(chi, rc.psi);
    });
    std::uint64_t checked = 0, ok = 0;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < rc.chars.size(); ++i) {
      if (!cf[i]) continue;
      const bool pass = *cf[i] == rc.tau[i];
      ++checked;
      ok += pass ? 1 : 0;
      parts.push_back(cf[i]->to_string());
      if (cfg.detailed)
        tally(sec,
              Json{{"p", pt.p}, {"k", pt.k}, {"n", pt.n},
                   {"char", parse_descriptor(rc.chars[i].descriptor())},
                   {"conductor", rc.chars[i].conductor_exp()},
                   {"closed_form", cyclo_json(*cf[i])},
                   {"oracle", cyclo_json(rc.tau[i])}},
              pass);
    }
    if (!cfg.detailed)
      tally(sec,
            Json{{"p", pt.p}, {"k", pt.k}, {"n", pt.n}, {"form", even ? "even" : "odd"},
                 {"add_char", parse_descriptor(rc.psi.descriptor())},
                 {"characters", rc.chars.size()}, {"checked", checked}, {"passed", ok}, {"digest", digest(parts)}},
            checked == ok);
  }
  return sec;
}

Section run_absolute_value(const SuiteConfig& cfg) {
  Section sec{"absolute-value",
              "tau(chi) conj(tau(chi)) = q^n at full conductor; tau(chi) = 0 below it for n >= 2",
              {}, {}, 0, 0};
  for (const auto& pt : ring_points(cfg, sec.skipped)) {
    const RingChars rc = ring_chars(pt, cfg);
    const auto qn = CyclotomicInt::from_int(1, rc.ring.size());
    const auto minus_one = CyclotomicInt::from_int(1, -1);
    std::vector<std::string> kind(rc.chars.size());
    std::vector<char> pass(rc.chars.size());
    parallel_for(rc.chars.size(), cfg.workers, [&](std::size_t i) {
      const auto& chi = rc.chars[i];
      const auto& tau = rc.tau[i];
      if (chi.conductor_exp() == pt.n) {
        kind[i] = "full";
        pass[i] = tau * tau.conj() == qn;
      } else if (pt.n >= 2) {
        kind[i] = "deficient";
        pass[i] = tau.is_zero();
      } else {
        // W_1: the only deficient character is trivial and its sum is -1.
        kind[i] = "trivial";
        pass[i] = tau == minus_one;
      }
    });
    std::uint64_t full = 0, deficient = 0, ok = 0;
    for (std::size_t i = 0; i < rc.chars.size(); ++i) {
      (kind[i] == "full" ? full : deficient) += 1;
      ok += pass[i] ? 1 : 0;
      if (cfg.detailed)
        tally(sec,
              Json{{"p", pt.p}, {"k", pt.k}, {"n", pt.n},
                   {"char", parse_descriptor(rc.chars[i].descriptor())},
                   {"conductor", rc.chars[i].conductor_exp()}, {"kind", kind[i]}, {"tau", cyclo_json(rc.tau[i])}},
              pass[i]);
    }
    if (!cfg.detailed)
      tally(sec,
            Json{{"p", pt.p}, {"k", pt.k}, {"n", pt.n}, {"full_conductor", full}, {"deficient", deficient},
                 {"passed", ok}},
            ok == rc.chars.size());
  }
  return sec;
}

// ---------------------------------------------------------------- trace pairing

Section run_trace_pairing(const SuiteConfig&) {
  Section sec{"trace-pairing", "the Gram matrix of (x, y) -> Tr(xy) on W_r(F_q) is invertible mod p^r", {}, {}, 0, 0};
  for (std::uint32_t p = 2; p <= 64; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned k = 1; ipow(p, k) <= 64; ++k) {
      const auto F = ff::FiniteField::make(p, k);
      for (unsigned r = 1; r <= 3; ++r) {
        const WittRing R = WittRing::make(F, r, 1u << 20);
        const zmod::Mat g = R.trace_gram();
        Json rows = Json::array();
        for (const auto& row : g) rows.push_back(row);
        tally(sec, Json{{"p", p}, {"k", k}, {"r", r}, {"gram", std::move(rows)}}, zmod::invertible(g, p));
      }
    }
  }
  return sec;
}

// ---------------------------------------------------------------- quadratic partial sums, p = 2

Section run_sigma2(const SuiteConfig& cfg) {
  Section sec{"sigma2",
              "p = 2: (-sigma_1(-[w]))^s = -sigma_s(-[w]) in Z[zeta_8]; the cited constant is recorded only",
              {}, {}, 0, 0};
  for (unsigned k : {1u, 2u}) {
    const WittRing R = make_ring(2, k, 2, kDefaultEnumerationBound);
    for (Elem kappa = 1; kappa < R.size(); ++kappa) {
      if (!R.is_unit(kappa)) continue;
      const AddChar psi(R, kappa, cfg.convention, KappaEmbedding::Explicit);
      for (gauss::FElem w = 1; w < R.q(); ++w) {
        const auto base = gauss::quadratic_partial_sum(psi, w, 1);
        for (unsigned s = 1; s <= 3; ++s) {
          const auto sig = gauss::quadratic_partial_sum(psi, w, s);
          const auto cited = gauss::cited_partial_sum_constant(k, s);
          tally(sec,
                Json{{"q", R.q()}, {"kappa", R.coeffs(kappa)}, {"w", w}, {"s", s},
                     {"lhs", cyclo_json(-(-base).pow(s))}, {"sigma", cyclo_json(sig)},
                     {"cited_constant", cyclo_json(cited)}, {"cited_matches", cited == sig}},
                (-base).pow(s) == -sig);
        }
      }
    }
  }
  return sec;
}

// ---------------------------------------------------------------- local epsilon factors

Section run_epsilon(const SuiteConfig& cfg) {
  Section sec{"epsilon",
              "(q eta(w))^{-e} sum eta(x) psi(x) equals the normalized integral over the units",
              {}, {}, 0, 0};
  const std::vector<gauss::UniformizerValue> pis{{}, {4, 1, Rational(2, 3)}};
  for (std::uint32_t p : {3u, 5u})
    for (unsigned e : {1u, 2u}) {
      const WittRing R = make_ring(p, 1, e, kDefaultEnumerationBound);
      std::vector<MultChar> etas;
      for (const auto& chi : chars::enumerate_mult_chars(chars::UnitGroup::make(R)))
        if (chi.conductor_exp() == e) etas.push_back(chi);
      std::vector<Elem> units;
      for (Elem u = 0; u < R.size(); ++u)
        if (R.is_unit(u)) units.push_back(u);
      const std::size_t per_eta = units.size() * pis.size();
      std::vector<gauss::EpsilonFactorResult> res(etas.size() * per_eta);
      parallel_for(res.size(), cfg.workers, [&](std::size_t i) {
        res[i] = gauss::local_epsilon(etas[i / per_eta], pis[i % pis.size()], units[(i % per_eta) / pis.size()], e,
                                      cfg.convention);
      });
      std::uint64_t ok = 0;
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < res.size(); ++i) {
        const auto& r = res[i];
        ok += r.routes_agree() ? 1 : 0;
        parts.push_back(r.value.to_string());
        if (cfg.detailed) {
          std::ostringstream mag;
          mag << r.uniformizer.magnitude;
          tally(sec,
                Json{{"q", p}, {"e", e}, {"eta", parse_descriptor(etas[i / per_eta].descriptor())},
                     {"twist", R.coeffs(r.twist)},
                     {"uniformizer", Json{{"root_order", r.uniformizer.root_order},
                                          {"root_exp", r.uniformizer.root_exp},
                                          {"magnitude", mag.str()}}},
                     {"sum_route", scaled_json(r.value)}, {"integral_route", scaled_json(r.via_integral)}},
                r.routes_agree());
        }
      }
      if (!cfg.detailed)
        tally(sec,
              Json{{"q", p}, {"e", e}, {"characters", etas.size()}, {"twists", units.size()},
                   {"uniformizers", pis.size()}, {"checked", res.size()}, {"passed", ok}, {"digest", digest(parts)}},
              ok == res.size());
    }
  return sec;
}

// ---------------------------------------------------------------- Mackey and reciprocity

Section run_mackey(const SuiteConfig& cfg) {
  Section sec{"mackey",
              "Res_D Ind_H psi = sum over HgD of Ind_{H^g cap D} Res psi^g; <Ind psi, chi> = <psi, Res chi>",
              {}, {}, 0, 0};
  std::vector<std::string> mk = mackey_groups(), rc = reciprocity_groups();
  if (!cfg.group.empty()) mk = rc = {cfg.group};
  for (const auto& name : mk) {
    brauer::GroupPtr g;
    try {
      g = brauer::named_group(name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("--group: ") + e.what());
    }
    const auto m = brauer::mackey_sweep(g, cfg.workers);
    tally(sec,
          Json{{"group", name}, {"order", g->order()}, {"check", "mackey"}, {"triples", m.triples},
               {"failures", m.failures}},
          m.pass());
  }
  for (const auto& name : rc) {
    const auto g = brauer::named_group(name);
    const auto r = brauer::reciprocity_sweep(g, cfg.workers);
    tally(sec,
          Json{{"group", name}, {"order", g->order()}, {"check", "reciprocity"}, {"pairs", r.pairs},
               {"failures", r.failures}},
          r.pass());
  }
  return sec;
}

// ---------------------------------------------------------------- Frobenius determinant

Section run_frob_det(const SuiteConfig& cfg) {
  Section sec{"frobenius-det", "det(M^e) = ((-1)^{f-1} psi(Frob^f))^e for the induced Frobenius matrix M", {}, {},
              0, 0};
  struct Point {
    unsigned f, ord;
  };
  std::vector<Point> pts;
  for (unsigned f = 1; f <= 6; ++f)
    for (unsigned ord = 1; ord <= 8; ++ord) pts.push_back({f, ord});
  std::vector<Json> recs(pts.size());
  std::vector<char> pass(pts.size());
  parallel_for(pts.size(), cfg.workers, [&](std::size_t i) {
    const auto [f, ord] = pts[i];
    std::uint64_t ok = 0, total = 0;
    Json values = Json::array();
    for (unsigned e = 1; e <= 4; ++e)
      for (unsigned a = 0; a < ord; ++a) {
        const auto d = brauer::frob_det_induced(f * ord, f, ord, a, e);
        ok += d == brauer::frob_det_formula(f, ord, a, e) ? 1 : 0;
        ++total;
        if (cfg.detailed) values.push_back(Json{{"e", e}, {"a", a}, {"det", cyclo_json(d)}});
      }
    recs[i] = Json{{"f", f}, {"order", ord}, {"checked", total}, {"passed", ok}};
    if (cfg.detailed) recs[i]["values"] = std::move(values);
    pass[i] = ok == total;
  });
  for (std::size_t i = 0; i < pts.size(); ++i) tally(sec, std::move(recs[i]), pass[i]);
  return sec;
}

// ---------------------------------------------------------------- Euler inductivity and signs

Section run_euler(const SuiteConfig& cfg) {
  Section sec{"euler",
              "prod (1 - psi^g(Frob^f) T^f)^{a_j} = det(1 - Frob T | rho); DH sign = Frobenius determinant sign",
              {}, {}, 0, 0};
  struct Job {
    const brauer::VirtualInductionRecord* rec;
    std::uint32_t frob;
    std::vector<unsigned> es;
    std::int64_t seed;
  };
  const auto corpus = brauer::record_corpus();
  std::vector<brauer::RandomCase> randoms;
  for (std::uint64_t i = 0; i < 200; ++i) randoms.push_back(brauer::random_case(cfg.seed * 1000003 + i));
  std::vector<Job> jobs;
  for (const auto& rec : corpus)
    for (std::uint32_t x = 0; x < rec.group->order(); ++x) jobs.push_back({&rec, x, {1, 2, 3, 4}, -1});
  for (std::size_t i = 0; i < randoms.size(); ++i)
    jobs.push_back({&randoms[i].record, randoms[i].frob, {randoms[i].e}, static_cast<std::int64_t>(i)});
  std::vector<Json> recs(jobs.size());
  std::vector<char> pass(jobs.size());
  parallel_for(jobs.size(), cfg.workers, [&](std::size_t i) {
    const Job& j = jobs[i];
    const auto ec = brauer::euler_inductivity_check(*j.rec, j.frob);
    Json signs = Json::array();
    bool ok = ec.pass();
    for (unsigned e : j.es) {
      const auto sl = brauer::sign_ledger(*j.rec, j.frob, e);
      signs.push_back(Json{{"e", e}, {"dh_sign", sl.dh_sign}, {"frob_sign", sl.frob_sign},
                           {"total_identity", sl.total_identity}});
      ok = ok && sl.agree();
    }
    Json r{{"record", j.rec->name}, {"group", j.rec->group->name()}, {"terms", j.rec->terms.size()},
           {"frob", j.frob}};
    if (j.seed >= 0) r["random_index"] = j.seed;
    r["factored_equal"] = ec.factored_equal;
    r["target_equal"] = ec.target_equal;
    r["signs"] = std::move(signs);
    recs[i] = std::move(r);
    pass[i] = ok;
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) tally(sec, std::move(recs[i]), pass[i]);
  return sec;
}

// ---------------------------------------------------------------- interpolation ledgers

Section run_interp(const SuiteConfig& cfg) {
  Section sec{"interp",
              "archimedean, period and constant factors match under Brauer induction; degree-violating controls fail",
              {}, {}, 0, 0};
  const auto sweep = interp::ledger_sweep(cfg.random, cfg.seed, cfg.workers);
  tally(sec,
        Json{{"check", "ledger"}, {"seed", cfg.seed}, {"records", sweep.cases}, {"archimedean", sweep.archimedean},
             {"periods", sweep.periods}, {"constants", sweep.constants}, {"controls", sweep.controls},
             {"controls_rejected", sweep.controls_rejected}},
        sweep.pass());
  const auto corpus = brauer::record_corpus();
  for (const auto& rec : corpus) {
    const auto s = interp::summarize(rec);
    const interp::InfinityType eta{3, {0, 2}};
    const bool ok = s.degree_identity() && interp::archimedean_matching(s, eta).pass() &&
                    interp::constants_matching(s, eta).pass() && interp::period_matching(s, eta).pass();
    std::uint64_t places = 0, places_ok = 0;
    for (std::uint32_t x = 0; x < rec.group->order(); ++x) {
      ++places;
      places_ok += interp::unramified_p_euler_matching(rec, {x, 6, 1}, {x, 4, 3}, 5).pass() ? 1 : 0;
    }
    tally(sec,
          Json{{"check", "record"}, {"record", rec.name}, {"degree_identity", s.degree_identity()},
               {"ledgers", ok}, {"unramified_places", places}, {"unramified_passed", places_ok}},
          ok && places == places_ok);
  }
  return sec;
}

// ---------------------------------------------------------------- report-all

std::vector<std::string> report_all_sections() {
  return {"davenport-hasse", "closed-forms", "trace-pairing", "absolute-value", "sigma2",
          "epsilon",         "mackey",       "frobenius-det", "euler",          "interp"};
}

Section run_section(const std::string& name, const SuiteConfig& cfg) {
  if (name == "davenport-hasse") return run_dh(cfg);
  if (name == "closed-forms") return run_closed_forms(cfg);
  if (name == "trace-pairing") return run_trace_pairing(cfg);
  if (name == "absolute-value") return run_absolute_value(cfg);
  if (name == "sigma2") return run_sigma2(cfg);
  if (name == "epsilon") return run_epsilon(cfg);
  if (name == "mackey") return run_mackey(cfg);
  if (name == "frobenius-det") return run_frob_det(cfg);
  if (name == "euler") return run_euler(cfg);
  if (name == "interp") return run_interp(cfg);
  throw ConfigError("unknown section '" + name + "'");
}

Report run_report_all(const SuiteConfig& cfg) {
  SuiteConfig c = cfg;
  c.detailed = false;
  c.validate();
  Report r{"report-all", c.conventions(), {}};
  for (const auto& name : report_all_sections()) r.sections.push_back(run_section(name, c));
  return r;
}

}  // namespace wittgauss::cli
