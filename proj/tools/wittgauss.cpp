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

// wittgauss: exact verification suites for Gauss sums over Witt vectors,
// Brauer induction and the interpolation ledgers.
//
// Exit codes: 0 every identity holds, 1 some identity failed or a check
// aborted, 2 usage or configuration error.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "suites.hpp"

using namespace wittgauss;
using namespace wittgauss::cli;

namespace {

struct Flags {
  std::string p = "2..5", k = "1..2", n = "1..3", s = "1..3";
  std::optional<std::uint64_t> bound;
  std::string convention = "appendix", kappa = "teichmuller:1", format = "json", out;
  unsigned workers = 1;
  std::uint64_t seed = 7, random = 1000;
  std::string group, closed_form = "all";
  bool timing = false;
};

std::vector<std::uint32_t> primes_in(const std::vector<std::uint32_t>& r) {
  std::vector<std::uint32_t> out;
  for (auto v : r)
    if (is_prime(v)) out.push_back(v);
  return out;
}

SuiteConfig build_config(const Flags& f, bool p_explicit) {
  SuiteConfig c;
  // A range for p keeps its primes; a single value must itself be prime.
  c.p = parse_range(f.p, "--p");
  if (c.p.size() > 1 || !p_explicit) c.p = primes_in(c.p);
  c.k = parse_range(f.k, "--k");
  c.n = parse_range(f.n, "--n");
  c.s = parse_range(f.s, "--s");
  if (const char* env = std::getenv("WITTGAUSS_BOUND")) {
    try {
      c.bound = std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("WITTGAUSS_BOUND: not an integer: '") + env + "'");
    }
  }
  if (f.bound) c.bound = *f.bound;
  c.convention = parse_convention(f.convention);
  c.kappa = parse_kappa(f.kappa);
  c.workers = f.workers;
  c.seed = f.seed;
  c.random = f.random;
  c.group = f.group;
  c.closed_form = f.closed_form;
  c.validate();
  return c;
}

std::complex<double> approx_value(const Json& v) {
  const double m = v.at("m").get<double>();
  std::complex<double> z = 0;
  const auto& c = v.at("c");
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double a = c[j].is_string() ? std::stod(c[j].get<std::string>()) : c[j].get<double>();
    z += std::polar(a, 2 * std::numbers::pi * static_cast<double>(j) / m);
  }
  return z;
}

bool is_cyclo(const Json& v) { return v.is_object() && v.size() == 2 && v.contains("m") && v.contains("c"); }

std::string csv_cell(const Json& v, bool& approx) {
  std::ostringstream os;
  if (is_cyclo(v)) {
    approx = true;
    const auto z = approx_value(v);
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  } else if (v.is_object() && v.contains("scale") && v.contains("value") && is_cyclo(v["value"])) {
    approx = true;
    const std::string sc = v["scale"].get<std::string>();
    const auto slash = sc.find('/');
    const double s = slash == std::string::npos ? std::stod(sc) : std::stod(sc.substr(0, slash)) / std::stod(sc.substr(slash + 1));
    const auto z = s * approx_value(v["value"]);
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
  std::string s = os.str();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

/// One row per case; complex values are approximate projections.
std::string to_csv(const Report& r) {
  std::vector<std::string> cols{"section"};
  for (const auto& sec : r.sections)
    for (const auto& c : sec.cases)
      for (const auto& [key, _] : c.items())
        if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
  cols.push_back("approximate");
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& sec : r.sections)
    for (const auto& c : sec.cases) {
      bool approx = false;
      os << sec.name;
      for (std::size_t i = 1; i + 1 < cols.size(); ++i) {
        os << ",";
        if (c.contains(cols[i])) os << csv_cell(c[cols[i]], approx);
      }
      os << "," << (approx ? "true" : "false") << "\n";
    }
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "wittgauss " << kToolVersion << "  suite " << r.suite << "\n";
  for (const auto& [key, v] : r.conventions.items()) os << "  " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& s : r.sections) {
    os << (s.pass() ? "PASS " : "FAIL ") << s.name << "  " << s.passed << "/" << s.total;
    if (!s.skipped.empty()) os << "  (" << s.skipped.size() << " grid points over the bound skipped)";
    os << "\n    " << s.identity << "\n";
  }
  os << (r.pass() ? "all identities hold\n" : "some identity failed\n");
  return os.str();
}

int emit(const Report& r, const Flags& f) {
  std::string body;
  if (f.format == "json") body = r.to_json().dump(2) + "\n";
  else if (f.format == "csv") body = to_csv(r);
  else body = to_text(r);
  if (f.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw ConfigError("--out: cannot open '" + f.out + "'");
    file << body;
  }
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for Gauss sums over Witt vectors and Brauer induction"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--convention", f.convention, "additive character sign: appendix or global-sign");
    sub->add_option("--workers", f.workers, "worker threads");
    sub->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", f.out, "write the report to PATH");
    sub->add_flag("--timing", f.timing, "print per-section wall time to stderr");
  };
  auto grid = [&](CLI::App* sub, bool with_s) {
    sub->add_option("--p", f.p, "primes, a or a..b");
    sub->add_option("--k", f.k, "residue degrees, a or a..b");
    sub->add_option("--n", f.n, "Witt lengths, a or a..b");
    if (with_s) sub->add_option("--s", f.s, "extension degrees, a or a..b");
    sub->add_option("--bound", f.bound, "enumeration bound (default 65536 or WITTGAUSS_BOUND)");
    sub->add_option("--kappa", f.kappa, "teichmuller[:c], least-residue:c or unit:c0,c1,...");
  };

  struct Sub {
    CLI::App* app;
    std::vector<std::string> sections;
  };
  std::vector<Sub> subs;
  auto* dh = app.add_subcommand("dh", "Davenport-Hasse relation over W_n, one case per character");
  common(dh);
  grid(dh, true);
  subs.push_back({dh, {"davenport-hasse"}});
  auto* gs = app.add_subcommand("gauss", "closed forms against the table Gauss sum, absolute values and vanishing");
  common(gs);
  grid(gs, false);
  gs->add_option("--closed-form", f.closed_form, "even, odd or all")->check(CLI::IsMember({"even", "odd", "all"}));
  subs.push_back({gs, {"closed-forms", "absolute-value"}});
  auto* tr = app.add_subcommand("trace", "perfectness of the trace pairing, p^k <= 64 and r <= 3");
  common(tr);
  subs.push_back({tr, {"trace-pairing"}});
  auto* sg = app.add_subcommand("sigma2", "quadratic partial sums for p = 2");
  common(sg);
  subs.push_back({sg, {"sigma2"}});
  auto* ep = app.add_subcommand("epsilon", "local epsilon factors along both routes");
  common(ep);
  subs.push_back({ep, {"epsilon"}});
  auto* mk = app.add_subcommand("mackey", "Mackey formula and Frobenius reciprocity");
  common(mk);
  mk->add_option("--group", f.group, "S3, S4, A4, D4, Q8, C<n> or D<n>");
  subs.push_back({mk, {"mackey"}});
  auto* eu = app.add_subcommand("euler", "Frobenius determinants, Euler inductivity and the sign ledger");
  common(eu);
  eu->add_option("--seed", f.seed, "seed for the random records");
  subs.push_back({eu, {"frobenius-det", "euler"}});
  auto* in = app.add_subcommand("interp", "interpolation ledgers and unramified Euler factors");
  common(in);
  in->add_option("--random", f.random, "number of random ledger records");
  in->add_option("--seed", f.seed, "seed for the random records");
  subs.push_back({in, {"interp"}});
  auto* ra = app.add_subcommand("report-all", "the full acceptance grid, aggregated per grid point");
  common(ra);
  ra->add_option("--bound", f.bound, "enumeration bound (default 65536 or WITTGAUSS_BOUND)");
  ra->add_option("--kappa", f.kappa, "teichmuller[:c], least-residue:c or unit:c0,c1,...");
  ra->add_option("--seed", f.seed, "seed for the random records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    const bool p_explicit = chosen->get_option_no_throw("--p") && chosen->count("--p") > 0;
    SuiteConfig cfg = build_config(f, p_explicit);
    std::vector<std::string> sections = report_all_sections();
    Report report{chosen->get_name(), cfg.conventions(), {}};
    if (chosen != ra) {
      for (const auto& s : subs)
        if (s.app == chosen) sections = s.sections;
    } else {
      cfg.detailed = false;
    }
    for (const auto& name : sections) {
      const auto t0 = std::chrono::steady_clock::now();
      report.sections.push_back(run_section(name, cfg));
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      if (f.timing) std::fprintf(stderr, "%-16s %9.3f s\n", name.c_str(), dt.count());
      const Section& s = report.sections.back();
      if (chosen != ra && s.total == 0)
        throw ConfigError(name + ": no grid point lies within the enumeration bound");
    }
    return emit(report, f);
  } catch (const ConfigError& e) {
    std::cerr << "wittgauss: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "wittgauss: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "wittgauss: verification aborted: " << e.what() << "\n";
    return 1;
  }
}
