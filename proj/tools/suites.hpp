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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wittgauss/chars.hpp"
#include "wittgauss/common.hpp"
#include "wittgauss/cyclo.hpp"

/// Verification suites behind the wittgauss command line. Every runner is a
/// pure function of its config: case order is fixed, parallel results are
/// merged by index and no timing enters a report.
namespace wittgauss::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Raised for invalid flags or grids; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive integer range parsed from "a" or "a..b".
std::vector<std::uint32_t> parse_range(const std::string& text, const std::string& flag);

/// How the additive character twist kappa is chosen.
struct KappaSpec {
  chars::KappaEmbedding embedding = chars::KappaEmbedding::Teichmuller;
  std::uint32_t field_elem = 1;
  /// Coefficients of an explicit unit of W_n; set iff embedding is Explicit.
  std::vector<std::int64_t> coeffs;
  std::string to_string() const;
};
/// "teichmuller[:c]", "least-residue:c", "unit:c0,c1,..." (hex with 0x allowed).
KappaSpec parse_kappa(const std::string& text);
chars::Convention parse_convention(const std::string& text);

struct SuiteConfig {
  std::vector<std::uint32_t> p{2, 3, 5}, k{1, 2}, n{1, 2, 3}, s{1, 2, 3};
  std::uint64_t bound = kDefaultEnumerationBound;
  chars::Convention convention = chars::Convention::Appendix;
  KappaSpec kappa;
  unsigned workers = 1;
  std::uint64_t seed = 7;
  std::uint64_t random = 1000;
  std::string group;
  /// "even", "odd" or "all".
  std::string closed_form = "all";
  /// Per-case records instead of per-grid-point aggregates.
  bool detailed = true;

  /// Throws ConfigError on non-prime p, zero exponents or zero workers.
  void validate() const;
  Json conventions() const;
};

struct Section {
  std::string name;
  /// Plain description of the identity checked.
  std::string identity;
  Json cases = Json::array();
  /// Grid points outside the enumeration bound.
  Json skipped = Json::array();
  std::uint64_t total = 0, passed = 0;
  bool pass() const { return total == passed; }
  Json to_json() const;
};

struct Report {
  std::string suite;
  Json conventions;
  std::vector<Section> sections;
  bool pass() const;
  Json to_json() const;
};

Json cyclo_json(const cyclo::CyclotomicInt& x);

Section run_dh(const SuiteConfig& cfg);
/// Closed forms against the table Gauss sum for n <= 3.
Section run_closed_forms(const SuiteConfig& cfg);
/// |tau|^2 = q^n at full conductor, tau = 0 below it.
Section run_absolute_value(const SuiteConfig& cfg);
/// Gram matrix of (x, y) -> Tr(xy) invertible mod p^r, p^k <= 64, r <= 3.
Section run_trace_pairing(const SuiteConfig& cfg);
/// (-sigma_1)^s = -sigma_s for p = 2, q in {2, 4}, s <= 3.
Section run_sigma2(const SuiteConfig& cfg);
/// Both epsilon-factor routes for q in {3, 5}, e in {1, 2}.
Section run_epsilon(const SuiteConfig& cfg);
/// Mackey and Frobenius reciprocity; cfg.group empty means the default set.
Section run_mackey(const SuiteConfig& cfg);
/// det((Frob matrix)^e) = ((-1)^{f-1} psi(Frob^f))^e for f <= 6, e <= 4, ord <= 8.
Section run_frob_det(const SuiteConfig& cfg);
/// Euler inductivity and sign ledger on the corpus and 200 random records.
Section run_euler(const SuiteConfig& cfg);
/// Ledger sweep of cfg.random records from cfg.seed plus unramified Euler factors.
Section run_interp(const SuiteConfig& cfg);

/// Sections in acceptance order; the report-all suite.
std::vector<std::string> report_all_sections();
Section run_section(const std::string& name, const SuiteConfig& cfg);
Report run_report_all(const SuiteConfig& cfg);

/// 64-bit FNV-1a digest, hex encoded.
std::string digest(const std::vector<std::string>& parts);

}  // namespace wittgauss::cli
