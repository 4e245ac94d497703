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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Wall times are printed for reference; they are not part of any report.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "suites.hpp"

using namespace wittgauss;
using namespace wittgauss::cli;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::string section;
  /// Coverage requirements beyond every case passing.
  std::function<bool(const Section&, std::string&)> coverage;
};

std::uint64_t count_if_key(const Section& s, const std::string& key) {
  std::uint64_t n = 0;
  for (const auto& c : s.cases) n += c.contains(key) ? 1 : 0;
  return n;
}

bool dh_coverage(const Section& s, std::string& note) {
  // Every grid point with q^{ns} <= 2^16 is checked, every other one skipped.
  std::uint64_t expected = 0, over = 0;
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned k : {1, 2})
      for (unsigned n : {1, 2, 3})
        for (unsigned s_ : {1, 2, 3}) {
          std::uint64_t size = 1;
          for (unsigned i = 0; i < k * n * s_; ++i) size *= p;
          (size <= (1u << 16) ? expected : over) += 1;
        }
  std::uint64_t characters = 0;
  for (const auto& c : s.cases) characters += c["characters"].get<std::uint64_t>();
  note = std::to_string(s.total) + " grid points, " + std::to_string(characters) + " characters";
  return s.total == expected && s.skipped.size() == over;
}

bool ring_coverage(const Section& s, std::string& note) {
  std::uint64_t checked = 0;
  for (const auto& c : s.cases)
    checked += c.contains("checked") ? c["checked"].get<std::uint64_t>()
                                      : c["full_conductor"].get<std::uint64_t>() + c["deficient"].get<std::uint64_t>();
  note = std::to_string(s.total) + " rings, " + std::to_string(checked) + " characters";
  return s.total == 18 && s.skipped.empty();  // {2,3,5} x {1,2} x {1,2,3}
}

bool count_note(const Section& s, std::string& note, std::uint64_t expected, const char* what) {
  note = std::to_string(s.total) + " " + what;
  return s.total == expected;
}

bool mackey_coverage(const Section& s, std::string& note) {
  std::uint64_t triples = 0, pairs = 0;
  for (const auto& c : s.cases) {
    if (c.contains("triples")) triples += c["triples"].get<std::uint64_t>();
    if (c.contains("pairs")) pairs += c["pairs"].get<std::uint64_t>();
  }
  note = std::to_string(triples) + " Mackey triples, " + std::to_string(pairs) + " reciprocity pairs";
  return count_if_key(s, "triples") == 4 && triples > 0 && pairs > 0;
}

bool euler_coverage(const Section& s, std::string& note) {
  const std::uint64_t random = count_if_key(s, "random_index");
  note = std::to_string(s.total - random) + " corpus places, " + std::to_string(random) + " random records";
  return random == 200 && s.total > random;
}

bool interp_coverage(const Section& s, std::string& note) {
  const Json& ledger = s.cases.at(0);
  note = std::to_string(ledger["records"].get<std::uint64_t>()) + " records, " +
         std::to_string(ledger["controls_rejected"].get<std::uint64_t>()) + "/" +
         std::to_string(ledger["controls"].get<std::uint64_t>()) + " controls rejected";
  return ledger["records"] == 1000 && ledger["controls"].get<std::uint64_t>() > 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Davenport-Hasse over W_n on the full grid", "davenport-hasse", dh_coverage},
      {2, "closed forms against the Gauss-sum oracle, n <= 3", "closed-forms", ring_coverage},
      {3, "trace pairing perfect for p^k <= 64, r <= 3", "trace-pairing",
       [](const Section& s, std::string& n) { return count_note(s, n, 81, "Galois rings"); }},
      {4, "absolute value and vanishing of Gauss sums", "absolute-value", ring_coverage},
      {5, "sigma^(2) power relation for q in {2, 4}, s <= 3", "sigma2",
       [](const Section& s, std::string& n) { return count_note(s, n, 114, "twists"); }},
      {6, "local epsilon routes agree for q in {3, 5}, e in {1, 2}", "epsilon",
       [](const Section& s, std::string& n) { return count_note(s, n, 4, "(q, e) points"); }},
      {7, "Mackey on S3, D4, Q8, A4 and reciprocity for |G| <= 24", "mackey", mackey_coverage},
      {8, "Frobenius determinant for f <= 6, e <= 4, order <= 8", "frobenius-det",
       [](const Section& s, std::string& n) { return count_note(s, n, 48, "(f, order) points"); }},
      {9, "Euler inductivity and sign ledger", "euler", euler_coverage},
      {10, "interpolation ledgers with negative controls", "interp", interp_coverage},
  };

  SuiteConfig cfg;
  cfg.detailed = false;
  cfg.workers = 1;
  Report first{"report-all", cfg.conventions(), {}};
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      first.sections.push_back(run_section(c.section, cfg));
      const Section& s = first.sections.back();
      const bool covered = c.coverage(s, note);
      ok = s.pass() && covered;
      note += "; " + std::to_string(s.passed) + "/" + std::to_string(s.total) + " passed";
      if (!covered) note += "; coverage short";
    } catch (const std::exception& e) {
      note = std::string("aborted: ") + e.what();
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::printf("%s %2d %s (%s; %.1f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), note.c_str(), dt.count());
    std::fflush(stdout);
    all = all && ok;
  }

  // Determinism: the same suite with 8 workers serializes identically.
  const auto t0 = std::chrono::steady_clock::now();
  bool same = false;
  std::string note;
  try {
    SuiteConfig wide = cfg;
    wide.workers = 8;
    const std::string a = first.to_json().dump(2), b = run_report_all(wide).to_json().dump(2);
    same = a == b;
    note = std::to_string(a.size()) + " bytes";
  } catch (const std::exception& e) {
    note = std::string("aborted: ") + e.what();
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  std::printf("%s 11 report-all byte-identical for workers 1 and 8 (%s; %.1f s)\n", same ? "PASS" : "FAIL",
              note.c_str(), dt.count());
  all = all && same;
  return all ? 0 : 1;
}
