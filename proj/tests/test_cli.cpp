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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "suites.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + WITTGAUSS_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  for (std::size_t got; (got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const Json& only_section(const Json& report) {
  REQUIRE(report["sections"].size() == 1);
  return report["sections"][0];
}

}  // namespace

TEST_CASE("dh report matches the golden file") {
  const Run r = run("dh --p 3 --k 1 --n 2 --s 2");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(std::string(GOLDEN_DIR) + "/dh_p3_k1_n2_s2.json"));
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == wittgauss::cli::kSchemaVersion);
  CHECK(j["tool"] == "wittgauss");
  // q^{n-1}(q - 1) = 6 characters of W_2(F_3).
  CHECK(only_section(j)["totals"]["cases"] == 6);
  CHECK(only_section(j)["totals"]["failed"] == 0);
  for (const auto& c : only_section(j)["cases"]) CHECK(c["lhs"] == c["rhs"]);
}

TEST_CASE("report schema is stable") {
  const Json j = Json::parse(run("mackey --group S3").out);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"tool", "version", "schema", "suite", "conventions", "sections", "totals",
                                         "pass"});
  keys.clear();
  for (const auto& [k, _] : only_section(j).items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"name", "identity", "cases", "totals", "pass"});
  keys.clear();
  for (const auto& [k, _] : j["conventions"].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"additive_sign", "kappa", "bound", "seed"});
  CHECK(only_section(j)["totals"]["cases"] == 2);  // Mackey and reciprocity on S3
}

TEST_CASE("degenerate and CSV dh runs") {
  const Json one = Json::parse(run("dh --p 2 --k 1 --n 1 --s 1").out);
  CHECK(only_section(one)["totals"]["cases"] == 1);
  const auto& c = only_section(one)["cases"][0];
  CHECK(c["lhs"] == c["rhs"]);

  const Run csv = run("dh --p 5 --k 1 --n 2 --s 2 --format csv");
  CHECK(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header, line;
  std::getline(lines, header);
  CHECK(header.rfind("section,p,k,n,s,", 0) == 0);
  CHECK(header.find(",approximate") != std::string::npos);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",true,true") != std::string::npos);  // pass, approximate
  }
  CHECK(rows == 20);  // 5 * 4 characters of W_2(F_5)
}

TEST_CASE("closed forms and the global sign convention") {
  const Json even = Json::parse(run("gauss --p 3 --k 1 --n 2 --closed-form even").out);
  CHECK(even["sections"][0]["name"] == "closed-forms");
  CHECK(even["sections"][0]["totals"]["cases"] == 4);  // full conductor on W_2(F_3)
  CHECK(even["pass"] == true);
  const Run flipped = run("dh --p 2..3 --k 1 --n 1..2 --s 2 --convention global-sign");
  CHECK(flipped.code == 0);
  const Json fj = Json::parse(flipped.out);
  CHECK(fj["conventions"]["additive_sign"] == "global-sign");
  CHECK(fj["pass"] == true);
  CHECK(run("dh --p 3 --k 1 --n 2 --s 2 --kappa least-residue:2").code == 0);
  CHECK(run("dh --p 3 --k 1 --n 2 --s 2 --kappa unit:0x4").code == 0);
}

TEST_CASE("reports are byte-identical across worker counts") {
  for (const std::string args : {"dh --p 2..3 --k 1 --n 2 --s 1..2", "euler", "interp --random 200 --seed 3",
                                 "gauss --p 2 --k 2 --n 3", "epsilon"}) {
    CAPTURE(args);
    const Run a = run(args + " --workers 1"), b = run(args + " --workers 8");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run("interp --random 1000 --seed 7").out == run("interp --random 1000 --seed 7").out);
  CHECK(run("interp --random 50 --seed 7").out != run("interp --random 50 --seed 8").out);
}

TEST_CASE("exit codes for usage and configuration errors") {
  CHECK(run("").code == 2);
  CHECK(run("dh --p 4 --k 1 --n 1 --s 1").code == 2);
  CHECK(run("dh --p 3 --k 0 --n 1 --s 1").code == 2);
  CHECK(run("dh --p 3 --k 1 --n 1 --s 3..1").code == 2);
  CHECK(run("dh --convention sideways").code == 2);
  CHECK(run("dh --p 3 --k 1 --n 1 --s 1 --kappa teichmuller:9").code == 2);
  CHECK(run("dh --p 3 --k 1 --n 1 --s 1 --kappa unit:3").code == 2);  // 3 is not a unit of Z/3
  CHECK(run("dh --p 3 --k 1 --n 1 --s 1 --kappa fourier").code == 2);
  CHECK(run("dh --p 5 --k 2 --n 3 --s 3").code == 2);  // every point over the bound
  CHECK(run("mackey --group X9").code == 2);
  CHECK(run("dh --bogus").code == 2);
  CHECK(run("dh --p 3 --k 1 --n 1 --s 1 --workers 0").code == 2);
  CHECK(run("--version").code == 0);
}

TEST_CASE("WITTGAUSS_BOUND overrides the default bound") {
  CHECK(run("dh --p 3 --k 1 --n 2 --s 3", "WITTGAUSS_BOUND=100").code == 2);
  CHECK(run("dh --p 3 --k 1 --n 2 --s 3 --bound 1000", "WITTGAUSS_BOUND=100").code == 0);
  CHECK(run("dh --p 3 --k 1 --n 2 --s 3", "WITTGAUSS_BOUND=x").code == 2);
  const Json j = Json::parse(run("dh --p 2..3 --k 1 --n 2 --s 1..3", "WITTGAUSS_BOUND=100").out);
  CHECK(j["conventions"]["bound"] == 100);
  CHECK(only_section(j)["skipped"].size() == 1);  // only 3^6 exceeds 100
}

TEST_CASE("report writes to --out") {
  const std::string path = std::string(TEST_TMP_DIR) + "/cli_out.json";
  std::remove(path.c_str());
  const Run r = run("trace --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const Json j = Json::parse(slurp(path));
  CHECK(only_section(j)["totals"]["cases"] == only_section(j)["totals"]["passed"]);
  std::remove(path.c_str());
}

TEST_CASE("range parsing and kappa specs") {
  using namespace wittgauss::cli;
  CHECK(parse_range("2..5", "--p") == std::vector<std::uint32_t>{2, 3, 4, 5});
  CHECK(parse_range("7", "--p") == std::vector<std::uint32_t>{7});
  CHECK_THROWS_AS(parse_range("5..2", "--p"), ConfigError);
  CHECK_THROWS_AS(parse_range("a..b", "--p"), ConfigError);
  CHECK(parse_kappa("unit:0x1f,-2").coeffs == std::vector<std::int64_t>{31, -2});
  CHECK(parse_kappa("teichmuller").field_elem == 1);
  CHECK_THROWS_AS(parse_kappa("least-residue"), ConfigError);
  CHECK_THROWS_AS(parse_kappa("teichmuller:0"), ConfigError);
}
