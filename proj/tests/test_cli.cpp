/*
   Copyright 2026 The prange authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PRANGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) {
    r.output.append(buf, n);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("prange_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// elapsed_ms varies run to run; tool_version is pinned but masked the
// same way for symmetry with the output contract
nlohmann::json normalized(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j["elapsed_ms"] = 0;
  j["tool_version"] = "";
  return j;
}

}  // namespace

TEST_CASE("bounds row reproduces the q=13 anchors") {
  auto r = run_cli("bounds --p 13 --m 4 --exact");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("13\t4\t9\t3\t63\t121/2\t105\t51\t1\t1") !=
        std::string::npos);
}

TEST_CASE("bounds accepts --ell and emits json") {
  auto r = run_cli("bounds --p 17 --ell 12 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.is_array());
  CHECK(j[0]["burnside_N"] == "400");
  CHECK(j[0]["lower_bound"] == "436");
  CHECK(j[0]["regime"] == true);
  CHECK(j[0]["guaranteed"] == true);
}

TEST_CASE("bounds usage errors exit 1") {
  CHECK(run_cli("bounds --p 4 --m 3").exit_code == 1);
  CHECK(run_cli("bounds --p 13").exit_code == 1);           // no m / ell
  CHECK(run_cli("bounds --p 13 --m 3 --ell 9").exit_code == 1);
  CHECK(run_cli("bounds --m 3").exit_code == 1);            // missing p
  CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("bounds warns outside the orbit-count hypothesis") {
  auto r = run_cli("bounds --p 13 --m 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("warning") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  auto a = run_cli("bounds --p 13 --m 4 --exact");
  auto b = run_cli("bounds --p 13 --m 4 --exact");
  CHECK(a.output == b.output);
  auto c = run_cli("bounds --p 19 --m 6 --format json");
  auto d = run_cli("bounds --p 19 --m 6 --format json");
  CHECK(c.output == d.output);
}

TEST_CASE("find writes verifiable certificates") {
  fs::path dir = fresh_dir("find13");
  auto r = run_cli("find --p 13 --ell 9 --limit 3 --out " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("admissible multisets: 105") != std::string::npos);
  CHECK(r.output.find("attained by the least-degree family: 51") !=
        std::string::npos);
  CHECK(r.output.find("54 counterexamples") != std::string::npos);
  for (int i = 0; i < 3; ++i) {
    fs::path cert = dir / ("c" + std::to_string(i) + ".json");
    REQUIRE(fs::exists(cert));
    auto v = run_cli("verify --cert " + cert.string());
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("OK") != std::string::npos);
    auto vo = run_cli("verify --cert " + cert.string() + " --no-prune");
    CHECK(vo.exit_code == 0);
  }
  CHECK(!fs::exists(dir / "c3.json"));
}

TEST_CASE("find reports an empty search distinctly") {
  fs::path dir = fresh_dir("find7");
  auto r = run_cli("find --p 7 --ell 4 --out " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 counterexamples") != std::string::npos);
  CHECK(r.output.find("every admissible multiset is attained") !=
        std::string::npos);
}

TEST_CASE("verify rejects a tampered certificate with exit 3") {
  fs::path dir = fresh_dir("tamper");
  REQUIRE(run_cli("find --p 11 --ell 7 --limit 1 --out " + dir.string())
              .exit_code == 0);
  fs::path cert = dir / "c0.json";
  auto j = nlohmann::json::parse(slurp(cert));
  j["verdict"] = "achieved";
  std::ofstream(cert) << j.dump();
  auto r = run_cli("verify --cert " + cert.string());
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("verify on a missing file exits 1") {
  CHECK(run_cli("verify --cert /nonexistent/cert.json").exit_code == 1);
}

TEST_CASE("guard overruns exit 2") {
  auto r = run_cli("find --p 31 --ell 22 --no-prune --guard-ops 1000");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("guard") != std::string::npos);
}

TEST_CASE("cache hit and miss produce identical content") {
  fs::path cache = fresh_dir("cache");
  fs::path out1 = fresh_dir("cache_out1");
  fs::path out2 = fresh_dir("cache_out2");
  std::string base = "find --p 13 --ell 9 --limit 2 --cache-dir " +
                     cache.string() + " --out ";
  auto r1 = run_cli(base + out1.string());
  REQUIRE(r1.exit_code == 0);
  bool had_cache_file = !fs::is_empty(cache);
  CHECK(had_cache_file);
  auto r2 = run_cli(base + out2.string());
  REQUIRE(r2.exit_code == 0);
  CHECK(r1.output.substr(0, r1.output.rfind(" to ")) ==
        r2.output.substr(0, r2.output.rfind(" to ")));
  for (int i = 0; i < 2; ++i) {
    std::string name = "c" + std::to_string(i) + ".json";
    CHECK(normalized(slurp(out1 / name)) == normalized(slurp(out2 / name)));
  }
}

TEST_CASE("worker count does not change results") {
  fs::path out1 = fresh_dir("w1");
  fs::path out2 = fresh_dir("w4");
  auto r1 = run_cli("find --p 13 --ell 9 --limit 2 --workers 1 --out " +
                    out1.string());
  auto r2 = run_cli("find --p 13 --ell 9 --limit 2 --workers 4 --out " +
                    out2.string());
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  // summaries match up to the output paths on the final line
  CHECK(r1.output.substr(0, r1.output.rfind(" to ")) ==
        r2.output.substr(0, r2.output.rfind(" to ")));
  CHECK(normalized(slurp(out1 / "c0.json")) ==
        normalized(slurp(out2 / "c0.json")));
  CHECK(normalized(slurp(out1 / "c1.json")) ==
        normalized(slurp(out2 / "c1.json")));
}

TEST_CASE("selftest passes at small scale") {
  auto r = run_cli("selftest --max-q 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("checks passed") != std::string::npos);
}

TEST_CASE("selftest fails on a corrupted modulus config") {
  fs::path dir = fresh_dir("moduli");
  fs::path cfg = dir / "bad.cfg";
  // x^2 + 2 over F_3 has a root at 1: reducible
  std::ofstream(cfg) << "3 2 2 0 1\n";
  auto r = run_cli("selftest --max-q 7 --moduli " + cfg.string());
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("FAIL gf.modulus_table") != std::string::npos);
}

TEST_CASE("custom modulus override is honored") {
  fs::path dir = fresh_dir("moduli_ok");
  fs::path cfg = dir / "ok.cfg";
  // x^2 + x + 2 over F_3 (no roots: 2, 1, 2)
  std::ofstream(cfg) << "3 2 2 1 1\n";
  auto r = run_cli("bounds --p 3 --n 2 --m 4 --exact --moduli " + cfg.string());
  CHECK(r.exit_code == 0);
}

TEST_CASE("version flag") {
  auto r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.1.0") != std::string::npos);
}
