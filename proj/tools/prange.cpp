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

// Command-line front end: bound tables, counterexample search with JSON
// certificates, certificate verification, and the invariant selftest.
//
// Exit codes: 0 success, 1 usage error, 2 enumeration guard exceeded,
// 3 invariant or verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prange/certificate_io.hpp"
#include "prange/errors.hpp"
#include "prange/gf.hpp"
#include "prange/search.hpp"
#include "prange/selftest.hpp"
#include "prange/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::string moduli_path;
  std::string cache_dir;
  unsigned workers = 1;
  std::uint64_t guard_ops = 100'000'000;
  bool no_prune = false;

  prange::ModulusTable overrides;

  prange::EnumOptions enum_opts() const {
    prange::EnumOptions opts;
    opts.prune = !no_prune;
    opts.workers = workers == 0 ? std::thread::hardware_concurrency() : workers;
    opts.guard_ops = guard_ops;
    return opts;
  }

  prange::Field make_field() const {
    return prange::Field(p, n, overrides.empty() ? nullptr : &overrides);
  }

  void load_moduli() {
    if (!moduli_path.empty()) {
      overrides = prange::load_modulus_config(moduli_path);
    }
  }

  std::string resolved_cache_dir() const {
    if (!cache_dir.empty()) return cache_dir;
    if (const char* env = std::getenv("PRANGE_CACHE_DIR")) return env;
    return {};
  }
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_field) {
  if (with_field) {
    cmd->add_option("--p", c.p, "field characteristic (prime)")->required();
    cmd->add_option("--n", c.n, "extension degree, q = p^n")->default_val(1);
    cmd->add_option("--moduli", c.moduli_path,
                    "modulus config file (lines: p n c_0 ... c_n)");
  }
  cmd->add_option("--workers", c.workers,
                  "enumeration worker threads (0 = hardware)")
      ->default_val(1);
  cmd->add_option("--guard-ops", c.guard_ops,
                  "override the enumeration guard")
      ->default_val(100'000'000);
  cmd->add_flag("--no-prune", c.no_prune,
                "disable orbit pruning in enumerations");
  cmd->add_option("--cache-dir", c.cache_dir,
                  "cache directory for range images (or PRANGE_CACHE_DIR)");
}

// ---- range image cache: one file per (p, n, m), keyed by field digest ----

std::string cache_path(const std::string& dir, const prange::Field& fq,
                       std::uint32_t m) {
  std::ostringstream name;
  name << "range_p" << fq.p() << "_n" << fq.n() << "_m" << m << "_" << std::hex
       << fq.digest() << ".json";
  return (fs::path(dir) / name.str()).string();
}

std::optional<prange::RangeFamilyImage> cache_load(const std::string& dir,
                                                   const prange::Field& fq,
                                                   std::uint32_t m) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(cache_path(dir, fq, m));
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("p").get<std::uint32_t>() != fq.p() ||
        j.at("n").get<std::uint32_t>() != fq.n() ||
        j.at("modulus").get<std::vector<std::uint16_t>>() != fq.modulus() ||
        j.at("m").get<std::uint32_t>() != m) {
      return std::nullopt;
    }
    prange::RangeFamilyImage image;
    image.q = fq.q();
    image.m = m;
    image.lambda_count = j.at("lambda_count").get<std::uint64_t>();
    image.support_count = j.at("support_count").get<std::uint64_t>();
    for (const auto& vals : j.at("ranges")) {
      prange::NonzeroMultiset ms;
      for (const auto& v : vals) {
        ms.values.push_back(prange::Elem{v.get<std::uint16_t>()});
      }
      image.ranges.push_back(std::move(ms));
    }
    return image;
  } catch (const json::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void cache_store(const std::string& dir, const prange::Field& fq,
                 const prange::RangeFamilyImage& image) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  json j;
  j["p"] = fq.p();
  j["n"] = fq.n();
  j["modulus"] = fq.modulus();
  j["m"] = image.m;
  j["lambda_count"] = image.lambda_count;
  j["support_count"] = image.support_count;
  json ranges = json::array();
  for (const auto& ms : image.ranges) {
    json vals = json::array();
    for (auto v : ms.values) vals.push_back(v.idx);
    ranges.push_back(std::move(vals));
  }
  j["ranges"] = std::move(ranges);
  std::ofstream out(cache_path(dir, fq, image.m));
  out << j.dump() << "\n";
}

prange::RangeFamilyImage image_with_cache(const CommonOpts& c,
                                          const prange::Field& fq,
                                          std::uint32_t m) {
  const std::string dir = c.resolved_cache_dir();
  if (auto cached = cache_load(dir, fq, m)) return std::move(*cached);
  prange::RangeFamilyImage image =
      prange::enumerate_range_F(m, fq, c.enum_opts());
  cache_store(dir, fq, image);
  return image;
}

// ---- bounds ----

std::string rat_str(const prange::Rat& r) { return r.get_str(); }

int cmd_bounds(const CommonOpts& c, const std::vector<std::uint32_t>& ms,
               bool exact, const std::string& format) {
  prange::Field fq = c.make_field();
  std::vector<json> rows;
  for (std::uint32_t m : ms) {
    prange::BoundsReport rep = prange::bounds_report(
        fq.q(), m, exact, exact ? &fq : nullptr, c.enum_opts());
    if (!rep.hypothesis_ok) {
      std::cerr << "warning: m >= sqrt(p)+1 at (q,m)=(" << rep.q << "," << m
                << "); outside the stated hypothesis, though the orbit count "
                   "stays exact while p does not divide m\n";
    }
    json row;
    row["q"] = rep.q;
    row["m"] = rep.m;
    row["ell"] = rep.ell;
    row["d"] = rep.d;
    row["burnside_N"] = rep.burnside_n.get_str();
    row["lower_bound"] =
        rep.lower_bound ? json(rat_str(*rep.lower_bound)) : json(nullptr);
    row["exact_M"] = rep.exact_m ? json(rep.exact_m->get_str()) : json(nullptr);
    row["exact_rangeF"] =
        rep.exact_range_f ? json(rep.exact_range_f->get_str()) : json(nullptr);
    row["regime"] = rep.theorem_regime;
    row["guaranteed"] = rep.counterexamples_guaranteed;
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    json out = json::array();
    for (auto& r : rows) out.push_back(std::move(r));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "q\tm\tell\td\tburnside_N\tlower_bound\texact_M\t"
                 "exact_rangeF\tregime\tguaranteed\n";
    for (const auto& r : rows) {
      auto cell = [&r](const char* key) -> std::string {
        const auto& v = r.at(key);
        if (v.is_null()) return "-";
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
        return v.dump();
      };
      std::cout << cell("q") << "\t" << cell("m") << "\t" << cell("ell")
                << "\t" << cell("d") << "\t" << cell("burnside_N") << "\t"
                << cell("lower_bound") << "\t" << cell("exact_M") << "\t"
                << cell("exact_rangeF") << "\t" << cell("regime") << "\t"
                << cell("guaranteed") << "\n";
    }
  }
  return 0;
}

// ---- find ----

int cmd_find(const CommonOpts& c, std::uint32_t ell,
             std::optional<std::uint64_t> limit, const std::string& out_dir) {
  prange::Field fq = c.make_field();
  const std::uint32_t q = fq.q();
  if (ell >= q || q - ell < 2 || 2 * (q - ell) >= q) {
    throw std::invalid_argument("need 2 <= m = q - ell < q/2");
  }
  const std::uint32_t m = q - ell;
  prange::RangeFamilyImage image = image_with_cache(c, fq, m);

  std::vector<prange::NonzeroMultiset> counterexamples;
  std::uint64_t admissible = 0;
  prange::enumerate_M(m, fq, [&](const prange::NonzeroMultiset& ms) {
    ++admissible;
    if (!image.contains(ms)) counterexamples.push_back(ms);
  });

  std::uint64_t to_write = counterexamples.size();
  if (limit) to_write = std::min<std::uint64_t>(to_write, *limit);
  if (to_write > 0) {
    fs::create_directories(out_dir);
  }
  for (std::uint64_t i = 0; i < to_write; ++i) {
    prange::Certificate cert = prange::make_certificate(
        ell, counterexamples[i], fq, c.enum_opts(), &image);
    fs::path path = fs::path(out_dir) / ("c" + std::to_string(i) + ".json");
    prange::save_certificate(cert, path.string());
  }

  std::cout << "field: q=" << q << " (p=" << fq.p() << ", n=" << fq.n()
            << "), ell=" << ell << ", m=" << m << "\n";
  std::cout << "admissible multisets: " << admissible << "\n";
  std::cout << "attained by the least-degree family: " << image.size() << "\n";
  if (counterexamples.empty()) {
    std::cout << "0 counterexamples (search completed: every admissible "
                 "multiset is attained)\n";
  } else {
    std::cout << counterexamples.size() << " counterexamples; wrote "
              << to_write << " certificate" << (to_write == 1 ? "" : "s")
              << " to " << out_dir << "\n";
  }
  return 0;
}

// ---- verify ----

int cmd_verify(const CommonOpts& c, const std::string& cert_path) {
  prange::Certificate cert = prange::load_certificate(cert_path);
  prange::VerifyResult v = prange::verify_certificate(cert, c.enum_opts());
  if (v.ok) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << "FAIL: " << v.reason << "\n";
  return 3;
}

// ---- selftest ----

int cmd_selftest(const CommonOpts& c, std::uint32_t max_q,
                 std::uint64_t seed) {
  prange::SelftestOptions opts;
  opts.max_q = max_q;
  opts.seed = seed;
  if (!c.overrides.empty()) opts.modulus_overrides = &c.overrides;
  auto results = prange::run_selftest(opts);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      std::cout << "PASS " << r.name << " (" << static_cast<long>(r.ms)
                << " ms)\n";
    } else {
      ++failed;
      std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
    }
  }
  std::cout << (results.size() - failed) << "/" << results.size()
            << " checks passed\n";
  return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomials with prescribed range over F_q: bound tables, "
               "exhaustive counterexample search, certificates"};
  app.set_version_flag("--version", prange::kToolVersion);
  app.require_subcommand(1);

  CommonOpts bounds_c, find_c, verify_c, selftest_c;

  auto* bounds = app.add_subcommand(
      "bounds", "orbit-count upper bound vs. multiset lower bound");
  std::vector<std::uint32_t> bounds_m;
  std::vector<std::uint32_t> bounds_ell;
  bool bounds_exact = false;
  std::string bounds_format = "tsv";
  add_common(bounds, bounds_c, true);
  auto* opt_m = bounds->add_option("--m", bounds_m, "support size(s) m");
  auto* opt_ell =
      bounds->add_option("--ell", bounds_ell, "degree bound(s), m = q - ell");
  opt_m->excludes(opt_ell);
  bounds->add_flag("--exact", bounds_exact,
                   "add exact enumeration columns (needs guards)");
  bounds->add_option("--format", bounds_format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->default_val("tsv");

  auto* find = app.add_subcommand(
      "find", "exhaustive counterexample search; writes JSON certificates");
  std::uint32_t find_ell = 0;
  std::uint64_t find_limit = 0;
  std::string find_out = "out";
  add_common(find, find_c, true);
  find->add_option("--ell", find_ell, "degree bound; m = q - ell")->required();
  find->add_option("--limit", find_limit,
                   "write at most this many certificates (0 = all)");
  find->add_option("--out", find_out, "output directory")->default_val("out");

  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  std::string verify_cert;
  add_common(verify, verify_c, false);
  verify->add_option("--cert", verify_cert, "certificate file")->required();

  auto* selftest =
      app.add_subcommand("selftest", "run the module invariant suites");
  std::uint32_t selftest_max_q = 13;
  std::uint64_t selftest_seed = 0x5eedcafe;
  selftest->add_option("--max-q", selftest_max_q,
                       "largest field size exercised")
      ->default_val(13);
  selftest->add_option("--seed", selftest_seed, "random seed");
  selftest->add_option("--moduli", selftest_c.moduli_path,
                       "modulus config file to validate and use");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (bounds->parsed()) {
      bounds_c.load_moduli();
      std::vector<std::uint32_t> ms = bounds_m;
      if (!bounds_ell.empty()) {
        prange::Field fq = bounds_c.make_field();
        for (auto ell : bounds_ell) {
          if (ell >= fq.q()) throw std::invalid_argument("ell >= q");
          ms.push_back(fq.q() - ell);
        }
      }
      if (ms.empty()) {
        throw std::invalid_argument("give --m or --ell");
      }
      return cmd_bounds(bounds_c, ms, bounds_exact, bounds_format);
    }
    if (find->parsed()) {
      find_c.load_moduli();
      std::optional<std::uint64_t> limit;
      if (find->count("--limit") && find_limit > 0) limit = find_limit;
      return cmd_find(find_c, find_ell, limit, find_out);
    }
    if (verify->parsed()) {
      verify_c.load_moduli();
      return cmd_verify(verify_c, verify_cert);
    }
    if (selftest->parsed()) {
      selftest_c.load_moduli();
      return cmd_selftest(selftest_c, selftest_max_q, selftest_seed);
    }
  } catch (const prange::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const prange::IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
