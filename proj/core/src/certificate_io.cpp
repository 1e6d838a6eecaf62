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

#include "prange/certificate_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace prange {

namespace {
using json = nlohmann::ordered_json;
}

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["field"] = {{"p", cert.p}, {"n", cert.n}, {"modulus", cert.modulus}};
  j["ell"] = cert.ell;
  j["m"] = cert.m;
  json mset = json::array();
  for (auto [elem, count] : cert.multiset.entries()) {
    mset.push_back({elem, count});
  }
  j["multiset"] = std::move(mset);
  j["search_space"] = {{"lambda_count", cert.lambda_count},
                       {"support_count", cert.support_count}};
  j["distinct_ranges_found"] = cert.distinct_ranges_found;
  j["verdict"] = cert.verdict == Certificate::Verdict::Counterexample
                     ? "counterexample"
                     : "achieved";
  if (cert.witness) {
    json support = json::array();
    for (Elem s : cert.witness->support.elems) support.push_back(s.idx);
    j["witness"] = {{"lambda", cert.witness->lambda.idx},
                    {"support", std::move(support)}};
  } else {
    j["witness"] = nullptr;
  }
  j["tool_version"] = cert.tool_version;
  j["elapsed_ms"] = cert.elapsed_ms;
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") +
                                e.what());
  }
  try {
    Certificate cert;
    const auto& field = j.at("field");
    cert.p = field.at("p").get<std::uint32_t>();
    cert.n = field.at("n").get<std::uint32_t>();
    cert.modulus = field.at("modulus").get<std::vector<std::uint16_t>>();
    cert.ell = j.at("ell").get<std::uint32_t>();
    cert.m = j.at("m").get<std::uint32_t>();
    for (const auto& entry : j.at("multiset")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("multiset entries must be [elem, count]");
      }
      auto elem = entry[0].get<std::uint16_t>();
      auto count = entry[1].get<std::uint16_t>();
      for (std::uint16_t k = 0; k < count; ++k) {
        cert.multiset.values.push_back(Elem{elem});
      }
    }
    const auto& space = j.at("search_space");
    cert.lambda_count = space.at("lambda_count").get<std::uint64_t>();
    cert.support_count = space.at("support_count").get<std::uint64_t>();
    cert.distinct_ranges_found =
        j.at("distinct_ranges_found").get<std::uint64_t>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "counterexample") {
      cert.verdict = Certificate::Verdict::Counterexample;
    } else if (verdict == "achieved") {
      cert.verdict = Certificate::Verdict::Achieved;
    } else {
      throw std::invalid_argument("unknown verdict: " + verdict);
    }
    if (!j.at("witness").is_null()) {
      const auto& w = j.at("witness");
      PointedSupport ps;
      ps.lambda = Elem{w.at("lambda").get<std::uint16_t>()};
      for (const auto& s : w.at("support")) {
        ps.support.elems.push_back(Elem{s.get<std::uint16_t>()});
      }
      cert.witness = std::move(ps);
    }
    cert.tool_version = j.at("tool_version").get<std::string>();
    cert.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return cert;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") +
                                e.what());
  }
}

void save_certificate(const Certificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << certificate_to_json(cert);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return certificate_from_json(text);
}

}  // namespace prange
