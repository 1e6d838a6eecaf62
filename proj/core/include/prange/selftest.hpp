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

#ifndef PRANGE_SELFTEST_HPP
#define PRANGE_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "prange/gf.hpp"

namespace prange {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // failure description or a short summary
  double ms = 0.0;
};

struct SelftestOptions {
  // Fields with q <= max_q participate in the enumeration-heavy suites.
  std::uint32_t max_q = 13;
  const ModulusTable* modulus_overrides = nullptr;
  std::uint64_t seed = 0x5eedcafe;
};

// Runs every module's invariant suite at desk scale and reports one
// result per named check. A check that throws is reported as failed.
std::vector<CheckResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace prange

#endif
