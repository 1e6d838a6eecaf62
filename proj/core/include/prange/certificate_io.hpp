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

#ifndef PRANGE_CERTIFICATE_IO_HPP
#define PRANGE_CERTIFICATE_IO_HPP

#include <string>

#include "prange/search.hpp"

namespace prange {

// Stable JSON encoding of a certificate:
//   field{p,n,modulus[]}, ell, m, multiset[[elem,count]...],
//   search_space{lambda_count,support_count}, distinct_ranges_found,
//   verdict ("counterexample"|"achieved"), witness{lambda,support[]}|null,
//   tool_version, elapsed_ms
std::string certificate_to_json(const Certificate& cert);
// Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(const std::string& text);

void save_certificate(const Certificate& cert, const std::string& path);
Certificate load_certificate(const std::string& path);

}  // namespace prange

#endif
