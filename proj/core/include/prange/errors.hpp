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

#ifndef PRANGE_ERRORS_HPP
#define PRANGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prange {

// Raised when a requested computation exceeds its enumeration guard.
// Callers (notably the CLI) treat this differently from bad input:
// the request was well-formed, just too large.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact identity that must hold fails to hold, e.g. a
// Burnside count coming out non-integral because the formula's
// hypothesis is violated.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace prange

#endif
