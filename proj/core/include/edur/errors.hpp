// Copyright 2026 The edur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDUR_ERRORS_HPP_
#define EDUR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace edur {

// Caller supplied something outside an operation's contract (bad dimensions,
// non-Hermitian input, overlapping intervals, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A computation left its numerically trustworthy regime, e.g. a variance
// below -1e-12 or an expectation with a large imaginary residue.
class NumericFailure : public std::runtime_error {
 public:
  explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edur

#endif  // EDUR_ERRORS_HPP_
