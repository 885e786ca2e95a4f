// Copyright 2026 The erwmoments Authors
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

#ifndef ERW_ERRORS_H_
#define ERW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace erw {

// Parameters outside the mathematical domain of an operation (alpha outside
// (-1, 1), a gamma pole, a regime the formula does not cover).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The caller broke a documented precondition (missing orders, wrong regime
// for a specialised engine, zero factor in a recursion solver).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

// A configured size or memory cap would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace erw

#endif  // ERW_ERRORS_H_
