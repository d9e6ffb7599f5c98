//------------------------------------------------------------------------------
//
//   Copyright 2026 The mechfront Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include <stdexcept>
#include <string>

namespace mechfront {

/// Raised when an enumeration would evaluate more profiles than its budget.
/// Enumerations never truncate silently.
class BudgetExceeded : public std::runtime_error
{
public:
  BudgetExceeded(std::string const &what, double requested, double budget)
    : std::runtime_error(what)
    , requested_(requested)
    , budget_(budget)
  {}

  double requested() const noexcept
  {
    return requested_;
  }
  double budget() const noexcept
  {
    return budget_;
  }

private:
  double requested_;
  double budget_;
};

/// A checked inequality's premise does not hold for the supplied input
/// (distinct from its conclusion failing).
class PremiseViolation : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mechfront
