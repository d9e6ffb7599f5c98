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

// Seeded property suites run by `mechfront verify`.

#include "mechfront/mechanisms.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mechfront {

struct SuiteReport
{
  std::string              name;
  bool                     passed{true};
  std::vector<std::string> lines;  ///< one per check, "ok ..." or "FAIL ..."
};

/// monotonicity, anonymity, tech1, combi, buckets.
std::vector<std::string> const &suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string const &name, std::uint64_t seed);

/// Lowest bidder wins; only machine 0 is ever paid (its bid). Fails anonymity.
SingleTaskRule index_biased_rule();

}  // namespace mechfront
