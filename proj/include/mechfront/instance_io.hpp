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

// Instance files.
//
// JSON:  {"n": 2, "m": 3, "big": 1e6, "t": [[1, 2, "inf"], [0.5, 1, 1]]}
// Text:  first line "n m big", then n rows of m values.
// In both formats "inf" stands for the instance's big value, and entries
// equal to big are written as "inf". Numbers are written in the shortest
// form that reads back to the same double.

#include "mechfront/model.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace mechfront {

nlohmann::json instance_to_json(Instance const &inst);
Instance       instance_from_json(nlohmann::json const &doc);

std::string instance_to_text(Instance const &inst);
Instance    instance_from_text(std::string const &text);

/// Reads either format; a document starting with '{' is JSON.
Instance read_instance(std::istream &in);
Instance read_instance_file(std::string const &path);

/// JSON when the path ends in ".json", text otherwise.
void write_instance_file(std::string const &path, Instance const &inst);

/// Shortest round-trip decimal form of v.
std::string format_exact(double v);

}  // namespace mechfront
