// Copyright 2026 The sosv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sosv/diagnostic.hpp"
#include "sosv/model.hpp"

namespace sosv {

using Json = nlohmann::ordered_json;

struct ParseOutcome {
  std::optional<ArchitectureView> view;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return view.has_value(); }
};

/// Parses `.sosv` text. Diagnostics are sorted by location then code.
ParseOutcome parse(std::string_view source, std::string_view origin);

/// Canonical `.sosv` text: fixed section order, declarations sorted, LF
/// endings, two-space indentation.
std::string serialize(const ArchitectureView& view);

// Quoted string literal with the escapes the lexer understands.
std::string quote(std::string_view text);

// Shortest text that parses back to exactly `value`.
std::string format_number(double value);

/// Structured interchange tree (top-level `system`, `models`). Spans are not
/// carried.
Json to_interchange(const ArchitectureView& view);
ParseOutcome from_interchange(const Json& tree, std::string_view origin = "<interchange>");

/// Two-space indented JSON with a trailing newline.
std::string dump_interchange(const Json& tree);

}  // namespace sosv
