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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sosv {

enum class Severity { error, warning, info };

std::string_view to_string(Severity severity);

// 1-based position inside a source file.
struct Position {
  int line = 1;
  int column = 1;

  auto operator<=>(const Position&) const = default;
};

struct SourceSpan {
  std::string file;
  Position start;
  Position end;

  bool operator==(const SourceSpan&) const = default;
};

struct Location {
  std::string file;
  int line = 1;
  int column = 1;

  auto operator<=>(const Location&) const = default;
};

Location location_of(const SourceSpan& span);

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::optional<Location> location;
  std::vector<Location> related;

  bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_error(std::string code, std::string message,
                      std::optional<Location> location = std::nullopt);
Diagnostic make_warning(std::string code, std::string message,
                        std::optional<Location> location = std::nullopt);
Diagnostic make_info(std::string code, std::string message,
                     std::optional<Location> location = std::nullopt);

bool has_errors(std::span<const Diagnostic> diagnostics);

// Orders by location (unlocated first), then code, then message.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

// `file:line:col: severity[CODE] message`; `file: ...` when unlocated.
std::string format_diagnostic(const Diagnostic& diagnostic,
                              std::string_view fallback_file = {});

/// Thrown when an operation's precondition is violated. Findings about a
/// model are never thrown; they are returned as Diagnostic lists.
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostic diagnostic);

  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }
  const std::string& code() const noexcept { return diagnostic_.code; }

 private:
  Diagnostic diagnostic_;
};

struct CodeInfo {
  std::string_view code;
  Severity severity;
  std::string_view summary;
};

// Every code the library can emit. Kept in sync with docs/diagnostics.md.
std::span<const CodeInfo> code_registry();
const CodeInfo* find_code(std::string_view code);

}  // namespace sosv
