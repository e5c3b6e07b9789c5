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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sosv/dsl.hpp"
#include "sosv/enums.hpp"

namespace sosv {

enum class Framework { views_and_beyond, dodaf };

template <>
struct EnumNames<Framework> {
  static constexpr std::array names = std::to_array<std::string_view>({"views-and-beyond", "dodaf"});
};

/// Accepts the enum spelling and the short form "vab".
std::optional<Framework> parse_framework(std::string_view text);

struct SourceEntry {
  std::string_view id;
  std::string_view title;
  std::string_view caveat;  // non-empty marks a source that is unreliable on its own
};

struct KindMapping {
  ModelKind kind;
  std::vector<SourceEntry> sources;
  std::string_view comment;  // framework remark for the whole kind, may be empty
  bool hedged = false;       // the remark doubts the sources are sufficient
};

/// One entry per model kind, in ModelKind order.
const std::vector<KindMapping>& source_registry(Framework framework);
const SourceEntry* find_source(Framework framework, std::string_view id);

struct SourceInventory {
  Framework framework = Framework::views_and_beyond;
  std::set<std::string> available;

  /// {"framework": "dodaf", "available": ["AV-1", ...]}. Throws
  /// DiagnosticError(E-IX-SCHEMA) on a malformed document.
  static SourceInventory from_json(const Json& tree);
};

enum class TraceStatus { sourced, partial, unsourced };

template <>
struct EnumNames<TraceStatus> {
  static constexpr std::array names =
      std::to_array<std::string_view>({"sourced", "partial", "unsourced"});
};

struct KindTrace {
  ModelKind kind;
  std::set<std::string> sources_used;
  TraceStatus status = TraceStatus::unsourced;
  std::optional<std::string> caveat;
};

struct TraceabilityReport {
  std::vector<KindTrace> kinds;  // all six, in ModelKind order

  const KindTrace& at(ModelKind kind) const;
};

TraceabilityReport trace(const SourceInventory& inventory);

struct Scaffold {
  std::string skeleton;  // .sosv text
  TraceabilityReport report;
};

/// Skeleton view with an empty section for every kind that has at least one
/// available source. Throws DiagnosticError: E-MAP-UNKNOWN-SOURCE for an id
/// outside the framework registry, E-VIEW-NAME for a blank system name.
Scaffold scaffold(const SourceInventory& inventory, const std::string& system_name);

struct SourceGap {
  ModelKind kind;
  std::set<std::string> missing;
  std::optional<std::string> caveat;
};

/// Kinds with registry sources absent from the inventory, in ModelKind order.
std::vector<SourceGap> source_gaps(const SourceInventory& inventory);

Json to_interchange(const TraceabilityReport& report);
Json to_interchange(const std::vector<SourceGap>& gaps);

}  // namespace sosv
