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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sosv/diagnostic.hpp"
#include "sosv/dsl.hpp"
#include "sosv/model.hpp"
#include "sosv/validator.hpp"

namespace sosv {

/// Views composed into one system of systems. System names are unique.
class Workspace {
 public:
  Workspace() = default;
  /// Throws DiagnosticError(E-WS-DUP-SYSTEM) when two views share a system name.
  explicit Workspace(std::vector<ArchitectureView> views);

  const std::vector<ArchitectureView>& views() const { return views_; }

 private:
  std::vector<ArchitectureView> views_;
};

// ---------------------------------------------------------------------------
// Startup order

struct StartupResult {
  std::vector<std::string> order;  // dependencies first; empty on a cycle
  std::vector<std::string> cycle;  // shortest cycle, smallest name first

  bool ok() const { return cycle.empty(); }
};

/// Orders every system and every external named by a startup-required
/// interaction so that each comes after what it needs at startup. Ties are
/// broken by name.
StartupResult startup_order(const Workspace& workspace);

/// E-START-CYCLE naming the cycle. Precondition: !result.ok().
Diagnostic cycle_diagnostic(const StartupResult& result);

// ---------------------------------------------------------------------------
// Resource contention

struct ContentionUser {
  std::string system;
  std::string user;
  UserScope scope = UserScope::constituent;

  auto operator<=>(const ContentionUser&) const = default;
};

std::string to_string(const ContentionUser& user);

struct ContentionConflict {
  std::string resource;
  std::vector<ContentionUser> users;
  std::string reason;

  bool operator==(const ContentionConflict&) const = default;
};

struct ContentionMatrix {
  std::vector<std::string> rows;        // resource names, sorted
  std::vector<ContentionUser> columns;  // sorted
  // cells[resource][user]; absent entries are empty.
  std::map<std::string, std::map<ContentionUser, std::set<UsageMode>>> cells;
  std::vector<ContentionConflict> conflicts;  // by resource

  const std::set<UsageMode>* cell(const std::string& resource, const ContentionUser& user) const;
};

ContentionMatrix resource_contention(const Workspace& workspace);

// ---------------------------------------------------------------------------
// Interface information gaps

enum class MatchVia { exact, normalized, alias };

std::string_view to_string(MatchVia via);

struct FieldMatch {
  std::string required;
  std::string field;
  MatchVia via = MatchVia::exact;

  bool operator==(const FieldMatch&) const = default;
};

struct GapReport {
  std::string element;
  std::vector<std::string> required_fields;  // sorted
  std::vector<FieldMatch> matched;           // by required name
  std::vector<std::string> missing;          // sorted
};

/// Lowercase ASCII alphanumerics only: "CARD-NUMBER" -> "cardnumber".
std::string normalize_field_name(std::string_view name);

/// Looks the element up among constituent elements first, then SoS elements.
/// Throws DiagnosticError(E-GAP-NO-ELEMENT) when neither declares it.
GapReport information_gap(const ArchitectureView& view, const std::string& element,
                          const std::vector<std::string>& required_fields,
                          const std::map<std::string, std::string>& aliases = {});

// ---------------------------------------------------------------------------
// Deployment capacity

/// Throws DiagnosticError(E-ANL-NO-MODEL) when the view has no deployment model.
std::vector<Diagnostic> deployment_capacity(const ArchitectureView& view);

// ---------------------------------------------------------------------------
// Interchange form of reports

Json to_interchange(const StartupResult& result);
Json to_interchange(const ContentionMatrix& matrix);
Json to_interchange(const GapReport& report);
Json to_interchange(const CoverageReport& report);
Json to_interchange(const std::vector<Diagnostic>& diagnostics, std::string_view fallback_file);

}  // namespace sosv
