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

#include "sosv/catalog.hpp"
#include "sosv/diagnostic.hpp"
#include "sosv/model.hpp"

namespace sosv {

/// Checks every metamodel constraint. The result is empty iff the view
/// satisfies them all; the view is never modified.
std::vector<Diagnostic> validate(const ArchitectureView& view);

// ---------------------------------------------------------------------------
// Concern coverage

enum class CoverageStatus { covered, partial, uncovered };

std::string_view to_string(CoverageStatus status);

struct CoverageEntry {
  std::string concern_id;
  CoverageStatus status = CoverageStatus::uncovered;
  std::set<ModelKind> present_kinds;
  std::set<ModelKind> missing_kinds;
  Quality quality = Quality::context;
  std::set<StakeholderRole> impacted_stakeholders;

  bool operator==(const CoverageEntry&) const = default;
};

struct CoverageReport {
  std::vector<CoverageEntry> entries;  // catalog order

  const CoverageEntry* find(std::string_view concern_id) const;
};

/// One entry per catalog concern (or per id in `filter`), in catalog order.
/// A mapped model counts as present only when it is non-empty. Throws
/// DiagnosticError(E-COV-UNKNOWN-ID) for a filter id outside the catalog.
CoverageReport concern_coverage(const ArchitectureView& view,
                                const std::optional<std::set<std::string>>& filter = std::nullopt);

/// Info-level findings for "adding assumptions" content a present model
/// leaves undocumented. Coverage counts presence only; these are reported
/// separately.
std::vector<Diagnostic> assumption_gaps(const ArchitectureView& view);

// ---------------------------------------------------------------------------
// Cross-model lints (opt-in; warnings only)

inline constexpr std::string_view kLintUndeployedUser = "W-XM-SR-UNDEPLOYED";
inline constexpr std::string_view kLintStartupUndocumented = "W-XM-STARTUP-UNDOC";
inline constexpr std::string_view kLintMultipleWriters = "W-XM-MULTIWRITER";

std::vector<std::string_view> lint_codes();

class LintConfig {
 public:
  LintConfig() = default;

  /// Throws DiagnosticError(E-LINT-UNKNOWN) for codes outside lint_codes().
  static LintConfig with(const std::vector<std::string>& codes);
  static LintConfig all();

  bool enabled(std::string_view code) const { return enabled_.count(std::string(code)) > 0; }
  bool empty() const { return enabled_.empty(); }
  const std::set<std::string>& codes() const { return enabled_; }

 private:
  std::set<std::string> enabled_;
};

std::vector<Diagnostic> correspondence_lints(const ArchitectureView& view,
                                             const LintConfig& config);

}  // namespace sosv
