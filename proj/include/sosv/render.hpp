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

#include <set>
#include <string>
#include <vector>

#include "sosv/analysis.hpp"
#include "sosv/enums.hpp"
#include "sosv/model.hpp"
#include "sosv/validator.hpp"

namespace sosv {

enum class Notation { list, table, matrix };
enum class ReviewStyle { questionnaire, checklist, subjective, active };

template <>
struct EnumNames<Notation> {
  static constexpr std::array names = std::to_array<std::string_view>({"list", "table", "matrix"});
};

template <>
struct EnumNames<ReviewStyle> {
  static constexpr std::array names =
      std::to_array<std::string_view>({"questionnaire", "checklist", "subjective", "active"});
};

/// Labeled grid; cells[r][c] for rows[r] x columns[c].
struct Matrix {
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> cells;

  /// Empty string when either label is unknown.
  const std::string& at(const std::string& row, const std::string& column) const;
};

/// Pipe table with `corner` as the header of the label column.
std::string matrix_markdown(const Matrix& matrix, std::string_view corner);

/// Legal notations: table for every kind, list for stakeholders,
/// execution-context and code-context, matrix for stakeholders and
/// execution-context.
bool notation_allowed(ModelKind kind, Notation notation);

/// Throws DiagnosticError: E-RND-NOTATION for an illegal pair, E-RND-ABSENT
/// when the model is missing or has no primary elements.
std::string render_markdown(const ArchitectureView& view, ModelKind kind, Notation notation);

/// Rows are constituent interfaces and columns are external systems, written
/// "External: interface" when the interaction names an external interface.
/// Cells hold "S", "R", "SR" or "". Throws E-RND-ABSENT without an
/// execution-context model.
Matrix render_sr_matrix(const ArchitectureView& view);

/// Stakeholder x concern matrix, "x" where the stakeholder has the concern.
Matrix stakeholder_matrix(const ArchitectureView& view);

/// Graphviz digraph for execution-context, code-context, deployment or
/// shared-resources. Throws E-RND-NOTATION for other kinds and E-RND-ABSENT
/// when the model is missing.
std::string render_dot(const ArchitectureView& view, ModelKind kind);

std::string render_review_instrument(const ArchitectureView& view,
                                     const std::set<ReviewStyle>& styles);

// Text forms of analysis reports.
std::string render_coverage(const CoverageReport& report);
std::string render_startup(const StartupResult& result);
std::string render_contention(const ContentionMatrix& matrix);
std::string render_gap(const GapReport& report);

}  // namespace sosv
