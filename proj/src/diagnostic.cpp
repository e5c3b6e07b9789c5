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

#include "sosv/diagnostic.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace sosv {

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::error:
      return "error";
    case Severity::warning:
      return "warning";
    case Severity::info:
      return "info";
  }
  return "error";
}

Location location_of(const SourceSpan& span) {
  return Location{span.file, span.start.line, span.start.column};
}

namespace {

Diagnostic make(Severity severity, std::string code, std::string message,
                std::optional<Location> location) {
  Diagnostic d;
  d.severity = severity;
  d.code = std::move(code);
  d.message = std::move(message);
  d.location = std::move(location);
  return d;
}

// clang-format off
constexpr std::array kRegistry = {
    // .sosv parsing
    CodeInfo{"E-PARSE-SYNTAX", Severity::error, "grammar violation or malformed token"},
    CodeInfo{"E-PARSE-DUP-SECTION", Severity::error, "a model kind is declared twice in one view"},
    CodeInfo{"E-PARSE-DUP-NAME", Severity::error, "a name is declared twice within one category"},
    CodeInfo{"E-PARSE-DUP-KEY", Severity::error, "a property is given twice inside one block"},
    CodeInfo{"E-PARSE-MISSING-KEY", Severity::error, "a required property is missing from a block"},
    CodeInfo{"E-PARSE-UNKNOWN-KEY", Severity::error, "unknown keyword inside a block"},
    CodeInfo{"E-PARSE-BAD-VALUE", Severity::error, "value outside a closed enumeration"},
    CodeInfo{"E-REF-UNDECLARED", Severity::error, "reference to a name that is not declared (before use)"},
    // interchange
    CodeInfo{"E-IX-SCHEMA", Severity::error, "interchange document does not match the schema"},
    // metamodel constraints
    CodeInfo{"E-VIEW-NAME", Severity::error, "system name is empty or blank"},
    CodeInfo{"E-DUP-NAME", Severity::error, "duplicate name within a category"},
    CodeInfo{"E-DUP-RELATION", Severity::error, "duplicate stakeholder/concern pair"},
    CodeInfo{"E-ENUM-RANGE", Severity::error, "enumeration value out of range"},
    CodeInfo{"E-CONCERN-UNKNOWN-ID", Severity::error, "concern references an id missing from the concern catalog"},
    CodeInfo{"E-INT-DATA-DIRECTION", Severity::error, "data direction present without data-exchange kind, or missing with it"},
    CodeInfo{"E-MOD-NO-DEPTYPE", Severity::error, "external module has no dependency type"},
    CodeInfo{"E-INFO-CARDINALITY", Severity::error, "cardinality present without association kind, or missing with it"},
    CodeInfo{"E-INFO-CYCLE", Severity::error, "specialization or aggregation edges form a cycle"},
    CodeInfo{"E-INFO-UNRELATED-CONFLICT", Severity::error, "SoS element declared unrelated but related to a system element"},
    CodeInfo{"E-SR-NO-MODE", Severity::error, "resource usage has no mode"},
    CodeInfo{"E-DEP-QUANTITY", Severity::error, "deployment quantity is negative or not finite"},
    // assumption gaps (informational)
    CodeInfo{"I-ASSUME-STAKEHOLDERS", Severity::info, "no excluded stakeholders or unaddressed concerns recorded"},
    CodeInfo{"I-ASSUME-STARTUP", Severity::info, "startup behavior not documented"},
    CodeInfo{"I-ASSUME-MONITORING", Severity::info, "monitoring behavior not documented"},
    CodeInfo{"I-ASSUME-EVOLUTION", Severity::info, "no evolution assumptions for external modules"},
    CodeInfo{"I-ASSUME-UNRELATED", Severity::info, "SoS element neither related nor declared unrelated"},
    CodeInfo{"I-ASSUME-ACQUISITION", Severity::info, "resource acquisition style unspecified"},
    CodeInfo{"I-ASSUME-INSUFFICIENT", Severity::info, "behavior on insufficient resource not documented"},
    // coverage
    CodeInfo{"E-COV-UNKNOWN-ID", Severity::error, "concern id is not in the catalog"},
    // correspondence lints
    CodeInfo{"E-LINT-UNKNOWN", Severity::error, "unknown lint code in configuration"},
    CodeInfo{"W-XM-SR-UNDEPLOYED", Severity::warning, "shared-resource user is not a deployment unit"},
    CodeInfo{"W-XM-STARTUP-UNDOC", Severity::warning, "startup-required interaction without startup documentation"},
    CodeInfo{"W-XM-MULTIWRITER", Severity::warning, "two or more external writers on one shared resource"},
    // analysis
    CodeInfo{"E-WS-DUP-SYSTEM", Severity::error, "two views in a workspace share a system name"},
    CodeInfo{"E-START-CYCLE", Severity::error, "startup dependencies form a cycle"},
    CodeInfo{"E-GAP-NO-ELEMENT", Severity::error, "information element not declared"},
    CodeInfo{"E-ANL-NO-MODEL", Severity::error, "analysis requires a model the view does not have"},
    CodeInfo{"W-DEP-OVERCOMMIT", Severity::warning, "allocated needs exceed what a node provides"},
    CodeInfo{"W-DEP-UNPROVIDED", Severity::warning, "unit needs a resource its node does not provide"},
    CodeInfo{"W-DEP-UNIT-MISMATCH", Severity::warning, "need and provision use different units"},
    // rendering
    CodeInfo{"E-RND-ABSENT", Severity::error, "requested model is absent or empty"},
    CodeInfo{"E-RND-NOTATION", Severity::error, "notation not available for the model kind"},
    // framework mappings
    CodeInfo{"E-MAP-UNKNOWN-SOURCE", Severity::error, "source id not in the framework registry"},
    // command line
    CodeInfo{"E-IO", Severity::error, "file cannot be read or written"},
    CodeInfo{"E-USAGE", Severity::error, "malformed command line"},
};
// clang-format on

}  // namespace

Diagnostic make_error(std::string code, std::string message, std::optional<Location> location) {
  return make(Severity::error, std::move(code), std::move(message), std::move(location));
}

Diagnostic make_warning(std::string code, std::string message, std::optional<Location> location) {
  return make(Severity::warning, std::move(code), std::move(message), std::move(location));
}

Diagnostic make_info(std::string code, std::string message, std::optional<Location> location) {
  return make(Severity::info, std::move(code), std::move(message), std::move(location));
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.location, a.code, a.message) <
                            std::tie(b.location, b.code, b.message);
                   });
}

std::string format_diagnostic(const Diagnostic& d, std::string_view fallback_file) {
  std::string out;
  if (d.location) {
    out = d.location->file + ":" + std::to_string(d.location->line) + ":" +
          std::to_string(d.location->column) + ": ";
  } else if (!fallback_file.empty()) {
    out = std::string(fallback_file) + ": ";
  }
  out += to_string(d.severity);
  out += "[" + d.code + "] " + d.message;
  return out;
}

DiagnosticError::DiagnosticError(Diagnostic diagnostic)
    : std::runtime_error(format_diagnostic(diagnostic)), diagnostic_(std::move(diagnostic)) {}

std::span<const CodeInfo> code_registry() { return kRegistry; }

const CodeInfo* find_code(std::string_view code) {
  for (const auto& info : kRegistry) {
    if (info.code == code) return &info;
  }
  return nullptr;
}

}  // namespace sosv
