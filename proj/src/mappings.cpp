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

#include "sosv/mappings.hpp"

#include <algorithm>

namespace sosv {

namespace {

const std::vector<KindMapping> kViewsAndBeyond = {
    {ModelKind::stakeholders,
     {{"documentation-roadmap", "Information Beyond Views: Documentation Roadmap", ""},
      {"stakeholder-view-matrix", "Stakeholder/View Matrix",
       "typically generated by the architect but not explicitly included in the architecture "
       "documentation"}},
     "",
     false},
    {ModelKind::execution_context,
     {{"context-diagram-cc",
       "Context diagram from a component and connector view (client-server, SOA, pipe and "
       "filter, publish-subscribe)",
       ""}},
     "",
     false},
    {ModelKind::code_context, {{"uses-context", "Context diagram from a module uses view", ""}}, "",
     false},
    {ModelKind::information_model,
     {{"interface-docs",
       "Interface documentation for externally-visible interfaces (from component and "
       "connector views)",
       ""},
      {"data-model-view", "Data model view packet focused on externally-visible information elements",
       ""}},
     "",
     false},
    {ModelKind::shared_resources, {{"cc-view", "Component and connector view", ""}}, "", false},
    {ModelKind::deployment,
     {{"deployment-view", "Deployment view primary presentation or context diagram", ""}},
     "",
     false},
};

const std::vector<KindMapping> kDodaf = {
    {ModelKind::stakeholders,
     {{"AV-1", "AV-1 Overview and Summary Information", ""},
      {"PV-1", "PV-1 Project Portfolio Relationships", ""}},
     "DoDAF does not generally treat stakeholders as a first-order concern. These DoDAF views "
     "provide insight into the operational, maintenance, and development stakeholders.",
     false},
    {ModelKind::execution_context,
     {{"SvcV-1", "SvcV-1 Services Context Description", ""},
      {"SvcV-3b", "SvcV-3b Services-Services Matrix", ""}},
     "",
     false},
    {ModelKind::code_context,
     {{"SvcV-1", "SvcV-1 Services Context Description", ""}},
     "If the information is included, it is most likely to appear in the SvcV-1.",
     true},
    {ModelKind::information_model,
     {{"SvcV-2", "SvcV-2 Services Resource Flow Description", ""},
      {"SvcV-6", "SvcV-6 Services Resource Flow Matrix", ""},
      {"StdV-1", "StdV-1 Standards Profile", ""}},
     "DoDAF uses the concept of \"resource flows\" to identify interfaces and protocols.",
     false},
    {ModelKind::shared_resources,
     {{"SvcV-3b", "SvcV-3b Services-Services Matrix", ""},
      {"SvcV-10c", "SvcV-10c Services Event-Trace Description", ""}},
     "Shared resources may not be explicitly identified, but can be discovered using the SvcV "
     "views.",
     false},
    {ModelKind::deployment,
     {{"SvcV-1", "SvcV-1 Services Context Description", ""},
      {"SvcV-3a", "SvcV-3a Systems-Services Matrix", ""}},
     "DoDAF \"services\" usually include both software and hardware elements, without explicit "
     "refinement. The DoDAF views noted here may provide insight, but are unlikely to provide "
     "all the information needed to create this model.",
     true},
};

void check_inventory(const SourceInventory& inventory) {
  for (const auto& id : inventory.available) {
    if (!find_source(inventory.framework, id)) {
      throw DiagnosticError(make_error(
          "E-MAP-UNKNOWN-SOURCE", "'" + id + "' is not a " +
                                      std::string(enum_name(inventory.framework)) + " source"));
    }
  }
}

std::string join(const std::set<std::string>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ", ") + v;
  return out;
}

}  // namespace

std::optional<Framework> parse_framework(std::string_view text) {
  if (text == "vab") return Framework::views_and_beyond;
  return parse_enum<Framework>(text);
}

const std::vector<KindMapping>& source_registry(Framework framework) {
  return framework == Framework::dodaf ? kDodaf : kViewsAndBeyond;
}

const SourceEntry* find_source(Framework framework, std::string_view id) {
  for (const auto& kind : source_registry(framework)) {
    for (const auto& s : kind.sources) {
      if (s.id == id) return &s;
    }
  }
  return nullptr;
}

SourceInventory SourceInventory::from_json(const Json& tree) {
  auto fail = [](const std::string& what) -> SourceInventory {
    throw DiagnosticError(make_error("E-IX-SCHEMA", "inventory: " + what));
  };
  if (!tree.is_object()) return fail("expected an object");
  for (const auto& [key, value] : tree.items()) {
    (void)value;
    if (key != "framework" && key != "available") return fail("unknown key '" + key + "'");
  }
  if (!tree.contains("framework") || !tree["framework"].is_string()) {
    return fail("'framework' must be a string");
  }
  SourceInventory inventory;
  const auto framework = parse_framework(tree["framework"].get<std::string>());
  if (!framework) return fail("unknown framework '" + tree["framework"].get<std::string>() + "'");
  inventory.framework = *framework;
  if (tree.contains("available")) {
    if (!tree["available"].is_array()) return fail("'available' must be an array");
    for (const auto& id : tree["available"]) {
      if (!id.is_string()) return fail("'available' entries must be strings");
      inventory.available.insert(id.get<std::string>());
    }
  }
  return inventory;
}

const KindTrace& TraceabilityReport::at(ModelKind kind) const {
  auto it = std::find_if(kinds.begin(), kinds.end(),
                         [&](const KindTrace& k) { return k.kind == kind; });
  if (it == kinds.end()) throw std::out_of_range("no trace for model kind");
  return *it;
}

TraceabilityReport trace(const SourceInventory& inventory) {
  check_inventory(inventory);
  TraceabilityReport report;
  for (const auto& mapping : source_registry(inventory.framework)) {
    KindTrace t{mapping.kind, {}, TraceStatus::unsourced, std::nullopt};
    bool only_doubtful = true;
    std::vector<std::string> caveats;
    if (!mapping.comment.empty()) caveats.emplace_back(mapping.comment);
    for (const auto& s : mapping.sources) {
      if (!inventory.available.count(std::string(s.id))) continue;
      t.sources_used.insert(std::string(s.id));
      if (s.caveat.empty()) {
        only_doubtful = false;
      } else {
        caveats.push_back(std::string(s.id) + ": " + std::string(s.caveat));
      }
    }
    if (!t.sources_used.empty()) {
      t.status = mapping.hedged || only_doubtful ? TraceStatus::partial : TraceStatus::sourced;
    }
    if (!caveats.empty()) {
      std::string text;
      for (const auto& c : caveats) text += (text.empty() ? "" : " ") + c;
      t.caveat = std::move(text);
    }
    report.kinds.push_back(std::move(t));
  }
  return report;
}

Scaffold scaffold(const SourceInventory& inventory, const std::string& system_name) {
  const auto view = empty_view(system_name);
  Scaffold out;
  out.report = trace(inventory);
  std::string text = "// Skeleton from " + std::string(enum_name(inventory.framework)) +
                     " sources. Fill in each section from the listed documents.\n";
  text += "view " + quote(view.system_name) + " {\n";
  text += "  system " + quote(view.system_name) + "\n";
  for (const auto& t : out.report.kinds) {
    if (t.sources_used.empty()) continue;
    text += "\n  // TODO from: " + join(t.sources_used) + "\n";
    if (t.status == TraceStatus::partial) {
      text += "  // These sources may not hold everything this section needs.\n";
    }
    text += "  " + std::string(enum_name(t.kind)) + " {\n  }\n";
  }
  text += "}\n";
  out.skeleton = std::move(text);
  return out;
}

std::vector<SourceGap> source_gaps(const SourceInventory& inventory) {
  check_inventory(inventory);
  std::vector<SourceGap> out;
  for (const auto& mapping : source_registry(inventory.framework)) {
    SourceGap gap{mapping.kind, {}, std::nullopt};
    for (const auto& s : mapping.sources) {
      if (!inventory.available.count(std::string(s.id))) gap.missing.insert(std::string(s.id));
    }
    if (gap.missing.empty()) continue;
    if (!mapping.comment.empty()) gap.caveat = std::string(mapping.comment);
    out.push_back(std::move(gap));
  }
  return out;
}

Json to_interchange(const TraceabilityReport& report) {
  Json kinds = Json::array();
  for (const auto& t : report.kinds) {
    Json item{{"kind", std::string(enum_name(t.kind))},
              {"sources_used", t.sources_used},
              {"status", std::string(enum_name(t.status))}};
    if (t.caveat) item["caveat"] = *t.caveat;
    kinds.push_back(std::move(item));
  }
  return Json{{"report", "traceability"}, {"kinds", kinds}};
}

Json to_interchange(const std::vector<SourceGap>& gaps) {
  Json out = Json::array();
  for (const auto& g : gaps) {
    Json item{{"kind", std::string(enum_name(g.kind))}, {"missing", g.missing}};
    if (g.caveat) item["caveat"] = *g.caveat;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace sosv
