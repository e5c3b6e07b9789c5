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

#include "sosv/validator.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sosv/graph.hpp"

namespace sosv {

namespace {

class Checker {
 public:
  explicit Checker(const ArchitectureView& view) : view_(view) {}

  std::vector<Diagnostic> run() {
    if (trim(view_.system_name).empty()) {
      error("E-VIEW-NAME", "system name must not be empty", "system");
    }
    if (view_.stakeholder_model) check(*view_.stakeholder_model);
    if (view_.execution_context) check(*view_.execution_context);
    if (view_.code_context) check(*view_.code_context);
    if (view_.information_model) check(*view_.information_model);
    if (view_.shared_resources) check(*view_.shared_resources);
    if (view_.deployment) check(*view_.deployment);
    sort_diagnostics(out_);
    return std::move(out_);
  }

 private:
  void error(std::string code, std::string message, const std::string& key) {
    out_.push_back(make_error(std::move(code), std::move(message), view_.origin.location(key)));
  }

  template <typename E>
  void check_enum(E value, std::string_view what, const std::string& key) {
    if (!in_range(value)) {
      error("E-ENUM-RANGE",
            std::string(what) + " value " +
                std::to_string(static_cast<long long>(static_cast<std::underlying_type_t<E>>(value))) +
                " is out of range",
            key);
    }
  }

  // Returns the set of names; reports each repeat.
  template <typename T, typename Name>
  std::set<std::string> unique_names(const std::vector<T>& items, Name name,
                                     std::string_view section, std::string_view item,
                                     std::string_view category) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string& n = name(items[i]);
      if (!seen.insert(n).second) {
        error("E-DUP-NAME", std::string(category) + " '" + n + "' is declared more than once",
              span_key(section, item, i));
      }
    }
    return seen;
  }

  void require(const std::set<std::string>& names, const std::string& name,
               std::string_view category, const std::string& key) {
    if (!names.count(name)) {
      error("E-REF-UNDECLARED", std::string(category) + " '" + name + "' is not declared", key);
    }
  }

  void check(const StakeholderConcernModel& m) {
    const std::string s = "stakeholders";
    const auto stakeholders =
        unique_names(m.stakeholders, [](const Stakeholder& x) -> const std::string& { return x.name; },
                     s, "stakeholder", "stakeholder");
    const auto concerns =
        unique_names(m.concerns, [](const Concern& x) -> const std::string& { return x.id; }, s,
                     "concern", "concern");
    for (std::size_t i = 0; i < m.concerns.size(); ++i) {
      for (const auto& id : m.concerns[i].catalog_ids) {
        if (!catalog().contains(id)) {
          error("E-CONCERN-UNKNOWN-ID",
                "concern '" + m.concerns[i].id + "' references unknown catalog id '" + id + "'",
                span_key(s, "concern", i));
        }
      }
    }
    std::set<HasConcern> pairs;
    for (std::size_t i = 0; i < m.has_concern.size(); ++i) {
      const auto& h = m.has_concern[i];
      const auto key = span_key(s, "has", i);
      require(stakeholders, h.stakeholder, "stakeholder", key);
      require(concerns, h.concern, "concern", key);
      if (!pairs.insert(h).second) {
        error("E-DUP-RELATION",
              "stakeholder '" + h.stakeholder + "' has concern '" + h.concern + "' more than once",
              key);
      }
    }
  }

  void check(const ExecutionTimeContextModel& m) {
    const std::string s = "execution-context";
    const auto externals =
        unique_names(m.externals, [](const ExternalSystem& x) -> const std::string& { return x.name; },
                     s, "external", "external system");
    for (std::size_t i = 0; i < m.externals.size(); ++i) {
      check_enum(m.externals[i].category, "external category", span_key(s, "external", i));
    }
    for (std::size_t i = 0; i < m.interactions.size(); ++i) {
      const auto& it = m.interactions[i];
      const auto key = span_key(s, "interaction", i);
      require(externals, it.external, "external system", key);
      check_enum(it.kind, "interaction kind", key);
      check_enum(it.direction, "interaction direction", key);
      if (it.data_direction) check_enum(*it.data_direction, "data direction", key);
      const bool data = it.kind == InteractionKind::data_exchange;
      if (data && !it.data_direction) {
        error("E-INT-DATA-DIRECTION",
              "data-exchange interaction on '" + it.self_interface + "' needs a data direction",
              key);
      } else if (!data && it.data_direction) {
        error("E-INT-DATA-DIRECTION",
              "interaction on '" + it.self_interface + "' has a data direction but kind " +
                  std::string(enum_name(it.kind)),
              key);
      }
    }
  }

  void check(const CodeContextModel& m) {
    const std::string s = "code-context";
    unique_names(m.external_modules, [](const ExternalModule& x) -> const std::string& { return x.name; },
                 s, "module", "external module");
    for (std::size_t i = 0; i < m.external_modules.size(); ++i) {
      const auto& mod = m.external_modules[i];
      const auto key = span_key(s, "module", i);
      if (mod.dependency_types.empty()) {
        error("E-MOD-NO-DEPTYPE", "external module '" + mod.name + "' has no dependency type", key);
      }
      for (auto t : mod.dependency_types) check_enum(t, "dependency type", key);
      check_enum(mod.source_kind, "module source", key);
      check_enum(mod.category, "module category", key);
    }
  }

  void check(const InterfaceInformationModel& m) {
    const std::string s = "information-model";
    const auto name_of = [](const InformationElement& e) -> const std::string& { return e.name; };
    const auto sos = unique_names(m.sos_elements, name_of, s, "sos-element", "SoS information element");
    const auto system = unique_names(m.system_elements, name_of, s, "element", "information element");
    auto fields = [&](const std::vector<InformationElement>& list, std::string_view item) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        unique_names(list[i].data_fields,
                     [](const DataField& f) -> const std::string& { return f.name; },
                     span_key(s, item, i), "field", "data field");
      }
    };
    fields(m.sos_elements, "sos-element");
    fields(m.system_elements, "element");

    graph::Digraph<std::string> specialization, aggregation;
    std::map<std::pair<std::string, std::string>, std::size_t> first_edge;
    std::set<std::string> related_to_system;
    for (std::size_t i = 0; i < m.relations.size(); ++i) {
      const auto& r = m.relations[i];
      const auto key = span_key(s, "relation", i);
      check_enum(r.kind, "relation kind", key);
      check_enum(r.from.scope, "element scope", key);
      check_enum(r.to.scope, "element scope", key);
      for (const auto* ref : {&r.from, &r.to}) {
        if (!in_range(ref->scope)) continue;
        require(ref->scope == ElementScope::sos ? sos : system, ref->name,
                ref->scope == ElementScope::sos ? "SoS information element" : "information element",
                key);
      }
      if (r.cardinality) check_enum(*r.cardinality, "cardinality", key);
      const bool association = r.kind == RelationKind::association;
      if (association && !r.cardinality) {
        error("E-INFO-CARDINALITY",
              "association " + to_string(r.from) + " -> " + to_string(r.to) + " needs a cardinality",
              key);
      } else if (!association && r.cardinality) {
        error("E-INFO-CARDINALITY",
              std::string(enum_name(r.kind)) + " " + to_string(r.from) + " -> " + to_string(r.to) +
                  " must not have a cardinality",
              key);
      }
      if (r.from.scope == ElementScope::sos && r.to.scope == ElementScope::system) {
        related_to_system.insert(r.from.name);
      }
      if (r.to.scope == ElementScope::sos && r.from.scope == ElementScope::system) {
        related_to_system.insert(r.to.name);
      }
      if (r.kind == RelationKind::specialization || r.kind == RelationKind::aggregation) {
        auto& g = r.kind == RelationKind::specialization ? specialization : aggregation;
        graph::add_edge(g, to_string(r.from), to_string(r.to));
        first_edge.try_emplace({to_string(r.from), to_string(r.to)}, i);
      }
    }
    report_cycles(specialization, "specialization", first_edge);
    report_cycles(aggregation, "aggregation", first_edge);

    for (std::size_t i = 0; i < m.unrelated_sos_elements.size(); ++i) {
      const auto& name = m.unrelated_sos_elements[i];
      const auto key = span_key(s, "unrelated", i);
      require(sos, name, "SoS information element", key);
      if (related_to_system.count(name)) {
        error("E-INFO-UNRELATED-CONFLICT",
              "SoS element '" + name +
                  "' is declared unrelated but is related to a constituent system element",
              key);
      }
    }
  }

  void report_cycles(const graph::Digraph<std::string>& g, std::string_view kind,
                     const std::map<std::pair<std::string, std::string>, std::size_t>& edges) {
    for (const auto& component : graph::strongly_connected_components(g)) {
      const std::set<std::string> members(component.begin(), component.end());
      const auto sub = graph::subgraph(g, members);
      const auto cycle = graph::shortest_cycle(sub);
      if (cycle.empty()) continue;
      std::string text;
      for (const auto& n : cycle) text += n + " -> ";
      text += cycle.front();
      std::size_t edge = 0;
      if (auto it = edges.find({cycle.front(), cycle.size() > 1 ? cycle[1] : cycle.front()});
          it != edges.end()) {
        edge = it->second;
      }
      error("E-INFO-CYCLE", std::string(kind) + " edges form a cycle: " + text,
            span_key("information-model", "relation", edge));
    }
  }

  void check(const SharedResourceModel& m) {
    const std::string s = "shared-resources";
    const auto resources =
        unique_names(m.resources, [](const SharedResource& r) -> const std::string& { return r.name; },
                     s, "resource", "shared resource");
    for (std::size_t i = 0; i < m.resources.size(); ++i) {
      const auto key = span_key(s, "resource", i);
      check_enum(m.resources[i].kind, "resource kind", key);
      check_enum(m.resources[i].acquisition, "acquisition", key);
    }
    for (std::size_t i = 0; i < m.usages.size(); ++i) {
      const auto& u = m.usages[i];
      const auto key = span_key(s, "usage", i);
      require(resources, u.resource, "shared resource", key);
      check_enum(u.user_scope, "user scope", key);
      if (u.modes.empty()) {
        error("E-SR-NO-MODE", "usage of '" + u.resource + "' by '" + u.user + "' has no mode", key);
      }
      for (auto mode : u.modes) check_enum(mode, "usage mode", key);
    }
  }

  void check_quantities(const ResourceQuantities& q, const std::string& owner,
                        const std::string& key) {
    for (const auto& [name, quantity] : q) {
      if (!std::isfinite(quantity.amount) || quantity.amount < 0) {
        error("E-DEP-QUANTITY",
              owner + ": quantity of '" + name + "' must be a finite non-negative number", key);
      }
    }
  }

  void check(const DeploymentModel& m) {
    const std::string s = "deployment";
    const auto nodes =
        unique_names(m.nodes, [](const ComputeNode& n) -> const std::string& { return n.name; }, s,
                     "node", "node");
    const auto units =
        unique_names(m.units, [](const ExecutionUnit& u) -> const std::string& { return u.name; }, s,
                     "unit", "unit");
    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
      const auto key = span_key(s, "node", i);
      check_enum(m.nodes[i].kind, "node kind", key);
      check_quantities(m.nodes[i].provides, "node '" + m.nodes[i].name + "'", key);
    }
    for (std::size_t i = 0; i < m.units.size(); ++i) {
      const auto key = span_key(s, "unit", i);
      check_enum(m.units[i].kind, "unit kind", key);
      check_quantities(m.units[i].needs, "unit '" + m.units[i].name + "'", key);
    }
    std::set<Allocation> seen;
    for (std::size_t i = 0; i < m.allocations.size(); ++i) {
      const auto& a = m.allocations[i];
      const auto key = span_key(s, "allocation", i);
      require(units, a.unit, "unit", key);
      require(nodes, a.node, "node", key);
      if (!seen.insert(a).second) {
        error("E-DUP-RELATION", "unit '" + a.unit + "' is allocated to '" + a.node + "' twice", key);
      }
    }
  }

  const ArchitectureView& view_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const ArchitectureView& view) { return Checker(view).run(); }

// ---------------------------------------------------------------------------

std::string_view to_string(CoverageStatus status) {
  switch (status) {
    case CoverageStatus::covered:
      return "covered";
    case CoverageStatus::partial:
      return "partial";
    case CoverageStatus::uncovered:
      return "uncovered";
  }
  return "uncovered";
}

const CoverageEntry* CoverageReport::find(std::string_view concern_id) const {
  for (const auto& e : entries) {
    if (e.concern_id == concern_id) return &e;
  }
  return nullptr;
}

CoverageReport concern_coverage(const ArchitectureView& view,
                                const std::optional<std::set<std::string>>& filter) {
  if (filter) {
    for (const auto& id : *filter) {
      if (!catalog().contains(id)) {
        throw DiagnosticError(
            make_error("E-COV-UNKNOWN-ID", "unknown concern id '" + id + "'"));
      }
    }
  }
  const auto present = view.non_empty_models();
  CoverageReport report;
  for (const auto& concern : catalog().entries()) {
    if (filter && !filter->count(std::string(concern.id))) continue;
    CoverageEntry entry;
    entry.concern_id = std::string(concern.id);
    for (auto kind : concern.model_kinds) {
      (present.count(kind) ? entry.present_kinds : entry.missing_kinds).insert(kind);
    }
    entry.status = entry.missing_kinds.empty()   ? CoverageStatus::covered
                   : entry.present_kinds.empty() ? CoverageStatus::uncovered
                                                 : CoverageStatus::partial;
    entry.quality = concern.quality;
    entry.impacted_stakeholders = concern.stakeholders;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<Diagnostic> assumption_gaps(const ArchitectureView& view) {
  std::vector<Diagnostic> out;
  auto info = [&](const char* code, std::string message, const std::string& key) {
    out.push_back(make_info(code, std::move(message), view.origin.location(key)));
  };
  if (view.has_non_empty_model(ModelKind::stakeholders)) {
    const auto& m = *view.stakeholder_model;
    if (m.excluded_stakeholders.empty() && m.unaddressed_concerns.empty()) {
      info("I-ASSUME-STAKEHOLDERS",
           "no stakeholders recorded as intentionally excluded and no concerns recorded as "
           "unaddressed",
           "stakeholders");
    }
  }
  if (view.has_non_empty_model(ModelKind::execution_context)) {
    const auto& m = *view.execution_context;
    if (!m.startup_sequence_note) {
      info("I-ASSUME-STARTUP", "startup behavior is not documented", "execution-context");
    }
    if (!m.monitoring_note) {
      info("I-ASSUME-MONITORING", "monitoring and performance measurement behavior is not documented",
           "execution-context");
    }
  }
  if (view.has_non_empty_model(ModelKind::code_context) &&
      view.code_context->evolution_assumptions.empty()) {
    info("I-ASSUME-EVOLUTION", "no evolution assumptions recorded for external modules",
         "code-context");
  }
  if (const auto& m = view.information_model) {
    std::set<std::string> accounted(m->unrelated_sos_elements.begin(),
                                    m->unrelated_sos_elements.end());
    for (const auto& r : m->relations) {
      if (r.from.scope != r.to.scope) {
        accounted.insert(r.from.scope == ElementScope::sos ? r.from.name : r.to.name);
      }
    }
    for (std::size_t i = 0; i < m->sos_elements.size(); ++i) {
      const auto& name = m->sos_elements[i].name;
      if (!accounted.count(name)) {
        info("I-ASSUME-UNRELATED",
             "SoS element '" + name +
                 "' has no relation to a constituent element and is not declared unrelated",
             span_key("information-model", "sos-element", i));
      }
    }
  }
  if (const auto& m = view.shared_resources) {
    for (std::size_t i = 0; i < m->resources.size(); ++i) {
      const auto& r = m->resources[i];
      const auto key = span_key("shared-resources", "resource", i);
      if (r.acquisition == Acquisition::unspecified) {
        info("I-ASSUME-ACQUISITION",
             "resource '" + r.name + "' does not say whether it is acquired explicitly or implicitly",
             key);
      }
      if (!r.insufficient_behavior) {
        info("I-ASSUME-INSUFFICIENT",
             "resource '" + r.name + "' does not document behavior when insufficient", key);
      }
    }
  }
  sort_diagnostics(out);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string_view> lint_codes() {
  return {kLintUndeployedUser, kLintStartupUndocumented, kLintMultipleWriters};
}

LintConfig LintConfig::with(const std::vector<std::string>& codes) {
  LintConfig config;
  const auto known = lint_codes();
  for (const auto& code : codes) {
    if (std::find(known.begin(), known.end(), code) == known.end()) {
      throw DiagnosticError(make_error("E-LINT-UNKNOWN", "unknown lint code '" + code + "'"));
    }
    config.enabled_.insert(code);
  }
  return config;
}

LintConfig LintConfig::all() {
  LintConfig config;
  for (auto code : lint_codes()) config.enabled_.insert(std::string(code));
  return config;
}

std::vector<Diagnostic> correspondence_lints(const ArchitectureView& view,
                                             const LintConfig& config) {
  std::vector<Diagnostic> out;
  auto warn = [&](std::string_view code, std::string message, const std::string& key) {
    out.push_back(make_warning(std::string(code), std::move(message), view.origin.location(key)));
  };

  if (config.enabled(kLintUndeployedUser) && view.shared_resources) {
    std::set<std::string> deployed;
    if (view.deployment) {
      for (const auto& u : view.deployment->units) deployed.insert(u.name);
    }
    std::set<std::string> reported;
    const auto& usages = view.shared_resources->usages;
    for (std::size_t i = 0; i < usages.size(); ++i) {
      const auto& u = usages[i];
      if (u.user_scope != UserScope::constituent || deployed.count(u.user)) continue;
      if (!reported.insert(u.user).second) continue;
      warn(kLintUndeployedUser,
           "shared-resource user '" + u.user + "' is not a unit in the deployment model",
           span_key("shared-resources", "usage", i));
    }
  }

  if (config.enabled(kLintStartupUndocumented) && view.execution_context &&
      !view.execution_context->startup_sequence_note) {
    const auto& interactions = view.execution_context->interactions;
    for (std::size_t i = 0; i < interactions.size(); ++i) {
      const auto& it = interactions[i];
      if (!it.required_at_startup) continue;
      warn(kLintStartupUndocumented,
           "interaction '" + it.self_interface + "' with '" + it.external +
               "' is required at startup but no startup sequence is documented",
           span_key("execution-context", "interaction", i));
    }
  }

  if (config.enabled(kLintMultipleWriters) && view.shared_resources) {
    const auto& m = *view.shared_resources;
    for (std::size_t i = 0; i < m.resources.size(); ++i) {
      std::set<std::string> writers;
      for (const auto& u : m.usages) {
        if (u.resource == m.resources[i].name && u.user_scope == UserScope::external &&
            u.modes.count(UsageMode::writes)) {
          writers.insert(u.user);
        }
      }
      if (writers.size() < 2) continue;
      std::string names;
      for (const auto& w : writers) names += (names.empty() ? "" : ", ") + w;
      warn(kLintMultipleWriters,
           "resource '" + m.resources[i].name + "' is written by " +
               std::to_string(writers.size()) + " external users: " + names,
           span_key("shared-resources", "resource", i));
    }
  }

  sort_diagnostics(out);
  return out;
}

}  // namespace sosv
