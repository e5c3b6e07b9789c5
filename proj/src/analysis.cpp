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

#include "sosv/analysis.hpp"

#include <algorithm>
#include <cctype>

#include "sosv/graph.hpp"

namespace sosv {

Workspace::Workspace(std::vector<ArchitectureView> views) : views_(std::move(views)) {
  std::map<std::string, const ArchitectureView*> seen;
  for (const auto& v : views_) {
    auto [it, inserted] = seen.emplace(v.system_name, &v);
    if (inserted) continue;
    Diagnostic d = make_error("E-WS-DUP-SYSTEM",
                              "system '" + v.system_name + "' is described by more than one view",
                              v.origin.location("system"));
    if (auto other = it->second->origin.location("system")) d.related.push_back(*other);
    throw DiagnosticError(std::move(d));
  }
}

// ---------------------------------------------------------------------------

StartupResult startup_order(const Workspace& workspace) {
  graph::Digraph<std::string> g;
  for (const auto& v : workspace.views()) {
    graph::add_node(g, v.system_name);
    if (!v.execution_context) continue;
    for (const auto& it : v.execution_context->interactions) {
      if (it.required_at_startup) graph::add_edge(g, v.system_name, it.external);
    }
  }
  StartupResult result;
  if (auto order = graph::dependency_order(g)) {
    result.order = std::move(*order);
  } else {
    result.cycle = graph::shortest_cycle(g);
  }
  return result;
}

Diagnostic cycle_diagnostic(const StartupResult& result) {
  std::string text;
  for (const auto& n : result.cycle) text += n + " -> ";
  if (!result.cycle.empty()) text += result.cycle.front();
  return make_error("E-START-CYCLE", "startup dependencies form a cycle: " + text);
}

// ---------------------------------------------------------------------------

std::string to_string(const ContentionUser& user) {
  return user.system + ": " + user.user + " (" + std::string(enum_name(user.scope)) + ")";
}

const std::set<UsageMode>* ContentionMatrix::cell(const std::string& resource,
                                                  const ContentionUser& user) const {
  auto row = cells.find(resource);
  if (row == cells.end()) return nullptr;
  auto it = row->second.find(user);
  return it == row->second.end() ? nullptr : &it->second;
}

ContentionMatrix resource_contention(const Workspace& workspace) {
  ContentionMatrix m;
  std::set<std::string> rows;
  std::set<ContentionUser> columns;
  for (const auto& v : workspace.views()) {
    if (!v.shared_resources) continue;
    for (const auto& r : v.shared_resources->resources) rows.insert(r.name);
    for (const auto& u : v.shared_resources->usages) {
      ContentionUser user{v.system_name, u.user, u.user_scope};
      rows.insert(u.resource);
      columns.insert(user);
      m.cells[u.resource][user].insert(u.modes.begin(), u.modes.end());
    }
  }
  m.rows.assign(rows.begin(), rows.end());
  m.columns.assign(columns.begin(), columns.end());
  for (const auto& [resource, row] : m.cells) {
    ContentionConflict conflict{resource, {}, {}};
    for (const auto& [user, modes] : row) {
      if (modes.count(UsageMode::writes) || modes.count(UsageMode::acquires)) {
        conflict.users.push_back(user);
      }
    }
    if (conflict.users.size() < 2) continue;
    std::set<std::string> systems;
    for (const auto& u : conflict.users) systems.insert(u.system);
    conflict.reason = std::to_string(conflict.users.size()) + " users write or acquire it";
    if (systems.size() > 1) {
      conflict.reason += " across " + std::to_string(systems.size()) + " systems";
    }
    m.conflicts.push_back(std::move(conflict));
  }
  return m;
}

// ---------------------------------------------------------------------------

std::string_view to_string(MatchVia via) {
  switch (via) {
    case MatchVia::exact:
      return "exact";
    case MatchVia::normalized:
      return "normalized";
    case MatchVia::alias:
      return "alias";
  }
  return "exact";
}

std::string normalize_field_name(std::string_view name) {
  std::string out;
  for (const char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x80 && std::isalnum(u)) out += static_cast<char>(std::tolower(u));
  }
  return out;
}

GapReport information_gap(const ArchitectureView& view, const std::string& element,
                          const std::vector<std::string>& required_fields,
                          const std::map<std::string, std::string>& aliases) {
  const InformationElement* found = nullptr;
  if (view.information_model) {
    found = view.information_model->find({ElementScope::system, element});
    if (!found) found = view.information_model->find({ElementScope::sos, element});
  }
  if (!found) {
    throw DiagnosticError(make_error(
        "E-GAP-NO-ELEMENT",
        "information element '" + element + "' is not declared in '" + view.system_name + "'"));
  }

  std::set<std::string> fields;
  for (const auto& f : found->data_fields) fields.insert(f.name);

  GapReport report;
  report.element = element;
  report.required_fields = required_fields;
  std::sort(report.required_fields.begin(), report.required_fields.end());
  for (const auto& required : report.required_fields) {
    if (fields.count(required)) {
      report.matched.push_back({required, required, MatchVia::exact});
      continue;
    }
    const auto key = normalize_field_name(required);
    // `fields` is sorted, so the first normalized hit is the smallest name.
    auto hit = std::find_if(fields.begin(), fields.end(), [&](const std::string& f) {
      return !key.empty() && normalize_field_name(f) == key;
    });
    if (hit != fields.end()) {
      report.matched.push_back({required, *hit, MatchVia::normalized});
      continue;
    }
    if (auto a = aliases.find(required); a != aliases.end() && fields.count(a->second)) {
      report.matched.push_back({required, a->second, MatchVia::alias});
      continue;
    }
    report.missing.push_back(required);
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<Diagnostic> deployment_capacity(const ArchitectureView& view) {
  if (!view.deployment) {
    throw DiagnosticError(make_error(
        "E-ANL-NO-MODEL", "'" + view.system_name + "' has no deployment model"));
  }
  const auto& m = *view.deployment;
  std::map<std::string, const ExecutionUnit*> units;
  for (const auto& u : m.units) units.emplace(u.name, &u);
  std::map<std::string, std::set<std::string>> allocated;
  for (const auto& a : m.allocations) allocated[a.node].insert(a.unit);

  std::vector<Diagnostic> out;
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    const auto& node = m.nodes[i];
    const auto where = view.origin.location(span_key("deployment", "node", i));
    std::map<std::string, double> totals;
    for (const auto& unit_name : allocated[node.name]) {
      auto u = units.find(unit_name);
      if (u == units.end()) continue;
      for (const auto& [res, need] : u->second->needs) {
        auto provided = node.provides.find(res);
        if (provided == node.provides.end()) {
          out.push_back(make_warning("W-DEP-UNPROVIDED",
                                     "unit '" + unit_name + "' needs '" + res + "' but node '" +
                                         node.name + "' does not provide it",
                                     where));
        } else if (provided->second.unit != need.unit) {
          out.push_back(make_warning(
              "W-DEP-UNIT-MISMATCH",
              "unit '" + unit_name + "' needs '" + res + "' in \"" + need.unit + "\" but node '" +
                  node.name + "' provides it in \"" + provided->second.unit + "\"",
              where));
        } else {
          totals[res] += need.amount;
        }
      }
    }
    for (const auto& [res, total] : totals) {
      const auto& provided = node.provides.at(res);
      if (total > provided.amount) {
        out.push_back(make_warning("W-DEP-OVERCOMMIT",
                                   "node '" + node.name + "' is overcommitted on '" + res +
                                       "': needs " + format_number(total) + " " + provided.unit +
                                       " > provides " + format_number(provided.amount) + " " +
                                       provided.unit,
                                   where));
      }
    }
  }
  sort_diagnostics(out);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <typename E>
Json enum_array(const std::set<E>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(std::string(enum_name(v)));
  return out;
}

Json user_json(const ContentionUser& u) {
  return Json{{"system", u.system}, {"user", u.user}, {"scope", std::string(enum_name(u.scope))}};
}

}  // namespace

Json to_interchange(const StartupResult& result) {
  Json out;
  out["report"] = "startup-order";
  out["ok"] = result.ok();
  out["order"] = result.order;
  out["cycle"] = result.cycle;
  return out;
}

Json to_interchange(const ContentionMatrix& matrix) {
  Json out;
  out["report"] = "resource-contention";
  out["rows"] = matrix.rows;
  Json columns = Json::array();
  for (const auto& c : matrix.columns) columns.push_back(user_json(c));
  out["columns"] = std::move(columns);
  Json cells = Json::array();
  for (const auto& [resource, row] : matrix.cells) {
    for (const auto& [user, modes] : row) {
      Json cell = user_json(user);
      cell["resource"] = resource;
      cell["modes"] = enum_array(modes);
      cells.push_back(std::move(cell));
    }
  }
  out["cells"] = std::move(cells);
  Json conflicts = Json::array();
  for (const auto& c : matrix.conflicts) {
    Json users = Json::array();
    for (const auto& u : c.users) users.push_back(user_json(u));
    conflicts.push_back(Json{{"resource", c.resource}, {"users", users}, {"reason", c.reason}});
  }
  out["conflicts"] = std::move(conflicts);
  return out;
}

Json to_interchange(const GapReport& report) {
  Json out;
  out["report"] = "information-gap";
  out["element"] = report.element;
  out["required_fields"] = report.required_fields;
  Json matched = Json::array();
  for (const auto& m : report.matched) {
    matched.push_back(
        Json{{"required", m.required}, {"field", m.field}, {"via", std::string(to_string(m.via))}});
  }
  out["matched"] = std::move(matched);
  out["missing"] = report.missing;
  return out;
}

Json to_interchange(const CoverageReport& report) {
  Json out;
  out["report"] = "concern-coverage";
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json stakeholders = Json::array();
    for (auto s : e.impacted_stakeholders) stakeholders.push_back(std::string(enum_name(s)));
    entries.push_back(Json{{"concern", e.concern_id},
                           {"status", std::string(to_string(e.status))},
                           {"present", enum_array(e.present_kinds)},
                           {"missing", enum_array(e.missing_kinds)},
                           {"quality", std::string(enum_name(e.quality))},
                           {"stakeholders", stakeholders}});
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_interchange(const std::vector<Diagnostic>& diagnostics, std::string_view fallback_file) {
  Json out = Json::array();
  for (const auto& d : diagnostics) {
    Json item{{"severity", std::string(to_string(d.severity))},
              {"code", d.code},
              {"message", d.message}};
    if (d.location) {
      item["file"] = d.location->file.empty() ? std::string(fallback_file) : d.location->file;
      item["line"] = d.location->line;
      item["column"] = d.location->column;
    } else {
      item["file"] = std::string(fallback_file);
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace sosv
