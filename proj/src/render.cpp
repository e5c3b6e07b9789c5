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

#include "sosv/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sosv {

namespace {

[[noreturn]] void absent(const ArchitectureView& view, ModelKind kind) {
  throw DiagnosticError(make_error("E-RND-ABSENT", "'" + view.system_name + "' has no " +
                                                       std::string(enum_name(kind)) + " model"));
}

[[noreturn]] void illegal(ModelKind kind, std::string_view notation) {
  throw DiagnosticError(make_error("E-RND-NOTATION",
                                   std::string(notation) + " notation is not available for " +
                                       std::string(enum_name(kind))));
}

std::string cell_text(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n' || c == '\r') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

std::string opt(const std::optional<std::string>& v) { return v ? cell_text(*v) : ""; }

template <typename E>
std::string join_enums(const std::set<E>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : ", ") + std::string(enum_name(v));
  return out;
}

std::string join(const std::vector<std::string>& values, std::string_view sep = ", ") {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += v;
  }
  return out;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::string out = row_text(header_);
    out += "|";
    for (std::size_t i = 0; i < header_.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& r : rows_) out += row_text(r);
    return out;
  }

 private:
  static std::string row_text(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    return out + "\n";
  }
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// --- stakeholders -----------------------------------------------------------

std::string stakeholders_markdown(const StakeholderConcernModel& m, Notation notation,
                                  const ArchitectureView& view) {
  std::ostringstream out;
  std::map<std::string, std::vector<std::string>> by_stakeholder, by_concern;
  for (const auto& h : m.has_concern) {
    by_stakeholder[h.stakeholder].push_back(h.concern);
    by_concern[h.concern].push_back(h.stakeholder);
  }
  switch (notation) {
    case Notation::matrix:
      out << matrix_markdown(stakeholder_matrix(view), "Stakeholder");
      break;
    case Notation::list:
      for (const auto& s : m.stakeholders) {
        out << "- " << s.name;
        if (s.role_note) out << " (" << *s.role_note << ")";
        const auto& concerns = by_stakeholder[s.name];
        if (!concerns.empty()) out << ": " << join(concerns);
        out << "\n";
      }
      if (!m.concerns.empty()) out << "\nConcerns:\n\n";
      for (const auto& c : m.concerns) {
        out << "- " << c.id << ": " << c.description;
        if (c.source_tag) out << " [" << *c.source_tag << "]";
        out << "\n";
      }
      break;
    case Notation::table: {
      Table t({"Concern", "Stakeholders", "Description", "Source", "Catalog"});
      for (const auto& c : m.concerns) {
        std::vector<std::string> ids(c.catalog_ids.begin(), c.catalog_ids.end());
        t.add({cell_text(c.id), cell_text(join(by_concern[c.id])), cell_text(c.description),
               opt(c.source_tag), join(ids)});
      }
      out << t.str();
      break;
    }
  }
  if (!m.excluded_stakeholders.empty()) {
    out << "\nExcluded stakeholders: " << join(m.excluded_stakeholders) << "\n";
  }
  if (!m.unaddressed_concerns.empty()) {
    out << "\nUnaddressed concerns: " << join(m.unaddressed_concerns) << "\n";
  }
  return out.str();
}

// --- execution context ------------------------------------------------------

std::string interaction_summary(const Interaction& i) {
  std::string out = std::string(enum_name(i.kind));
  if (i.data_direction) out += " (" + std::string(enum_name(*i.data_direction)) + ")";
  if (i.protocol) out += ", " + *i.protocol;
  out += ", " + std::string(enum_name(i.direction));
  if (i.required_at_startup) out += ", required at startup";
  return out;
}

std::string execution_markdown(const ExecutionTimeContextModel& m, Notation notation,
                               const ArchitectureView& view) {
  std::ostringstream out;
  switch (notation) {
    case Notation::matrix:
      out << matrix_markdown(render_sr_matrix(view), "Interface");
      out << "\nS: the constituent interface sends. R: it receives. SR: both.\n";
      break;
    case Notation::list:
      for (const auto& e : m.externals) {
        out << "- " << e.name << " (" << enum_name(e.category) << ")\n";
        for (const auto& i : m.interactions) {
          if (i.external != e.name) continue;
          out << "  - " << i.self_interface;
          if (i.external_interface) out << " / " << *i.external_interface;
          out << ": " << interaction_summary(i);
          if (i.note) out << "; " << *i.note;
          out << "\n";
        }
      }
      break;
    case Notation::table: {
      Table t({"External system", "Category", "Interface", "External interface", "Kind",
               "Protocol", "Direction", "Startup", "Note"});
      for (const auto& e : m.externals) {
        bool any = false;
        for (const auto& i : m.interactions) {
          if (i.external != e.name) continue;
          any = true;
          std::string kind(enum_name(i.kind));
          if (i.data_direction) kind += " (" + std::string(enum_name(*i.data_direction)) + ")";
          t.add({cell_text(e.name), std::string(enum_name(e.category)),
                 cell_text(i.self_interface), opt(i.external_interface), kind, opt(i.protocol),
                 std::string(enum_name(i.direction)), i.required_at_startup ? "yes" : "no",
                 opt(i.note)});
        }
        if (!any) t.add({cell_text(e.name), std::string(enum_name(e.category)), "", "", "", "", "", "", ""});
      }
      out << t.str();
      break;
    }
  }
  if (m.startup_sequence_note) out << "\nStartup: " << *m.startup_sequence_note << "\n";
  if (m.monitoring_note) out << "\nMonitoring: " << *m.monitoring_note << "\n";
  return out.str();
}

// --- code context -----------------------------------------------------------

std::string code_markdown(const CodeContextModel& m, Notation notation) {
  std::ostringstream out;
  if (notation == Notation::list) {
    for (const auto& mod : m.external_modules) {
      out << "- " << mod.name << ": " << join_enums(mod.dependency_types) << "; version "
          << mod.version << "; " << enum_name(mod.source_kind) << "; " << enum_name(mod.category);
      if (mod.note) out << "; " << *mod.note;
      out << "\n";
    }
  } else {
    Table t({"Module", "Dependency types", "Version", "Source", "Category", "Note"});
    for (const auto& mod : m.external_modules) {
      t.add({cell_text(mod.name), join_enums(mod.dependency_types), cell_text(mod.version),
             std::string(enum_name(mod.source_kind)), std::string(enum_name(mod.category)),
             opt(mod.note)});
    }
    out << t.str();
  }
  if (!m.evolution_assumptions.empty()) {
    out << "\nEvolution assumptions:\n\n";
    for (const auto& a : m.evolution_assumptions) out << "- " << a << "\n";
  }
  return out.str();
}

// --- information model ------------------------------------------------------

std::string field_text(const DataField& f) {
  std::vector<std::string> props;
  if (f.units) props.push_back("units " + *f.units);
  if (f.timeliness) props.push_back("timeliness " + *f.timeliness);
  if (f.precision) props.push_back("precision " + *f.precision);
  if (f.security_level) props.push_back("security " + *f.security_level);
  return props.empty() ? f.name : f.name + " (" + join(props, "; ") + ")";
}

std::string information_markdown(const InterfaceInformationModel& m) {
  std::ostringstream out;
  Table elements({"Element", "Scope", "Description", "Fields"});
  auto add = [&](const std::vector<InformationElement>& list, ElementScope scope) {
    for (const auto& e : list) {
      std::vector<std::string> fields;
      for (const auto& f : e.data_fields) fields.push_back(field_text(f));
      elements.add({cell_text(e.name), std::string(enum_name(scope)), opt(e.description),
                    cell_text(join(fields))});
    }
  };
  add(m.sos_elements, ElementScope::sos);
  add(m.system_elements, ElementScope::system);
  out << elements.str();
  if (!m.relations.empty()) {
    Table relations({"Relation", "From", "To", "Cardinality"});
    for (const auto& r : m.relations) {
      relations.add({std::string(enum_name(r.kind)), cell_text(to_string(r.from)),
                     cell_text(to_string(r.to)),
                     r.cardinality ? std::string(enum_name(*r.cardinality)) : ""});
    }
    out << "\n" << relations.str();
  }
  if (!m.unrelated_sos_elements.empty()) {
    out << "\nUnrelated SoS elements: " << join(m.unrelated_sos_elements) << "\n";
  }
  return out.str();
}

// --- shared resources -------------------------------------------------------

std::string shared_markdown(const SharedResourceModel& m) {
  std::ostringstream out;
  Table resources({"Resource", "Kind", "Acquisition", "When insufficient"});
  for (const auto& r : m.resources) {
    resources.add({cell_text(r.name), std::string(enum_name(r.kind)),
                   std::string(enum_name(r.acquisition)), opt(r.insufficient_behavior)});
  }
  out << resources.str();
  if (!m.usages.empty()) {
    Table usages({"Resource", "User", "Scope", "Modes", "Note"});
    for (const auto& u : m.usages) {
      usages.add({cell_text(u.resource), cell_text(u.user), std::string(enum_name(u.user_scope)),
                  join_enums(u.modes), opt(u.note)});
    }
    out << "\n" << usages.str();
  }
  return out.str();
}

// --- deployment -------------------------------------------------------------

std::string quantities_text(const ResourceQuantities& q) {
  std::vector<std::string> parts;
  for (const auto& [name, amount] : q) {
    parts.push_back(name + " " + format_number(amount.amount) + " " + amount.unit);
  }
  return cell_text(join(parts));
}

std::string deployment_markdown(const DeploymentModel& m) {
  std::ostringstream out;
  Table nodes({"Node", "Kind", "Provides"});
  for (const auto& n : m.nodes) {
    nodes.add({cell_text(n.name), std::string(enum_name(n.kind)), quantities_text(n.provides)});
  }
  out << nodes.str();
  if (!m.units.empty()) {
    std::map<std::string, std::vector<std::string>> hosts;
    for (const auto& a : m.allocations) hosts[a.unit].push_back(a.node);
    Table units({"Unit", "Kind", "Needs", "Executes on", "Constraint"});
    for (const auto& u : m.units) {
      units.add({cell_text(u.name), std::string(enum_name(u.kind)), quantities_text(u.needs),
                 cell_text(join(hosts[u.name])), opt(u.constraint_note)});
    }
    out << "\n" << units.str();
  }
  return out.str();
}

// --- DOT ----------------------------------------------------------------------

std::string dot_string(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        break;
      default:
        out += c;
    }
  }
  return out + "\"";
}

class DotGraph {
 public:
  explicit DotGraph(std::string_view name) : name_(name) {}

  // Returns the node id; repeated labels in the same role share one node.
  std::string node(const std::string& role, const std::string& label, std::string_view attrs = {}) {
    auto key = std::make_pair(role, label);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const std::string id = "n" + std::to_string(ids_.size());
    ids_.emplace(key, id);
    std::string line = "  " + id + " [label=" + dot_string(label);
    if (!attrs.empty()) line += ", " + std::string(attrs);
    nodes_.push_back(line + "];");
    return id;
  }

  void edge(const std::string& from, const std::string& to, std::string_view label,
            std::string_view attrs = {}) {
    std::string line = "  " + from + " -> " + to;
    std::vector<std::string> parts;
    if (!label.empty()) parts.push_back("label=" + dot_string(label));
    if (!attrs.empty()) parts.emplace_back(attrs);
    if (!parts.empty()) line += " [" + join(parts) + "]";
    edges_.push_back(line + ";");
  }

  std::string str() const {
    std::string out = "digraph " + dot_string(name_) + " {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=box, fontname=\"Helvetica\"];\n";
    for (const auto& n : nodes_) out += n + "\n";
    for (const auto& e : edges_) out += e + "\n";
    return out + "}\n";
  }

 private:
  std::string name_;
  std::map<std::pair<std::string, std::string>, std::string> ids_;
  std::vector<std::string> nodes_;
  std::vector<std::string> edges_;
};

constexpr std::string_view kSystemAttrs = "shape=doubleoctagon, style=bold";

}  // namespace

// ---------------------------------------------------------------------------

const std::string& Matrix::at(const std::string& row, const std::string& column) const {
  static const std::string kEmpty;
  auto r = std::find(rows.begin(), rows.end(), row);
  auto c = std::find(columns.begin(), columns.end(), column);
  if (r == rows.end() || c == columns.end()) return kEmpty;
  return cells[static_cast<std::size_t>(r - rows.begin())][static_cast<std::size_t>(c - columns.begin())];
}

std::string matrix_markdown(const Matrix& matrix, std::string_view corner) {
  std::vector<std::string> header{cell_text(corner)};
  for (const auto& c : matrix.columns) header.push_back(cell_text(c));
  Table t(std::move(header));
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    std::vector<std::string> row{cell_text(matrix.rows[r])};
    for (const auto& c : matrix.cells[r]) row.push_back(c);
    t.add(std::move(row));
  }
  return t.str();
}

bool notation_allowed(ModelKind kind, Notation notation) {
  switch (notation) {
    case Notation::table:
      return true;
    case Notation::list:
      return kind == ModelKind::stakeholders || kind == ModelKind::execution_context ||
             kind == ModelKind::code_context;
    case Notation::matrix:
      return kind == ModelKind::stakeholders || kind == ModelKind::execution_context;
  }
  return false;
}

std::string render_markdown(const ArchitectureView& input, ModelKind kind, Notation notation) {
  if (!notation_allowed(kind, notation)) illegal(kind, enum_name(notation));
  if (!input.has_non_empty_model(kind)) absent(input, kind);
  const ArchitectureView view = [&] {
    auto v = canonicalize(input);
    v.origin = input.origin;
    return v;
  }();
  std::string body;
  switch (kind) {
    case ModelKind::stakeholders:
      body = stakeholders_markdown(*view.stakeholder_model, notation, view);
      break;
    case ModelKind::execution_context:
      body = execution_markdown(*view.execution_context, notation, view);
      break;
    case ModelKind::code_context:
      body = code_markdown(*view.code_context, notation);
      break;
    case ModelKind::information_model:
      body = information_markdown(*view.information_model);
      break;
    case ModelKind::shared_resources:
      body = shared_markdown(*view.shared_resources);
      break;
    case ModelKind::deployment:
      body = deployment_markdown(*view.deployment);
      break;
  }
  return "## " + view.system_name + ": " + std::string(enum_name(kind)) + "\n\n" + body;
}

Matrix render_sr_matrix(const ArchitectureView& view) {
  if (!view.execution_context) absent(view, ModelKind::execution_context);
  std::map<std::pair<std::string, std::string>, std::pair<bool, bool>> marks;
  std::set<std::string> rows, columns;
  for (const auto& i : view.execution_context->interactions) {
    const std::string column =
        i.external_interface ? i.external + ": " + *i.external_interface : i.external;
    rows.insert(i.self_interface);
    columns.insert(column);
    auto& [sends, receives] = marks[{i.self_interface, column}];
    (i.direction == InteractionDirection::constituent_initiated ? sends : receives) = true;
  }
  Matrix m;
  m.rows.assign(rows.begin(), rows.end());
  m.columns.assign(columns.begin(), columns.end());
  for (const auto& r : m.rows) {
    std::vector<std::string> line;
    for (const auto& c : m.columns) {
      std::string cell;
      if (auto it = marks.find({r, c}); it != marks.end()) {
        if (it->second.first) cell += "S";
        if (it->second.second) cell += "R";
      }
      line.push_back(std::move(cell));
    }
    m.cells.push_back(std::move(line));
  }
  return m;
}

Matrix stakeholder_matrix(const ArchitectureView& view) {
  if (!view.stakeholder_model) absent(view, ModelKind::stakeholders);
  const auto& sm = *view.stakeholder_model;
  std::set<std::string> rows, columns;
  for (const auto& s : sm.stakeholders) rows.insert(s.name);
  for (const auto& c : sm.concerns) columns.insert(c.id);
  std::set<HasConcern> has(sm.has_concern.begin(), sm.has_concern.end());
  Matrix m;
  m.rows.assign(rows.begin(), rows.end());
  m.columns.assign(columns.begin(), columns.end());
  for (const auto& r : m.rows) {
    std::vector<std::string> line;
    for (const auto& c : m.columns) line.push_back(has.count({r, c}) ? "x" : "");
    m.cells.push_back(std::move(line));
  }
  return m;
}

std::string render_dot(const ArchitectureView& input, ModelKind kind) {
  if (kind == ModelKind::stakeholders || kind == ModelKind::information_model) {
    illegal(kind, "dot");
  }
  if (!input.has_model(kind)) absent(input, kind);
  const ArchitectureView view = canonicalize(input);
  DotGraph g(view.system_name + " " + std::string(enum_name(kind)));
  const auto system = g.node("system", view.system_name, kSystemAttrs);

  switch (kind) {
    case ModelKind::execution_context: {
      const auto& m = *view.execution_context;
      for (const auto& e : m.externals) {
        g.node("external", e.name,
               e.category == ExternalCategory::platform ? "shape=box3d" : "shape=box");
      }
      for (const auto& i : m.interactions) {
        const auto ext = g.node("external", i.external, "shape=box");
        const std::string label = i.protocol ? *i.protocol : std::string(enum_name(i.kind));
        std::string attrs = "tooltip=" + dot_string(i.self_interface);
        if (i.required_at_startup) attrs += ", style=bold";
        if (i.direction == InteractionDirection::constituent_initiated) {
          g.edge(system, ext, label, attrs);
        } else {
          g.edge(ext, system, label, attrs);
        }
      }
      break;
    }
    case ModelKind::code_context:
      for (const auto& mod : view.code_context->external_modules) {
        const auto id = g.node("module", mod.name, "shape=component");
        g.edge(system, id, join_enums(mod.dependency_types));
      }
      break;
    case ModelKind::deployment: {
      const auto& m = *view.deployment;
      for (const auto& n : m.nodes) {
        g.node("node", n.name, n.kind == NodeKind::network ? "shape=hexagon" : "shape=box3d");
      }
      for (const auto& u : m.units) {
        const auto id = g.node("unit", u.name, "shape=box");
        g.edge(system, id, "", "style=dashed, arrowhead=none");
      }
      for (const auto& a : m.allocations) {
        g.edge(g.node("unit", a.unit, "shape=box"), g.node("node", a.node, "shape=box3d"),
               "executes on");
      }
      break;
    }
    case ModelKind::shared_resources: {
      const auto& m = *view.shared_resources;
      for (const auto& r : m.resources) g.node("resource", r.name, "shape=cylinder");
      for (const auto& u : m.usages) {
        const bool external = u.user_scope == UserScope::external;
        const auto user = g.node(external ? "external-user" : "user", u.user,
                                 external ? "shape=ellipse, style=dashed" : "shape=ellipse");
        if (!external) g.edge(system, user, "", "style=dashed, arrowhead=none");
        g.edge(user, g.node("resource", u.resource, "shape=cylinder"), join_enums(u.modes));
      }
      break;
    }
    default:
      break;
  }
  return g.str();
}

// ---------------------------------------------------------------------------
// Reports

std::string render_coverage(const CoverageReport& report) {
  Table t({"Concern", "Status", "Quality", "Present", "Missing", "Stakeholders"});
  for (const auto& e : report.entries) {
    t.add({e.concern_id, std::string(to_string(e.status)), std::string(enum_name(e.quality)),
           join_enums(e.present_kinds), join_enums(e.missing_kinds),
           join_enums(e.impacted_stakeholders)});
  }
  return t.str();
}

std::string render_startup(const StartupResult& result) {
  std::string out;
  if (!result.ok()) {
    out = "cycle: " + join(result.cycle, " -> ") + " -> " + result.cycle.front() + "\n";
    return out;
  }
  for (std::size_t i = 0; i < result.order.size(); ++i) {
    out += std::to_string(i + 1) + ". " + result.order[i] + "\n";
  }
  return out;
}

std::string render_contention(const ContentionMatrix& matrix) {
  std::vector<std::string> header{"Resource"};
  for (const auto& c : matrix.columns) header.push_back(cell_text(to_string(c)));
  Table t(std::move(header));
  for (const auto& r : matrix.rows) {
    std::vector<std::string> row{cell_text(r)};
    for (const auto& c : matrix.columns) {
      const auto* modes = matrix.cell(r, c);
      row.push_back(modes ? join_enums(*modes) : "");
    }
    t.add(std::move(row));
  }
  std::string out = t.str();
  if (!matrix.conflicts.empty()) {
    out += "\nConflicts:\n\n";
    for (const auto& c : matrix.conflicts) {
      std::vector<std::string> users;
      for (const auto& u : c.users) users.push_back(to_string(u));
      out += "- " + c.resource + ": " + c.reason + " (" + join(users, "; ") + ")\n";
    }
  }
  return out;
}

std::string render_gap(const GapReport& report) {
  std::string out = "Element: " + report.element + "\n\n";
  Table t({"Required", "Field", "Match"});
  for (const auto& m : report.matched) {
    t.add({cell_text(m.required), cell_text(m.field), std::string(to_string(m.via))});
  }
  for (const auto& m : report.missing) t.add({cell_text(m), "", "missing"});
  out += t.str();
  out += "\nMissing: " + (report.missing.empty() ? std::string("none") : join(report.missing)) + "\n";
  return out;
}

}  // namespace sosv
