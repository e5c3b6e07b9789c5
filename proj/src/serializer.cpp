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

#include <charconv>
#include <cstdio>
#include <sstream>

#include "sosv/dsl.hpp"

namespace sosv {

std::string quote(std::string_view text) {
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
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "0";
  return std::string(buf, ptr);
}

namespace {

class Writer {
 public:
  void line(int depth, const std::string& text) {
    out_ << std::string(static_cast<std::size_t>(depth) * 2, ' ') << text << '\n';
  }
  void blank() { out_ << '\n'; }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

template <typename E>
std::string join_enums(const std::set<E>& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += ", ";
    out += enum_name(v);
  }
  return out;
}

std::string ref_text(const ElementRef& ref) {
  return (ref.scope == ElementScope::sos ? "sos " : "") + quote(ref.name);
}

void opt_line(Writer& w, int depth, std::string_view key, const std::optional<std::string>& v) {
  if (v) w.line(depth, std::string(key) + " " + quote(*v));
}

void write_stakeholders(Writer& w, const StakeholderConcernModel& m) {
  w.line(1, "stakeholders {");
  for (const auto& s : m.stakeholders) {
    if (s.role_note) {
      w.line(2, "stakeholder " + quote(s.name) + " {");
      w.line(3, "role " + quote(*s.role_note));
      w.line(2, "}");
    } else {
      w.line(2, "stakeholder " + quote(s.name));
    }
  }
  for (const auto& c : m.concerns) {
    w.line(2, "concern " + quote(c.id) + " {");
    w.line(3, "description " + quote(c.description));
    opt_line(w, 3, "source", c.source_tag);
    if (!c.catalog_ids.empty()) {
      std::string ids;
      for (const auto& id : c.catalog_ids) ids += (ids.empty() ? "" : ", ") + id;
      w.line(3, "catalog " + ids);
    }
    w.line(2, "}");
  }
  for (const auto& h : m.has_concern) {
    w.line(2, "has " + quote(h.stakeholder) + " -> " + quote(h.concern));
  }
  for (const auto& e : m.excluded_stakeholders) w.line(2, "excluded " + quote(e));
  for (const auto& u : m.unaddressed_concerns) w.line(2, "unaddressed " + quote(u));
  w.line(1, "}");
}

void write_execution_context(Writer& w, const ExecutionTimeContextModel& m) {
  w.line(1, "execution-context {");
  for (const auto& e : m.externals) {
    w.line(2, "external " + quote(e.name) + " " + std::string(enum_name(e.category)));
  }
  for (const auto& i : m.interactions) {
    w.line(2, "interaction {");
    w.line(3, "self " + quote(i.self_interface));
    w.line(3, "external " + quote(i.external));
    opt_line(w, 3, "external-interface", i.external_interface);
    w.line(3, "kind " + std::string(enum_name(i.kind)));
    if (i.data_direction) w.line(3, "data " + std::string(enum_name(*i.data_direction)));
    opt_line(w, 3, "protocol", i.protocol);
    w.line(3, "direction " + std::string(enum_name(i.direction)));
    if (i.required_at_startup) w.line(3, "startup");
    opt_line(w, 3, "note", i.note);
    w.line(2, "}");
  }
  opt_line(w, 2, "startup-sequence", m.startup_sequence_note);
  opt_line(w, 2, "monitoring", m.monitoring_note);
  w.line(1, "}");
}

void write_code_context(Writer& w, const CodeContextModel& m) {
  w.line(1, "code-context {");
  for (const auto& mod : m.external_modules) {
    w.line(2, "module " + quote(mod.name) + " {");
    w.line(3, "uses " + join_enums(mod.dependency_types));
    w.line(3, "version " + quote(mod.version));
    w.line(3, "source " + std::string(enum_name(mod.source_kind)));
    w.line(3, "category " + std::string(enum_name(mod.category)));
    opt_line(w, 3, "note", mod.note);
    w.line(2, "}");
  }
  for (const auto& a : m.evolution_assumptions) w.line(2, "assumption " + quote(a));
  w.line(1, "}");
}

void write_element(Writer& w, std::string_view keyword, const InformationElement& e) {
  const std::string head = std::string(keyword) + " " + quote(e.name);
  if (!e.description && e.data_fields.empty()) {
    w.line(2, head);
    return;
  }
  w.line(2, head + " {");
  opt_line(w, 3, "description", e.description);
  for (const auto& f : e.data_fields) {
    if (!f.units && !f.timeliness && !f.precision && !f.security_level) {
      w.line(3, "field " + quote(f.name));
      continue;
    }
    w.line(3, "field " + quote(f.name) + " {");
    opt_line(w, 4, "units", f.units);
    opt_line(w, 4, "timeliness", f.timeliness);
    opt_line(w, 4, "precision", f.precision);
    opt_line(w, 4, "security", f.security_level);
    w.line(3, "}");
  }
  w.line(2, "}");
}

void write_information_model(Writer& w, const InterfaceInformationModel& m) {
  w.line(1, "information-model {");
  for (const auto& e : m.sos_elements) write_element(w, "sos-element", e);
  for (const auto& e : m.system_elements) write_element(w, "element", e);
  for (const auto& r : m.relations) {
    std::string text = std::string(enum_name(r.kind)) + " " + ref_text(r.from) + " -> " +
                       ref_text(r.to);
    if (r.cardinality) text += " " + std::string(enum_name(*r.cardinality));
    w.line(2, text);
  }
  for (const auto& u : m.unrelated_sos_elements) w.line(2, "unrelated " + quote(u));
  w.line(1, "}");
}

void write_shared_resources(Writer& w, const SharedResourceModel& m) {
  w.line(1, "shared-resources {");
  for (const auto& r : m.resources) {
    w.line(2, "resource " + quote(r.name) + " {");
    w.line(3, "kind " + std::string(enum_name(r.kind)));
    w.line(3, "acquisition " + std::string(enum_name(r.acquisition)));
    opt_line(w, 3, "insufficient", r.insufficient_behavior);
    w.line(2, "}");
  }
  for (const auto& u : m.usages) {
    w.line(2, "usage " + quote(u.resource) + " {");
    w.line(3, "user " + quote(u.user));
    w.line(3, "scope " + std::string(enum_name(u.user_scope)));
    w.line(3, "modes " + join_enums(u.modes));
    opt_line(w, 3, "note", u.note);
    w.line(2, "}");
  }
  w.line(1, "}");
}

std::string quantity_text(const std::string& resource, const Quantity& q) {
  return quote(resource) + " " + format_number(q.amount) + " " + quote(q.unit);
}

void write_deployment(Writer& w, const DeploymentModel& m) {
  w.line(1, "deployment {");
  for (const auto& n : m.nodes) {
    const std::string head = "node " + quote(n.name) + " " + std::string(enum_name(n.kind));
    if (n.provides.empty()) {
      w.line(2, head);
      continue;
    }
    w.line(2, head + " {");
    for (const auto& [res, q] : n.provides) w.line(3, "provides " + quantity_text(res, q));
    w.line(2, "}");
  }
  for (const auto& u : m.units) {
    const std::string head = "unit " + quote(u.name) + " " + std::string(enum_name(u.kind));
    if (u.needs.empty() && !u.constraint_note) {
      w.line(2, head);
      continue;
    }
    w.line(2, head + " {");
    for (const auto& [res, q] : u.needs) w.line(3, "needs " + quantity_text(res, q));
    opt_line(w, 3, "constraint", u.constraint_note);
    w.line(2, "}");
  }
  for (const auto& a : m.allocations) {
    w.line(2, "allocate " + quote(a.unit) + " -> " + quote(a.node));
  }
  w.line(1, "}");
}

}  // namespace

std::string serialize(const ArchitectureView& input) {
  const ArchitectureView view = canonicalize(input);
  const std::string& label = input.origin.label.empty() ? view.system_name : input.origin.label;
  Writer w;
  w.line(0, "view " + quote(label) + " {");
  w.line(1, "system " + quote(view.system_name));
  if (view.stakeholder_model) {
    w.blank();
    write_stakeholders(w, *view.stakeholder_model);
  }
  if (view.execution_context) {
    w.blank();
    write_execution_context(w, *view.execution_context);
  }
  if (view.code_context) {
    w.blank();
    write_code_context(w, *view.code_context);
  }
  if (view.information_model) {
    w.blank();
    write_information_model(w, *view.information_model);
  }
  if (view.shared_resources) {
    w.blank();
    write_shared_resources(w, *view.shared_resources);
  }
  if (view.deployment) {
    w.blank();
    write_deployment(w, *view.deployment);
  }
  w.line(0, "}");
  return w.str();
}

}  // namespace sosv
