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

#include <cmath>
#include <set>

#include "sosv/dsl.hpp"

namespace sosv {

namespace {

// ---- writing ---------------------------------------------------------------

void put_opt(Json& obj, const char* key, const std::optional<std::string>& value) {
  if (value) obj[key] = *value;
}

template <typename E>
Json enum_array(const std::set<E>& values) {
  Json arr = Json::array();
  for (auto v : values) arr.push_back(std::string(enum_name(v)));
  return arr;
}

Json element_json(const InformationElement& e) {
  Json obj;
  obj["name"] = e.name;
  put_opt(obj, "description", e.description);
  Json fields = Json::array();
  for (const auto& f : e.data_fields) {
    Json fj;
    fj["name"] = f.name;
    put_opt(fj, "units", f.units);
    put_opt(fj, "timeliness", f.timeliness);
    put_opt(fj, "precision", f.precision);
    put_opt(fj, "security_level", f.security_level);
    fields.push_back(std::move(fj));
  }
  obj["data_fields"] = std::move(fields);
  return obj;
}

Json ref_json(const ElementRef& ref) {
  Json obj;
  obj["scope"] = std::string(enum_name(ref.scope));
  obj["name"] = ref.name;
  return obj;
}

Json quantities_json(const ResourceQuantities& q) {
  Json obj = Json::object();
  for (const auto& [name, quantity] : q) {
    Json qj;
    qj["amount"] = quantity.amount;
    qj["unit"] = quantity.unit;
    obj[name] = std::move(qj);
  }
  return obj;
}

Json strings_json(const std::vector<std::string>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v);
  return arr;
}

// ---- reading ---------------------------------------------------------------

struct SchemaError {
  std::string path;
  std::string message;
};

[[noreturn]] void schema_fail(const std::string& path, std::string message) {
  throw SchemaError{path.empty() ? "/" : path, std::move(message)};
}

std::string child(const std::string& path, std::string_view key) {
  // JSON pointer escaping.
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return path + "/" + escaped;
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

// Wraps an object node: required/optional lookups, and rejects unknown keys
// when finished.
class ObjectReader {
 public:
  ObjectReader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) schema_fail(path_, "expected an object");
  }

  const Json* optional(std::string_view key) {
    used_.insert(std::string(key));
    auto it = node_.find(std::string(key));
    return it == node_.end() ? nullptr : &*it;
  }

  const Json& required(std::string_view key) {
    const Json* v = optional(key);
    if (!v) schema_fail(child(path_, key), "missing required key");
    return *v;
  }

  std::string string(std::string_view key) { return as_string(required(key), child(path_, key)); }

  std::optional<std::string> opt_string(std::string_view key) {
    const Json* v = optional(key);
    if (!v) return std::nullopt;
    return as_string(*v, child(path_, key));
  }

  template <typename E>
  E enumeration(std::string_view key) {
    return as_enum<E>(required(key), child(path_, key));
  }

  const std::string& path() const { return path_; }

  void finish() const {
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      if (!used_.count(it.key())) schema_fail(child(path_, it.key()), "unknown key");
    }
  }

  static std::string as_string(const Json& v, const std::string& path) {
    if (!v.is_string()) schema_fail(path, "expected a string");
    return v.get<std::string>();
  }

  template <typename E>
  static E as_enum(const Json& v, const std::string& path) {
    const auto text = as_string(v, path);
    auto value = parse_enum<E>(text);
    if (!value) {
      schema_fail(path, "'" + text + "' is not one of " + enum_choices<E>());
    }
    return *value;
  }

 private:
  const Json& node_;
  std::string path_;
  std::set<std::string> used_;
};

template <typename F>
void for_each_item(const Json& node, const std::string& path, F&& f) {
  if (!node.is_array()) schema_fail(path, "expected an array");
  for (std::size_t i = 0; i < node.size(); ++i) f(node[i], child(path, i));
}

std::vector<std::string> read_strings(ObjectReader& r, std::string_view key) {
  std::vector<std::string> out;
  if (const Json* v = r.optional(key)) {
    for_each_item(*v, child(r.path(), key), [&](const Json& item, const std::string& p) {
      out.push_back(ObjectReader::as_string(item, p));
    });
  }
  return out;
}

template <typename E>
std::set<E> read_enum_set(ObjectReader& r, std::string_view key) {
  std::set<E> out;
  for_each_item(r.required(key), child(r.path(), key), [&](const Json& item, const std::string& p) {
    out.insert(ObjectReader::as_enum<E>(item, p));
  });
  return out;
}

StakeholderConcernModel read_stakeholders(const Json& node, const std::string& path) {
  ObjectReader r(node, path);
  StakeholderConcernModel m;
  if (const Json* v = r.optional("stakeholders")) {
    for_each_item(*v, child(path, "stakeholders"), [&](const Json& item, const std::string& p) {
      ObjectReader s(item, p);
      m.stakeholders.push_back({s.string("name"), s.opt_string("role")});
      s.finish();
    });
  }
  if (const Json* v = r.optional("concerns")) {
    for_each_item(*v, child(path, "concerns"), [&](const Json& item, const std::string& p) {
      ObjectReader c(item, p);
      Concern concern{c.string("id"), c.string("description"), c.opt_string("source"), {}};
      for (auto& id : read_strings(c, "catalog")) concern.catalog_ids.insert(std::move(id));
      m.concerns.push_back(std::move(concern));
      c.finish();
    });
  }
  if (const Json* v = r.optional("has_concern")) {
    for_each_item(*v, child(path, "has_concern"), [&](const Json& item, const std::string& p) {
      ObjectReader h(item, p);
      m.has_concern.push_back({h.string("stakeholder"), h.string("concern")});
      h.finish();
    });
  }
  m.excluded_stakeholders = read_strings(r, "excluded_stakeholders");
  m.unaddressed_concerns = read_strings(r, "unaddressed_concerns");
  r.finish();
  return m;
}

ExecutionTimeContextModel read_execution_context(const Json& node, const std::string& path) {
  ObjectReader r(node, path);
  ExecutionTimeContextModel m;
  if (const Json* v = r.optional("externals")) {
    for_each_item(*v, child(path, "externals"), [&](const Json& item, const std::string& p) {
      ObjectReader e(item, p);
      m.externals.push_back({e.string("name"), e.enumeration<ExternalCategory>("category")});
      e.finish();
    });
  }
  if (const Json* v = r.optional("interactions")) {
    for_each_item(*v, child(path, "interactions"), [&](const Json& item, const std::string& p) {
      ObjectReader i(item, p);
      Interaction it;
      it.self_interface = i.string("self_interface");
      it.external = i.string("external");
      it.external_interface = i.opt_string("external_interface");
      it.kind = i.enumeration<InteractionKind>("kind");
      if (const Json* d = i.optional("data_direction")) {
        it.data_direction = ObjectReader::as_enum<DataDirection>(*d, child(p, "data_direction"));
      }
      it.protocol = i.opt_string("protocol");
      it.direction = i.enumeration<InteractionDirection>("direction");
      if (const Json* s = i.optional("required_at_startup")) {
        if (!s->is_boolean()) schema_fail(child(p, "required_at_startup"), "expected a boolean");
        it.required_at_startup = s->get<bool>();
      }
      it.note = i.opt_string("note");
      m.interactions.push_back(std::move(it));
      i.finish();
    });
  }
  m.startup_sequence_note = r.opt_string("startup_sequence_note");
  m.monitoring_note = r.opt_string("monitoring_note");
  r.finish();
  return m;
}

CodeContextModel read_code_context(const Json& node, const std::string& path) {
  ObjectReader r(node, path);
  CodeContextModel m;
  if (const Json* v = r.optional("external_modules")) {
    for_each_item(*v, child(path, "external_modules"), [&](const Json& item, const std::string& p) {
      ObjectReader e(item, p);
      ExternalModule mod;
      mod.name = e.string("name");
      mod.dependency_types = read_enum_set<DependencyType>(e, "dependency_types");
      mod.version = e.string("version");
      mod.source_kind = e.enumeration<SourceKind>("source_kind");
      mod.category = e.enumeration<ModuleCategory>("category");
      mod.note = e.opt_string("note");
      m.external_modules.push_back(std::move(mod));
      e.finish();
    });
  }
  m.evolution_assumptions = read_strings(r, "evolution_assumptions");
  r.finish();
  return m;
}

std::vector<InformationElement> read_elements(ObjectReader& r, std::string_view key) {
  std::vector<InformationElement> out;
  const Json* v = r.optional(key);
  if (!v) return out;
  for_each_item(*v, child(r.path(), key), [&](const Json& item, const std::string& p) {
    ObjectReader e(item, p);
    InformationElement el;
    el.name = e.string("name");
    el.description = e.opt_string("description");
    if (const Json* fields = e.optional("data_fields")) {
      for_each_item(*fields, child(p, "data_fields"), [&](const Json& fi, const std::string& fp) {
        ObjectReader f(fi, fp);
        el.data_fields.push_back({f.string("name"), f.opt_string("units"), f.opt_string("timeliness"),
                                  f.opt_string("precision"), f.opt_string("security_level")});
        f.finish();
      });
    }
    out.push_back(std::move(el));
    e.finish();
  });
  return out;
}

ElementRef read_ref(const Json& node, const std::string& path) {
  ObjectReader r(node, path);
  ElementRef ref{r.enumeration<ElementScope>("scope"), r.string("name")};
  r.finish();
  return ref;
}

InterfaceInformationModel read_information_model(const Json& node, const std::string& path) {
  ObjectReader r(node, path);
  InterfaceInformationModel m;
  m.sos_elements = read_elements(r, "sos_elements");
  m.system_elements = read_elements(r, "system_elements");
  if (const Json* v = r.optional("relations")) {
    for_each_item(*v, child(path, "relations"), [&](const Json& item, const std::string& p) {
      ObjectReader rel(item, p);
      InfoRelation ir;
      ir.kind = rel.enumeration<RelationKind>("kind");
      ir.from = read_ref(rel.required("from"), child(p, "from"));
      ir.to = read_ref(rel.required("to"), child(p, "to"));
      if (const Json* c = rel.optional("cardinality")) {
        ir.cardinality = ObjectReader::as_enum<Cardinality>(*c, child(p, "cardinality"));
      }
      m.relations.push_back(std::move(ir));
      rel.finish();
    });
  }
  m.unrelated_sos_elements = read_strings(r, "unrelated_sos_elements");
  r.finish();
  return m;
}

SharedResourceModel read_shared_resources(const Json& node, const std::string& path) {
  ObjectReader r(node, path);
  SharedResourceModel m;
  if (const Json* v = r.optional("resources")) {
    for_each_item(*v, child(path, "resources"), [&](const Json& item, const std::string& p) {
      ObjectReader res(item, p);
      m.resources.push_back({res.string("name"), res.enumeration<ResourceKind>("kind"),
                             res.enumeration<Acquisition>("acquisition"),
                             res.opt_string("insufficient_behavior")});
      res.finish();
    });
  }
  if (const Json* v = r.optional("usages")) {
    for_each_item(*v, child(path, "usages"), [&](const Json& item, const std::string& p) {
      ObjectReader u(item, p);
      ResourceUsage usage;
      usage.resource = u.string("resource");
      usage.user = u.string("user");
      usage.user_scope = u.enumeration<UserScope>("user_scope");
      usage.modes = read_enum_set<UsageMode>(u, "modes");
      usage.note = u.opt_string("note");
      m.usages.push_back(std::move(usage));
      u.finish();
    });
  }
  r.finish();
  return m;
}

ResourceQuantities read_quantities(ObjectReader& r, std::string_view key) {
  ResourceQuantities out;
  const Json* v = r.optional(key);
  if (!v) return out;
  const auto path = child(r.path(), key);
  if (!v->is_object()) schema_fail(path, "expected an object");
  for (auto it = v->begin(); it != v->end(); ++it) {
    const auto qpath = child(path, it.key());
    ObjectReader q(it.value(), qpath);
    const Json& amount = q.required("amount");
    if (!amount.is_number()) schema_fail(child(qpath, "amount"), "expected a number");
    out[it.key()] = Quantity{amount.get<double>(), q.string("unit")};
    q.finish();
  }
  return out;
}

DeploymentModel read_deployment(const Json& node, const std::string& path) {
  ObjectReader r(node, path);
  DeploymentModel m;
  if (const Json* v = r.optional("nodes")) {
    for_each_item(*v, child(path, "nodes"), [&](const Json& item, const std::string& p) {
      ObjectReader n(item, p);
      ComputeNode cn;
      cn.name = n.string("name");
      cn.kind = n.enumeration<NodeKind>("kind");
      cn.provides = read_quantities(n, "provides");
      m.nodes.push_back(std::move(cn));
      n.finish();
    });
  }
  if (const Json* v = r.optional("units")) {
    for_each_item(*v, child(path, "units"), [&](const Json& item, const std::string& p) {
      ObjectReader u(item, p);
      ExecutionUnit eu;
      eu.name = u.string("name");
      eu.kind = u.enumeration<UnitKind>("kind");
      eu.needs = read_quantities(u, "needs");
      eu.constraint_note = u.opt_string("constraint_note");
      m.units.push_back(std::move(eu));
      u.finish();
    });
  }
  if (const Json* v = r.optional("allocations")) {
    for_each_item(*v, child(path, "allocations"), [&](const Json& item, const std::string& p) {
      ObjectReader a(item, p);
      m.allocations.push_back({a.string("unit"), a.string("node")});
      a.finish();
    });
  }
  r.finish();
  return m;
}

}  // namespace

Json to_interchange(const ArchitectureView& input) {
  const ArchitectureView view = canonicalize(input);
  Json root;
  root["system"] = view.system_name;
  Json models = Json::object();

  if (const auto& m = view.stakeholder_model) {
    Json j;
    Json stakeholders = Json::array();
    for (const auto& s : m->stakeholders) {
      Json sj;
      sj["name"] = s.name;
      put_opt(sj, "role", s.role_note);
      stakeholders.push_back(std::move(sj));
    }
    j["stakeholders"] = std::move(stakeholders);
    Json concerns = Json::array();
    for (const auto& c : m->concerns) {
      Json cj;
      cj["id"] = c.id;
      cj["description"] = c.description;
      put_opt(cj, "source", c.source_tag);
      Json ids = Json::array();
      for (const auto& id : c.catalog_ids) ids.push_back(id);
      cj["catalog"] = std::move(ids);
      concerns.push_back(std::move(cj));
    }
    j["concerns"] = std::move(concerns);
    Json pairs = Json::array();
    for (const auto& h : m->has_concern) {
      Json hj;
      hj["stakeholder"] = h.stakeholder;
      hj["concern"] = h.concern;
      pairs.push_back(std::move(hj));
    }
    j["has_concern"] = std::move(pairs);
    j["excluded_stakeholders"] = strings_json(m->excluded_stakeholders);
    j["unaddressed_concerns"] = strings_json(m->unaddressed_concerns);
    models["stakeholders"] = std::move(j);
  }

  if (const auto& m = view.execution_context) {
    Json j;
    Json externals = Json::array();
    for (const auto& e : m->externals) {
      Json ej;
      ej["name"] = e.name;
      ej["category"] = std::string(enum_name(e.category));
      externals.push_back(std::move(ej));
    }
    j["externals"] = std::move(externals);
    Json interactions = Json::array();
    for (const auto& i : m->interactions) {
      Json ij;
      ij["self_interface"] = i.self_interface;
      ij["external"] = i.external;
      put_opt(ij, "external_interface", i.external_interface);
      ij["kind"] = std::string(enum_name(i.kind));
      if (i.data_direction) ij["data_direction"] = std::string(enum_name(*i.data_direction));
      put_opt(ij, "protocol", i.protocol);
      ij["direction"] = std::string(enum_name(i.direction));
      ij["required_at_startup"] = i.required_at_startup;
      put_opt(ij, "note", i.note);
      interactions.push_back(std::move(ij));
    }
    j["interactions"] = std::move(interactions);
    put_opt(j, "startup_sequence_note", m->startup_sequence_note);
    put_opt(j, "monitoring_note", m->monitoring_note);
    models["execution-context"] = std::move(j);
  }

  if (const auto& m = view.code_context) {
    Json j;
    Json modules = Json::array();
    for (const auto& mod : m->external_modules) {
      Json mj;
      mj["name"] = mod.name;
      mj["dependency_types"] = enum_array(mod.dependency_types);
      mj["version"] = mod.version;
      mj["source_kind"] = std::string(enum_name(mod.source_kind));
      mj["category"] = std::string(enum_name(mod.category));
      put_opt(mj, "note", mod.note);
      modules.push_back(std::move(mj));
    }
    j["external_modules"] = std::move(modules);
    j["evolution_assumptions"] = strings_json(m->evolution_assumptions);
    models["code-context"] = std::move(j);
  }

  if (const auto& m = view.information_model) {
    Json j;
    Json sos = Json::array();
    for (const auto& e : m->sos_elements) sos.push_back(element_json(e));
    j["sos_elements"] = std::move(sos);
    Json system = Json::array();
    for (const auto& e : m->system_elements) system.push_back(element_json(e));
    j["system_elements"] = std::move(system);
    Json relations = Json::array();
    for (const auto& r : m->relations) {
      Json rj;
      rj["kind"] = std::string(enum_name(r.kind));
      rj["from"] = ref_json(r.from);
      rj["to"] = ref_json(r.to);
      if (r.cardinality) rj["cardinality"] = std::string(enum_name(*r.cardinality));
      relations.push_back(std::move(rj));
    }
    j["relations"] = std::move(relations);
    j["unrelated_sos_elements"] = strings_json(m->unrelated_sos_elements);
    models["information-model"] = std::move(j);
  }

  if (const auto& m = view.shared_resources) {
    Json j;
    Json resources = Json::array();
    for (const auto& r : m->resources) {
      Json rj;
      rj["name"] = r.name;
      rj["kind"] = std::string(enum_name(r.kind));
      rj["acquisition"] = std::string(enum_name(r.acquisition));
      put_opt(rj, "insufficient_behavior", r.insufficient_behavior);
      resources.push_back(std::move(rj));
    }
    j["resources"] = std::move(resources);
    Json usages = Json::array();
    for (const auto& u : m->usages) {
      Json uj;
      uj["resource"] = u.resource;
      uj["user"] = u.user;
      uj["user_scope"] = std::string(enum_name(u.user_scope));
      uj["modes"] = enum_array(u.modes);
      put_opt(uj, "note", u.note);
      usages.push_back(std::move(uj));
    }
    j["usages"] = std::move(usages);
    models["shared-resources"] = std::move(j);
  }

  if (const auto& m = view.deployment) {
    Json j;
    Json nodes = Json::array();
    for (const auto& n : m->nodes) {
      Json nj;
      nj["name"] = n.name;
      nj["kind"] = std::string(enum_name(n.kind));
      nj["provides"] = quantities_json(n.provides);
      nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    Json units = Json::array();
    for (const auto& u : m->units) {
      Json uj;
      uj["name"] = u.name;
      uj["kind"] = std::string(enum_name(u.kind));
      uj["needs"] = quantities_json(u.needs);
      put_opt(uj, "constraint_note", u.constraint_note);
      units.push_back(std::move(uj));
    }
    j["units"] = std::move(units);
    Json allocations = Json::array();
    for (const auto& a : m->allocations) {
      Json aj;
      aj["unit"] = a.unit;
      aj["node"] = a.node;
      allocations.push_back(std::move(aj));
    }
    j["allocations"] = std::move(allocations);
    models["deployment"] = std::move(j);
  }

  root["models"] = std::move(models);
  return root;
}

ParseOutcome from_interchange(const Json& tree, std::string_view origin) {
  ParseOutcome out;
  try {
    ObjectReader root(tree, "");
    ArchitectureView view;
    view.origin.file = std::string(origin);
    view.system_name = root.string("system");
    view.origin.label = view.system_name;
    ObjectReader models(root.required("models"), "/models");
    auto section = [&](ModelKind kind) { return models.optional(enum_name(kind)); };
    auto path = [](ModelKind kind) { return child("/models", enum_name(kind)); };
    if (const Json* m = section(ModelKind::stakeholders)) {
      view.stakeholder_model = read_stakeholders(*m, path(ModelKind::stakeholders));
    }
    if (const Json* m = section(ModelKind::execution_context)) {
      view.execution_context = read_execution_context(*m, path(ModelKind::execution_context));
    }
    if (const Json* m = section(ModelKind::code_context)) {
      view.code_context = read_code_context(*m, path(ModelKind::code_context));
    }
    if (const Json* m = section(ModelKind::information_model)) {
      view.information_model = read_information_model(*m, path(ModelKind::information_model));
    }
    if (const Json* m = section(ModelKind::shared_resources)) {
      view.shared_resources = read_shared_resources(*m, path(ModelKind::shared_resources));
    }
    if (const Json* m = section(ModelKind::deployment)) {
      view.deployment = read_deployment(*m, path(ModelKind::deployment));
    }
    models.finish();
    root.finish();
    out.view = std::move(view);
  } catch (const SchemaError& e) {
    out.diagnostics.push_back(
        make_error("E-IX-SCHEMA", "at " + e.path + ": " + e.message,
                   Location{std::string(origin), 1, 1}));
  }
  return out;
}

std::string dump_interchange(const Json& tree) { return tree.dump(2) + "\n"; }

}  // namespace sosv
