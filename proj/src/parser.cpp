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

#include <functional>
#include <set>
#include <utility>

#include "lexer.hpp"
#include "sosv/catalog.hpp"
#include "sosv/dsl.hpp"

namespace sosv {

namespace {

using detail::SyntaxError;
using detail::Token;
using detail::TokenKind;

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  ArchitectureView run() {
    ArchitectureView view;
    view.origin.file = file_;
    const Token& head = expect_keyword("view");
    view.origin.label = expect_string().text;
    expect(TokenKind::lbrace);
    const Token& sys = expect_keyword("system");
    view.system_name = expect_string().text;
    view.origin.spans["system"] = span_from(sys);

    std::set<ModelKind> seen;
    while (!at(TokenKind::rbrace)) {
      const Token& kw = expect(TokenKind::word);
      const auto kind = parse_enum<ModelKind>(kw.text);
      if (!kind) {
        fail(kw, "E-PARSE-UNKNOWN-KEY",
             "unknown section '" + kw.text + "' (expected one of " +
                 enum_choices<ModelKind>() + ")");
      }
      const bool duplicate = !seen.insert(*kind).second;
      if (duplicate) {
        report(kw, "E-PARSE-DUP-SECTION",
               "model kind '" + kw.text + "' is already declared in this view");
      }
      // A duplicate section is still parsed so later errors surface, then dropped.
      ArchitectureView scratch;
      ArchitectureView& target = duplicate ? scratch : view;
      spans_ = duplicate ? &scratch.origin.spans : &view.origin.spans;
      expect(TokenKind::lbrace);
      switch (*kind) {
        case ModelKind::stakeholders:
          target.stakeholder_model = parse_stakeholders();
          break;
        case ModelKind::execution_context:
          target.execution_context = parse_execution_context();
          break;
        case ModelKind::code_context:
          target.code_context = parse_code_context();
          break;
        case ModelKind::information_model:
          target.information_model = parse_information_model();
          break;
        case ModelKind::shared_resources:
          target.shared_resources = parse_shared_resources();
          break;
        case ModelKind::deployment:
          target.deployment = parse_deployment();
          break;
      }
      expect(TokenKind::rbrace);
      (*spans_)[span_key(kw.text)] = span_from(kw);
    }
    expect(TokenKind::rbrace);
    expect(TokenKind::end);
    view.origin.spans["view"] = span_from(head);
    return view;
  }

  std::vector<Diagnostic> take_diagnostics() { return std::move(diagnostics_); }

 private:
  // ---- token plumbing ----------------------------------------------------

  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_word(std::string_view text) const { return at(TokenKind::word) && peek().text == text; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::end) ++pos_;
    return t;
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) {
      fail(peek(), "E-PARSE-SYNTAX",
           "expected " + std::string(detail::describe(kind)) + ", found " + found(peek()));
    }
    return next();
  }

  const Token& expect_keyword(std::string_view text) {
    if (!at_word(text)) {
      fail(peek(), "E-PARSE-SYNTAX", "expected '" + std::string(text) + "', found " + found(peek()));
    }
    return next();
  }

  const Token& expect_string() { return expect(TokenKind::string); }

  static std::string found(const Token& t) {
    switch (t.kind) {
      case TokenKind::word:
        return "'" + t.text + "'";
      case TokenKind::string:
        return "string";
      case TokenKind::number:
        return "number " + t.text;
      default:
        return std::string(detail::describe(t.kind));
    }
  }

  const Token& last() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }

  SourceSpan span_from(const Token& first) const {
    return SourceSpan{file_, first.start, last().end};
  }

  Location loc(const Token& t) const { return Location{file_, t.start.line, t.start.column}; }

  [[noreturn]] void fail(const Token& at, std::string code, std::string message) const {
    throw SyntaxError{make_error(std::move(code), std::move(message), loc(at))};
  }

  void report(const Token& at, std::string code, std::string message) {
    diagnostics_.push_back(make_error(std::move(code), std::move(message), loc(at)));
  }

  template <typename E>
  E expect_enum(std::string_view what) {
    const Token& t = expect(TokenKind::word);
    auto value = parse_enum<E>(t.text);
    if (!value) {
      report(t, "E-PARSE-BAD-VALUE",
             "'" + t.text + "' is not a valid " + std::string(what) + " (expected one of " +
                 enum_choices<E>() + ")");
      return E{};
    }
    return *value;
  }

  template <typename E>
  std::set<E> expect_enum_list(std::string_view what) {
    std::set<E> out;
    do {
      out.insert(expect_enum<E>(what));
    } while (at(TokenKind::comma) && (next(), true));
    return out;
  }

  // Runs `on_key` for every `key ...` entry up to the closing brace; the
  // callback consumes the value. `required` keys must appear once.
  void parse_properties(const Token& owner, std::string_view block,
                        const std::set<std::string_view>& allowed,
                        const std::set<std::string_view>& required,
                        const std::function<void(const Token&)>& on_key,
                        const std::set<std::string_view>& repeatable = {}) {
    expect(TokenKind::lbrace);
    std::set<std::string> seen;
    while (!at(TokenKind::rbrace)) {
      const Token& key = expect(TokenKind::word);
      if (!allowed.count(key.text)) {
        fail(key, "E-PARSE-UNKNOWN-KEY",
             "unknown key '" + key.text + "' in " + std::string(block));
      }
      if (!seen.insert(key.text).second && !repeatable.count(key.text)) {
        report(key, "E-PARSE-DUP-KEY",
               "key '" + key.text + "' given twice in " + std::string(block));
      }
      on_key(key);
    }
    for (auto req : required) {
      if (!seen.count(std::string(req))) {
        report(owner, "E-PARSE-MISSING-KEY",
               std::string(block) + " is missing required key '" + std::string(req) + "'");
      }
    }
    expect(TokenKind::rbrace);
  }

  // Records the declaration name, reporting a duplicate. Returns false on
  // duplicate.
  bool declare(std::set<std::string>& names, const Token& at, const std::string& name,
               std::string_view category) {
    if (!names.insert(name).second) {
      report(at, "E-PARSE-DUP-NAME",
             std::string(category) + " '" + name + "' is already declared");
      return false;
    }
    return true;
  }

  void require_declared(const std::set<std::string>& names, const Token& at,
                        const std::string& name, std::string_view category) {
    if (!names.count(name)) {
      report(at, "E-REF-UNDECLARED",
             std::string(category) + " '" + name + "' is not declared before use");
    }
  }

  void record(std::string key, const Token& first) { (*spans_)[std::move(key)] = span_from(first); }

  // ---- stakeholders ------------------------------------------------------

  StakeholderConcernModel parse_stakeholders() {
    static const std::string kSection = "stakeholders";
    StakeholderConcernModel m;
    std::set<std::string> stakeholders, concerns;
    std::set<std::pair<std::string, std::string>> pairs;
    while (!at(TokenKind::rbrace)) {
      const Token& kw = expect(TokenKind::word);
      if (kw.text == "stakeholder") {
        Stakeholder s;
        const Token& name = expect_string();
        s.name = name.text;
        if (at(TokenKind::lbrace)) {
          parse_properties(kw, "stakeholder block", {"role"}, {},
                           [&](const Token&) { s.role_note = expect_string().text; });
        }
        if (declare(stakeholders, name, s.name, "stakeholder")) {
          record(span_key(kSection, "stakeholder", m.stakeholders.size()), kw);
          m.stakeholders.push_back(std::move(s));
        }
      } else if (kw.text == "concern") {
        Concern c;
        const Token& id = expect_string();
        c.id = id.text;
        parse_properties(kw, "concern block", {"description", "source", "catalog"},
                         {"description"}, [&](const Token& key) {
                           if (key.text == "description") {
                             c.description = expect_string().text;
                           } else if (key.text == "source") {
                             c.source_tag = expect_string().text;
                           } else {
                             do {
                               const Token& t = expect(TokenKind::word);
                               if (!catalog().contains(t.text)) {
                                 report(t, "E-PARSE-BAD-VALUE",
                                        "'" + t.text + "' is not a concern catalog id");
                               }
                               c.catalog_ids.insert(t.text);
                             } while (at(TokenKind::comma) && (next(), true));
                           }
                         });
        if (declare(concerns, id, c.id, "concern")) {
          record(span_key(kSection, "concern", m.concerns.size()), kw);
          m.concerns.push_back(std::move(c));
        }
      } else if (kw.text == "has") {
        const Token& who = expect_string();
        expect(TokenKind::arrow);
        const Token& what = expect_string();
        require_declared(stakeholders, who, who.text, "stakeholder");
        require_declared(concerns, what, what.text, "concern");
        if (!pairs.insert({who.text, what.text}).second) {
          report(kw, "E-PARSE-DUP-NAME",
                 "pair '" + who.text + "' -> '" + what.text + "' is already declared");
          continue;
        }
        record(span_key(kSection, "has", m.has_concern.size()), kw);
        m.has_concern.push_back({who.text, what.text});
      } else if (kw.text == "excluded") {
        m.excluded_stakeholders.push_back(expect_string().text);
        record(span_key(kSection, "excluded", m.excluded_stakeholders.size() - 1), kw);
      } else if (kw.text == "unaddressed") {
        m.unaddressed_concerns.push_back(expect_string().text);
        record(span_key(kSection, "unaddressed", m.unaddressed_concerns.size() - 1), kw);
      } else {
        unknown_item(kw, "stakeholders", "stakeholder, concern, has, excluded, unaddressed");
      }
    }
    return m;
  }

  [[noreturn]] void unknown_item(const Token& kw, std::string_view section,
                                 std::string_view choices) {
    fail(kw, "E-PARSE-UNKNOWN-KEY",
         "unknown declaration '" + kw.text + "' in " + std::string(section) + " (expected " +
             std::string(choices) + ")");
  }

  // ---- execution context -------------------------------------------------

  ExecutionTimeContextModel parse_execution_context() {
    static const std::string kSection = "execution-context";
    ExecutionTimeContextModel m;
    std::set<std::string> externals;
    while (!at(TokenKind::rbrace)) {
      const Token& kw = expect(TokenKind::word);
      if (kw.text == "external") {
        const Token& name = expect_string();
        ExternalSystem e{name.text, expect_enum<ExternalCategory>("external category")};
        if (declare(externals, name, e.name, "external system")) {
          record(span_key(kSection, "external", m.externals.size()), kw);
          m.externals.push_back(std::move(e));
        }
      } else if (kw.text == "interaction") {
        Interaction it;
        parse_properties(
            kw, "interaction block",
            {"self", "external", "external-interface", "kind", "data", "protocol", "direction",
             "startup", "note"},
            {"self", "external", "kind", "direction"}, [&](const Token& key) {
              if (key.text == "self") {
                it.self_interface = expect_string().text;
              } else if (key.text == "external") {
                const Token& ref = expect_string();
                require_declared(externals, ref, ref.text, "external system");
                it.external = ref.text;
              } else if (key.text == "external-interface") {
                it.external_interface = expect_string().text;
              } else if (key.text == "kind") {
                it.kind = expect_enum<InteractionKind>("interaction kind");
              } else if (key.text == "data") {
                it.data_direction = expect_enum<DataDirection>("data direction");
              } else if (key.text == "protocol") {
                it.protocol = expect_string().text;
              } else if (key.text == "direction") {
                it.direction = expect_enum<InteractionDirection>("interaction direction");
              } else if (key.text == "startup") {
                it.required_at_startup = true;
              } else {
                it.note = expect_string().text;
              }
            });
        record(span_key(kSection, "interaction", m.interactions.size()), kw);
        m.interactions.push_back(std::move(it));
      } else if (kw.text == "startup-sequence" || kw.text == "monitoring") {
        auto& slot = kw.text == "monitoring" ? m.monitoring_note : m.startup_sequence_note;
        if (slot) report(kw, "E-PARSE-DUP-KEY", "'" + kw.text + "' given twice");
        slot = expect_string().text;
        record(kSection + "." + kw.text, kw);
      } else {
        unknown_item(kw, kSection,
                     "external, interaction, startup-sequence, monitoring");
      }
    }
    return m;
  }

  // ---- code context ------------------------------------------------------

  CodeContextModel parse_code_context() {
    static const std::string kSection = "code-context";
    CodeContextModel m;
    std::set<std::string> modules;
    while (!at(TokenKind::rbrace)) {
      const Token& kw = expect(TokenKind::word);
      if (kw.text == "module") {
        ExternalModule mod;
        const Token& name = expect_string();
        mod.name = name.text;
        parse_properties(kw, "module block", {"uses", "version", "source", "category", "note"},
                         {"uses"}, [&](const Token& key) {
                           if (key.text == "uses") {
                             mod.dependency_types = expect_enum_list<DependencyType>("dependency type");
                           } else if (key.text == "version") {
                             mod.version = expect_string().text;
                           } else if (key.text == "source") {
                             mod.source_kind = expect_enum<SourceKind>("module source");
                           } else if (key.text == "category") {
                             mod.category = expect_enum<ModuleCategory>("module category");
                           } else {
                             mod.note = expect_string().text;
                           }
                         });
        if (declare(modules, name, mod.name, "external module")) {
          record(span_key(kSection, "module", m.external_modules.size()), kw);
          m.external_modules.push_back(std::move(mod));
        }
      } else if (kw.text == "assumption") {
        m.evolution_assumptions.push_back(expect_string().text);
        record(span_key(kSection, "assumption", m.evolution_assumptions.size() - 1), kw);
      } else {
        unknown_item(kw, kSection, "module, assumption");
      }
    }
    return m;
  }

  // ---- information model -------------------------------------------------

  InformationElement parse_element(const Token& kw, const std::string& key) {
    InformationElement e;
    e.name = expect_string().text;
    if (!at(TokenKind::lbrace)) return e;
    std::set<std::string> fields;
    parse_properties(
        kw, "element block", {"description", "field"}, {},
        [&](const Token& prop) {
          if (prop.text == "description") {
            e.description = expect_string().text;
            return;
          }
          DataField f;
          const Token& name = expect_string();
          f.name = name.text;
          if (at(TokenKind::lbrace)) {
            parse_properties(prop, "field block",
                             {"units", "timeliness", "precision", "security"}, {},
                             [&](const Token& k) {
                               auto value = expect_string().text;
                               if (k.text == "units") f.units = value;
                               if (k.text == "timeliness") f.timeliness = value;
                               if (k.text == "precision") f.precision = value;
                               if (k.text == "security") f.security_level = value;
                             });
          }
          if (declare(fields, name, f.name, "data field")) {
            record(span_key(key, "field", e.data_fields.size()), prop);
            e.data_fields.push_back(std::move(f));
          }
        },
        {"field"});
    return e;
  }

  ElementRef parse_ref(const std::set<std::string>& sos, const std::set<std::string>& system) {
    ElementRef ref;
    if (at_word("sos")) {
      next();
      ref.scope = ElementScope::sos;
    }
    const Token& name = expect_string();
    ref.name = name.text;
    require_declared(ref.scope == ElementScope::sos ? sos : system, name, ref.name,
                     ref.scope == ElementScope::sos ? "SoS information element"
                                                    : "information element");
    return ref;
  }

  InterfaceInformationModel parse_information_model() {
    static const std::string kSection = "information-model";
    InterfaceInformationModel m;
    std::set<std::string> sos, system;
    while (!at(TokenKind::rbrace)) {
      const Token& kw = expect(TokenKind::word);
      if (kw.text == "sos-element" || kw.text == "element") {
        const bool is_sos = kw.text == "sos-element";
        auto& list = is_sos ? m.sos_elements : m.system_elements;
        const auto key = span_key(kSection, kw.text, list.size());
        const Token& name = peek();
        auto e = parse_element(kw, key);
        if (declare(is_sos ? sos : system, name, e.name,
                    is_sos ? "SoS information element" : "information element")) {
          record(key, kw);
          list.push_back(std::move(e));
        }
      } else if (auto kind = parse_enum<RelationKind>(kw.text)) {
        InfoRelation r;
        r.kind = *kind;
        r.from = parse_ref(sos, system);
        expect(TokenKind::arrow);
        r.to = parse_ref(sos, system);
        if (at(TokenKind::word) && parse_enum<Cardinality>(peek().text)) {
          r.cardinality = parse_enum<Cardinality>(next().text);
        }
        record(span_key(kSection, "relation", m.relations.size()), kw);
        m.relations.push_back(std::move(r));
      } else if (kw.text == "unrelated") {
        const Token& name = expect_string();
        require_declared(sos, name, name.text, "SoS information element");
        m.unrelated_sos_elements.push_back(name.text);
        record(span_key(kSection, "unrelated", m.unrelated_sos_elements.size() - 1), kw);
      } else {
        unknown_item(kw, kSection,
                     "sos-element, element, association, specialization, aggregation, unrelated");
      }
    }
    return m;
  }

  // ---- shared resources --------------------------------------------------

  SharedResourceModel parse_shared_resources() {
    static const std::string kSection = "shared-resources";
    SharedResourceModel m;
    std::set<std::string> resources;
    while (!at(TokenKind::rbrace)) {
      const Token& kw = expect(TokenKind::word);
      if (kw.text == "resource") {
        SharedResource r;
        const Token& name = expect_string();
        r.name = name.text;
        parse_properties(kw, "resource block", {"kind", "acquisition", "insufficient"}, {"kind"},
                         [&](const Token& key) {
                           if (key.text == "kind") {
                             r.kind = expect_enum<ResourceKind>("resource kind");
                           } else if (key.text == "acquisition") {
                             r.acquisition = expect_enum<Acquisition>("acquisition");
                           } else {
                             r.insufficient_behavior = expect_string().text;
                           }
                         });
        if (declare(resources, name, r.name, "shared resource")) {
          record(span_key(kSection, "resource", m.resources.size()), kw);
          m.resources.push_back(std::move(r));
        }
      } else if (kw.text == "usage") {
        ResourceUsage u;
        const Token& ref = expect_string();
        require_declared(resources, ref, ref.text, "shared resource");
        u.resource = ref.text;
        parse_properties(kw, "usage block", {"user", "scope", "modes", "note"},
                         {"user", "scope", "modes"}, [&](const Token& key) {
                           if (key.text == "user") {
                             u.user = expect_string().text;
                           } else if (key.text == "scope") {
                             u.user_scope = expect_enum<UserScope>("user scope");
                           } else if (key.text == "modes") {
                             u.modes = expect_enum_list<UsageMode>("usage mode");
                           } else {
                             u.note = expect_string().text;
                           }
                         });
        record(span_key(kSection, "usage", m.usages.size()), kw);
        m.usages.push_back(std::move(u));
      } else {
        unknown_item(kw, kSection, "resource, usage");
      }
    }
    return m;
  }

  // ---- deployment --------------------------------------------------------

  Quantity parse_quantity() {
    Quantity q;
    q.amount = expect(TokenKind::number).number;
    q.unit = expect_string().text;
    return q;
  }

  void add_quantity(ResourceQuantities& into, const Token& at, std::string name, Quantity q) {
    if (!into.emplace(name, std::move(q)).second) {
      report(at, "E-PARSE-DUP-NAME", "resource '" + name + "' is already listed");
    }
  }

  DeploymentModel parse_deployment() {
    static const std::string kSection = "deployment";
    DeploymentModel m;
    std::set<std::string> nodes, units;
    std::set<std::pair<std::string, std::string>> allocations;
    while (!at(TokenKind::rbrace)) {
      const Token& kw = expect(TokenKind::word);
      if (kw.text == "node") {
        ComputeNode n;
        const Token& name = expect_string();
        n.name = name.text;
        n.kind = expect_enum<NodeKind>("node kind");
        if (at(TokenKind::lbrace)) {
          parse_properties(
              kw, "node block", {"provides"}, {},
              [&](const Token&) {
                const Token& res = expect_string();
                add_quantity(n.provides, res, res.text, parse_quantity());
              },
              {"provides"});
        }
        if (declare(nodes, name, n.name, "node")) {
          record(span_key(kSection, "node", m.nodes.size()), kw);
          m.nodes.push_back(std::move(n));
        }
      } else if (kw.text == "unit") {
        ExecutionUnit u;
        const Token& name = expect_string();
        u.name = name.text;
        u.kind = expect_enum<UnitKind>("unit kind");
        if (at(TokenKind::lbrace)) {
          parse_properties(
              kw, "unit block", {"needs", "constraint"}, {},
              [&](const Token& key) {
                if (key.text == "constraint") {
                  u.constraint_note = expect_string().text;
                  return;
                }
                const Token& res = expect_string();
                add_quantity(u.needs, res, res.text, parse_quantity());
              },
              {"needs"});
        }
        if (declare(units, name, u.name, "unit")) {
          record(span_key(kSection, "unit", m.units.size()), kw);
          m.units.push_back(std::move(u));
        }
      } else if (kw.text == "allocate") {
        const Token& unit = expect_string();
        expect(TokenKind::arrow);
        const Token& node = expect_string();
        require_declared(units, unit, unit.text, "unit");
        require_declared(nodes, node, node.text, "node");
        if (!allocations.insert({unit.text, node.text}).second) {
          report(kw, "E-PARSE-DUP-NAME",
                 "allocation '" + unit.text + "' -> '" + node.text + "' is already declared");
          continue;
        }
        record(span_key(kSection, "allocation", m.allocations.size()), kw);
        m.allocations.push_back({unit.text, node.text});
      } else {
        unknown_item(kw, kSection, "node, unit, allocate");
      }
    }
    return m;
  }

  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diagnostics_;
  std::map<std::string, SourceSpan>* spans_ = nullptr;
};

}  // namespace

ParseOutcome parse(std::string_view source, std::string_view origin) {
  ParseOutcome out;
  const std::string file(origin);
  std::vector<Diagnostic> diagnostics;
  std::optional<ArchitectureView> view;
  try {
    Parser parser(detail::tokenize(source, file), file);
    try {
      view = parser.run();
    } catch (const SyntaxError& e) {
      diagnostics = parser.take_diagnostics();
      diagnostics.push_back(e.diagnostic);
    }
    if (view) diagnostics = parser.take_diagnostics();
  } catch (const SyntaxError& e) {
    diagnostics.push_back(e.diagnostic);
  }
  sort_diagnostics(diagnostics);
  if (!has_errors(diagnostics)) out.view = std::move(view);
  out.diagnostics = std::move(diagnostics);
  return out;
}

}  // namespace sosv
