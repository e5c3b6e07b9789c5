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

#include "sosv/model.hpp"

#include <algorithm>
#include <cctype>

namespace sosv {

std::string to_string(const ElementRef& ref) {
  return ref.scope == ElementScope::sos ? "sos:" + ref.name : ref.name;
}

const std::vector<InformationElement>& InterfaceInformationModel::elements(
    ElementScope scope) const {
  return scope == ElementScope::sos ? sos_elements : system_elements;
}

const InformationElement* InterfaceInformationModel::find(const ElementRef& ref) const {
  const auto& list = elements(ref.scope);
  auto it = std::find_if(list.begin(), list.end(),
                         [&](const InformationElement& e) { return e.name == ref.name; });
  return it == list.end() ? nullptr : &*it;
}

const SourceSpan* Origin::find(const std::string& key) const {
  auto it = spans.find(key);
  return it == spans.end() ? nullptr : &it->second;
}

std::optional<Location> Origin::location(const std::string& key) const {
  if (const auto* span = find(key)) return location_of(*span);
  return std::nullopt;
}

std::string span_key(std::string_view section) { return std::string(section); }

std::string span_key(std::string_view parent, std::string_view item, std::size_t index) {
  std::string key(parent);
  key += '.';
  key += item;
  key += '[';
  key += std::to_string(index);
  key += ']';
  return key;
}

bool ArchitectureView::has_model(ModelKind kind) const {
  switch (kind) {
    case ModelKind::stakeholders:
      return stakeholder_model.has_value();
    case ModelKind::execution_context:
      return execution_context.has_value();
    case ModelKind::code_context:
      return code_context.has_value();
    case ModelKind::information_model:
      return information_model.has_value();
    case ModelKind::shared_resources:
      return shared_resources.has_value();
    case ModelKind::deployment:
      return deployment.has_value();
  }
  return false;
}

bool ArchitectureView::has_non_empty_model(ModelKind kind) const {
  switch (kind) {
    case ModelKind::stakeholders:
      return stakeholder_model && !stakeholder_model->stakeholders.empty();
    case ModelKind::execution_context:
      return execution_context && !execution_context->externals.empty();
    case ModelKind::code_context:
      return code_context && !code_context->external_modules.empty();
    case ModelKind::information_model:
      return information_model && (!information_model->sos_elements.empty() ||
                                   !information_model->system_elements.empty());
    case ModelKind::shared_resources:
      return shared_resources && !shared_resources->resources.empty();
    case ModelKind::deployment:
      return deployment && !deployment->nodes.empty();
  }
  return false;
}

std::set<ModelKind> ArchitectureView::models_present() const {
  std::set<ModelKind> out;
  for (auto kind : enum_values<ModelKind>()) {
    if (has_model(kind)) out.insert(kind);
  }
  return out;
}

std::set<ModelKind> ArchitectureView::non_empty_models() const {
  std::set<ModelKind> out;
  for (auto kind : enum_values<ModelKind>()) {
    if (has_non_empty_model(kind)) out.insert(kind);
  }
  return out;
}

namespace {

template <typename T>
void sort_all(std::vector<T>& items) {
  std::sort(items.begin(), items.end());
}

template <typename T, typename Key>
void sort_by(std::vector<T>& items, Key key) {
  std::sort(items.begin(), items.end(), [&](const T& a, const T& b) {
    if (key(a) != key(b)) return key(a) < key(b);
    return a < b;
  });
}

void sort_elements(std::vector<InformationElement>& elements) {
  for (auto& e : elements) sort_by(e.data_fields, [](const DataField& f) { return f.name; });
  sort_by(elements, [](const InformationElement& e) { return e.name; });
}

}  // namespace

ArchitectureView canonicalize(const ArchitectureView& view) {
  ArchitectureView out = view;
  out.origin = {};
  if (auto& m = out.stakeholder_model) {
    sort_by(m->stakeholders, [](const Stakeholder& s) { return s.name; });
    sort_by(m->concerns, [](const Concern& c) { return c.id; });
    sort_all(m->has_concern);
    sort_all(m->excluded_stakeholders);
    sort_all(m->unaddressed_concerns);
  }
  if (auto& m = out.execution_context) {
    sort_by(m->externals, [](const ExternalSystem& e) { return e.name; });
    sort_all(m->interactions);
  }
  if (auto& m = out.code_context) {
    sort_by(m->external_modules, [](const ExternalModule& e) { return e.name; });
    sort_all(m->evolution_assumptions);
  }
  if (auto& m = out.information_model) {
    sort_elements(m->sos_elements);
    sort_elements(m->system_elements);
    sort_all(m->relations);
    sort_all(m->unrelated_sos_elements);
  }
  if (auto& m = out.shared_resources) {
    sort_by(m->resources, [](const SharedResource& r) { return r.name; });
    sort_all(m->usages);
  }
  if (auto& m = out.deployment) {
    sort_by(m->nodes, [](const ComputeNode& n) { return n.name; });
    sort_by(m->units, [](const ExecutionUnit& u) { return u.name; });
    sort_all(m->allocations);
  }
  return out;
}

bool operator==(const ArchitectureView& a, const ArchitectureView& b) {
  const auto ca = canonicalize(a);
  const auto cb = canonicalize(b);
  return ca.system_name == cb.system_name && ca.stakeholder_model == cb.stakeholder_model &&
         ca.execution_context == cb.execution_context && ca.code_context == cb.code_context &&
         ca.information_model == cb.information_model &&
         ca.shared_resources == cb.shared_resources && ca.deployment == cb.deployment;
}

std::string trim(std::string_view text) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && is_space(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

ArchitectureView empty_view(std::string system_name) {
  if (trim(system_name).empty()) {
    throw DiagnosticError(make_error("E-VIEW-NAME", "system name must not be empty"));
  }
  ArchitectureView view;
  view.system_name = std::move(system_name);
  view.origin.label = view.system_name;
  return view;
}

}  // namespace sosv
