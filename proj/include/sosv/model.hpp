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

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sosv/diagnostic.hpp"
#include "sosv/enums.hpp"

namespace sosv {

// ---------------------------------------------------------------------------
// Stakeholders / concerns

struct Stakeholder {
  std::string name;
  std::optional<std::string> role_note;

  auto operator<=>(const Stakeholder&) const = default;
};

struct Concern {
  std::string id;
  std::string description;
  std::optional<std::string> source_tag;  // e.g. "QAS1"
  std::set<std::string> catalog_ids;      // ids from the built-in concern catalog

  auto operator<=>(const Concern&) const = default;
};

struct HasConcern {
  std::string stakeholder;
  std::string concern;

  auto operator<=>(const HasConcern&) const = default;
};

struct StakeholderConcernModel {
  std::vector<Stakeholder> stakeholders;
  std::vector<Concern> concerns;
  std::vector<HasConcern> has_concern;
  std::vector<std::string> excluded_stakeholders;
  std::vector<std::string> unaddressed_concerns;

  bool operator==(const StakeholderConcernModel&) const = default;
};

// ---------------------------------------------------------------------------
// Execution-time context

struct ExternalSystem {
  std::string name;
  ExternalCategory category = ExternalCategory::application;

  auto operator<=>(const ExternalSystem&) const = default;
};

struct Interaction {
  std::string self_interface;
  std::string external;
  std::optional<std::string> external_interface;
  InteractionKind kind = InteractionKind::message;
  std::optional<DataDirection> data_direction;  // only for data-exchange
  std::optional<std::string> protocol;
  InteractionDirection direction = InteractionDirection::constituent_initiated;
  bool required_at_startup = false;
  std::optional<std::string> note;

  auto operator<=>(const Interaction&) const = default;
};

struct ExecutionTimeContextModel {
  std::vector<ExternalSystem> externals;
  std::vector<Interaction> interactions;
  std::optional<std::string> startup_sequence_note;
  std::optional<std::string> monitoring_note;

  bool operator==(const ExecutionTimeContextModel&) const = default;
};

// ---------------------------------------------------------------------------
// Code context

struct ExternalModule {
  std::string name;
  std::set<DependencyType> dependency_types;
  std::string version = "unspecified";
  SourceKind source_kind = SourceKind::unspecified;
  ModuleCategory category = ModuleCategory::library;
  std::optional<std::string> note;

  auto operator<=>(const ExternalModule&) const = default;
};

struct CodeContextModel {
  std::vector<ExternalModule> external_modules;
  std::vector<std::string> evolution_assumptions;

  bool operator==(const CodeContextModel&) const = default;
};

// ---------------------------------------------------------------------------
// Interface information

struct DataField {
  std::string name;
  std::optional<std::string> units;
  std::optional<std::string> timeliness;
  std::optional<std::string> precision;
  std::optional<std::string> security_level;

  auto operator<=>(const DataField&) const = default;
};

struct InformationElement {
  std::string name;
  std::optional<std::string> description;
  std::vector<DataField> data_fields;

  auto operator<=>(const InformationElement&) const = default;
};

// Element names are unique per scope, so references carry the scope.
struct ElementRef {
  ElementScope scope = ElementScope::system;
  std::string name;

  auto operator<=>(const ElementRef&) const = default;
};

std::string to_string(const ElementRef& ref);

struct InfoRelation {
  RelationKind kind = RelationKind::association;
  ElementRef from;
  ElementRef to;
  std::optional<Cardinality> cardinality;  // only for associations

  auto operator<=>(const InfoRelation&) const = default;
};

struct InterfaceInformationModel {
  std::vector<InformationElement> sos_elements;
  std::vector<InformationElement> system_elements;
  std::vector<InfoRelation> relations;
  std::vector<std::string> unrelated_sos_elements;

  const InformationElement* find(const ElementRef& ref) const;
  const std::vector<InformationElement>& elements(ElementScope scope) const;

  bool operator==(const InterfaceInformationModel&) const = default;
};

// ---------------------------------------------------------------------------
// Shared resources

struct SharedResource {
  std::string name;
  ResourceKind kind = ResourceKind::other;
  Acquisition acquisition = Acquisition::unspecified;
  std::optional<std::string> insufficient_behavior;

  auto operator<=>(const SharedResource&) const = default;
};

struct ResourceUsage {
  std::string resource;
  std::string user;
  UserScope user_scope = UserScope::constituent;
  std::set<UsageMode> modes;
  std::optional<std::string> note;

  auto operator<=>(const ResourceUsage&) const = default;
};

struct SharedResourceModel {
  std::vector<SharedResource> resources;
  std::vector<ResourceUsage> usages;

  bool operator==(const SharedResourceModel&) const = default;
};

// ---------------------------------------------------------------------------
// Deployment

// Units are free text and only ever compared for exact equality.
struct Quantity {
  double amount = 0.0;
  std::string unit;

  auto operator<=>(const Quantity&) const = default;
};

using ResourceQuantities = std::map<std::string, Quantity>;

struct ComputeNode {
  std::string name;
  NodeKind kind = NodeKind::computer;
  ResourceQuantities provides;

  auto operator<=>(const ComputeNode&) const = default;
};

struct ExecutionUnit {
  std::string name;
  UnitKind kind = UnitKind::process;
  ResourceQuantities needs;
  std::optional<std::string> constraint_note;

  auto operator<=>(const ExecutionUnit&) const = default;
};

struct Allocation {
  std::string unit;
  std::string node;

  auto operator<=>(const Allocation&) const = default;
};

struct DeploymentModel {
  std::vector<ComputeNode> nodes;
  std::vector<ExecutionUnit> units;
  std::vector<Allocation> allocations;

  bool operator==(const DeploymentModel&) const = default;
};

// ---------------------------------------------------------------------------
// View

/// Where a view came from: file path, the label written after `view`, and a
/// span for every declaration. Keys are built with span_key(); list items are
/// keyed by their declaration index.
struct Origin {
  std::string file;
  std::string label;
  std::map<std::string, SourceSpan> spans;

  const SourceSpan* find(const std::string& key) const;
  std::optional<Location> location(const std::string& key) const;
};

// "execution-context" -> "execution-context"
// ("execution-context", "interaction", 2) -> "execution-context.interaction[2]"
std::string span_key(std::string_view section);
std::string span_key(std::string_view parent, std::string_view item, std::size_t index);

/// One constituent system's documentation under the viewpoint. Each of the
/// six model slots holds at most one model. Equality ignores the origin and
/// the order of list entries.
struct ArchitectureView {
  std::string system_name;
  std::optional<StakeholderConcernModel> stakeholder_model;
  std::optional<ExecutionTimeContextModel> execution_context;
  std::optional<CodeContextModel> code_context;
  std::optional<InterfaceInformationModel> information_model;
  std::optional<SharedResourceModel> shared_resources;
  std::optional<DeploymentModel> deployment;
  Origin origin;

  bool has_model(ModelKind kind) const;
  // A model counts as non-empty when it holds at least one primary element
  // (stakeholder, external, module, information element, resource, node).
  bool has_non_empty_model(ModelKind kind) const;
  std::set<ModelKind> models_present() const;
  std::set<ModelKind> non_empty_models() const;

  friend bool operator==(const ArchitectureView& a, const ArchitectureView& b);
};

/// Throws DiagnosticError(E-VIEW-NAME) for an empty or blank name.
ArchitectureView empty_view(std::string system_name);

/// Copy with every list sorted (named entries by name); origin cleared.
ArchitectureView canonicalize(const ArchitectureView& view);

std::string trim(std::string_view text);

}  // namespace sosv
