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

#include "sosv/catalog.hpp"

#include <string>

#include "sosv/diagnostic.hpp"

namespace sosv {

namespace {

using MK = ModelKind;
using SR = StakeholderRole;

constexpr MK kStakeholders = MK::stakeholders;
constexpr MK kExecution = MK::execution_context;
constexpr MK kCode = MK::code_context;
constexpr MK kInformation = MK::information_model;
constexpr MK kShared = MK::shared_resources;
constexpr MK kDeployment = MK::deployment;

}  // namespace

std::set<StakeholderRole> stakeholders_for(Quality quality) {
  switch (quality) {
    case Quality::performance:
      return {SR::sos_architect, SR::program_manager};
    case Quality::security:
    case Quality::availability:
      return {SR::sos_architect, SR::tester_integrator, SR::program_manager};
    case Quality::testability:
      return {SR::sos_architect, SR::tester_integrator};
    case Quality::modifiability:
      return {SR::sos_architect, SR::developer};
    case Quality::usability:
      return {SR::sos_architect};
    case Quality::context:
      return {SR::sos_architect, SR::program_manager, SR::developer, SR::tester_integrator};
  }
  return {};
}

ConcernCatalog::ConcernCatalog() {
  auto add = [this](std::string_view id, std::string_view description,
                    std::set<ModelKind> kinds, Quality quality) {
    entries_.push_back({id, description, std::move(kinds), quality, stakeholders_for(quality)});
  };

  add("shared-resources", "Shared resources: what is shared, how is use shared",
      {kShared, kExecution, kDeployment}, Quality::performance);
  add("insufficient-resource-behavior",
      "Behavior when insufficient resource is available (run time dependencies, monitoring "
      "and measurement, interoperability context)",
      {kShared, kInformation, kExecution}, Quality::performance);
  add("authentication", "Authentication: identity validation repository (interoperability)",
      {kInformation, kShared, kExecution}, Quality::security);
  add("authorization", "Authorization: remote access to system and resources (interoperability)",
      {kInformation, kShared, kExecution}, Quality::security);
  add("encryption", "Encryption: algorithms and key management (interoperability)",
      {kInformation, kShared, kExecution}, Quality::security);
  add("startup-sequencing",
      "Execution time dependencies: startup sequencing (run time dependencies)",
      {kExecution, kDeployment}, Quality::testability);
  add("fault-detection-logging",
      "Fault detection and logging: internal (monitoring and measurement)",
      {kInformation, kExecution}, Quality::testability);
  add("fault-recovery", "Fault recovery (interoperability context)", {kExecution, kDeployment},
      Quality::availability);
  add("build-dependencies", "Build time dependencies: COTS, FOSS assumptions", {kCode},
      Quality::modifiability);
  add("dev-environment-deps",
      "Development environment dependencies (development time dependencies, "
      "process/culture/working practices)",
      {kCode, kDeployment, kStakeholders}, Quality::modifiability);
  add("interface-variabilities", "Variabilities affecting interfaces", {kInformation},
      Quality::modifiability);
  add("decision-model", "Decision model (dependencies, evolution and built-in variabilities)",
      {kCode, kInformation}, Quality::modifiability);
  add("configuration-dependencies",
      "Configuration dependencies among constituent systems (development time and run time "
      "dependencies)",
      {kCode, kExecution, kInformation}, Quality::usability);
  add("perceived-needs", "Perceived needs and constraints of constituent systems",
      {kStakeholders}, Quality::context);
  add("processes-cultures",
      "Processes, cultures, working practices between different participating organizations",
      {kStakeholders}, Quality::context);
  add("constituent-stakeholders", "Constituent system stakeholders", {kStakeholders},
      Quality::context);
}

const ConcernEntry* ConcernCatalog::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const ConcernEntry& ConcernCatalog::entry(std::string_view id) const {
  if (const auto* e = find(id)) return *e;
  throw DiagnosticError(
      make_error("E-COV-UNKNOWN-ID", "unknown concern id '" + std::string(id) + "'"));
}

const ConcernCatalog& catalog() {
  static const ConcernCatalog instance;
  return instance;
}

}  // namespace sosv
