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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace sosv {

// Closed enumerations of the viewpoint vocabulary. Every enum is contiguous
// from zero; EnumNames<E>::names holds the textual spelling used by the
// .sosv language and the interchange format.

enum class ModelKind {
  stakeholders,
  execution_context,
  code_context,
  information_model,
  shared_resources,
  deployment,
};

enum class ExternalCategory { application, platform };

enum class InteractionKind { message, call_return, data_exchange, interrupt, synchronization };

enum class DataDirection { read, write, read_write };

enum class InteractionDirection { constituent_initiated, external_initiated };

enum class DependencyType { code_generation, build, unit_test, integration_test };

enum class SourceKind { foss, cots, gots, internal, unspecified };

enum class ModuleCategory { library, package, tool, platform };

enum class RelationKind { association, specialization, aggregation };

enum class Cardinality { one_one, one_many, many_many };

enum class ElementScope { sos, system };

enum class ResourceKind {
  cpu,
  memory,
  disk,
  network_interface,
  network_bandwidth,
  file,
  database,
  virtual_infrastructure,
  display,
  radio_frequency,
  antenna,
  other,
};

enum class Acquisition { explicitly, implicitly, unspecified };

enum class UserScope { constituent, external };

enum class UsageMode { acquires, releases, consumes, reads, writes };

enum class NodeKind { computer, network };

enum class UnitKind { process, service, application, task, other };

enum class Quality { performance, security, testability, modifiability, availability, usability, context };

enum class StakeholderRole { sos_architect, program_manager, developer, tester_integrator };

template <typename E>
struct EnumNames;

#define SOSV_ENUM_NAMES(E, ...)                                        \
  template <>                                                          \
  struct EnumNames<E> {                                                \
    static constexpr std::array names = std::to_array<std::string_view>( \
        {__VA_ARGS__});                                                \
  }

SOSV_ENUM_NAMES(ModelKind, "stakeholders", "execution-context", "code-context",
                "information-model", "shared-resources", "deployment");
SOSV_ENUM_NAMES(ExternalCategory, "application", "platform");
SOSV_ENUM_NAMES(InteractionKind, "message", "call-return", "data-exchange", "interrupt",
                "synchronization");
SOSV_ENUM_NAMES(DataDirection, "read", "write", "read-write");
SOSV_ENUM_NAMES(InteractionDirection, "constituent-initiated", "external-initiated");
SOSV_ENUM_NAMES(DependencyType, "code-generation", "build", "unit-test", "integration-test");
SOSV_ENUM_NAMES(SourceKind, "FOSS", "COTS", "GOTS", "internal", "unspecified");
SOSV_ENUM_NAMES(ModuleCategory, "library", "package", "tool", "platform");
SOSV_ENUM_NAMES(RelationKind, "association", "specialization", "aggregation");
SOSV_ENUM_NAMES(Cardinality, "one-one", "one-many", "many-many");
SOSV_ENUM_NAMES(ElementScope, "sos", "system");
SOSV_ENUM_NAMES(ResourceKind, "cpu", "memory", "disk", "network-interface",
                "network-bandwidth", "file", "database", "virtual-infrastructure", "display",
                "radio-frequency", "antenna", "other");
SOSV_ENUM_NAMES(Acquisition, "explicit", "implicit", "unspecified");
SOSV_ENUM_NAMES(UserScope, "constituent", "external");
SOSV_ENUM_NAMES(UsageMode, "acquires", "releases", "consumes", "reads", "writes");
SOSV_ENUM_NAMES(NodeKind, "computer", "network");
SOSV_ENUM_NAMES(UnitKind, "process", "service", "application", "task", "other");
SOSV_ENUM_NAMES(Quality, "performance", "security", "testability", "modifiability",
                "availability", "usability", "context");
SOSV_ENUM_NAMES(StakeholderRole, "sos-architect", "program-manager", "developer",
                "tester-integrator");

#undef SOSV_ENUM_NAMES

template <typename E>
constexpr std::size_t enum_count() {
  return EnumNames<E>::names.size();
}

template <typename E>
constexpr bool in_range(E value) {
  using U = std::underlying_type_t<E>;
  const auto raw = static_cast<U>(value);
  return raw >= 0 && static_cast<std::size_t>(raw) < enum_count<E>();
}

template <typename E>
constexpr std::string_view enum_name(E value) {
  return in_range(value) ? EnumNames<E>::names[static_cast<std::size_t>(value)]
                         : std::string_view{"<invalid>"};
}

template <typename E>
constexpr std::optional<E> parse_enum(std::string_view text) {
  for (std::size_t i = 0; i < enum_count<E>(); ++i) {
    if (EnumNames<E>::names[i] == text) return static_cast<E>(i);
  }
  return std::nullopt;
}

template <typename E>
constexpr std::array<E, EnumNames<E>::names.size()> enum_values() {
  std::array<E, EnumNames<E>::names.size()> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<E>(i);
  return out;
}

// "a, b, c" listing of the legal spellings, for diagnostics.
template <typename E>
std::string enum_choices() {
  std::string out;
  for (auto name : EnumNames<E>::names) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace sosv
