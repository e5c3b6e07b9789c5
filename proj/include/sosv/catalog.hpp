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

#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "sosv/enums.hpp"

namespace sosv {

struct ConcernEntry {
  std::string_view id;
  std::string_view description;
  std::set<ModelKind> model_kinds;
  Quality quality;
  std::set<StakeholderRole> stakeholders;
};

/// The fixed list of sixteen constituent-system concerns, each mapped to the
/// model kinds that address it and traced to an SoS quality concern and the
/// stakeholder roles that care about that quality.
class ConcernCatalog {
 public:
  std::span<const ConcernEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  const ConcernEntry* find(std::string_view id) const;
  /// Throws DiagnosticError(E-COV-UNKNOWN-ID) for an unknown id.
  const ConcernEntry& entry(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }

 private:
  friend const ConcernCatalog& catalog();
  ConcernCatalog();

  std::vector<ConcernEntry> entries_;
};

const ConcernCatalog& catalog();

/// Stakeholder roles concerned with a quality.
std::set<StakeholderRole> stakeholders_for(Quality quality);

}  // namespace sosv
