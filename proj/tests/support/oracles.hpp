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

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "random_view.hpp"
#include "sosv/analysis.hpp"
#include "sosv/model.hpp"

namespace sosv::testing {

// --- corpus ------------------------------------------------------------------

std::string corpus_path();
std::string read_text(const std::string& path);

/// Parsed corpus; aborts the test binary when it fails to parse.
ArchitectureView corpus_view();

/// The corpus plus a deployment section with the three servers it names.
ArchitectureView corpus_with_deployment();

// --- startup ordering -----------------------------------------------------

struct StartupFixture {
  std::set<std::string> systems;
  std::set<std::pair<std::string, std::string>> edges;  // system -> needed at startup

  std::set<std::string> nodes() const;
  Workspace workspace() const;
};

StartupFixture random_startup_fixture(Rng& rng, int max_nodes = 8);

/// First permutation, in lexicographic order, in which every edge target
/// precedes its source. nullopt when none exists.
std::optional<std::vector<std::string>> brute_force_order(const StartupFixture& f);

/// Shortest simple cycle found by exhaustive enumeration, rotated to start at
/// its smallest node; lexicographically smallest among equal lengths.
std::vector<std::string> brute_force_cycle(const StartupFixture& f);

bool respects_edges(const std::vector<std::string>& order,
                    const std::set<std::pair<std::string, std::string>>& edges);

}  // namespace sosv::testing
