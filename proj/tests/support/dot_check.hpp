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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sosv::testing {

// Parsed shape of a DOT document, enough to check the renderer's output.
struct DotGraph {
  bool directed = false;
  std::string name;
  std::map<std::string, std::map<std::string, std::string>> nodes;  // id -> attributes
  struct Edge {
    std::string from;
    std::string to;
    std::map<std::string, std::string> attrs;
  };
  std::vector<Edge> edges;

  std::optional<std::string> label_of(const std::string& id) const;
};

struct DotCheck {
  std::optional<DotGraph> graph;
  std::string error;  // empty when the text is valid

  bool ok() const { return graph.has_value(); }
};

/// Recursive-descent check against the Graphviz grammar (graph, node, edge,
/// attribute and subgraph statements; ID, numeral and quoted-string IDs).
DotCheck check_dot(const std::string& text);

}  // namespace sosv::testing
