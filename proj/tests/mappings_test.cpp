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

#include <gtest/gtest.h>

#include <map>
#include <regex>

#include "sosv/dsl.hpp"
#include "sosv/mappings.hpp"
#include "sosv/validator.hpp"

namespace sosv {
namespace {

using Ids = std::set<std::string>;

// (kind, source title) pairs as printed in the two published mapping tables.
const std::map<ModelKind, std::set<std::string>>& vab_titles() {
  static const std::map<ModelKind, std::set<std::string>> t = {
      {ModelKind::stakeholders, {"Documentation Roadmap", "Stakeholder/View Matrix"}},
      {ModelKind::execution_context, {"Context diagram from a component and connector view"}},
      {ModelKind::code_context, {"Context diagram from a module uses view"}},
      {ModelKind::information_model,
       {"Interface documentation for externally-visible interfaces", "Data model view packet"}},
      {ModelKind::shared_resources, {"Component and connector view"}},
      {ModelKind::deployment, {"Deployment view primary presentation or context diagram"}},
  };
  return t;
}

const std::map<ModelKind, Ids>& dodaf_ids() {
  static const std::map<ModelKind, Ids> t = {
      {ModelKind::stakeholders, {"AV-1", "PV-1"}},
      {ModelKind::execution_context, {"SvcV-1", "SvcV-3b"}},
      {ModelKind::code_context, {"SvcV-1"}},
      {ModelKind::information_model, {"SvcV-2", "SvcV-6", "StdV-1"}},
      {ModelKind::shared_resources, {"SvcV-3b", "SvcV-10c"}},
      {ModelKind::deployment, {"SvcV-1", "SvcV-3a"}},
  };
  return t;
}

Ids all_ids(Framework fw) {
  Ids out;
  for (const auto& k : source_registry(fw)) {
    for (const auto& s : k.sources) out.insert(std::string(s.id));
  }
  return out;
}

SourceInventory inventory(Framework fw, Ids ids) { return SourceInventory{fw, std::move(ids)}; }

std::set<ModelKind> sections_of(const std::string& skeleton) {
  auto o = parse(skeleton, "skeleton.sosv");
  EXPECT_TRUE(o.ok()) << skeleton;
  if (!o.ok()) return {};
  EXPECT_TRUE(validate(*o.view).empty());
  return o.view->models_present();
}

TEST(Registry, DodafPairsAppearExactlyOnce) {
  const auto& reg = source_registry(Framework::dodaf);
  ASSERT_EQ(reg.size(), 6u);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    EXPECT_EQ(reg[i].kind, static_cast<ModelKind>(i));
    Ids got;
    for (const auto& s : reg[i].sources) EXPECT_TRUE(got.insert(std::string(s.id)).second);
    EXPECT_EQ(got, dodaf_ids().at(reg[i].kind)) << enum_name(reg[i].kind);
  }
  EXPECT_EQ(all_ids(Framework::dodaf).size(), 9u);
}

TEST(Registry, VabTitlesMatch) {
  const auto& reg = source_registry(Framework::views_and_beyond);
  ASSERT_EQ(reg.size(), 6u);
  for (const auto& k : reg) {
    const auto& expected = vab_titles().at(k.kind);
    EXPECT_EQ(k.sources.size(), expected.size()) << enum_name(k.kind);
    for (const auto& fragment : expected) {
      bool found = false;
      for (const auto& s : k.sources) found |= s.title.find(fragment) != std::string_view::npos;
      EXPECT_TRUE(found) << fragment;
    }
  }
  EXPECT_EQ(all_ids(Framework::views_and_beyond).size(), 8u);
}

TEST(Registry, LookupAndFrameworkNames) {
  EXPECT_EQ(parse_framework("vab"), Framework::views_and_beyond);
  EXPECT_EQ(parse_framework("views-and-beyond"), Framework::views_and_beyond);
  EXPECT_EQ(parse_framework("dodaf"), Framework::dodaf);
  EXPECT_FALSE(parse_framework("togaf"));
  ASSERT_TRUE(find_source(Framework::dodaf, "SvcV-10c"));
  EXPECT_EQ(find_source(Framework::dodaf, "SvcV-10c")->title, "SvcV-10c Services Event-Trace Description");
  EXPECT_FALSE(find_source(Framework::dodaf, "deployment-view"));
  EXPECT_FALSE(find_source(Framework::views_and_beyond, "AV-1"));
}

TEST(Scaffold, DodafStakeholderSourcesOnly) {
  const auto s = scaffold(inventory(Framework::dodaf, {"AV-1", "PV-1"}), "Sys");
  EXPECT_EQ(sections_of(s.skeleton), std::set<ModelKind>{ModelKind::stakeholders});
  EXPECT_NE(s.skeleton.find("// TODO from: AV-1, PV-1"), std::string::npos) << s.skeleton;
  for (const auto& k : s.report.kinds) {
    EXPECT_EQ(k.status == TraceStatus::unsourced, k.kind != ModelKind::stakeholders);
  }
  EXPECT_EQ(s.report.at(ModelKind::stakeholders).status, TraceStatus::sourced);
}

TEST(Scaffold, EmptyInventory) {
  const auto s = scaffold(inventory(Framework::dodaf, {}), "Sys");
  EXPECT_TRUE(sections_of(s.skeleton).empty());
  for (const auto& k : s.report.kinds) EXPECT_EQ(k.status, TraceStatus::unsourced);
  EXPECT_EQ(s.report.kinds.size(), 6u);
}

TEST(Scaffold, FullVabInventorySourcesEverything) {
  const auto s = scaffold(inventory(Framework::views_and_beyond, all_ids(Framework::views_and_beyond)),
                          "Sys");
  EXPECT_EQ(sections_of(s.skeleton).size(), 6u);
  for (const auto& k : s.report.kinds) EXPECT_NE(k.status, TraceStatus::unsourced);
  EXPECT_EQ(s.report.at(ModelKind::deployment).sources_used, Ids{"deployment-view"});
  EXPECT_EQ(s.report.at(ModelKind::deployment).status, TraceStatus::sourced);
  EXPECT_EQ(find_source(Framework::views_and_beyond, "deployment-view")->title.rfind(
                "Deployment view primary presentation", 0),
            0u);
}

TEST(Scaffold, CaveatedSourceAloneIsPartial) {
  const auto s = scaffold(inventory(Framework::views_and_beyond, {"stakeholder-view-matrix"}), "S");
  EXPECT_EQ(s.report.at(ModelKind::stakeholders).status, TraceStatus::partial);
  ASSERT_TRUE(s.report.at(ModelKind::stakeholders).caveat);
}

TEST(Scaffold, HedgedKindsArePartial) {
  const auto s = scaffold(inventory(Framework::dodaf, all_ids(Framework::dodaf)), "S");
  EXPECT_EQ(s.report.at(ModelKind::code_context).status, TraceStatus::partial);
  EXPECT_EQ(s.report.at(ModelKind::deployment).status, TraceStatus::partial);
  EXPECT_EQ(s.report.at(ModelKind::execution_context).status, TraceStatus::sourced);
}

TEST(Scaffold, Errors) {
  try {
    scaffold(inventory(Framework::dodaf, {"AV-1", "OV-9"}), "S");
    FAIL();
  } catch (const DiagnosticError& e) {
    EXPECT_EQ(e.code(), "E-MAP-UNKNOWN-SOURCE");
  }
  try {
    scaffold(inventory(Framework::dodaf, {}), " ");
    FAIL();
  } catch (const DiagnosticError& e) {
    EXPECT_EQ(e.code(), "E-VIEW-NAME");
  }
}

TEST(Scaffold, TrickySystemNamesReparse) {
  for (const char* name : {"A \"quoted\" name", "back\\slash", "line\nbreak", "// not a comment"}) {
    const auto s = scaffold(inventory(Framework::dodaf, {"AV-1"}), name);
    auto o = parse(s.skeleton, "x");
    ASSERT_TRUE(o.ok()) << s.skeleton;
    EXPECT_EQ(o.view->system_name, name);
  }
}

void every_subset_reparses(Framework fw) {
  const auto ids = all_ids(fw);
  const std::vector<std::string> list(ids.begin(), ids.end());
  const std::size_t n = list.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Ids chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) chosen.insert(list[i]);
    }
    const auto s = scaffold(inventory(fw, chosen), "System");
    const auto o = parse(s.skeleton, "skeleton");
    ASSERT_TRUE(o.ok()) << s.skeleton;
    ASSERT_TRUE(validate(*o.view).empty());
    std::set<ModelKind> expected;
    for (const auto& k : source_registry(fw)) {
      for (const auto& src : k.sources) {
        if (chosen.count(std::string(src.id))) expected.insert(k.kind);
      }
    }
    ASSERT_EQ(o.view->models_present(), expected);
    for (const auto& k : s.report.kinds) {
      ASSERT_EQ(k.status == TraceStatus::unsourced, k.sources_used.empty());
    }
  }
}

TEST(Scaffold, EveryDodafInventoryReparses) { every_subset_reparses(Framework::dodaf); }
TEST(Scaffold, EveryVabInventoryReparses) { every_subset_reparses(Framework::views_and_beyond); }

TEST(Gaps, FullInventoryHasNone) {
  for (auto fw : {Framework::dodaf, Framework::views_and_beyond}) {
    EXPECT_TRUE(source_gaps(inventory(fw, all_ids(fw))).empty());
  }
}

TEST(Gaps, DodafSvcV1) {
  const auto gaps = source_gaps(inventory(Framework::dodaf, {"SvcV-1"}));
  ASSERT_FALSE(gaps.empty());
  EXPECT_EQ(gaps.front().kind, ModelKind::stakeholders);
  EXPECT_EQ(gaps.front().missing, (Ids{"AV-1", "PV-1"}));
}

TEST(Gaps, DodafDeploymentAlwaysCaveated) {
  const auto ids = all_ids(Framework::dodaf);
  for (const auto& drop : ids) {
    Ids have = ids;
    have.erase(drop);
    for (const auto& g : source_gaps(inventory(Framework::dodaf, have))) {
      if (g.kind != ModelKind::deployment) continue;
      ASSERT_TRUE(g.caveat);
      EXPECT_NE(g.caveat->find("unlikely to provide all the information needed"), std::string::npos);
    }
  }
  const auto gaps = source_gaps(inventory(Framework::dodaf, {}));
  EXPECT_EQ(gaps.size(), 6u);
  EXPECT_NE(gaps.back().caveat->find("unlikely to provide all the information needed"),
            std::string::npos);
}

TEST(Inventory, FromJson) {
  const auto inv = SourceInventory::from_json(Json::parse(R"({"framework":"vab","available":["cc-view"]})"));
  EXPECT_EQ(inv.framework, Framework::views_and_beyond);
  EXPECT_EQ(inv.available, Ids{"cc-view"});
  for (const char* bad : {R"([])", R"({"available":[]})", R"({"framework":"x"})",
                          R"({"framework":"dodaf","available":[1]})",
                          R"({"framework":"dodaf","extra":true})"}) {
    try {
      SourceInventory::from_json(Json::parse(bad));
      FAIL() << bad;
    } catch (const DiagnosticError& e) {
      EXPECT_EQ(e.code(), "E-IX-SCHEMA");
    }
  }
}

TEST(Interchange, TraceReport) {
  const auto j = to_interchange(trace(inventory(Framework::dodaf, {"AV-1"})));
  EXPECT_EQ(j["report"], "traceability");
  EXPECT_EQ(j["kinds"].size(), 6u);
}

}  // namespace
}  // namespace sosv
