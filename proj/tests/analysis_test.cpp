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

#include <algorithm>

#include "oracles.hpp"
#include "sosv/analysis.hpp"

namespace sosv {
namespace {

using testing::corpus_view;
using testing::corpus_with_deployment;
using Names = std::vector<std::string>;

std::vector<std::string> codes(const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.code);
  return out;
}

ArchitectureView writer_view(const std::string& system, const std::string& resource,
                             std::set<UsageMode> modes) {
  auto v = empty_view(system);
  SharedResourceModel m;
  m.resources.push_back({resource, ResourceKind::database, Acquisition::explicitly, "queue"});
  m.usages.push_back({resource, "writer", UserScope::constituent, std::move(modes), std::nullopt});
  v.shared_resources = std::move(m);
  return v;
}

// ---------------------------------------------------------------------------

TEST(Contention, CorpusOrderProcessingRow) {
  const auto m = resource_contention(Workspace({corpus_view()}));
  const std::string db = "Adventure Order Processing DB";
  const std::string sys = "Adventure Builder";
  using M = std::set<UsageMode>;
  const M rw{UsageMode::reads, UsageMode::writes};
  const M r{UsageMode::reads};
  ASSERT_TRUE(m.cell(db, {sys, "Order Processing Component", UserScope::constituent}));
  EXPECT_EQ(*m.cell(db, {sys, "Order Processing Component", UserScope::constituent}), rw);
  EXPECT_EQ(*m.cell(db, {sys, "Consumer Website", UserScope::external}), rw);
  EXPECT_EQ(*m.cell(db, {sys, "Social features", UserScope::external}), r);
  EXPECT_EQ(*m.cell(db, {sys, "Cross-sell", UserScope::external}), r);
  EXPECT_EQ(m.cells.at(db).size(), 4u);
  EXPECT_EQ(m.rows, (Names{"Adventure Order Processing DB", "Bank Interface", "Consumer UI"}));
}

TEST(Contention, CorpusConflicts) {
  const auto m = resource_contention(Workspace({corpus_view()}));
  std::vector<std::string> resources;
  for (const auto& c : m.conflicts) resources.push_back(c.resource);
  // Two writers on the DB (OPC, Consumer Website); three on the Consumer UI.
  EXPECT_EQ(resources, (Names{"Adventure Order Processing DB", "Consumer UI"}));
  EXPECT_EQ(m.conflicts[1].users.size(), 3u);
  EXPECT_EQ(m.conflicts[1].reason, "3 users write or acquire it");
}

TEST(Contention, SingleUserNoConflict) {
  const auto m = resource_contention(Workspace({writer_view("A", "db", {UsageMode::writes})}));
  EXPECT_TRUE(m.conflicts.empty());
  EXPECT_EQ(m.rows, Names{"db"});
}

TEST(Contention, TwoViewsWritingOneResource) {
  const auto m = resource_contention(Workspace({writer_view("A", "db", {UsageMode::writes}),
                                                writer_view("B", "db", {UsageMode::acquires})}));
  ASSERT_EQ(m.conflicts.size(), 1u);
  const auto& c = m.conflicts[0];
  EXPECT_EQ(c.resource, "db");
  std::set<std::string> systems;
  for (const auto& u : c.users) systems.insert(u.system);
  EXPECT_EQ(systems, (std::set<std::string>{"A", "B"}));
  EXPECT_EQ(c.reason, "2 users write or acquire it across 2 systems");
}

TEST(Contention, ReadersDoNotConflict) {
  const auto m = resource_contention(Workspace({writer_view("A", "db", {UsageMode::reads}),
                                                writer_view("B", "db", {UsageMode::writes})}));
  EXPECT_TRUE(m.conflicts.empty());
}

TEST(Contention, UserToString) {
  EXPECT_EQ(to_string(ContentionUser{"Sys", "Web", UserScope::external}), "Sys: Web (external)");
}

// ---------------------------------------------------------------------------

TEST(Gap, CreditCardMissesSecurityCode) {
  const auto r = information_gap(corpus_view(), "CreditCard",
                                 {"cardType", "cardNumber", "cardExpiryDate", "cardSecurityCode"});
  EXPECT_EQ(r.missing, Names{"cardSecurityCode"});
  EXPECT_EQ(r.matched.size(), 3u);
  for (const auto& m : r.matched) {
    EXPECT_EQ(m.via, MatchVia::exact);
    EXPECT_EQ(m.field, m.required);
  }
  EXPECT_EQ(r.required_fields,
            (Names{"cardExpiryDate", "cardNumber", "cardSecurityCode", "cardType"}));
}

TEST(Gap, DeclaredFieldsMatchExactly) {
  const auto r =
      information_gap(corpus_view(), "CreditCard", {"cardType", "cardNumber", "cardExpiryDate"});
  EXPECT_TRUE(r.missing.empty());
}

TEST(Gap, NormalizedMatch) {
  const auto r = information_gap(corpus_view(), "CreditCard", {"CARD-NUMBER"});
  ASSERT_EQ(r.matched.size(), 1u);
  EXPECT_EQ(r.matched[0], (FieldMatch{"CARD-NUMBER", "cardNumber", MatchVia::normalized}));
  EXPECT_EQ(normalize_field_name("CARD-NUMBER"), "cardnumber");
  EXPECT_EQ(normalize_field_name("card_Number 2"), "cardnumber2");
}

TEST(Gap, AliasMatch) {
  const auto r = information_gap(corpus_view(), "CreditCard", {"ccv", "pan"},
                                 {{"pan", "cardNumber"}, {"ccv", "cardSecurityCode"}});
  ASSERT_EQ(r.matched.size(), 1u);
  EXPECT_EQ(r.matched[0], (FieldMatch{"pan", "cardNumber", MatchVia::alias}));
  EXPECT_EQ(r.missing, Names{"ccv"});
}

TEST(Gap, UnknownElement) {
  try {
    information_gap(corpus_view(), "Passport", {"number"});
    FAIL();
  } catch (const DiagnosticError& e) {
    EXPECT_EQ(e.code(), "E-GAP-NO-ELEMENT");
  }
}

TEST(Gap, FallsBackToSosElements) {
  auto v = empty_view("S");
  InterfaceInformationModel m;
  m.sos_elements.push_back({"Pos", std::nullopt, {{"lat", {}, {}, {}, {}}}});
  v.information_model = m;
  EXPECT_TRUE(information_gap(v, "Pos", {"lat"}).missing.empty());
}

// ---------------------------------------------------------------------------

ArchitectureView capacity_view(double need_each, const char* resource = "memory") {
  auto v = empty_view("S");
  DeploymentModel d;
  d.nodes.push_back({"n1", NodeKind::computer, {{"memory", {1024, "MiB"}}}});
  d.units.push_back({"u1", UnitKind::process, {{resource, {need_each, "MiB"}}}, std::nullopt});
  d.units.push_back({"u2", UnitKind::process, {{resource, {need_each, "MiB"}}}, std::nullopt});
  d.allocations = {{"u1", "n1"}, {"u2", "n1"}};
  v.deployment = std::move(d);
  return v;
}

TEST(Capacity, ExactFit) { EXPECT_TRUE(deployment_capacity(capacity_view(512)).empty()); }

TEST(Capacity, Overcommit) {
  const auto ds = deployment_capacity(capacity_view(600));
  ASSERT_EQ(codes(ds), std::vector<std::string>{"W-DEP-OVERCOMMIT"});
  EXPECT_NE(ds[0].message.find("1200"), std::string::npos) << ds[0].message;
  EXPECT_NE(ds[0].message.find("1024"), std::string::npos) << ds[0].message;
  EXPECT_EQ(ds[0].severity, Severity::warning);
}

TEST(Capacity, Unprovided) {
  EXPECT_EQ(codes(deployment_capacity(capacity_view(1, "gpu"))),
            (std::vector<std::string>{"W-DEP-UNPROVIDED", "W-DEP-UNPROVIDED"}));
}

TEST(Capacity, UnitMismatchIsNotSummed) {
  auto v = capacity_view(600);
  v.deployment->units[1].needs["memory"].unit = "MB";
  EXPECT_EQ(codes(deployment_capacity(v)), std::vector<std::string>{"W-DEP-UNIT-MISMATCH"});
}

TEST(Capacity, UnallocatedUnitsIgnored) {
  auto v = capacity_view(600);
  v.deployment->allocations.pop_back();
  EXPECT_TRUE(deployment_capacity(v).empty());
}

TEST(Capacity, NoModel) {
  try {
    deployment_capacity(corpus_view());
    FAIL();
  } catch (const DiagnosticError& e) {
    EXPECT_EQ(e.code(), "E-ANL-NO-MODEL");
  }
  EXPECT_TRUE(deployment_capacity(corpus_with_deployment()).empty());
}

// ---------------------------------------------------------------------------

TEST(ReportJson, CarriesReportKind) {
  const Workspace ws({corpus_view()});
  EXPECT_EQ(to_interchange(startup_order(ws))["report"], "startup-order");
  EXPECT_EQ(to_interchange(resource_contention(ws))["report"], "resource-contention");
  EXPECT_EQ(to_interchange(information_gap(corpus_view(), "CreditCard", {"x"}))["report"], "information-gap");
  EXPECT_EQ(to_interchange(concern_coverage(corpus_view()))["report"], "concern-coverage");
}

}  // namespace
}  // namespace sosv
