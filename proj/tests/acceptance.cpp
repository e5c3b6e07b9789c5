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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "sosv/analysis.hpp"
#include "sosv/catalog.hpp"
#include "sosv/dsl.hpp"
#include "sosv/mappings.hpp"
#include "sosv/render.hpp"
#include "sosv/validator.hpp"

namespace {

using namespace sosv;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

Outcome corpus_conformance() {
  Outcome o;
  const auto start = Clock::now();
  const auto parsed = parse(testing::read_text(testing::corpus_path()), testing::corpus_path());
  o.require(parsed.ok(), "corpus does not parse");
  if (!parsed.ok()) return o;
  const auto diags = validate(*parsed.view);
  const double took = seconds_since(start);
  const auto& v = *parsed.view;
  o.require(diags.empty(), "validation reported " + std::to_string(diags.size()) + " findings");
  o.require(v.non_empty_models() ==
                std::set<ModelKind>{ModelKind::stakeholders, ModelKind::execution_context,
                                    ModelKind::code_context, ModelKind::information_model,
                                    ModelKind::shared_resources},
            "expected exactly the five documented models");
  std::set<std::string> concerns;
  for (const auto& c : v.stakeholder_model->concerns) concerns.insert(c.source_tag.value_or(""));
  o.require(concerns == std::set<std::string>{"QAS1", "QAS2", "QAS3", "QAS4", "QAS5", "QAS6", "QAS7"},
            "concern rows are not QAS1..QAS7");
  o.require(v.execution_context->externals.size() == 5, "expected 5 externals");
  std::set<std::string> modules;
  for (const auto& m : v.code_context->external_modules) modules.insert(m.name);
  o.require(modules == std::set<std::string>{"gwt", "waf", "wsdls"}, "modules differ");
  o.require(v.information_model->find({ElementScope::system, "CreditCard"}) != nullptr,
            "CreditCard element missing");
  bool db = false;
  for (const auto& r : v.shared_resources->resources) db |= r.name == "Adventure Order Processing DB";
  o.require(db, "order processing DB missing");
  o.require(took < 1.0, "took " + std::to_string(took) + " s");
  return o;
}

Outcome deployment_finding() {
  Outcome o;
  const std::set<std::string> deployment_rows = {"shared-resources", "startup-sequencing",
                                                 "fault-recovery", "dev-environment-deps"};
  std::set<std::string> partial;
  for (const auto& e : concern_coverage(testing::corpus_view()).entries) {
    if (e.status == CoverageStatus::partial && e.missing_kinds.count(ModelKind::deployment)) {
      partial.insert(e.concern_id);
    }
  }
  o.require(partial == deployment_rows, "baseline partial set differs");
  for (const auto& e : concern_coverage(testing::corpus_with_deployment()).entries) {
    if (deployment_rows.count(e.concern_id)) {
      o.require(e.status == CoverageStatus::covered, e.concern_id + " not covered after adding deployment");
    }
  }
  return o;
}

Outcome ccv_gap() {
  Outcome o;
  const auto r = information_gap(testing::corpus_view(), "CreditCard",
                                 {"cardType", "cardNumber", "cardExpiryDate", "cardSecurityCode"});
  o.require(r.missing == std::vector<std::string>{"cardSecurityCode"}, "missing set differs");
  return o;
}

Outcome sr_matrix() {
  Outcome o;
  using Cell = std::tuple<std::string, std::string, std::string>;
  const std::set<Cell> expected = {
      {"CreditCard Service", "Bank", "S"},
      {"AirlinePO Service", "Airline Provider", "S"},
      {"LodgingPO Service", "Lodging Provider", "S"},
      {"ActivityPO Service", "Activity Provider", "S"},
      {"SMTP", "User's Email Client", "S"},
      {"Web Service Broker", "Airline Provider", "R"},
      {"Web Service Broker", "Lodging Provider", "R"},
      {"Web Service Broker", "Activity Provider", "R"},
  };
  const auto m = render_sr_matrix(testing::corpus_view());
  std::set<Cell> got;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      if (!m.cells[r][c].empty()) got.insert({m.rows[r], m.columns[c], m.cells[r][c]});
    }
  }
  o.require(got == expected, "non-empty cells differ");
  return o;
}

Outcome catalog_integrity() {
  Outcome o;
  using MK = ModelKind;
  const std::map<std::string, std::set<MK>> rows = {
      {"shared-resources", {MK::shared_resources, MK::execution_context, MK::deployment}},
      {"insufficient-resource-behavior",
       {MK::shared_resources, MK::information_model, MK::execution_context}},
      {"authentication", {MK::information_model, MK::shared_resources, MK::execution_context}},
      {"authorization", {MK::information_model, MK::shared_resources, MK::execution_context}},
      {"encryption", {MK::information_model, MK::shared_resources, MK::execution_context}},
      {"startup-sequencing", {MK::execution_context, MK::deployment}},
      {"fault-detection-logging", {MK::information_model, MK::execution_context}},
      {"fault-recovery", {MK::execution_context, MK::deployment}},
      {"build-dependencies", {MK::code_context}},
      {"dev-environment-deps", {MK::code_context, MK::deployment, MK::stakeholders}},
      {"interface-variabilities", {MK::information_model}},
      {"decision-model", {MK::code_context, MK::information_model}},
      {"configuration-dependencies",
       {MK::code_context, MK::execution_context, MK::information_model}},
      {"perceived-needs", {MK::stakeholders}},
      {"processes-cultures", {MK::stakeholders}},
      {"constituent-stakeholders", {MK::stakeholders}},
  };
  o.require(catalog().size() == 16, "catalog has " + std::to_string(catalog().size()) + " entries");
  for (const auto& [id, kinds] : rows) {
    const auto* e = catalog().find(id);
    o.require(e != nullptr, id + " missing");
    if (e) o.require(e->model_kinds == kinds, id + " kinds differ");
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  testing::Rng rng(42);
  const auto start = Clock::now();
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto v = testing::random_view(rng);
    const auto back = parse(serialize(v), "generated");
    if (!back.ok() || !(*back.view == v)) ++failures;
  }
  const double took = seconds_since(start);
  o.require(failures == 0, std::to_string(failures) + " of 1000 views did not round-trip");
  o.require(took < 30.0, "took " + std::to_string(took) + " s");
  return o;
}

Outcome graph_oracle() {
  Outcome o;
  testing::Rng rng(7);
  int disagreements = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = testing::random_startup_fixture(rng, 8);
    const auto r = startup_order(f.workspace());
    const auto expected = testing::brute_force_order(f);
    if (expected) {
      if (!r.ok() || r.order != *expected || !testing::respects_edges(r.order, f.edges)) {
        ++disagreements;
      }
    } else if (r.ok() || r.cycle != testing::brute_force_cycle(f)) {
      ++disagreements;
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements in 500 trials");
  return o;
}

Outcome framework_registry() {
  Outcome o;
  std::set<std::string> vab;
  for (const auto& k : source_registry(Framework::views_and_beyond)) {
    for (const auto& s : k.sources) vab.insert(std::string(s.id));
  }
  const auto full = scaffold(SourceInventory{Framework::views_and_beyond, vab}, "Adventure Builder");
  for (const auto& k : full.report.kinds) {
    o.require(k.status != TraceStatus::unsourced,
              std::string(enum_name(k.kind)) + " unsourced with the full inventory");
  }
  const auto full_view = parse(full.skeleton, "full");
  o.require(full_view.ok() && full_view.view->models_present().size() == 6,
            "full skeleton does not reparse with six sections");

  const auto dodaf = scaffold(SourceInventory{Framework::dodaf, {"AV-1", "PV-1"}}, "Adventure Builder");
  for (const auto& k : dodaf.report.kinds) {
    o.require((k.status != TraceStatus::unsourced) == (k.kind == ModelKind::stakeholders),
              std::string(enum_name(k.kind)) + " has the wrong status for {AV-1, PV-1}");
  }
  const auto dodaf_view = parse(dodaf.skeleton, "dodaf");
  o.require(dodaf_view.ok() &&
                dodaf_view.view->models_present() == std::set<ModelKind>{ModelKind::stakeholders},
            "DoDAF skeleton sections differ");

  // Every inventory of either framework reparses.
  for (auto fw : {Framework::dodaf, Framework::views_and_beyond}) {
    std::vector<std::string> ids;
    for (const auto& k : source_registry(fw)) {
      for (const auto& s : k.sources) {
        if (std::find(ids.begin(), ids.end(), s.id) == ids.end()) ids.emplace_back(s.id);
      }
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << ids.size()); ++mask) {
      std::set<std::string> have;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (mask & (std::size_t{1} << i)) have.insert(ids[i]);
      }
      const auto s = scaffold(SourceInventory{fw, have}, "System");
      const auto p = parse(s.skeleton, "skeleton");
      if (!p.ok() || !validate(*p.view).empty()) {
        o.require(false, "a skeleton failed to reparse");
        return o;
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 corpus parses and validates with no errors in under 1 s", corpus_conformance},
      {"AC2 missing deployment model leaves exactly the deployment-mapped concerns partial",
       deployment_finding},
      {"AC3 CreditCard gap is exactly {cardSecurityCode}", ccv_gap},
      {"AC4 S/R matrix cells match the corpus interactions", sr_matrix},
      {"AC5 concern catalog has 16 entries matching the concern mapping", catalog_integrity},
      {"AC6 1000 random views round-trip through serialize/parse", round_trip},
      {"AC7 startup order agrees with brute force on 500 random graphs", graph_oracle},
      {"AC8 framework scaffolds source the expected kinds and reparse", framework_registry},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", name, o.pass ? "" : ": ",
                o.detail.c_str());
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
