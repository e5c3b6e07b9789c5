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

#include "oracles.hpp"
#include "sosv/dsl.hpp"
#include "sosv/validator.hpp"

namespace sosv {
namespace {

using testing::corpus_view;
using testing::corpus_with_deployment;

std::string schema_error(const Json& tree) {
  const auto o = from_interchange(tree, "t.json");
  EXPECT_FALSE(o.ok());
  if (o.diagnostics.empty()) return "";
  EXPECT_EQ(o.diagnostics.front().code, "E-IX-SCHEMA");
  return o.diagnostics.front().message;
}

TEST(Interchange, CorpusRoundTrips) {
  for (const auto& v : {corpus_view(), corpus_with_deployment()}) {
    const auto tree = to_interchange(v);
    const auto back = from_interchange(tree);
    ASSERT_TRUE(back.ok()) << back.diagnostics.front().message;
    EXPECT_EQ(*back.view, v);
    EXPECT_TRUE(validate(*back.view).empty());
  }
}

TEST(Interchange, TopLevelShape) {
  const auto tree = to_interchange(corpus_view());
  EXPECT_EQ(tree["system"], "Adventure Builder");
  ASSERT_TRUE(tree["models"].is_object());
  EXPECT_EQ(tree["models"].size(), 5u);
  EXPECT_FALSE(tree["models"].contains("deployment"));
}

TEST(Interchange, OutputIsByteIdentical) {
  auto v = corpus_view();
  auto w = v;
  std::reverse(w.execution_context->interactions.begin(), w.execution_context->interactions.end());
  EXPECT_EQ(dump_interchange(to_interchange(v)), dump_interchange(to_interchange(w)));
  const auto text = dump_interchange(to_interchange(v));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(dump_interchange(Json::parse(text)), text);
}

TEST(Interchange, MissingSystemIsReportedAtItsPointer) {
  auto tree = to_interchange(corpus_view());
  tree.erase("system");
  const auto msg = schema_error(tree);
  EXPECT_NE(msg.find("/system"), std::string::npos) << msg;
}

TEST(Interchange, WrongTypeNamesPath) {
  auto tree = to_interchange(corpus_view());
  tree["models"]["code-context"]["external_modules"] = "nope";
  const auto msg = schema_error(tree);
  EXPECT_NE(msg.find("/models/code-context"), std::string::npos) << msg;
}

TEST(Interchange, UnknownKeyRejected) {
  auto tree = to_interchange(corpus_view());
  tree["extra"] = 1;
  schema_error(tree);
  tree = to_interchange(corpus_view());
  tree["models"]["physical"] = Json::object();
  schema_error(tree);
}

TEST(Interchange, BadEnumRejected) {
  auto tree = to_interchange(corpus_view());
  tree["models"]["shared-resources"]["resources"][0]["kind"] = "gpu";
  const auto msg = schema_error(tree);
  EXPECT_NE(msg.find("/models/shared-resources/resources/0"), std::string::npos) << msg;
}

TEST(Interchange, NotAnObject) { schema_error(Json::array()); }

TEST(Interchange, EmptyModelsSurvive) {
  auto v = empty_view("S");
  v.code_context = CodeContextModel{};
  v.deployment = DeploymentModel{};
  const auto back = from_interchange(to_interchange(v));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back.view, v);
}

}  // namespace
}  // namespace sosv
