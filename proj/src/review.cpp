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

#include <map>
#include <sstream>

#include "sosv/render.hpp"

namespace sosv {

namespace {

struct KindTemplates {
  std::string_view purpose;  // questionnaire prompt
  std::vector<std::string_view> checklist;
};

const KindTemplates& templates(ModelKind kind) {
  static const std::map<ModelKind, KindTemplates> kTemplates = {
      {ModelKind::stakeholders,
       {"Which stakeholders of this system would be affected by changes made to join the SoS?",
        {"Every stakeholder is linked to at least one concern.",
         "Every concern is held by at least one stakeholder.",
         "Stakeholders intentionally left out are recorded."}}},
      {ModelKind::execution_context,
       {"Which runtime interactions with external systems would the SoS depend on or disturb?",
        {"Every interface names the external system it talks to.",
         "The direction of every interaction is recorded.",
         "Interactions needed at startup are marked.",
         "Monitoring behavior is described."}}},
      {ModelKind::code_context,
       {"Which external modules constrain how this system can be built or changed?",
        {"Every module has at least one dependency type.",
         "Module versions are recorded or marked unspecified.",
         "Assumptions about module evolution are recorded."}}},
      {ModelKind::information_model,
       {"Which information elements would the SoS need to exchange with this system?",
        {"Every element the SoS needs has a description.",
         "Data fields carry units, timeliness and precision where relevant.",
         "SoS elements without a local counterpart are declared unrelated."}}},
      {ModelKind::shared_resources,
       {"Which resources does this system share with other systems, and how are they used?",
        {"Every resource lists the components that use it.",
         "Acquisition of each resource is stated as explicit or implicit.",
         "Behavior when a resource is insufficient is described."}}},
      {ModelKind::deployment,
       {"Which execution resources does this system need, and where does it run?",
        {"Every unit is allocated to a node.",
         "Node capacities and unit needs use matching units.",
         "Deployment constraints are recorded."}}},
  };
  return kTemplates.at(kind);
}

std::string title(ModelKind kind) {
  switch (kind) {
    case ModelKind::stakeholders:
      return "Stakeholders and concerns";
    case ModelKind::execution_context:
      return "Execution-time context";
    case ModelKind::code_context:
      return "Code context";
    case ModelKind::information_model:
      return "Interface information";
    case ModelKind::shared_resources:
      return "Shared resources";
    case ModelKind::deployment:
      return "Deployment";
  }
  return std::string(enum_name(kind));
}

std::vector<std::string> active_questions(const ArchitectureView& view, ModelKind kind) {
  std::vector<std::string> out;
  auto q = [](std::string_view text) { return "\"" + std::string(text) + "\""; };
  switch (kind) {
    case ModelKind::stakeholders:
      for (const auto& s : view.stakeholder_model->stakeholders) {
        out.push_back("Using the model, list the concerns held by stakeholder " + q(s.name) +
                      ". Which of them would a change to the SoS put at risk?");
      }
      break;
    case ModelKind::execution_context:
      for (const auto& i : view.execution_context->interactions) {
        out.push_back("Interface " + q(i.self_interface) + " talks to " + q(i.external) +
                      ". Which side starts the interaction, and what happens if " +
                      q(i.external) + " is unavailable?");
      }
      break;
    case ModelKind::code_context:
      for (const auto& m : view.code_context->external_modules) {
        out.push_back("If module " + q(m.name) +
                      " changed version, which dependency types would need to be rechecked?");
      }
      break;
    case ModelKind::information_model:
      for (const auto* list : {&view.information_model->sos_elements,
                               &view.information_model->system_elements}) {
        for (const auto& e : *list) {
          out.push_back("Which data fields of element " + q(e.name) +
                        " would another constituent system need, and which are missing?");
        }
      }
      break;
    case ModelKind::shared_resources:
      for (const auto& r : view.shared_resources->resources) {
        out.push_back("Name every user of resource " + q(r.name) +
                      ". Which of them could starve the others?");
      }
      break;
    case ModelKind::deployment:
      for (const auto& n : view.deployment->nodes) {
        out.push_back("Which units execute on node " + q(n.name) +
                      ", and do their needs fit what it provides?");
      }
      break;
  }
  return out;
}

}  // namespace

std::string render_review_instrument(const ArchitectureView& input,
                                     const std::set<ReviewStyle>& styles) {
  const ArchitectureView view = canonicalize(input);
  std::ostringstream out;
  out << "# Review instrument: " << view.system_name << "\n";
  if (styles.empty()) return out.str();

  const auto kinds = view.models_present();
  for (auto style : styles) {
    switch (style) {
      case ReviewStyle::questionnaire:
        out << "\n## Questionnaire\n";
        for (auto kind : kinds) {
          out << "\n### " << title(kind) << "\n\n";
          out << "- " << templates(kind).purpose << "\n";
          out << "- How well does the model answer this question? (1 = not at all, 5 = fully)\n";
        }
        break;
      case ReviewStyle::checklist:
        out << "\n## Checklist\n";
        for (auto kind : kinds) {
          out << "\n### " << title(kind) << "\n\n";
          for (auto item : templates(kind).checklist) out << "- [ ] yes [ ] no: " << item << "\n";
        }
        break;
      case ReviewStyle::active:
        out << "\n## Active review\n\nAnswer each question using only the documentation.\n";
        for (auto kind : kinds) {
          const auto questions = active_questions(view, kind);
          if (questions.empty()) continue;
          out << "\n### " << title(kind) << "\n\n";
          for (const auto& question : questions) out << "- " << question << "\n";
        }
        break;
      case ReviewStyle::subjective:
        out << "\n## Your questions\n\n"
            << "Record three questions you would ask the architect of this system.\n\n";
        for (int i = 1; i <= 3; ++i) out << i << ". ____________________\n";
        break;
    }
  }
  return out.str();
}

}  // namespace sosv
