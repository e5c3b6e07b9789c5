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

#include "sosv/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "sosv/analysis.hpp"
#include "sosv/dsl.hpp"
#include "sosv/mappings.hpp"
#include "sosv/render.hpp"
#include "sosv/validator.hpp"

namespace sosv::cli {

namespace {

struct Loaded {
  std::string path;
  std::optional<ArchitectureView> view;
  std::vector<Diagnostic> diagnostics;
  bool io_error = false;

  bool usable() const { return view && !io_error && !has_errors(diagnostics); }
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

bool ends_with(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
}

Loaded load(const std::string& path, bool check) {
  Loaded result{path, std::nullopt, {}, false};
  const auto text = read_file(path);
  if (!text) {
    result.io_error = true;
    result.diagnostics.push_back(make_error("E-IO", "cannot read '" + path + "'"));
    return result;
  }
  ParseOutcome outcome;
  if (ends_with(path, ".json")) {
    try {
      outcome = from_interchange(Json::parse(*text), path);
    } catch (const Json::parse_error& e) {
      outcome.diagnostics.push_back(
          make_error("E-IX-SCHEMA", std::string("malformed JSON: ") + e.what(), Location{path, 1, 1}));
    }
  } else {
    outcome = parse(*text, path);
  }
  result.view = std::move(outcome.view);
  result.diagnostics = std::move(outcome.diagnostics);
  if (check && result.view) {
    auto findings = validate(*result.view);
    result.diagnostics.insert(result.diagnostics.end(), findings.begin(), findings.end());
  }
  return result;
}

std::vector<Loaded> load_all(const std::vector<std::string>& paths, bool check) {
  std::vector<std::future<Loaded>> pending;
  pending.reserve(paths.size());
  for (const auto& p : paths) pending.push_back(std::async(std::launch::async, load, p, check));
  std::vector<Loaded> out;
  out.reserve(paths.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

// Precondition failures that stem from how the tool was invoked rather than
// from file content.
bool is_usage_code(std::string_view code) {
  return code == "E-COV-UNKNOWN-ID" || code == "E-LINT-UNKNOWN" ||
         code == "E-MAP-UNKNOWN-SOURCE" || code == "E-RND-NOTATION" || code == "E-USAGE" ||
         code == "E-IO" || code == "E-VIEW-NAME";
}

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, bool color) : out_(out), err_(err), color_(color) {}

  void diagnostic(const Diagnostic& d, std::string_view file) {
    const auto line = format_diagnostic(d, file);
    if (!color_) {
      err_ << line << "\n";
      return;
    }
    const char* code = d.severity == Severity::error     ? "\033[31m"
                       : d.severity == Severity::warning ? "\033[33m"
                                                         : "\033[36m";
    err_ << code << line << "\033[0m\n";
  }

  void diagnostics(const std::vector<Diagnostic>& ds, std::string_view file) {
    for (const auto& d : ds) diagnostic(d, file);
  }

  // Writes a report to the output file when one was given, else to `out`.
  // Returns false after reporting E-IO.
  bool report(const std::string& text) {
    if (output_path.empty()) {
      out_ << text;
      return true;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (file << text; !file) {
      diagnostic(make_error("E-IO", "cannot write '" + output_path + "'"), "sosv");
      return false;
    }
    return true;
  }

  int report_or_io(const std::string& text, int code) { return report(text) ? code : kExitUsage; }

  // Prints every file's diagnostics; the exit code for the batch.
  int settle(const std::vector<Loaded>& files) {
    int code = kExitOk;
    for (const auto& f : files) {
      diagnostics(f.diagnostics, f.path);
      if (f.io_error) {
        code = kExitUsage;
      } else if (has_errors(f.diagnostics) && code == kExitOk) {
        code = kExitFindings;
      }
    }
    return code;
  }

  std::string output_path;
  std::string current_file = "sosv";

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool color_;
};

bool want_color(const std::ostream& err) {
  if (std::getenv("SOSV_NO_COLOR") != nullptr) return false;
  return err.rdbuf() == std::cerr.rdbuf() && ::isatty(STDERR_FILENO) == 1;
}

std::string json_text(const Json& tree) { return dump_interchange(tree); }

const std::vector<std::string> kModelChoices = [] {
  std::vector<std::string> names;
  for (auto k : enum_values<ModelKind>()) names.emplace_back(enum_name(k));
  return names;
}();

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session(out, err, want_color(err));
  std::function<int()> action;

  CLI::App app{"Check, analyze and render constituent-system architecture views.", "sosv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sosv 0.1.0");

  std::string format = "text";
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(choices)));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", session.output_path, "Write the report to a file");
  };

  // parse -------------------------------------------------------------------
  std::string file;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a view and print it in canonical form");
  parse_cmd->add_option("file", file, "A .sosv file or an interchange .json file")->required();
  std::string parse_format = "sosv";
  parse_cmd->add_option("--format", parse_format, "Output format")
      ->check(CLI::IsMember({"sosv", "interchange"}));
  add_output(parse_cmd);
  parse_cmd->callback([&] {
    action = [&] {
      const auto loaded = load(file, false);
      const int code = session.settle({loaded});
      if (!loaded.view || code != kExitOk) return code;
      const auto text = parse_format == "sosv" ? serialize(*loaded.view)
                                               : json_text(to_interchange(*loaded.view));
      return session.report_or_io(text, kExitOk);
    };
  });

  // validate ----------------------------------------------------------------
  std::vector<std::string> files;
  std::vector<std::string> lints;
  auto* validate_cmd = app.add_subcommand("validate", "Check views against the metamodel");
  validate_cmd->add_option("files", files, "Views to check")->required();
  validate_cmd->add_option("--lint", lints, "Cross-model lints: codes or 'all'")->delimiter(',');
  add_format(validate_cmd, {"text", "interchange"});
  add_output(validate_cmd);
  validate_cmd->callback([&] {
    action = [&] {
      LintConfig config;
      if (std::find(lints.begin(), lints.end(), "all") != lints.end()) {
        config = LintConfig::all();
      } else if (!lints.empty()) {
        config = LintConfig::with(lints);
      }
      auto loaded = load_all(files, true);
      for (auto& f : loaded) {
        if (!f.view || config.empty()) continue;
        auto found = correspondence_lints(*f.view, config);
        f.diagnostics.insert(f.diagnostics.end(), found.begin(), found.end());
        sort_diagnostics(f.diagnostics);
      }
      const int code = session.settle(loaded);
      if (format != "interchange") return code;
      Json report{{"report", "validation"}, {"files", Json::array()}};
      for (const auto& f : loaded) {
        report["files"].push_back(
            Json{{"file", f.path}, {"diagnostics", to_interchange(f.diagnostics, f.path)}});
      }
      return session.report_or_io(json_text(report), code);
    };
  });

  // coverage ----------------------------------------------------------------
  std::vector<std::string> concerns;
  auto* coverage_cmd = app.add_subcommand("coverage", "Report which catalog concerns a view covers");
  coverage_cmd->add_option("file", file, "View to report on")->required();
  coverage_cmd->add_option("--concern", concerns, "Restrict to these catalog ids")->delimiter(',');
  add_format(coverage_cmd, {"text", "interchange"});
  add_output(coverage_cmd);
  coverage_cmd->callback([&] {
    action = [&] {
      session.current_file = file;
      const auto loaded = load(file, true);
      if (const int code = session.settle({loaded}); !loaded.usable()) return code;
      std::optional<std::set<std::string>> filter;
      if (!concerns.empty()) filter.emplace(concerns.begin(), concerns.end());
      const auto report = concern_coverage(*loaded.view, filter);
      session.diagnostics(assumption_gaps(*loaded.view), file);
      return session.report_or_io(
          format == "interchange" ? json_text(to_interchange(report)) : render_coverage(report),
          kExitOk);
    };
  });

  // analyze -----------------------------------------------------------------
  auto* analyze_cmd = app.add_subcommand("analyze", "SoS-level analyses over one or more views");
  analyze_cmd->require_subcommand(1);

  auto workspace_of = [&](const std::vector<Loaded>& loaded) {
    std::vector<ArchitectureView> views;
    for (const auto& f : loaded) views.push_back(*f.view);
    return Workspace(std::move(views));
  };
  auto all_usable = [](const std::vector<Loaded>& loaded) {
    return std::all_of(loaded.begin(), loaded.end(), [](const Loaded& f) { return f.usable(); });
  };

  auto* startup_cmd = analyze_cmd->add_subcommand("startup", "Order systems for startup");
  startup_cmd->add_option("files", files, "Views in the workspace")->required();
  add_format(startup_cmd, {"text", "interchange"});
  add_output(startup_cmd);
  startup_cmd->callback([&] {
    action = [&] {
      const auto loaded = load_all(files, true);
      if (const int code = session.settle(loaded); !all_usable(loaded)) return code;
      const auto result = startup_order(workspace_of(loaded));
      const int code = result.ok() ? kExitOk : kExitFindings;
      if (!result.ok()) session.diagnostic(cycle_diagnostic(result), "workspace");
      if (format == "interchange") return session.report_or_io(json_text(to_interchange(result)), code);
      return result.ok() ? session.report_or_io(render_startup(result), code) : code;
    };
  });

  auto* resources_cmd = analyze_cmd->add_subcommand("resources", "Shared-resource contention");
  resources_cmd->add_option("files", files, "Views in the workspace")->required();
  add_format(resources_cmd, {"text", "interchange"});
  add_output(resources_cmd);
  resources_cmd->callback([&] {
    action = [&] {
      const auto loaded = load_all(files, true);
      if (const int code = session.settle(loaded); !all_usable(loaded)) return code;
      const auto matrix = resource_contention(workspace_of(loaded));
      return session.report_or_io(format == "interchange" ? json_text(to_interchange(matrix))
                                                          : render_contention(matrix),
                                  kExitOk);
    };
  });

  std::string element;
  std::vector<std::string> required_fields;
  std::vector<std::string> alias_args;
  auto* gaps_cmd = analyze_cmd->add_subcommand("gaps", "Compare an element's fields with a need");
  gaps_cmd->add_option("file", file, "View to inspect")->required();
  gaps_cmd->add_option("--element", element, "Information element name")->required();
  gaps_cmd->add_option("--require", required_fields, "Required field names")->required();
  gaps_cmd->add_option("--alias", alias_args, "required=field mapping");
  add_format(gaps_cmd, {"text", "interchange"});
  add_output(gaps_cmd);
  gaps_cmd->callback([&] {
    action = [&] {
      session.current_file = file;
      std::map<std::string, std::string> aliases;
      for (const auto& a : alias_args) {
        const auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == a.size()) {
          throw DiagnosticError(make_error("E-USAGE", "--alias expects required=field, got '" + a + "'"));
        }
        aliases[a.substr(0, eq)] = a.substr(eq + 1);
      }
      const auto loaded = load(file, true);
      if (const int code = session.settle({loaded}); !loaded.usable()) return code;
      const auto report = information_gap(*loaded.view, element, required_fields, aliases);
      return session.report_or_io(
          format == "interchange" ? json_text(to_interchange(report)) : render_gap(report), kExitOk);
    };
  });

  auto* capacity_cmd = analyze_cmd->add_subcommand("capacity", "Check deployment capacity");
  capacity_cmd->add_option("file", file, "View to inspect")->required();
  add_format(capacity_cmd, {"text", "interchange"});
  add_output(capacity_cmd);
  capacity_cmd->callback([&] {
    action = [&] {
      session.current_file = file;
      const auto loaded = load(file, true);
      if (const int code = session.settle({loaded}); !loaded.usable()) return code;
      const auto findings = deployment_capacity(*loaded.view);
      session.diagnostics(findings, file);
      const int code = has_errors(findings) ? kExitFindings : kExitOk;
      if (format == "interchange") {
        return session.report_or_io(
            json_text(Json{{"report", "deployment-capacity"},
                           {"diagnostics", to_interchange(findings, file)}}),
            code);
      }
      return code;
    };
  });

  // render ------------------------------------------------------------------
  std::string model_name;
  std::string as = "md";
  auto* render_cmd = app.add_subcommand("render", "Render one model as Markdown or DOT");
  render_cmd->add_option("file", file, "View to render")->required();
  render_cmd->add_option("--model", model_name, "Model kind")
      ->required()
      ->check(CLI::IsMember(kModelChoices));
  render_cmd->add_option("--as", as, "Notation")
      ->check(CLI::IsMember({"md", "table", "matrix", "list", "dot"}));
  add_output(render_cmd);
  render_cmd->callback([&] {
    action = [&] {
      session.current_file = file;
      const auto loaded = load(file, true);
      if (const int code = session.settle({loaded}); !loaded.usable()) return code;
      const ModelKind model = *parse_enum<ModelKind>(model_name);
      std::string text;
      if (as == "dot") {
        text = render_dot(*loaded.view, model);
      } else {
        const auto notation = as == "matrix" ? Notation::matrix
                              : as == "list" ? Notation::list
                                             : Notation::table;
        text = render_markdown(*loaded.view, model, notation);
      }
      return session.report_or_io(text, kExitOk);
    };
  });

  // review ------------------------------------------------------------------
  std::vector<std::string> style_args;
  auto* review_cmd = app.add_subcommand("review", "Generate a review instrument for a view");
  review_cmd->add_option("file", file, "View under review")->required();
  review_cmd->add_option("--style", style_args, "questionnaire, checklist, subjective, active")
      ->delimiter(',')
      ->check(CLI::IsMember({"questionnaire", "checklist", "subjective", "active"}));
  add_output(review_cmd);
  review_cmd->callback([&] {
    action = [&] {
      session.current_file = file;
      std::set<ReviewStyle> styles;
      for (const auto& s : style_args) styles.insert(*parse_enum<ReviewStyle>(s));
      const auto loaded = load(file, true);
      if (const int code = session.settle({loaded}); !loaded.usable()) return code;
      return session.report_or_io(render_review_instrument(*loaded.view, styles), kExitOk);
    };
  });

  // scaffold ----------------------------------------------------------------
  std::string framework_arg;
  std::vector<std::string> have;
  std::string system_name;
  std::string inventory_path;
  bool trace_only = false;
  auto* scaffold_cmd =
      app.add_subcommand("scaffold", "Start a view from existing framework documents");
  scaffold_cmd->add_option("--framework", framework_arg, "vab (views-and-beyond) or dodaf")
      ->check(CLI::IsMember({"vab", "views-and-beyond", "dodaf"}));
  scaffold_cmd->add_option("--have", have, "Available source ids")->delimiter(',');
  scaffold_cmd->add_option("--inventory", inventory_path, "Inventory JSON document");
  scaffold_cmd->add_option("--system", system_name, "Constituent system name")->required();
  scaffold_cmd->add_flag("--report", trace_only, "Print the traceability report instead");
  add_format(scaffold_cmd, {"text", "interchange"});
  add_output(scaffold_cmd);
  scaffold_cmd->callback([&] {
    action = [&] {
      SourceInventory inventory;
      if (!inventory_path.empty()) {
        session.current_file = inventory_path;
        const auto text = read_file(inventory_path);
        if (!text) throw DiagnosticError(make_error("E-IO", "cannot read '" + inventory_path + "'"));
        Json tree;
        try {
          tree = Json::parse(*text);
        } catch (const Json::parse_error& e) {
          throw DiagnosticError(make_error("E-IX-SCHEMA", std::string("malformed JSON: ") + e.what()));
        }
        inventory = SourceInventory::from_json(tree);
      } else if (framework_arg.empty()) {
        throw DiagnosticError(make_error("E-USAGE", "scaffold needs --framework or --inventory"));
      }
      if (!framework_arg.empty()) inventory.framework = *parse_framework(framework_arg);
      inventory.available.insert(have.begin(), have.end());
      const auto result = scaffold(inventory, system_name);
      const auto gaps = source_gaps(inventory);
      if (format == "interchange" && trace_only) {
        Json tree = to_interchange(result.report);
        tree["gaps"] = to_interchange(gaps);
        return session.report_or_io(json_text(tree), kExitOk);
      }
      if (format == "interchange") {
        Json tree{{"skeleton", result.skeleton},
                  {"traceability", to_interchange(result.report)},
                  {"gaps", to_interchange(gaps)}};
        return session.report_or_io(json_text(tree), kExitOk);
      }
      if (!trace_only) return session.report_or_io(result.skeleton, kExitOk);
      std::string text = "| Model | Status | Sources used | Missing | Caveat |\n| --- | --- | --- | --- | --- |\n";
      for (const auto& t : result.report.kinds) {
        std::string used, missing;
        for (const auto& s : t.sources_used) used += (used.empty() ? "" : ", ") + s;
        for (const auto& g : gaps) {
          if (g.kind != t.kind) continue;
          for (const auto& s : g.missing) missing += (missing.empty() ? "" : ", ") + s;
        }
        text += "| " + std::string(enum_name(t.kind)) + " | " + std::string(enum_name(t.status)) +
                " | " + used + " | " + missing + " | " + t.caveat.value_or("") + " |\n";
      }
      return session.report_or_io(text, kExitOk);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and --version
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "sosv: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const DiagnosticError& e) {
    session.diagnostic(e.diagnostic(), session.current_file);
    return is_usage_code(e.code()) ? kExitUsage : kExitFindings;
  }
}

}  // namespace sosv::cli
