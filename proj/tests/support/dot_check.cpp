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

#include "dot_check.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sosv::testing {

namespace {

struct Tok {
  enum Kind { id, quoted, punct, end } kind;
  std::string text;
};

struct DotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool is_keyword(const std::string& s) {
  const auto l = lower(s);
  return l == "node" || l == "edge" || l == "graph" || l == "digraph" || l == "subgraph" ||
         l == "strict";
}

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  std::size_t i = 0;
  auto id_char = [](unsigned char c, bool first) {
    return std::isalpha(c) || c == '_' || c >= 0x80 || (!first && std::isdigit(c));
  };
  bool line_start = true;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == '\n') {
      line_start = true;
      ++i;
      continue;
    }
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#' && line_start) {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    line_start = false;
    if (s.compare(i, 2, "//") == 0) {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (s.compare(i, 2, "/*") == 0) {
      const auto close = s.find("*/", i + 2);
      if (close == std::string::npos) throw DotError("unterminated comment");
      i = close + 2;
      continue;
    }
    if (c == '"') {
      std::string text;
      ++i;
      for (;;) {
        if (i >= s.size()) throw DotError("unterminated string");
        if (s[i] == '\\' && i + 1 < s.size()) {
          if (s[i + 1] == '"') {
            text += '"';
          } else {
            text += s[i];
            text += s[i + 1];
          }
          i += 2;
          continue;
        }
        if (s[i] == '"') {
          ++i;
          break;
        }
        text += s[i++];
      }
      out.push_back({Tok::quoted, text});
      continue;
    }
    if (c == '<') {
      int depth = 0;
      const auto start = i;
      do {
        if (i >= s.size()) throw DotError("unterminated HTML string");
        if (s[i] == '<') ++depth;
        if (s[i] == '>') --depth;
        ++i;
      } while (depth > 0);
      out.push_back({Tok::quoted, s.substr(start, i - start)});
      continue;
    }
    if (s.compare(i, 2, "->") == 0 || s.compare(i, 2, "--") == 0) {
      out.push_back({Tok::punct, s.substr(i, 2)});
      i += 2;
      continue;
    }
    if (std::isdigit(c) || c == '.' || (c == '-' && i + 1 < s.size() &&
                                        (std::isdigit(static_cast<unsigned char>(s[i + 1])) ||
                                         s[i + 1] == '.'))) {
      const auto start = i;
      if (s[i] == '-') ++i;
      bool digits = false, dot = false;
      while (i < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[i])) || (s[i] == '.' && !dot))) {
        if (s[i] == '.') {
          dot = true;
        } else {
          digits = true;
        }
        ++i;
      }
      if (!digits) throw DotError("malformed numeral");
      out.push_back({Tok::id, s.substr(start, i - start)});
      continue;
    }
    if (id_char(c, true)) {
      const auto start = i;
      while (i < s.size() && id_char(static_cast<unsigned char>(s[i]), false)) ++i;
      out.push_back({Tok::id, s.substr(start, i - start)});
      continue;
    }
    if (std::string("{}[]=;,:").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Tok::punct, std::string(1, static_cast<char>(c))});
      ++i;
      continue;
    }
    throw DotError(std::string("unexpected character '") + static_cast<char>(c) + "'");
  }
  out.push_back({Tok::end, ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : t_(std::move(toks)) {}

  DotGraph run() {
    if (is_kw("strict")) ++i_;
    if (is_kw("digraph")) {
      g_.directed = true;
    } else if (!is_kw("graph")) {
      throw DotError("expected 'graph' or 'digraph'");
    }
    ++i_;
    if (is_id()) g_.name = t_[i_++].text;
    expect("{");
    stmt_list();
    expect("}");
    if (t_[i_].kind != Tok::end) throw DotError("trailing content after graph");
    return std::move(g_);
  }

 private:
  bool is_kw(const char* kw) const { return t_[i_].kind == Tok::id && lower(t_[i_].text) == kw; }
  bool is_punct(const char* p) const { return t_[i_].kind == Tok::punct && t_[i_].text == p; }
  bool is_id() const {
    return t_[i_].kind == Tok::quoted || (t_[i_].kind == Tok::id && !is_keyword(t_[i_].text));
  }
  void expect(const char* p) {
    if (!is_punct(p)) throw DotError(std::string("expected '") + p + "' near '" + t_[i_].text + "'");
    ++i_;
  }
  std::string id() {
    if (!is_id()) throw DotError("expected an ID near '" + t_[i_].text + "'");
    return t_[i_++].text;
  }

  void stmt_list() {
    while (!is_punct("}") && t_[i_].kind != Tok::end) {
      stmt();
      if (is_punct(";")) ++i_;
    }
  }

  std::map<std::string, std::string> attr_list() {
    std::map<std::string, std::string> attrs;
    while (is_punct("[")) {
      ++i_;
      while (!is_punct("]")) {
        const auto key = id();
        expect("=");
        attrs[key] = id();
        if (is_punct(";") || is_punct(",")) ++i_;
      }
      ++i_;
    }
    return attrs;
  }

  // Returns the node ids named by a node_id or subgraph operand.
  std::vector<std::string> operand() {
    if (is_kw("subgraph") || is_punct("{")) return subgraph();
    const auto name = id();
    if (is_punct(":")) {
      ++i_;
      id();
      if (is_punct(":")) {
        ++i_;
        id();
      }
    }
    g_.nodes.try_emplace(name);
    return {name};
  }

  std::vector<std::string> subgraph() {
    if (is_kw("subgraph")) {
      ++i_;
      if (is_id()) ++i_;
    }
    const auto before = g_.nodes;
    expect("{");
    stmt_list();
    expect("}");
    std::vector<std::string> added;
    for (const auto& [n, a] : g_.nodes) {
      if (!before.count(n)) added.push_back(n);
    }
    return added;
  }

  void stmt() {
    if (is_kw("graph") || is_kw("node") || is_kw("edge")) {
      ++i_;
      if (!is_punct("[")) throw DotError("attribute statement needs '['");
      attr_list();
      return;
    }
    if (is_id() && t_[i_ + 1].kind == Tok::punct && t_[i_ + 1].text == "=") {
      i_ += 2;
      id();
      return;
    }
    auto left = operand();
    if (is_punct("->") || is_punct("--")) {
      std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> hops;
      while (is_punct("->") || is_punct("--")) {
        if ((t_[i_].text == "->") != g_.directed) throw DotError("edge operator does not match graph type");
        ++i_;
        auto right = operand();
        hops.emplace_back(left, right);
        left = right;
      }
      const auto attrs = attr_list();
      for (const auto& [from, to] : hops) {
        for (const auto& f : from) {
          for (const auto& t : to) g_.edges.push_back({f, t, attrs});
        }
      }
      return;
    }
    const auto attrs = attr_list();
    if (left.size() == 1) {
      for (const auto& [k, v] : attrs) g_.nodes[left.front()][k] = v;
    }
  }

  std::vector<Tok> t_;
  std::size_t i_ = 0;
  DotGraph g_;
};

}  // namespace

std::optional<std::string> DotGraph::label_of(const std::string& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) return std::nullopt;
  auto l = it->second.find("label");
  if (l == it->second.end()) return id;
  return l->second;
}

DotCheck check_dot(const std::string& text) {
  DotCheck out;
  try {
    out.graph = Parser(lex(text)).run();
  } catch (const DotError& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace sosv::testing
