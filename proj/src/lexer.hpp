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

#include <string>
#include <string_view>
#include <vector>

#include "sosv/diagnostic.hpp"

namespace sosv::detail {

enum class TokenKind { word, string, number, lbrace, rbrace, comma, arrow, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;  // decoded value for strings, spelling otherwise
  double number = 0.0;
  Position start;
  Position end;  // one past the last character
};

std::string_view describe(TokenKind kind);

// Thrown on the first lexical or grammatical error; parsing stops there.
struct SyntaxError {
  Diagnostic diagnostic;
};

/// Splits `.sosv` text into tokens. `//` comments and whitespace (including
/// CR) are skipped. Throws SyntaxError on malformed input.
std::vector<Token> tokenize(std::string_view source, const std::string& file);

}  // namespace sosv::detail
