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

#include "lexer.hpp"

#include <charconv>
#include <cmath>

namespace sosv::detail {

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::word:
      return "keyword";
    case TokenKind::string:
      return "string";
    case TokenKind::number:
      return "number";
    case TokenKind::lbrace:
      return "'{'";
    case TokenKind::rbrace:
      return "'}'";
    case TokenKind::comma:
      return "','";
    case TokenKind::arrow:
      return "'->'";
    case TokenKind::end:
      return "end of input";
  }
  return "token";
}

namespace {

bool is_word_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_word_char(char c) { return is_word_start(c) || is_digit(c) || c == '-'; }

// Length of the UTF-8 sequence starting at s[i], or 0 if malformed.
std::size_t utf8_length(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  std::size_t len = 0;
  char32_t cp = 0;
  if (c < 0x80) return 1;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto cc = static_cast<unsigned char>(s[i + k]);
    if ((cc & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (cc & 0x3F);
  }
  // Overlong forms, surrogates and out-of-range values.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
      cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0;
  }
  return len;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token tok;
      tok.start = pos_;
      if (i_ >= src_.size()) {
        tok.kind = TokenKind::end;
        tok.end = pos_;
        out.push_back(std::move(tok));
        return out;
      }
      const char c = src_[i_];
      if (c == '{' || c == '}' || c == ',') {
        tok.kind = c == '{' ? TokenKind::lbrace : c == '}' ? TokenKind::rbrace : TokenKind::comma;
        tok.text = std::string(1, c);
        advance();
      } else if (c == '-' && peek(1) == '>') {
        tok.kind = TokenKind::arrow;
        tok.text = "->";
        advance();
        advance();
      } else if (c == '"') {
        tok.kind = TokenKind::string;
        tok.text = read_string();
      } else if (is_digit(c) || (c == '-' && is_digit(peek(1)))) {
        tok.kind = TokenKind::number;
        tok.text = read_number(tok.number, tok.start);
      } else if (is_word_start(c)) {
        tok.kind = TokenKind::word;
        const auto begin = i_;
        while (i_ < src_.size() && is_word_char(src_[i_]) &&
               !(src_[i_] == '-' && peek(1) == '>')) {
          advance();
        }
        tok.text = std::string(src_.substr(begin, i_ - begin));
      } else {
        fail(pos_, utf8_length(src_, i_) == 0
                       ? "invalid UTF-8 byte sequence"
                       : "unexpected character '" + std::string(src_.substr(i_, utf8_length(src_, i_))) + "'");
      }
      tok.end = pos_;
      out.push_back(std::move(tok));
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }

  // Consumes one code point.
  void advance() {
    const char c = src_[i_];
    if (c == '\n') {
      ++i_;
      ++pos_.line;
      pos_.column = 1;
      return;
    }
    const auto len = utf8_length(src_, i_);
    if (len == 0) fail(pos_, "invalid UTF-8 byte sequence");
    i_ += len;
    ++pos_.column;
  }

  void skip_trivia() {
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string read_string() {
    const Position open = pos_;
    advance();  // opening quote
    std::string out;
    for (;;) {
      if (i_ >= src_.size() || src_[i_] == '\n') fail(open, "unterminated string literal");
      const char c = src_[i_];
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\') {
        const Position esc = pos_;
        advance();
        if (i_ >= src_.size()) fail(open, "unterminated string literal");
        const char e = src_[i_];
        advance();
        switch (e) {
          case '"':
            out += '"';
            break;
          case '\\':
            out += '\\';
            break;
          case 'n':
            out += '\n';
            break;
          case 't':
            out += '\t';
            break;
          case 'r':
            out += '\r';
            break;
          case 'u': {
            char32_t cp = 0;
            for (int k = 0; k < 4; ++k) {
              if (i_ >= src_.size()) fail(esc, "truncated \\u escape");
              const char h = src_[i_];
              int v = -1;
              if (h >= '0' && h <= '9') v = h - '0';
              if (h >= 'a' && h <= 'f') v = h - 'a' + 10;
              if (h >= 'A' && h <= 'F') v = h - 'A' + 10;
              if (v < 0) fail(esc, "malformed \\u escape");
              cp = cp * 16 + static_cast<char32_t>(v);
              advance();
            }
            if (cp >= 0xD800 && cp <= 0xDFFF) fail(esc, "\\u escape names a surrogate");
            append_utf8(out, cp);
            break;
          }
          default:
            fail(esc, std::string("unknown escape '\\") + e + "'");
        }
        continue;
      }
      const auto len = utf8_length(src_, i_);
      if (len == 0) fail(pos_, "invalid UTF-8 byte sequence");
      out.append(src_.substr(i_, len));
      advance();
    }
  }

  std::string read_number(double& value, Position start) {
    const auto begin = i_;
    if (src_[i_] == '-') advance();
    while (i_ < src_.size() && is_digit(src_[i_])) advance();
    if (i_ < src_.size() && src_[i_] == '.' && is_digit(peek(1))) {
      advance();
      while (i_ < src_.size() && is_digit(src_[i_])) advance();
    }
    if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      const char sign = peek(1);
      if (is_digit(sign) || ((sign == '+' || sign == '-') && is_digit(peek(2)))) {
        advance();
        if (!is_digit(src_[i_])) advance();
        while (i_ < src_.size() && is_digit(src_[i_])) advance();
      }
    }
    const auto text = src_.substr(begin, i_ - begin);
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
      fail(start, "malformed number '" + std::string(text) + "'");
    }
    if (i_ < src_.size() && is_word_char(src_[i_])) {
      fail(start, "malformed number '" + std::string(text) + src_[i_] + "'");
    }
    return std::string(text);
  }

  [[noreturn]] void fail(Position at, std::string message) const {
    throw SyntaxError{make_error("E-PARSE-SYNTAX", std::move(message),
                                 Location{file_, at.line, at.column})};
  }

  std::string_view src_;
  const std::string& file_;
  std::size_t i_ = 0;
  Position pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
  return Lexer(source, file).run();
}

}  // namespace sosv::detail
