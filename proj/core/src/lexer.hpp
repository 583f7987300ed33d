#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcid/error.hpp"

namespace pcid::detail {

enum class Tok {
  ident,
  kw_true,
  kw_false,
  lparen,
  rparen,
  lbrace,
  rbrace,
  dot,
  comma,
  tilde,
  amp,
  bar,
  rule_arrow,  // <-
  implies,     // =>
  equiv,       // <=>
  turnstile,   // |-
  end,
};

const char* describe(Tok t);

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

// Tokenizes text[begin, end) of a larger document so that spans refer to
// the whole document. `#` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view text, std::size_t begin, std::size_t end);
inline std::vector<Token> tokenize(std::string_view text) { return tokenize(text, 0, text.size()); }

// Line and column of a byte offset.
SourceSpan span_at(std::string_view text, std::size_t begin, std::size_t end);

}  // namespace pcid::detail
