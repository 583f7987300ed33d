#include "lexer.hpp"

namespace pcid::detail {

namespace {

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

}  // namespace

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "atom";
    case Tok::kw_true: return "'true'";
    case Tok::kw_false: return "'false'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::dot: return "'.'";
    case Tok::comma: return "','";
    case Tok::tilde: return "'~'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::rule_arrow: return "'<-'";
    case Tok::implies: return "'=>'";
    case Tok::equiv: return "'<=>'";
    case Tok::turnstile: return "'|-'";
    case Tok::end: return "end of input";
  }
  return "?";
}

SourceSpan span_at(std::string_view text, std::size_t begin, std::size_t end) {
  SourceSpan s{begin, end, 1, 1};
  for (std::size_t i = 0; i < begin && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++s.line;
      s.column = 1;
    } else {
      ++s.column;
    }
  }
  return s;
}

std::vector<Token> tokenize(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<Token> out;
  SourceSpan pos = span_at(text, begin, begin);
  std::size_t i = begin;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  auto emit = [&](Tok kind, std::size_t n) {
    SourceSpan s{i, i + n, pos.line, pos.column};
    out.push_back({kind, text.substr(i, n), s});
    advance(n);
  };
  auto at = [&](std::size_t k) { return i + k < end ? text[i + k] : '\0'; };

  while (i < end) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < end && text[i] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t n = 1;
      while (i + n < end && ident_char(text[i + n])) ++n;
      std::string_view word = text.substr(i, n);
      Tok kind = word == "true" ? Tok::kw_true : word == "false" ? Tok::kw_false : Tok::ident;
      emit(kind, n);
      continue;
    }
    switch (c) {
      case '(': emit(Tok::lparen, 1); continue;
      case ')': emit(Tok::rparen, 1); continue;
      case '{': emit(Tok::lbrace, 1); continue;
      case '}': emit(Tok::rbrace, 1); continue;
      case '.': emit(Tok::dot, 1); continue;
      case ',': emit(Tok::comma, 1); continue;
      case '~': emit(Tok::tilde, 1); continue;
      case '&': emit(Tok::amp, 1); continue;
      case '|':
        if (at(1) == '-') {
          emit(Tok::turnstile, 2);
        } else {
          emit(Tok::bar, 1);
        }
        continue;
      case '<':
        if (at(1) == '-') {
          emit(Tok::rule_arrow, 2);
          continue;
        }
        if (at(1) == '=' && at(2) == '>') {
          emit(Tok::equiv, 3);
          continue;
        }
        break;
      case '=':
        if (at(1) == '>') {
          emit(Tok::implies, 2);
          continue;
        }
        break;
      default: break;
    }
    SourceSpan s{i, i + 1, pos.line, pos.column};
    throw ParseError("unexpected character '" + std::string(1, c) + "'", s);
  }
  out.push_back({Tok::end, {}, SourceSpan{end, end, pos.line, pos.column}});
  return out;
}

}  // namespace pcid::detail
