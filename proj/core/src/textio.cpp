#include "pcid/textio.hpp"

#include <charconv>

#include "lexer.hpp"
#include "pcid/syntax.hpp"

namespace pcid {

namespace {

using detail::Tok;
using detail::Token;

class Parser {
 public:
  Parser(std::string_view text, std::size_t begin, std::size_t end, const ParseOptions& options)
      : tokens_(detail::tokenize(text, begin, end)), options_(options) {}

  Formula formula() { return equivalence(); }

  Theory theory() {
    Theory out;
    while (!at(Tok::end)) {
      bool starts_with_brace = at(Tok::lbrace);
      Formula f = formula();
      if (at(Tok::dot)) {
        next();
      } else if (!(starts_with_brace && f.is(Formula::Kind::definition))) {
        if (at(Tok::rule_arrow)) fail("rules are only allowed inside a definition");
        expect(Tok::dot);
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  Sequent sequent() {
    Sequent s;
    s.antecedent = formula_list(Tok::turnstile);
    expect(Tok::turnstile);
    s.succedent = formula_list(Tok::end);
    finish();
    return s;
  }

  Vocabulary atom_set() {
    Vocabulary out;
    expect(Tok::lbrace);
    if (!at(Tok::rbrace)) {
      out.insert(atom_name());
      while (at(Tok::comma)) {
        next();
        out.insert(atom_name());
      }
    }
    expect(Tok::rbrace);
    return out;
  }

  Atom atom_name() {
    if (!at(Tok::ident)) fail(std::string("expected atom, got ") + detail::describe(peek().kind));
    return make_atom(next());
  }

  void finish() { expect(Tok::end); }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, peek().span); }

  const Token& expect(Tok k) {
    if (!at(k)) fail(std::string("expected ") + detail::describe(k) + ", got " + detail::describe(peek().kind));
    return next();
  }

  Atom make_atom(const Token& t) {
    bool ok = options_.allow_generated ? is_atom_name(t.text) : is_user_atom_name(t.text);
    if (!ok) {
      std::string why = t.text.find("__") != std::string_view::npos && !options_.allow_generated
                            ? "reserved atom name '"
                            : "invalid atom name '";
      throw ParseError(why + std::string(t.text) + "'", t.span);
    }
    return Atom(std::string(t.text));
  }

  FormulaSet formula_list(Tok stop) {
    FormulaSet out;
    if (at(stop)) return out;
    out.insert(formula());
    while (at(Tok::comma)) {
      next();
      out.insert(formula());
    }
    return out;
  }

  Formula equivalence() {
    Formula lhs = implication();
    while (at(Tok::equiv)) {
      next();
      lhs = equiv(lhs, implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (at(Tok::implies)) {
      next();
      return implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (at(Tok::bar)) {
      next();
      lhs = disj(lhs, conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (at(Tok::amp)) {
      next();
      lhs = conj(lhs, unary());
    }
    return lhs;
  }

  Formula unary() {
    if (at(Tok::tilde)) {
      next();
      return neg(unary());
    }
    return primary();
  }

  Formula primary() {
    switch (peek().kind) {
      case Tok::ident: return atom(make_atom(next()));
      case Tok::kw_true: next(); return Formula::top();
      case Tok::kw_false: next(); return Formula::bottom();
      case Tok::lparen: {
        next();
        Formula f = formula();
        expect(Tok::rparen);
        return f;
      }
      case Tok::lbrace: return definition();
      default: fail(std::string("expected formula, got ") + detail::describe(peek().kind));
    }
  }

  Formula definition() {
    if (in_definition_) fail("definitions cannot occur inside rule bodies");
    expect(Tok::lbrace);
    std::vector<std::pair<Atom, Formula>> rules;
    in_definition_ = true;
    while (!at(Tok::rbrace)) {
      Atom head = atom_name();
      expect(Tok::rule_arrow);
      Formula body = formula();
      expect(Tok::dot);
      rules.emplace_back(std::move(head), std::move(body));
    }
    in_definition_ = false;
    expect(Tok::rbrace);
    return Formula::definition(normalize(rules));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  bool in_definition_ = false;
};

// ---- proof documents -------------------------------------------------------

struct Line {
  std::size_t begin;  // offset of the first non-blank character
  std::size_t end;    // offset past the last non-blank character
};

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t nl = text.find('\n', i);
    if (nl == std::string_view::npos) nl = text.size();
    std::size_t b = i, e = nl;
    while (b < e && blank(text[b])) ++b;
    while (e > b && blank(text[e - 1])) --e;
    if (b < e && text[b] != '#') out.push_back({b, e});
    i = nl + 1;
  }
  return out;
}

struct PendingNode {
  RuleKind rule;
  SourceSpan span;
  std::optional<Sequent> conclusion;
  RuleParams params;
  std::vector<ProofPtr> premises;
  std::set<std::string> seen;
};

class ProofReader {
 public:
  explicit ProofReader(std::string_view text) : text_(text) {}

  ProofPtr read() {
    ProofPtr root;
    std::vector<PendingNode> stack;
    for (const Line& line : content_lines(text_)) {
      std::string_view content = text_.substr(line.begin, line.end - line.begin);
      SourceSpan span = detail::span_at(text_, line.begin, line.end);
      if (content == "}") {
        if (stack.empty()) throw ParseError("unmatched '}'", span);
        ProofPtr node = close(stack.back());
        stack.pop_back();
        if (stack.empty()) {
          if (root) throw ParseError("more than one root node", span);
          root = node;
        } else {
          stack.back().premises.push_back(node);
        }
        continue;
      }
      if (content.back() == '{') {
        std::string_view name = content.substr(0, content.size() - 1);
        while (!name.empty() && blank(name.back())) name.remove_suffix(1);
        auto rule = rule_from_name(name);
        if (!rule) throw ParseError("unknown rule '" + std::string(name) + "'", span);
        if (stack.empty() && root) throw ParseError("more than one root node", span);
        stack.push_back(PendingNode{*rule, span, std::nullopt, {}, {}, {}});
        continue;
      }
      std::size_t colon = content.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected 'key: value', 'rule {' or '}'", span);
      if (stack.empty()) throw ParseError("field outside of a node", span);
      if (!stack.back().premises.empty()) throw ParseError("fields must precede premise nodes", span);
      field(stack.back(), content.substr(0, colon), line.begin + colon + 1, line.end, span);
    }
    if (!stack.empty()) throw ParseError("unclosed node '" + std::string(rule_name(stack.back().rule)) + "'", stack.back().span);
    if (!root) throw ParseError("empty proof document", detail::span_at(text_, text_.size(), text_.size()));
    return root;
  }

 private:
  void field(PendingNode& node, std::string_view key, std::size_t begin, std::size_t end, const SourceSpan& span) {
    std::string k(key);
    if (!node.seen.insert(k).second) throw ParseError("duplicate field '" + k + "'", span);
    ParseOptions opts{true};
    auto parser = [&] { return Parser(text_, begin, end, opts); };
    if (k == "sequent") {
      Parser p = parser();
      node.conclusion = p.sequent();
    } else if (k == "formula" || k == "cutformula") {
      Parser p = parser();
      Formula f = p.formula();
      p.finish();
      (k == "formula" ? node.params.formula : node.params.cut_formula) = f;
    } else if (k == "atom") {
      Parser p = parser();
      node.params.atom = p.atom_name();
      p.finish();
    } else if (k == "uset" || k == "vset") {
      Parser p = parser();
      Vocabulary v = p.atom_set();
      p.finish();
      (k == "uset" ? node.params.uset : node.params.vset) = std::move(v);
    } else if (k == "index") {
      std::string_view v = text_.substr(begin, end - begin);
      while (!v.empty() && blank(v.front())) v.remove_prefix(1);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
      if (ec != std::errc() || ptr != v.data() + v.size() || value == 0) {
        throw ParseError("index must be a positive integer", span);
      }
      node.params.index = value;
    } else {
      throw ParseError("unknown field '" + k + "'", span);
    }
  }

  ProofPtr close(PendingNode& node) {
    std::string name(rule_name(node.rule));
    if (!node.conclusion) throw ParseError(name + " node has no sequent", node.span);
    auto required = required_params(node.rule);
    for (const auto& r : required) {
      if (!node.seen.contains(r)) throw ParseError(name + " node lacks parameter '" + r + "'", node.span);
    }
    for (const auto& s : node.seen) {
      if (s == "sequent") continue;
      bool allowed = std::find(required.begin(), required.end(), s) != required.end() ||
                     (node.rule == RuleKind::def_l && s == "index");
      if (!allowed) throw ParseError(name + " node does not take parameter '" + s + "'", node.span);
    }
    auto arity = expected_arity(node.rule, node.params);
    if (!arity) throw ParseError(name + " parameter 'formula' must be a definition", node.span);
    if (*arity != node.premises.size()) {
      throw ParseError(name + " expects " + std::to_string(*arity) + " premise(s), found " +
                           std::to_string(node.premises.size()),
                       node.span);
    }
    return make_proof(node.rule, std::move(node.params), std::move(*node.conclusion), std::move(node.premises));
  }

  std::string_view text_;
};

void print_node(const ProofNode& n, std::size_t depth, std::string& out) {
  std::string pad(depth * 2, ' ');
  std::string inner = pad + "  ";
  out += pad + std::string(rule_name(n.rule)) + " {\n";
  out += inner + "sequent: " + n.conclusion.text() + "\n";
  const RuleParams& p = n.params;
  auto set_text = [](const Vocabulary& v) {
    std::string s = "{";
    for (const auto& a : v) {
      if (s.size() > 1) s += ", ";
      s += a.name();
    }
    return s + "}";
  };
  if (p.formula) out += inner + "formula: " + p.formula->text() + "\n";
  if (p.cut_formula) out += inner + "cutformula: " + p.cut_formula->text() + "\n";
  if (p.atom) out += inner + "atom: " + p.atom->name() + "\n";
  if (p.index) out += inner + "index: " + std::to_string(*p.index) + "\n";
  if (p.uset) out += inner + "uset: " + set_text(*p.uset) + "\n";
  if (p.vset) out += inner + "vset: " + set_text(*p.vset) + "\n";
  for (const auto& c : n.premises) print_node(*c, depth + 1, out);
  out += pad + "}\n";
}

}  // namespace

Formula parse_formula(std::string_view text, const ParseOptions& options) {
  Parser p(text, 0, text.size(), options);
  Formula f = p.formula();
  p.finish();
  return f;
}

Theory parse_theory(std::string_view text, const ParseOptions& options) {
  return Parser(text, 0, text.size(), options).theory();
}

Sequent parse_sequent(std::string_view text, const ParseOptions& options) {
  return Parser(text, 0, text.size(), options).sequent();
}

std::string print_theory(const Theory& t) {
  std::string out;
  for (const auto& f : t) {
    out += f.text();
    if (!f.is(Formula::Kind::definition)) out += '.';
    out += '\n';
  }
  return out;
}

std::string print_sequent(const Sequent& s) { return s.text(); }

ProofPtr parse_proof(std::string_view text) { return ProofReader(text).read(); }

std::string print_proof(const ProofPtr& proof) {
  std::string out;
  if (proof) print_node(*proof, 0, out);
  return out;
}

}  // namespace pcid
