#include "pcid/formula.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "pcid/error.hpp"

namespace pcid {

namespace detail {

struct FormulaNode {
  Formula::Kind kind;
  std::optional<Atom> atom;
  std::vector<Formula> children;
  std::optional<Definition> definition;
  std::string text;
  std::size_t hash = 0;
  int precedence = 4;
  bool pc = true;
};

struct DefinitionData {
  std::map<Atom, Formula> rules;
  Vocabulary defined;
  Vocabulary open;
  std::set<std::pair<Atom, Atom>> deps;
  std::string text;
};

}  // namespace detail

namespace {

using detail::FormulaNode;

std::string wrap(const Formula& f, bool parens) {
  return parens ? "(" + f.text() + ")" : f.text();
}

std::shared_ptr<FormulaNode> finish(std::shared_ptr<FormulaNode> node) {
  node->hash = std::hash<std::string>{}(node->text);
  return node;
}

void collect_atoms(const Formula& f, Vocabulary& out) {
  switch (f.kind()) {
    case Formula::Kind::atom: out.insert(f.atom()); break;
    case Formula::Kind::top:
    case Formula::Kind::bottom: break;
    case Formula::Kind::negation: collect_atoms(f.operand(), out); break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      break;
    case Formula::Kind::definition: {
      auto v = f.definition().vocabulary();
      out.insert(v.begin(), v.end());
      break;
    }
  }
}

}  // namespace

Formula Formula::make_atom(Atom a) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::atom;
  node->text = a.name();
  node->atom = std::move(a);
  return Formula(finish(std::move(node)));
}

Formula Formula::top() {
  static const Formula t = [] {
    auto node = std::make_shared<FormulaNode>();
    node->kind = Kind::top;
    node->text = "true";
    return Formula(finish(std::move(node)));
  }();
  return t;
}

Formula Formula::bottom() {
  static const Formula b = [] {
    auto node = std::make_shared<FormulaNode>();
    node->kind = Kind::bottom;
    node->text = "false";
    return Formula(finish(std::move(node)));
  }();
  return b;
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::negation;
  node->text = "~" + wrap(f, f.precedence() < 4);
  node->pc = f.is_pc();
  node->children.push_back(std::move(f));
  return Formula(finish(std::move(node)));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::conjunction;
  node->precedence = 3;
  node->text = wrap(lhs, lhs.precedence() < 3) + " & " + wrap(rhs, rhs.precedence() <= 3);
  node->pc = lhs.is_pc() && rhs.is_pc();
  node->children = {std::move(lhs), std::move(rhs)};
  return Formula(finish(std::move(node)));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::disjunction;
  node->precedence = 2;
  node->text = wrap(lhs, lhs.precedence() < 2) + " | " + wrap(rhs, rhs.precedence() <= 2);
  node->pc = lhs.is_pc() && rhs.is_pc();
  node->children = {std::move(lhs), std::move(rhs)};
  return Formula(finish(std::move(node)));
}

Formula Formula::definition(Definition d) {
  auto node = std::make_shared<FormulaNode>();
  node->kind = Kind::definition;
  node->text = d.text();
  node->pc = false;
  node->definition = std::move(d);
  return Formula(finish(std::move(node)));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const Atom& Formula::atom() const {
  if (node_->kind != Kind::atom) throw ContractViolation("formula '" + text() + "' is not an atom");
  return *node_->atom;
}

const Formula& Formula::operand() const {
  if (node_->kind != Kind::negation) throw ContractViolation("formula '" + text() + "' is not a negation");
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (node_->children.size() != 2) throw ContractViolation("formula '" + text() + "' is not binary");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() != 2) throw ContractViolation("formula '" + text() + "' is not binary");
  return node_->children[1];
}

const Definition& Formula::definition() const {
  if (node_->kind != Kind::definition) throw ContractViolation("formula '" + text() + "' is not a definition");
  return *node_->definition;
}

const std::string& Formula::text() const noexcept { return node_->text; }
std::size_t Formula::hash() const noexcept { return node_->hash; }
int Formula::precedence() const noexcept { return node_->precedence; }
bool Formula::is_pc() const noexcept { return node_->pc; }

bool Formula::is_literal() const noexcept {
  if (node_->kind == Kind::atom) return true;
  return node_->kind == Kind::negation && node_->children[0].kind() == Kind::atom;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  return a.node_->hash == b.node_->hash && a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return a.node_->text.compare(b.node_->text) <=> 0;
}

Formula atom(const Atom& a) { return Formula::make_atom(a); }
Formula atom(std::string_view user_name) { return Formula::make_atom(Atom::user(user_name)); }
Formula neg(Formula f) { return Formula::negation(std::move(f)); }
Formula conj(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }
Formula implies(Formula a, Formula b) { return disj(neg(std::move(a)), std::move(b)); }

Formula equiv(Formula a, Formula b) {
  return disj(conj(a, b), conj(neg(a), neg(b)));
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

// ---- Definition -----------------------------------------------------------

Definition::Definition() : Definition(Definition::from_rules({})) {}

Definition Definition::from_rules(std::map<Atom, Formula> rules) {
  auto data = std::make_shared<detail::DefinitionData>();
  Vocabulary body_atoms;
  std::map<Atom, Vocabulary> occurs;
  for (const auto& [head, body] : rules) {
    if (!body.is_pc()) {
      throw MalformedDefinition("body of rule for '" + head.name() + "' contains a definition");
    }
    data->defined.insert(head);
    Vocabulary v;
    collect_atoms(body, v);
    body_atoms.insert(v.begin(), v.end());
    occurs.emplace(head, std::move(v));
  }
  for (const auto& a : body_atoms) {
    if (!data->defined.contains(a)) data->open.insert(a);
  }

  // Transitive closure of { (q, p) : q occurs in the body of p }.
  std::vector<Atom> all(data->defined.begin(), data->defined.end());
  all.insert(all.end(), data->open.begin(), data->open.end());
  std::sort(all.begin(), all.end());
  const std::size_t n = all.size();
  auto index = [&](const Atom& a) {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), a) - all.begin());
  };
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [head, atoms] : occurs) {
    for (const auto& q : atoms) reach[index(q)][index(head)] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) data->deps.emplace(all[i], all[j]);
    }
  }

  std::string text = "{ ";
  for (const auto& [head, body] : rules) text += head.name() + " <- " + body.text() + ". ";
  text += "}";
  data->text = std::move(text);
  data->rules = std::move(rules);
  return Definition(std::move(data));
}

const std::map<Atom, Formula>& Definition::rules() const noexcept { return data_->rules; }

const Formula& Definition::body(const Atom& head) const {
  auto it = data_->rules.find(head);
  if (it == data_->rules.end()) {
    throw ContractViolation("'" + head.name() + "' is not defined in " + data_->text);
  }
  return it->second;
}

bool Definition::defines(const Atom& a) const { return data_->defined.contains(a); }
const Vocabulary& Definition::defined() const noexcept { return data_->defined; }
const Vocabulary& Definition::open() const noexcept { return data_->open; }

Vocabulary Definition::vocabulary() const {
  Vocabulary v = data_->defined;
  v.insert(data_->open.begin(), data_->open.end());
  return v;
}

bool Definition::depends(const Atom& q, const Atom& p) const { return data_->deps.contains({q, p}); }

const std::set<std::pair<Atom, Atom>>& Definition::dependencies() const noexcept { return data_->deps; }

const std::string& Definition::text() const noexcept { return data_->text; }

bool operator==(const Definition& a, const Definition& b) noexcept {
  return a.data_ == b.data_ || a.data_->text == b.data_->text;
}

std::strong_ordering operator<=>(const Definition& a, const Definition& b) noexcept {
  return a.data_->text.compare(b.data_->text) <=> 0;
}

Vocabulary atoms_of(const Formula& f) {
  Vocabulary out;
  collect_atoms(f, out);
  return out;
}

Vocabulary atoms_of(const FormulaSet& fs) {
  Vocabulary out;
  for (const auto& f : fs) collect_atoms(f, out);
  return out;
}

std::size_t formula_size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::negation: return 1 + formula_size(f.operand());
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
    case Formula::Kind::definition: {
      std::size_t n = 1;
      for (const auto& [head, body] : f.definition().rules()) n += 1 + formula_size(body);
      return n;
    }
    default: return 1;
  }
}

std::size_t formula_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::negation: return 1 + formula_depth(f.operand());
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: return 1 + std::max(formula_depth(f.lhs()), formula_depth(f.rhs()));
    default: return 0;
  }
}

}  // namespace pcid
