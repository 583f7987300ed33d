#include "pcid/calculus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "pcid/error.hpp"
#include "pcid/syntax.hpp"

namespace pcid {

namespace {

constexpr std::array<std::string_view, kRuleCount> kNames = {
    "axiom-id", "axiom-bot", "axiom-top", "weaken-l", "weaken-r", "contract-l",
    "contract-r", "cut", "not-l", "not-r", "and-l", "and-r",
    "or-l", "or-r", "def-r", "def-l", "def-nontotal", "def-intro",
};

std::string describe(const FormulaSet& fs) { return "{" + join_formulas(fs) + "}"; }

[[noreturn]] void mismatch(RuleKind r, const std::string& what) {
  throw SchemaMismatch(std::string(rule_name(r)) + ": " + what);
}

const Formula& need_formula(RuleKind r, const RuleParams& p) {
  if (!p.formula) mismatch(r, "missing parameter 'formula'");
  return *p.formula;
}

const Definition& need_definition(RuleKind r, const RuleParams& p) {
  const Formula& f = need_formula(r, p);
  if (!f.is(Formula::Kind::definition)) mismatch(r, "parameter 'formula' must be a definition, got '" + f.text() + "'");
  return f.definition();
}

void need_kind(RuleKind r, const Formula& f, Formula::Kind k, const char* what) {
  if (!f.is(k)) mismatch(r, "principal formula '" + f.text() + "' is not " + what);
}

void need_in(RuleKind r, const FormulaSet& side, const Formula& f, const char* side_name) {
  if (!side.contains(f)) mismatch(r, "'" + f.text() + "' does not occur in the " + side_name);
}

void need_subset_of_defined(RuleKind r, const Vocabulary& s, const Definition& d, const char* name) {
  if (s.empty()) mismatch(r, std::string(name) + " must be nonempty");
  for (const auto& a : s) {
    if (!d.defines(a)) mismatch(r, "'" + a.name() + "' in " + name + " is not defined in " + d.text());
  }
}

void need_fresh(RuleKind r, const Sequent& conclusion, const Vocabulary& fresh) {
  Vocabulary used = conclusion.vocabulary();
  for (const auto& a : fresh) {
    if (used.contains(a)) mismatch(r, "renamed atom '" + a.name() + "' is not fresh in the conclusion");
  }
}

std::vector<Formula> negated_atoms(const Vocabulary& v) {
  std::vector<Formula> out;
  for (const auto& a : v) out.push_back(neg(atom(a)));
  return out;
}

std::vector<Formula> plain_atoms(const Vocabulary& v) {
  std::vector<Formula> out;
  for (const auto& a : v) out.push_back(atom(a));
  return out;
}

// Shape of a one-step rule: principal formulas removed from the conclusion
// and per-premise additions. Side contexts may retain principal formulas.
struct Schema {
  FormulaSet ante_principal;
  FormulaSet succ_principal;
  struct Add {
    FormulaSet ante;
    FormulaSet succ;
  };
  std::vector<Add> premises;
};

std::vector<FormulaSet> subsets(const FormulaSet& s) {
  std::vector<Formula> items(s.begin(), s.end());
  std::vector<FormulaSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
    FormulaSet x;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask & (std::size_t{1} << i)) x.insert(items[i]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

FormulaSet minus(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

FormulaSet unite(FormulaSet a, const FormulaSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

std::vector<Sequent> instantiate(const Schema& s, const FormulaSet& gamma, const FormulaSet& delta) {
  std::vector<Sequent> out;
  for (const auto& add : s.premises) out.push_back({unite(gamma, add.ante), unite(delta, add.succ)});
  return out;
}

// Builds the schema for the one-step rules; axioms, cut and contraction
// are handled by the caller.
Schema schema_for(RuleKind r, const RuleParams& p, const Sequent& c) {
  Schema s;
  switch (r) {
    case RuleKind::weaken_l: {
      const Formula& a = need_formula(r, p);
      need_in(r, c.antecedent, a, "antecedent");
      s.ante_principal = {a};
      s.premises = {{}};
      break;
    }
    case RuleKind::weaken_r: {
      const Formula& a = need_formula(r, p);
      need_in(r, c.succedent, a, "succedent");
      s.succ_principal = {a};
      s.premises = {{}};
      break;
    }
    case RuleKind::not_l:
    case RuleKind::not_r: {
      const Formula& f = need_formula(r, p);
      need_kind(r, f, Formula::Kind::negation, "a negation");
      bool left = r == RuleKind::not_l;
      need_in(r, left ? c.antecedent : c.succedent, f, left ? "antecedent" : "succedent");
      (left ? s.ante_principal : s.succ_principal) = {f};
      if (left) {
        s.premises = {{{}, {f.operand()}}};
      } else {
        s.premises = {{{f.operand()}, {}}};
      }
      break;
    }
    case RuleKind::and_l:
    case RuleKind::or_l: {
      const Formula& f = need_formula(r, p);
      bool is_and = r == RuleKind::and_l;
      need_kind(r, f, is_and ? Formula::Kind::conjunction : Formula::Kind::disjunction,
                is_and ? "a conjunction" : "a disjunction");
      need_in(r, c.antecedent, f, "antecedent");
      s.ante_principal = {f};
      if (is_and) {
        s.premises = {{{f.lhs(), f.rhs()}, {}}};
      } else {
        s.premises = {{{f.lhs()}, {}}, {{f.rhs()}, {}}};
      }
      break;
    }
    case RuleKind::and_r:
    case RuleKind::or_r: {
      const Formula& f = need_formula(r, p);
      bool is_and = r == RuleKind::and_r;
      need_kind(r, f, is_and ? Formula::Kind::conjunction : Formula::Kind::disjunction,
                is_and ? "a conjunction" : "a disjunction");
      need_in(r, c.succedent, f, "succedent");
      s.succ_principal = {f};
      if (is_and) {
        s.premises = {{{}, {f.lhs()}}, {{}, {f.rhs()}}};
      } else {
        s.premises = {{{}, {f.lhs(), f.rhs()}}};
      }
      break;
    }
    case RuleKind::def_r: {
      const Definition& d = need_definition(r, p);
      if (!p.atom) mismatch(r, "missing parameter 'atom'");
      if (!d.defines(*p.atom)) mismatch(r, "'" + p.atom->name() + "' is not defined in " + d.text());
      need_in(r, c.antecedent, *p.formula, "antecedent");
      need_in(r, c.succedent, atom(*p.atom), "succedent");
      s.ante_principal = {*p.formula};
      s.succ_principal = {atom(*p.atom)};
      s.premises = {{{}, {d.body(*p.atom)}}};
      break;
    }
    case RuleKind::def_l: {
      const Definition& d = need_definition(r, p);
      if (!p.atom) mismatch(r, "missing parameter 'atom'");
      if (!p.uset) mismatch(r, "missing parameter 'uset'");
      const Vocabulary& u = *p.uset;
      need_subset_of_defined(r, u, d, "uset");
      if (!u.contains(*p.atom)) mismatch(r, "atom '" + p.atom->name() + "' is not in uset");
      if (p.index) {
        auto pos = static_cast<std::size_t>(std::distance(u.begin(), u.find(*p.atom))) + 1;
        if (*p.index != pos) {
          mismatch(r, "index " + std::to_string(*p.index) + " does not name '" + p.atom->name() +
                          "' (position " + std::to_string(pos) + ")");
        }
      }
      need_in(r, c.antecedent, *p.formula, "antecedent");
      need_in(r, c.antecedent, atom(*p.atom), "antecedent");
      need_fresh(r, c, rename_all(u, AtomKind::renamed_pos));
      s.ante_principal = {*p.formula, atom(*p.atom)};
      auto neg_u = negated_atoms(rename_all(u, AtomKind::renamed_pos));
      FormulaSet ante(neg_u.begin(), neg_u.end());
      for (const auto& pj : u) s.premises.push_back({ante, {neg(rename_pos(d.body(pj), u))}});
      break;
    }
    case RuleKind::def_nontotal: {
      const Definition& d = need_definition(r, p);
      if (!p.vset) mismatch(r, "missing parameter 'vset'");
      const Vocabulary& v = *p.vset;
      need_subset_of_defined(r, v, d, "vset");
      need_in(r, c.antecedent, *p.formula, "antecedent");
      Vocabulary vr = rename_all(v, AtomKind::renamed_pos);
      Vocabulary vd = rename_all(v, AtomKind::renamed_neg);
      Vocabulary fresh = vr;
      fresh.insert(vd.begin(), vd.end());
      need_fresh(r, c, fresh);
      Formula dd = Formula::definition(diamond_definition(d, v));
      s.ante_principal = {*p.formula};
      auto pos_d = plain_atoms(vd);
      auto neg_d = negated_atoms(vd);
      FormulaSet first(pos_d.begin(), pos_d.end());
      FormulaSet second(neg_d.begin(), neg_d.end());
      first.insert(dd);
      second.insert(dd);
      s.premises.push_back({first, {conj_all(negated_atoms(vr))}});
      s.premises.push_back({second, {conj_all(plain_atoms(vr))}});
      break;
    }
    case RuleKind::def_intro: {
      const Definition& d = need_definition(r, p);
      need_in(r, c.succedent, *p.formula, "succedent");
      need_fresh(r, c, rename_all(d.defined(), AtomKind::primed));
      s.succ_principal = {*p.formula};
      Formula primed = Formula::definition(prime_definition(d));
      for (const auto& pi : d.defined()) {
        s.premises.push_back({{primed}, {equiv(atom(pi.renamed(AtomKind::primed)), atom(pi))}});
      }
      break;
    }
    default: mismatch(r, "internal: no schema");
  }
  return s;
}

void check_allowed_params(RuleKind r, const RuleParams& p) {
  auto req = required_params(r);
  auto allowed = [&](const char* name) {
    if (std::find(req.begin(), req.end(), name) != req.end()) return true;
    return r == RuleKind::def_l && std::string_view(name) == "index";
  };
  auto reject = [&](const char* name, bool present) {
    if (present && !allowed(name)) mismatch(r, std::string("unexpected parameter '") + name + "'");
  };
  reject("formula", p.formula.has_value());
  reject("cutformula", p.cut_formula.has_value());
  reject("atom", p.atom.has_value());
  reject("index", p.index.has_value());
  reject("uset", p.uset.has_value());
  reject("vset", p.vset.has_value());
  for (const auto& name : req) {
    bool present = (name == "formula" && p.formula) || (name == "cutformula" && p.cut_formula) ||
                   (name == "atom" && p.atom) || (name == "uset" && p.uset) || (name == "vset" && p.vset);
    if (!present) mismatch(r, "missing parameter '" + name + "'");
  }
}

std::string premise_diff(std::size_t i, const Sequent& expected, const Sequent& got) {
  std::string out = "premise " + std::to_string(i + 1) + " differs: expected '" + expected.text() + "', got '" +
                    got.text() + "'";
  auto extra_a = minus(got.antecedent, expected.antecedent);
  auto miss_a = minus(expected.antecedent, got.antecedent);
  auto extra_s = minus(got.succedent, expected.succedent);
  auto miss_s = minus(expected.succedent, got.succedent);
  if (!miss_a.empty()) out += "; antecedent lacks " + describe(miss_a);
  if (!extra_a.empty()) out += "; antecedent has extra " + describe(extra_a);
  if (!miss_s.empty()) out += "; succedent lacks " + describe(miss_s);
  if (!extra_s.empty()) out += "; succedent has extra " + describe(extra_s);
  return out;
}

void validate(RuleKind r, const RuleParams& p, const Sequent& c, const std::vector<Sequent>& premises) {
  check_allowed_params(r, p);
  auto arity = expected_arity(r, p);
  if (arity && premises.size() != *arity) {
    mismatch(r, "expected " + std::to_string(*arity) + " premise(s), got " + std::to_string(premises.size()));
  }
  switch (r) {
    case RuleKind::axiom_id: {
      const Formula& a = need_formula(r, p);
      need_in(r, c.antecedent, a, "antecedent");
      need_in(r, c.succedent, a, "succedent");
      return;
    }
    case RuleKind::axiom_bot:
      if (c.antecedent != FormulaSet{Formula::bottom()}) {
        mismatch(r, "antecedent must be exactly {false}, got " + describe(c.antecedent));
      }
      return;
    case RuleKind::axiom_top:
      if (c.succedent != FormulaSet{Formula::top()}) {
        mismatch(r, "succedent must be exactly {true}, got " + describe(c.succedent));
      }
      return;
    case RuleKind::contract_l:
    case RuleKind::contract_r: {
      const Formula& a = need_formula(r, p);
      bool left = r == RuleKind::contract_l;
      need_in(r, left ? c.antecedent : c.succedent, a, left ? "antecedent" : "succedent");
      if (premises[0] != c) mismatch(r, premise_diff(0, c, premises[0]));
      return;
    }
    case RuleKind::cut: {
      const Formula& a = *p.cut_formula;
      std::vector<Sequent> expected = {{c.antecedent, unite(c.succedent, {a})},
                                       {unite(c.antecedent, {a}), c.succedent}};
      for (std::size_t i = 0; i < 2; ++i) {
        if (premises[i] != expected[i]) mismatch(r, premise_diff(i, expected[i], premises[i]));
      }
      return;
    }
    default: break;
  }
  Schema s = schema_for(r, p, c);
  FormulaSet gamma0 = minus(c.antecedent, s.ante_principal);
  FormulaSet delta0 = minus(c.succedent, s.succ_principal);
  for (const auto& x : subsets(s.ante_principal)) {
    for (const auto& y : subsets(s.succ_principal)) {
      if (instantiate(s, unite(gamma0, x), unite(delta0, y)) == premises) return;
    }
  }
  auto expected = instantiate(s, gamma0, delta0);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] != premises[i]) mismatch(r, premise_diff(i, expected[i], premises[i]));
  }
  mismatch(r, "premises do not share a common side context");
}

}  // namespace

std::string_view rule_name(RuleKind r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<RuleKind> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    if (kNames[i] == name) return static_cast<RuleKind>(i);
  }
  return std::nullopt;
}

const std::vector<RuleKind>& all_rules() {
  static const std::vector<RuleKind> rules = [] {
    std::vector<RuleKind> out;
    for (std::size_t i = 0; i < kRuleCount; ++i) out.push_back(static_cast<RuleKind>(i));
    return out;
  }();
  return rules;
}

std::vector<std::string> required_params(RuleKind r) {
  switch (r) {
    case RuleKind::axiom_bot:
    case RuleKind::axiom_top: return {};
    case RuleKind::cut: return {"cutformula"};
    case RuleKind::def_r: return {"formula", "atom"};
    case RuleKind::def_l: return {"formula", "atom", "uset"};
    case RuleKind::def_nontotal: return {"formula", "vset"};
    default: return {"formula"};
  }
}

std::optional<std::size_t> expected_arity(RuleKind r, const RuleParams& p) {
  switch (r) {
    case RuleKind::axiom_id:
    case RuleKind::axiom_bot:
    case RuleKind::axiom_top: return 0;
    case RuleKind::cut:
    case RuleKind::and_r:
    case RuleKind::or_l:
    case RuleKind::def_nontotal: return 2;
    case RuleKind::def_l:
      if (!p.uset) return std::nullopt;
      return p.uset->size();
    case RuleKind::def_intro:
      if (!p.formula || !p.formula->is(Formula::Kind::definition)) return std::nullopt;
      return p.formula->definition().defined().size();
    default: return 1;
  }
}

RuleInstance make_rule_instance(RuleKind rule, RuleParams params, Sequent conclusion, std::vector<Sequent> premises) {
  validate(rule, params, conclusion, premises);
  return {rule, std::move(params), std::move(conclusion), std::move(premises)};
}

std::vector<Sequent> canonical_premises(RuleKind rule, const RuleParams& params, const Sequent& c,
                                        bool retain_principal) {
  switch (rule) {
    case RuleKind::axiom_id:
    case RuleKind::axiom_bot:
    case RuleKind::axiom_top: validate(rule, params, c, {}); return {};
    case RuleKind::contract_l:
    case RuleKind::contract_r: validate(rule, params, c, {c}); return {c};
    case RuleKind::cut: {
      check_allowed_params(rule, params);
      const Formula& a = *params.cut_formula;
      return {{c.antecedent, unite(c.succedent, {a})}, {unite(c.antecedent, {a}), c.succedent}};
    }
    default: break;
  }
  check_allowed_params(rule, params);
  Schema s = schema_for(rule, params, c);
  if (retain_principal) return instantiate(s, c.antecedent, c.succedent);
  return instantiate(s, minus(c.antecedent, s.ante_principal), minus(c.succedent, s.succ_principal));
}

ProofPtr make_proof(RuleKind rule, RuleParams params, Sequent conclusion, std::vector<ProofPtr> premises) {
  return std::make_shared<const ProofNode>(ProofNode{rule, std::move(params), std::move(conclusion), std::move(premises)});
}

std::size_t proof_size(const ProofPtr& p) {
  std::unordered_map<const ProofNode*, std::size_t> memo;
  auto go = [&](auto&& self, const ProofNode* n) -> std::size_t {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::size_t total = 1;
    for (const auto& c : n->premises) total += self(self, c.get());
    memo.emplace(n, total);
    return total;
  };
  return go(go, p.get());
}

std::size_t proof_height(const ProofPtr& p) {
  std::unordered_map<const ProofNode*, std::size_t> memo;
  auto go = [&](auto&& self, const ProofNode* n) -> std::size_t {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::size_t h = 0;
    for (const auto& c : n->premises) h = std::max(h, self(self, c.get()));
    memo.emplace(n, h + 1);
    return h + 1;
  };
  return go(go, p.get());
}

bool CheckReport::certifies_validity() const {
  if (!accepted) return false;
  if (!uses_def_intro) return true;
  return std::all_of(totality.begin(), totality.end(),
                     [](const IntroducedTotality& t) { return t.status == TotalityStatus::total; });
}

CheckReport check_proof(const ProofPtr& proof, const CheckOptions& options) {
  CheckReport report;
  if (!proof) {
    report.error = "empty proof";
    return report;
  }
  report.root = proof->conclusion;
  std::unordered_map<const ProofNode*, bool> checked;
  std::set<Definition> seen;
  std::vector<std::size_t> path;

  auto go = [&](auto&& self, const ProofNode* n) -> bool {
    if (checked.contains(n)) return true;
    std::vector<Sequent> premises;
    for (const auto& c : n->premises) {
      if (!c) {
        report.error = "missing premise node";
        report.path = path;
        return false;
      }
      premises.push_back(c->conclusion);
    }
    try {
      validate(n->rule, n->params, n->conclusion, premises);
    } catch (const Error& e) {
      report.error = e.what();
      report.path = path;
      return false;
    }
    if (n->rule == RuleKind::def_intro) {
      report.uses_def_intro = true;
      const auto& d = n->params.formula->definition();
      if (seen.insert(d).second) report.introduced.push_back(d);
    }
    for (std::size_t i = 0; i < n->premises.size(); ++i) {
      path.push_back(i);
      if (!self(self, n->premises[i].get())) return false;
      path.pop_back();
    }
    checked.emplace(n, true);
    return true;
  };
  report.accepted = go(go, proof.get());

  for (const auto& d : report.introduced) {
    IntroducedTotality t{d, TotalityStatus::not_requested, std::nullopt};
    if (options.verify_totality) {
      try {
        auto r = is_total(d, {}, options.limits);
        t.status = r.total ? TotalityStatus::total : TotalityStatus::not_total;
        t.witness = r.witness;
      } catch (const ResourceLimit&) {
        t.status = TotalityStatus::undecided;
      }
    }
    report.totality.push_back(std::move(t));
  }
  return report;
}

std::vector<RuleTemplate> applicable_rules(const Sequent& s) {
  std::vector<RuleTemplate> out;
  auto add = [&](RuleKind r, RuleParams p, std::vector<std::string> unresolved = {}) {
    out.push_back({r, std::move(p), std::move(unresolved)});
  };
  auto with_formula = [](const Formula& f) {
    RuleParams p;
    p.formula = f;
    return p;
  };

  for (const auto& a : s.antecedent) {
    if (s.succedent.contains(a)) add(RuleKind::axiom_id, with_formula(a));
  }
  if (s.antecedent == FormulaSet{Formula::bottom()}) add(RuleKind::axiom_bot, {});
  if (s.succedent == FormulaSet{Formula::top()}) add(RuleKind::axiom_top, {});

  for (const auto& a : s.antecedent) {
    add(RuleKind::weaken_l, with_formula(a));
    add(RuleKind::contract_l, with_formula(a));
  }
  for (const auto& a : s.succedent) {
    add(RuleKind::weaken_r, with_formula(a));
    add(RuleKind::contract_r, with_formula(a));
  }
  add(RuleKind::cut, {}, {"cutformula"});

  for (const auto& f : s.antecedent) {
    switch (f.kind()) {
      case Formula::Kind::negation: add(RuleKind::not_l, with_formula(f)); break;
      case Formula::Kind::conjunction: add(RuleKind::and_l, with_formula(f)); break;
      case Formula::Kind::disjunction: add(RuleKind::or_l, with_formula(f)); break;
      default: break;
    }
  }
  for (const auto& f : s.succedent) {
    switch (f.kind()) {
      case Formula::Kind::negation: add(RuleKind::not_r, with_formula(f)); break;
      case Formula::Kind::conjunction: add(RuleKind::and_r, with_formula(f)); break;
      case Formula::Kind::disjunction: add(RuleKind::or_r, with_formula(f)); break;
      default: break;
    }
  }

  for (const auto& f : s.antecedent) {
    if (!f.is(Formula::Kind::definition)) continue;
    const auto& d = f.definition();
    for (const auto& g : s.succedent) {
      if (g.is(Formula::Kind::atom) && d.defines(g.atom())) {
        auto p = with_formula(f);
        p.atom = g.atom();
        add(RuleKind::def_r, std::move(p));
      }
    }
    for (const auto& g : s.antecedent) {
      if (g.is(Formula::Kind::atom) && d.defines(g.atom())) {
        auto p = with_formula(f);
        p.atom = g.atom();
        add(RuleKind::def_l, std::move(p), {"uset"});
      }
    }
    if (!d.defined().empty()) add(RuleKind::def_nontotal, with_formula(f), {"vset"});
  }
  for (const auto& f : s.succedent) {
    if (f.is(Formula::Kind::definition)) add(RuleKind::def_intro, with_formula(f));
  }
  return out;
}

}  // namespace pcid
