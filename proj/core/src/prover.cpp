#include "pcid/prover.hpp"

#include <map>
#include <stdexcept>

#include "pcid/error.hpp"
#include "pcid/syntax.hpp"
#include "proof_ops.hpp"

namespace pcid {

namespace {

using detail::complement;
using detail::cut_on;
using detail::infer;
using detail::weaken_to;

struct Literal {
  Atom atom;
  bool positive;
};

std::optional<Literal> as_literal(const Formula& f) {
  if (f.is(Formula::Kind::atom)) return Literal{f.atom(), true};
  if (f.is(Formula::Kind::negation) && f.operand().is(Formula::Kind::atom)) return Literal{f.operand().atom(), false};
  return std::nullopt;
}

Literal need_literal(const Formula& f) {
  auto l = as_literal(f);
  if (!l) throw ContractViolation("'" + f.text() + "' is not a literal");
  return *l;
}

Formula make_literal(const Atom& a, bool positive) { return positive ? atom(a) : neg(atom(a)); }

// Literals of the atoms in `atoms` that `i` decides.
FormulaSet decided_literals(const Interpretation& i, const Vocabulary& atoms) {
  FormulaSet out;
  for (const auto& a : atoms) {
    TruthValue v = i[a];
    if (v != TruthValue::U) out.insert(make_literal(a, v == TruthValue::T));
  }
  return out;
}

Interpretation open_values(const Definition& d, const FormulaSet& gamma) {
  Interpretation out;
  for (const auto& f : gamma) {
    auto l = as_literal(f);
    if (l && d.open().contains(l->atom)) {
      TruthValue v = from_bool(l->positive);
      if (out.contains(l->atom) && out[l->atom] != v) {
        throw ContractViolation("literals for '" + l->atom.name() + "' are contradictory");
      }
      out.set(l->atom, v);
    }
  }
  return out;
}

FormulaSet literals_over(const FormulaSet& gamma, const Vocabulary& atoms) {
  FormulaSet out;
  for (const auto& f : gamma) {
    auto l = as_literal(f);
    if (l && atoms.contains(l->atom)) out.insert(f);
  }
  return out;
}

Sequent make_sequent(FormulaSet ante, FormulaSet succ) { return {std::move(ante), std::move(succ)}; }

RuleParams formula_param(const Formula& f) {
  RuleParams p;
  p.formula = f;
  return p;
}

// Proof of D, gamma' --> target along the default well-founded trace, where
// gamma' holds only literals of gamma over open atoms of d.
ProofPtr derive(const Definition& d, const FormulaSet& gamma, const Formula& target) {
  Literal goal = need_literal(target);
  if (!d.defines(goal.atom)) throw ContractViolation("'" + goal.atom.name() + "' is not defined in " + d.text());
  WfTrace trace = wf_trace(d, open_values(d, gamma));
  if (trace.limit[goal.atom] != from_bool(goal.positive)) {
    throw ContractViolation("'" + target.text() + "' is not true in the well-founded model of " + d.text());
  }
  const Formula def = Formula::definition(d);

  std::map<Atom, std::size_t> step_of;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    for (const auto& a : trace.steps[k].atoms) step_of.emplace(a, k);
  }

  // Literals each step relies on, taken from the interpretation before it.
  std::map<std::size_t, FormulaSet> step_lits;
  auto lits_of = [&](std::size_t k) -> const FormulaSet& {
    auto it = step_lits.find(k);
    if (it != step_lits.end()) return it->second;
    const WfStep& s = trace.steps[k];
    Vocabulary atoms;
    for (const auto& p : s.atoms) {
      auto v = atoms_of(d.body(p));
      atoms.insert(v.begin(), v.end());
    }
    for (const auto& p : s.atoms) atoms.erase(p);
    return step_lits.emplace(k, decided_literals(s.before, atoms)).first->second;
  };
  auto support_of = [&](std::size_t k) {
    std::vector<Atom> out;
    for (const auto& f : lits_of(k)) {
      Literal l = need_literal(f);
      if (d.defines(l.atom)) out.push_back(l.atom);
    }
    return out;
  };

  // Defined atoms whose literals the goal transitively relies on.
  std::set<Atom> needed{goal.atom};
  std::vector<Atom> stack{goal.atom};
  while (!stack.empty()) {
    Atom a = stack.back();
    stack.pop_back();
    for (const auto& b : support_of(step_of.at(a))) {
      if (needed.insert(b).second) stack.push_back(b);
    }
  }

  std::map<std::size_t, std::vector<ProofPtr>> false_premises;
  auto proof_of = [&](const Atom& a) -> ProofPtr {
    std::size_t k = step_of.at(a);
    const WfStep& s = trace.steps[k];
    const FormulaSet& lits = lits_of(k);
    FormulaSet ante = lits;
    ante.insert(def);
    if (s.kind == StepKind::derive_true) {
      auto pc = prove_propositional(make_sequent(lits, {d.body(a)}));
      RuleParams p = formula_param(def);
      p.atom = a;
      return infer(RuleKind::def_r, std::move(p), make_sequent(ante, {atom(a)}), {pc});
    }
    auto it = false_premises.find(k);
    if (it == false_premises.end()) {
      FormulaSet hyp = lits;
      for (const auto& u : s.atoms) hyp.insert(neg(atom(u.renamed(AtomKind::renamed_pos))));
      std::vector<ProofPtr> premises;
      for (const auto& pj : s.atoms) {
        premises.push_back(prove_propositional(make_sequent(hyp, {neg(rename_pos(d.body(pj), s.atoms))})));
      }
      it = false_premises.emplace(k, std::move(premises)).first;
    }
    RuleParams p = formula_param(def);
    p.atom = a;
    p.uset = s.atoms;
    FormulaSet with_atom = ante;
    with_atom.insert(atom(a));
    auto refuted = infer(RuleKind::def_l, std::move(p), make_sequent(with_atom, {}), it->second);
    return infer(RuleKind::not_r, formula_param(neg(atom(a))), make_sequent(ante, {neg(atom(a))}), {refuted});
  };

  auto literal_of = [&](const Atom& a) { return make_literal(a, trace.limit[a] == TruthValue::T); };

  // Cut away support literals, latest derived first, so that no literal
  // re-enters the antecedent once discharged.
  ProofPtr current = proof_of(goal.atom);
  std::map<std::size_t, std::set<Atom>> pending;
  for (const auto& b : support_of(step_of.at(goal.atom))) pending[step_of.at(b)].insert(b);
  while (!pending.empty()) {
    auto last = std::prev(pending.end());
    Atom m = *last->second.begin();
    last->second.erase(last->second.begin());
    if (last->second.empty()) pending.erase(last);

    Formula lit = literal_of(m);
    ProofPtr pm = proof_of(m);
    FormulaSet ante = current->conclusion.antecedent;
    ante.erase(lit);
    ante.insert(pm->conclusion.antecedent.begin(), pm->conclusion.antecedent.end());
    current = cut_on(lit, make_sequent(ante, {target}), pm, current);
    for (const auto& b : support_of(step_of.at(m))) {
      if (!current->conclusion.antecedent.contains(literal_of(b))) continue;
      pending[step_of.at(b)].insert(b);
    }
  }
  return current;
}

// Proves each literal conjunct of `goal` from D and `gamma` with `derive`
// and joins them with and-r.
ProofPtr prove_conjunction(const Definition& d, const FormulaSet& gamma, const FormulaSet& ante, const Formula& goal) {
  if (goal.is(Formula::Kind::conjunction)) {
    auto l = prove_conjunction(d, gamma, ante, goal.lhs());
    auto r = prove_conjunction(d, gamma, ante, goal.rhs());
    return infer(RuleKind::and_r, formula_param(goal), make_sequent(ante, {goal}), {l, r});
  }
  return weaken_to(derive(d, gamma, goal), make_sequent(ante, {goal}));
}

// Proof of D, gamma' --> with gamma' a subset of gamma, for a definition
// whose well-founded model under gamma is three-valued.
ProofPtr refute_nontotal(const Definition& d, const FormulaSet& gamma) {
  Interpretation model = wf_model(d, open_values(d, gamma));
  Vocabulary unknown;
  for (const auto& p : d.defined()) {
    if (model[p] == TruthValue::U) unknown.insert(p);
  }
  if (unknown.empty()) throw ContractViolation("well-founded model of " + d.text() + " is two-valued");

  const Formula def = Formula::definition(d);
  Definition diamond = diamond_definition(d, unknown);
  const Formula diamond_def = Formula::definition(diamond);
  Vocabulary diamond_atoms = diamond.vocabulary();

  // Decided defined atoms the renamed bodies mention, and the open literals.
  Vocabulary decided;
  for (const auto& p : d.defined()) {
    if (!unknown.contains(p) && diamond_atoms.contains(p)) decided.insert(p);
  }
  FormulaSet known = decided_literals(model, decided);
  FormulaSet context = literals_over(gamma, d.open());
  context = literals_over(context, diamond_atoms);
  context.insert(known.begin(), known.end());

  Vocabulary pos = rename_all(unknown, AtomKind::renamed_pos);
  Vocabulary dia = rename_all(unknown, AtomKind::renamed_neg);
  std::vector<Formula> neg_pos, plain_pos;
  FormulaSet dia_true, dia_false;
  for (const auto& a : pos) {
    neg_pos.push_back(neg(atom(a)));
    plain_pos.push_back(atom(a));
  }
  for (const auto& a : dia) {
    dia_true.insert(atom(a));
    dia_false.insert(neg(atom(a)));
  }

  auto premise = [&](const FormulaSet& dia_lits, const Formula& goal) {
    FormulaSet lits = context;
    lits.insert(dia_lits.begin(), dia_lits.end());
    FormulaSet ante = lits;
    ante.insert(diamond_def);
    return prove_conjunction(diamond, lits, ante, goal);
  };
  auto first = premise(dia_true, conj_all(neg_pos));
  auto second = premise(dia_false, conj_all(plain_pos));

  RuleParams p = formula_param(def);
  p.vset = unknown;
  FormulaSet ante = context;
  ante.insert(def);
  ProofPtr current = infer(RuleKind::def_nontotal, std::move(p), make_sequent(ante, {}), {first, second});

  for (const auto& k : known) {
    ProofPtr pk = derive(d, gamma, k);
    FormulaSet next = current->conclusion.antecedent;
    next.erase(k);
    next.insert(pk->conclusion.antecedent.begin(), pk->conclusion.antecedent.end());
    current = cut_on(k, make_sequent(next, {}), pk, current);
  }
  return current;
}

class LeafRefuter {
 public:
  LeafRefuter(std::vector<Definition> defs) : defs_(std::move(defs)) {
    for (const auto& d : defs_) {
      def_formulas_.insert(Formula::definition(d));
      split_atoms_.insert(d.open().begin(), d.open().end());
    }
  }

  std::size_t split_count(const FormulaSet& lits) const {
    std::size_t k = 0;
    Vocabulary decided = atoms_of(lits);
    for (const auto& a : split_atoms_) k += !decided.contains(a);
    return k;
  }

  // Proof of defs, lits --> for a consistent literal set the definitions
  // contradict.
  ProofPtr refute(const FormulaSet& lits) {
    FormulaSet ante = def_formulas_;
    ante.insert(lits.begin(), lits.end());
    Sequent target = make_sequent(ante, {});
    Vocabulary decided = atoms_of(lits);
    for (const auto& q : split_atoms_) {
      if (decided.contains(q)) continue;
      FormulaSet with_false = lits, with_true = lits;
      with_false.insert(neg(atom(q)));
      with_true.insert(atom(q));
      ProofPtr pf = refute(with_false);
      ProofPtr pt = refute(with_true);
      Formula nq = neg(atom(q));
      ProofPtr left = infer(RuleKind::not_r, formula_param(nq), make_sequent(ante, {nq}), {pt});
      return cut_on(nq, target, left, pf);
    }
    return refute_complete(lits, target);
  }

 private:
  ProofPtr refute_complete(const FormulaSet& lits, const Sequent& target) {
    std::vector<Interpretation> models;
    for (const auto& d : defs_) {
      FormulaSet open = literals_over(lits, d.open());
      Interpretation m = wf_model(d, open_values(d, open));
      if (!m.is_two_valued()) return weaken_to(refute_nontotal(d, open), target);
      models.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < defs_.size(); ++i) {
      const auto& d = defs_[i];
      for (const auto& f : lits) {
        Literal l = need_literal(f);
        if (!d.defines(l.atom) || models[i][l.atom] == from_bool(l.positive)) continue;
        ProofPtr pc = derive(d, literals_over(lits, d.open()), complement(f));
        return detail::contradiction(f, target, pc);
      }
    }
    for (std::size_t i = 0; i < defs_.size(); ++i) {
      for (std::size_t j = i + 1; j < defs_.size(); ++j) {
        for (const auto& a : defs_[i].defined()) {
          if (!defs_[j].defines(a) || models[i][a] == models[j][a]) continue;
          std::size_t t = models[i][a] == TruthValue::T ? i : j;
          std::size_t f = t == i ? j : i;
          Formula pa = atom(a);
          ProofPtr ppos = derive(defs_[t], literals_over(lits, defs_[t].open()), pa);
          ProofPtr pneg = derive(defs_[f], literals_over(lits, defs_[f].open()), neg(pa));
          Sequent with_a = target;
          with_a.antecedent.insert(pa);
          ProofPtr right = detail::contradiction(pa, with_a, pneg);
          return cut_on(pa, target, ppos, right);
        }
      }
    }
    throw ContractViolation("leaf is satisfiable under " + join_formulas(lits));
  }

  std::vector<Definition> defs_;
  FormulaSet def_formulas_;
  Vocabulary split_atoms_;
};

void check_class(const Sequent& s, const Limits& limits) {
  std::map<Definition, bool> cache;
  auto require_total = [&](const Definition& d, const char* where) {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, is_total(d, {}, limits).total).first;
    if (!it->second) throw OutOfScope("definition " + d.text() + " occurs " + where + " and is not total");
  };
  for (const auto& f : s.antecedent) {
    for (const auto& occ : definition_occurrences(f)) {
      if (!occ.positive) require_total(occ.definition, "negatively in the antecedent");
    }
  }
  for (const auto& f : s.succedent) {
    for (const auto& occ : definition_occurrences(f)) {
      if (occ.positive) require_total(occ.definition, "positively in the succedent");
    }
  }
}

}  // namespace

const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::proof: return "proof";
    case OutcomeKind::counter_model: return "counter-model";
    case OutcomeKind::out_of_scope: return "out-of-scope";
    case OutcomeKind::resource_limit: return "resource-limit";
  }
  return "?";
}

ProofPtr prove_propositional(const Sequent& s) {
  for (const auto& side : {s.antecedent, s.succedent}) {
    for (const auto& f : side) {
      if (!f.is_pc()) throw ContractViolation("'" + f.text() + "' is not a PC-formula");
    }
  }
  ReductionTree tree = build_reduction_tree(s);
  return assemble_proof(tree.root, [&](const Sequent& leaf) -> ProofPtr {
    throw ContractViolation("sequent '" + s.text() + "' is not valid; open leaf '" + leaf.text() + "'");
  });
}

ProofPtr prove_from_trace(const Definition& d, const FormulaSet& gamma, const Formula& literal) {
  ProofPtr p = derive(d, gamma, literal);
  FormulaSet ante = gamma;
  ante.insert(Formula::definition(d));
  return weaken_to(p, make_sequent(ante, {literal}));
}

ProofPtr prove_unsat_leaf(const Definition& d, const FormulaSet& gamma) {
  ProofPtr p = refute_nontotal(d, gamma);
  FormulaSet ante = gamma;
  ante.insert(Formula::definition(d));
  return weaken_to(p, make_sequent(ante, {}));
}

ProofPtr prove_leaf(const Sequent& leaf, const ProverOptions& options) {
  if (auto p = detail::close_axiom(leaf)) return p;
  std::vector<Definition> defs;
  FormulaSet lits;
  for (const auto& f : leaf.antecedent) {
    if (f.is(Formula::Kind::definition)) {
      defs.push_back(f.definition());
    } else if (f.is(Formula::Kind::atom)) {
      lits.insert(f);
    } else {
      throw ContractViolation("'" + f.text() + "' is not a leaf antecedent formula");
    }
  }
  std::vector<Atom> moved;
  for (const auto& f : leaf.succedent) {
    if (!f.is(Formula::Kind::atom)) throw ContractViolation("'" + f.text() + "' is not a leaf succedent formula");
    lits.insert(neg(f));
    moved.push_back(f.atom());
  }

  LeafRefuter refuter(defs);
  std::size_t k = refuter.split_count(lits);
  if (k >= 63 || (std::size_t{1} << k) > options.max_extensions) {
    throw ResourceLimit("leaf needs 2^" + std::to_string(k) + " extensions, limit is " +
                        std::to_string(options.max_extensions));
  }
  FormulaSet ante = lits;
  for (const auto& d : defs) ante.insert(Formula::definition(d));
  ProofPtr current = weaken_to(refuter.refute(lits), make_sequent(ante, {}));

  // Move each ~s back to the succedent as s: cut on ~s against not-r of
  // the axiom s, X --> Y, s.
  for (const auto& a : moved) {
    Formula s = atom(a), ns = neg(atom(a));
    Sequent next = current->conclusion;
    next.antecedent.erase(ns);
    next.succedent.insert(s);
    Sequent axiom = next;
    axiom.antecedent.insert(s);
    ProofPtr closed = make_proof(RuleKind::axiom_id, formula_param(s), axiom);
    Sequent left = next;
    left.succedent.insert(ns);
    ProofPtr left_proof = infer(RuleKind::not_r, formula_param(ns), left, {closed});
    current = cut_on(ns, next, left_proof, current);
  }
  return weaken_to(current, leaf);
}

ProveOutcome prove(const Sequent& s, const ProverOptions& options) {
  ProveOutcome out;
  std::size_t n = s.vocabulary().size();
  if (n > options.max_atoms) {
    out.kind = OutcomeKind::resource_limit;
    out.reason = "sequent has " + std::to_string(n) + " atoms, limit is " + std::to_string(options.max_atoms);
    return out;
  }
  try {
    check_class(s, options.oracle_limits);
    ValidityResult v = is_valid(s, options.oracle_limits);
    if (!v.valid) {
      out.kind = OutcomeKind::counter_model;
      out.counter_model = v.counter_model;
      return out;
    }
    ReductionTree tree = build_reduction_tree(s, options.oracle_limits);
    ProofPtr proof =
        assemble_proof(tree.root, [&](const Sequent& leaf) { return prove_leaf(leaf, options); });
    CheckReport report = check_proof(proof);
    if (!report.accepted || report.root != s) {
      throw std::logic_error("prover produced a rejected proof: " + report.error);
    }
    out.proof = std::move(proof);
  } catch (const OutOfScope& e) {
    out.kind = OutcomeKind::out_of_scope;
    out.reason = e.what();
  } catch (const ResourceLimit& e) {
    out.kind = OutcomeKind::resource_limit;
    out.reason = e.what();
  }
  return out;
}

}  // namespace pcid
