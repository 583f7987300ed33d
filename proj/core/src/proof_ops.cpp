#include "proof_ops.hpp"

#include "pcid/error.hpp"

namespace pcid::detail {

namespace {

RuleParams with_formula(const Formula& f) {
  RuleParams p;
  p.formula = f;
  return p;
}

std::optional<Formula> shared_formula(const Sequent& s) {
  for (const auto& a : s.antecedent) {
    if (s.succedent.contains(a)) return a;
  }
  return std::nullopt;
}

}  // namespace

bool is_closable(const Sequent& s) {
  return shared_formula(s) || s.antecedent.contains(Formula::bottom()) || s.succedent.contains(Formula::top());
}

ProofPtr close_axiom(const Sequent& s) {
  if (auto a = shared_formula(s)) return make_proof(RuleKind::axiom_id, with_formula(*a), s);
  if (s.antecedent.contains(Formula::bottom())) {
    auto base = make_proof(RuleKind::axiom_bot, {}, sequent({Formula::bottom()}, s.succedent));
    return weaken_to(base, s);
  }
  if (s.succedent.contains(Formula::top())) {
    auto base = make_proof(RuleKind::axiom_top, {}, sequent(s.antecedent, {Formula::top()}));
    return weaken_to(base, s);
  }
  return nullptr;
}

ProofPtr weaken_to(ProofPtr p, const Sequent& target) {
  if (!is_subsequent(p->conclusion, target)) {
    throw ContractViolation("cannot weaken '" + p->conclusion.text() + "' to '" + target.text() + "'");
  }
  Sequent current = p->conclusion;
  for (const auto& f : target.antecedent) {
    if (current.antecedent.contains(f)) continue;
    current.antecedent.insert(f);
    p = make_proof(RuleKind::weaken_l, with_formula(f), current, {p});
  }
  for (const auto& f : target.succedent) {
    if (current.succedent.contains(f)) continue;
    current.succedent.insert(f);
    p = make_proof(RuleKind::weaken_r, with_formula(f), current, {p});
  }
  return p;
}

ProofPtr infer(RuleKind rule, RuleParams params, const Sequent& conclusion, std::vector<ProofPtr> premises) {
  auto expected = canonical_premises(rule, params, conclusion);
  if (expected.size() != premises.size()) {
    throw ContractViolation(std::string(rule_name(rule)) + ": expected " + std::to_string(expected.size()) +
                            " premise proof(s)");
  }
  bool fits = true;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    fits = fits && is_subsequent(premises[i]->conclusion, expected[i]);
  }
  if (!fits) expected = canonical_premises(rule, params, conclusion, true);
  for (std::size_t i = 0; i < premises.size(); ++i) premises[i] = weaken_to(premises[i], expected[i]);
  return make_proof(rule, std::move(params), conclusion, std::move(premises));
}

ProofPtr cut_on(const Formula& a, const Sequent& conclusion, ProofPtr left, ProofPtr right) {
  RuleParams p;
  p.cut_formula = a;
  return infer(RuleKind::cut, std::move(p), conclusion, {std::move(left), std::move(right)});
}

Formula complement(const Formula& literal) {
  if (literal.is(Formula::Kind::negation)) return literal.operand();
  return neg(literal);
}

ProofPtr contradiction(const Formula& l, const Sequent& conclusion, ProofPtr proves_complement) {
  if (!conclusion.antecedent.contains(l)) {
    throw ContractViolation("literal '" + l.text() + "' is not in the antecedent");
  }
  if (l.is(Formula::Kind::negation)) {
    return infer(RuleKind::not_l, with_formula(l), conclusion, {std::move(proves_complement)});
  }
  // l is an atom and the proof shows ~l: cut on ~l, then close ~l, Gamma
  // by not-l against l itself.
  Formula nl = neg(l);
  Sequent right = conclusion;
  right.antecedent.insert(nl);
  Sequent right_premise = right;
  right_premise.antecedent.erase(nl);
  right_premise.succedent.insert(l);
  auto closed = make_proof(RuleKind::axiom_id, with_formula(l), right_premise);
  auto right_proof = infer(RuleKind::not_l, with_formula(nl), right, {closed});
  return cut_on(nl, conclusion, std::move(proves_complement), std::move(right_proof));
}

}  // namespace pcid::detail
