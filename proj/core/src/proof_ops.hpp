#pragma once

// Small proof-building combinators shared by the reduction engine and the
// prover. All of them produce nodes that satisfy the rule schemas exactly.

#include "pcid/calculus.hpp"

namespace pcid::detail {

// An axiom instance, possibly under weakenings, closes s.
bool is_closable(const Sequent& s);
// nullptr when s is not closable.
ProofPtr close_axiom(const Sequent& s);

// Adds the formulas of `target` missing from the proof's conclusion by
// weakening. Throws ContractViolation unless the conclusion is contained
// in `target`.
ProofPtr weaken_to(ProofPtr p, const Sequent& target);

// Applies `rule` with conclusion `conclusion`, weakening each given proof
// into the premise the schema expects.
ProofPtr infer(RuleKind rule, RuleParams params, const Sequent& conclusion, std::vector<ProofPtr> premises);

// Cut on `a`: `left` proves a subset of Gamma --> Delta, a and `right` a
// subset of a, Gamma --> Delta.
ProofPtr cut_on(const Formula& a, const Sequent& conclusion, ProofPtr left, ProofPtr right);

// Gamma --> Delta from a literal l in Gamma and a proof of a subset of
// Gamma --> Delta, complement(l).
ProofPtr contradiction(const Formula& l, const Sequent& conclusion, ProofPtr proves_complement);

// a for ~a, ~a for a.
Formula complement(const Formula& literal);

inline Sequent sequent(FormulaSet ante, FormulaSet succ) { return {std::move(ante), std::move(succ)}; }

}  // namespace pcid::detail
