#pragma once

#include <optional>
#include <string>

#include "pcid/calculus.hpp"
#include "pcid/reduction.hpp"

namespace pcid {

struct ProverOptions {
  std::size_t max_atoms = 16;
  std::size_t max_extensions = std::size_t{1} << 16;
  // Bound for the totality and validity oracles the prover consults.
  Limits oracle_limits;
};

enum class OutcomeKind { proof, counter_model, out_of_scope, resource_limit };

const char* to_string(OutcomeKind k);

struct ProveOutcome {
  OutcomeKind kind = OutcomeKind::proof;
  ProofPtr proof;
  std::optional<Interpretation> counter_model;
  std::string reason;
};

// Decides the sequent and, when it is valid and in the provable class,
// returns a proof that has passed check_proof.
ProveOutcome prove(const Sequent& s, const ProverOptions& options = {});

// Proof of D, gamma --> literal from the default well-founded trace.
// `gamma` holds literals deciding every open atom of d; `literal` must be
// true in the well-founded model. Throws ContractViolation otherwise.
ProofPtr prove_from_trace(const Definition& d, const FormulaSet& gamma, const Formula& literal);

// Proof of D, gamma --> when the well-founded model of d under gamma is not
// two-valued. Throws ContractViolation otherwise.
ProofPtr prove_unsat_leaf(const Definition& d, const FormulaSet& gamma);

// Proof of a valid leaf D1..Dn, atoms --> atoms by case analysis over the
// open atoms of the definitions. Throws ResourceLimit past the extension
// bound and ContractViolation if the leaf turns out invalid.
ProofPtr prove_leaf(const Sequent& leaf, const ProverOptions& options = {});

// Proof of a valid sequent of PC-formulas. Throws ContractViolation if it
// is not valid.
ProofPtr prove_propositional(const Sequent& s);

}  // namespace pcid
