#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcid/formula.hpp"
#include "pcid/semantics.hpp"
#include "pcid/sequent.hpp"

namespace pcid {

enum class RuleKind {
  axiom_id,
  axiom_bot,
  axiom_top,
  weaken_l,
  weaken_r,
  contract_l,
  contract_r,
  cut,
  not_l,
  not_r,
  and_l,
  and_r,
  or_l,
  or_r,
  def_r,
  def_l,
  def_nontotal,
  def_intro,
};

inline constexpr std::size_t kRuleCount = 18;

std::string_view rule_name(RuleKind r);
std::optional<RuleKind> rule_from_name(std::string_view name);
const std::vector<RuleKind>& all_rules();

// Parameters by rule:
//   axiom-id, weaken-*, contract-*    formula: the formula A
//   cut                               cut_formula: A
//   not-*, and-*, or-*                formula: the principal compound
//   def-r                             formula: D, atom: P
//   def-l                             formula: D, atom: P_i, uset: U, index (optional, 1-based in U)
//   def-nontotal                      formula: D, vset: V
//   def-intro                         formula: D
struct RuleParams {
  std::optional<Formula> formula;
  std::optional<Formula> cut_formula;
  std::optional<Atom> atom;
  std::optional<std::size_t> index;
  std::optional<Vocabulary> uset;
  std::optional<Vocabulary> vset;

  friend bool operator==(const RuleParams&, const RuleParams&) = default;
};

// Names of the parameters a rule requires.
std::vector<std::string> required_params(RuleKind r);

// Premise count implied by the rule and its parameters; nullopt when a
// parameter it depends on is missing or ill-typed.
std::optional<std::size_t> expected_arity(RuleKind r, const RuleParams& p);

struct RuleInstance {
  RuleKind rule;
  RuleParams params;
  Sequent conclusion;
  std::vector<Sequent> premises;
};

// Validates the instance against its schema. Throws SchemaMismatch naming
// the first violated condition.
RuleInstance make_rule_instance(RuleKind rule, RuleParams params, Sequent conclusion,
                                std::vector<Sequent> premises);

// The premises the schema prescribes for this conclusion and parameters
// when the side context is the conclusion minus its principal formulas.
// Throws SchemaMismatch if the conclusion does not fit the rule.
// With `retain_principal` the side context is the whole conclusion.
std::vector<Sequent> canonical_premises(RuleKind rule, const RuleParams& params, const Sequent& conclusion,
                                        bool retain_principal = false);

struct ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
  RuleKind rule;
  RuleParams params;
  Sequent conclusion;
  std::vector<ProofPtr> premises;
};

ProofPtr make_proof(RuleKind rule, RuleParams params, Sequent conclusion, std::vector<ProofPtr> premises = {});

// Node count of the proof read as a tree.
std::size_t proof_size(const ProofPtr& p);
std::size_t proof_height(const ProofPtr& p);

struct CheckOptions {
  // Decide totality of every definition introduced by def-intro.
  bool verify_totality = false;
  Limits limits;
};

enum class TotalityStatus { not_requested, total, not_total, undecided };

struct IntroducedTotality {
  Definition definition;
  TotalityStatus status = TotalityStatus::not_requested;
  std::optional<Interpretation> witness;
};

struct CheckReport {
  bool accepted = false;
  Sequent root;
  bool uses_def_intro = false;
  std::vector<Definition> introduced;
  // Set on rejection: message and the premise indices leading to the node.
  std::string error;
  std::vector<std::size_t> path;
  std::vector<IntroducedTotality> totality;

  // Accepted, and either no def-intro or all introduced definitions total.
  bool certifies_validity() const;
};

CheckReport check_proof(const ProofPtr& proof, const CheckOptions& options = {});

// A rule whose conclusion fits the sequent; parameters not determined by
// the sequent are listed in `unresolved`.
struct RuleTemplate {
  RuleKind rule;
  RuleParams params;
  std::vector<std::string> unresolved;
};

std::vector<RuleTemplate> applicable_rules(const Sequent& s);

}  // namespace pcid
