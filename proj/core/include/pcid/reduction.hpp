#pragma once

#include <optional>
#include <vector>

#include "pcid/calculus.hpp"
#include "pcid/semantics.hpp"

namespace pcid {

// One node of a reduction tree. Internal nodes record the rule that, read
// upwards, turns the children into the node; `principal` is the reduced
// formula (the definition for def-intro).
struct ReductionNode {
  Sequent sequent;
  std::optional<RuleKind> rule;
  std::optional<Formula> principal;
  // Closed by an axiom, possibly after weakening.
  bool axiom = false;
  std::vector<ReductionNode> children;

  bool is_leaf() const { return children.empty() && !rule; }
};

struct ReductionTree {
  ReductionNode root;

  // Leaves that are not axioms, left to right.
  std::vector<const ReductionNode*> open_leaves() const;
  std::size_t node_count() const;
};

// Reduces the least reducible antecedent formula first, then the least
// succedent one; definitions in the succedent are introduced last.
// Throws OutOfScope when a succedent definition is not total or its primed
// atoms collide with the sequent, and ResourceLimit when totality cannot be
// decided within `limits`.
ReductionTree build_reduction_tree(const Sequent& s, const Limits& limits = {});

// Turns a tree into a proof, proving each open leaf with `prove_leaf`.
template <typename LeafProver>
ProofPtr assemble_proof(const ReductionNode& node, LeafProver&& prove_leaf);

namespace detail {
ProofPtr close_or_null(const Sequent& s);
ProofPtr apply_reduction(const ReductionNode& node, std::vector<ProofPtr> children);
}  // namespace detail

template <typename LeafProver>
ProofPtr assemble_proof(const ReductionNode& node, LeafProver&& prove_leaf) {
  if (node.axiom) return detail::close_or_null(node.sequent);
  if (!node.rule) return prove_leaf(node.sequent);
  std::vector<ProofPtr> children;
  for (const auto& c : node.children) children.push_back(assemble_proof(c, prove_leaf));
  return detail::apply_reduction(node, std::move(children));
}

}  // namespace pcid
