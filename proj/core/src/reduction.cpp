#include "pcid/reduction.hpp"

#include <map>

#include "pcid/error.hpp"
#include "pcid/syntax.hpp"
#include "proof_ops.hpp"

namespace pcid {

namespace {

bool reducible_left(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::negation:
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::top: return true;
    default: return false;
  }
}

bool reducible_right(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::negation:
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::bottom: return true;
    default: return false;
  }
}

class Builder {
 public:
  explicit Builder(const Limits& limits) : limits_(limits) {}

  void build(ReductionNode& node) {
    const Sequent& s = node.sequent;
    if (detail::is_closable(s)) {
      node.axiom = true;
      return;
    }
    for (const auto& f : s.antecedent) {
      if (reducible_left(f)) return reduce_left(node, f);
    }
    for (const auto& f : s.succedent) {
      if (reducible_right(f)) return reduce_right(node, f);
    }
    for (const auto& f : s.succedent) {
      if (f.is(Formula::Kind::definition)) return introduce(node, f);
    }
  }

 private:
  void push(ReductionNode& node, Sequent child) {
    node.children.push_back(ReductionNode{std::move(child), std::nullopt, std::nullopt, false, {}});
  }

  void finish(ReductionNode& node, RuleKind rule, const Formula& principal) {
    node.rule = rule;
    node.principal = principal;
    for (auto& c : node.children) build(c);
  }

  void reduce_left(ReductionNode& node, const Formula& f) {
    Sequent rest = node.sequent;
    rest.antecedent.erase(f);
    auto add = [&](std::initializer_list<Formula> ante, std::initializer_list<Formula> succ) {
      Sequent c = rest;
      c.antecedent.insert(ante);
      c.succedent.insert(succ);
      push(node, std::move(c));
    };
    switch (f.kind()) {
      case Formula::Kind::negation: add({}, {f.operand()}); return finish(node, RuleKind::not_l, f);
      case Formula::Kind::conjunction: add({f.lhs(), f.rhs()}, {}); return finish(node, RuleKind::and_l, f);
      case Formula::Kind::disjunction:
        add({f.lhs()}, {});
        add({f.rhs()}, {});
        return finish(node, RuleKind::or_l, f);
      default: add({}, {}); return finish(node, RuleKind::weaken_l, f);
    }
  }

  void reduce_right(ReductionNode& node, const Formula& f) {
    Sequent rest = node.sequent;
    rest.succedent.erase(f);
    auto add = [&](std::initializer_list<Formula> ante, std::initializer_list<Formula> succ) {
      Sequent c = rest;
      c.antecedent.insert(ante);
      c.succedent.insert(succ);
      push(node, std::move(c));
    };
    switch (f.kind()) {
      case Formula::Kind::negation: add({f.operand()}, {}); return finish(node, RuleKind::not_r, f);
      case Formula::Kind::conjunction:
        add({}, {f.lhs()});
        add({}, {f.rhs()});
        return finish(node, RuleKind::and_r, f);
      case Formula::Kind::disjunction: add({}, {f.lhs(), f.rhs()}); return finish(node, RuleKind::or_r, f);
      default: add({}, {}); return finish(node, RuleKind::weaken_r, f);
    }
  }

  void introduce(ReductionNode& node, const Formula& f) {
    const Definition& d = f.definition();
    if (!total(d)) throw OutOfScope("definition " + d.text() + " in the succedent is not total");
    Vocabulary used = node.sequent.vocabulary();
    for (const auto& p : d.defined()) {
      if (used.contains(p.renamed(AtomKind::primed))) {
        throw OutOfScope("primed atom '" + p.renamed(AtomKind::primed).name() + "' for " + d.text() +
                         " already occurs in the sequent");
      }
    }
    RuleParams params;
    params.formula = f;
    for (auto& premise : canonical_premises(RuleKind::def_intro, params, node.sequent)) push(node, std::move(premise));
    finish(node, RuleKind::def_intro, f);
  }

  bool total(const Definition& d) {
    auto it = totality_.find(d);
    if (it != totality_.end()) return it->second;
    bool t = is_total(d, {}, limits_).total;
    totality_.emplace(d, t);
    return t;
  }

  Limits limits_;
  std::map<Definition, bool> totality_;
};

void collect_open(const ReductionNode& n, std::vector<const ReductionNode*>& out) {
  if (n.axiom) return;
  if (!n.rule) {
    out.push_back(&n);
    return;
  }
  for (const auto& c : n.children) collect_open(c, out);
}

std::size_t count(const ReductionNode& n) {
  std::size_t total = 1;
  for (const auto& c : n.children) total += count(c);
  return total;
}

}  // namespace

std::vector<const ReductionNode*> ReductionTree::open_leaves() const {
  std::vector<const ReductionNode*> out;
  collect_open(root, out);
  return out;
}

std::size_t ReductionTree::node_count() const { return count(root); }

ReductionTree build_reduction_tree(const Sequent& s, const Limits& limits) {
  ReductionTree tree{ReductionNode{s, std::nullopt, std::nullopt, false, {}}};
  Builder(limits).build(tree.root);
  return tree;
}

namespace detail {

ProofPtr close_or_null(const Sequent& s) { return close_axiom(s); }

ProofPtr apply_reduction(const ReductionNode& node, std::vector<ProofPtr> children) {
  RuleParams params;
  params.formula = *node.principal;
  return infer(*node.rule, std::move(params), node.sequent, std::move(children));
}

}  // namespace detail

}  // namespace pcid
