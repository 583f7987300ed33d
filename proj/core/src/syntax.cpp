#include "pcid/syntax.hpp"

#include <functional>

#include "pcid/error.hpp"

namespace pcid {

namespace {

void scan_polarity(const Formula& f, const Atom& p, bool positive, bool& pos, bool& negv) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      if (f.atom() == p) (positive ? pos : negv) = true;
      break;
    case Formula::Kind::top:
    case Formula::Kind::bottom: break;
    case Formula::Kind::negation: scan_polarity(f.operand(), p, !positive, pos, negv); break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      scan_polarity(f.lhs(), p, positive, pos, negv);
      scan_polarity(f.rhs(), p, positive, pos, negv);
      break;
    case Formula::Kind::definition:
      if (f.definition().vocabulary().contains(p)) {
        throw PolarityError("polarity of '" + p.name() + "' is undefined inside a nested definition");
      }
      break;
  }
}

// Rebuilds f, mapping each atom occurrence through `leaf(atom, positive)`.
Formula map_atoms(const Formula& f, bool positive, const std::function<Formula(const Atom&, bool)>& leaf) {
  switch (f.kind()) {
    case Formula::Kind::atom: return leaf(f.atom(), positive);
    case Formula::Kind::negation: return neg(map_atoms(f.operand(), !positive, leaf));
    case Formula::Kind::conjunction:
      return conj(map_atoms(f.lhs(), positive, leaf), map_atoms(f.rhs(), positive, leaf));
    case Formula::Kind::disjunction:
      return disj(map_atoms(f.lhs(), positive, leaf), map_atoms(f.rhs(), positive, leaf));
    case Formula::Kind::definition:
      throw ContractViolation("renaming is only defined for PC-formulas");
    default: return f;
  }
}

void collect_defs(const Formula& f, bool positive, std::vector<DefinitionOccurrence>& out) {
  switch (f.kind()) {
    case Formula::Kind::negation: collect_defs(f.operand(), !positive, out); break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      collect_defs(f.lhs(), positive, out);
      collect_defs(f.rhs(), positive, out);
      break;
    case Formula::Kind::definition: out.push_back({f.definition(), positive}); break;
    default: break;
  }
}

}  // namespace

const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::absent: return "absent";
    case Polarity::positive_only: return "positive-only";
    case Polarity::negative_only: return "negative-only";
    case Polarity::both: return "both";
  }
  return "?";
}

Definition normalize(const std::vector<std::pair<Atom, Formula>>& rules) {
  std::map<Atom, Formula> merged;
  for (const auto& [head, body] : rules) {
    if (!body.is_pc()) {
      throw MalformedDefinition("body of rule for '" + head.name() + "' contains a definition");
    }
    auto it = merged.find(head);
    if (it == merged.end()) {
      merged.emplace(head, body);
    } else {
      it->second = disj(it->second, body);
    }
  }
  return Definition::from_rules(std::move(merged));
}

Polarity polarity(const Formula& f, const Atom& p) {
  bool pos = false, negv = false;
  scan_polarity(f, p, true, pos, negv);
  if (pos && negv) return Polarity::both;
  if (pos) return Polarity::positive_only;
  if (negv) return Polarity::negative_only;
  return Polarity::absent;
}

bool is_stratified(const Definition& d) {
  for (const auto& [head, body] : d.rules()) {
    for (const auto& q : atoms_of(body)) {
      auto pol = polarity(body, q);
      bool negative = pol == Polarity::negative_only || pol == Polarity::both;
      if (negative && d.depends(head, q)) return false;
    }
  }
  return true;
}

Formula rename_pos(const Formula& f, const Vocabulary& u) {
  return map_atoms(f, true, [&](const Atom& a, bool positive) {
    if (positive && u.contains(a)) return atom(a.renamed(AtomKind::renamed_pos));
    return atom(a);
  });
}

Formula rename_diamond(const Formula& f, const Vocabulary& v) {
  return map_atoms(f, true, [&](const Atom& a, bool positive) {
    if (!v.contains(a)) return atom(a);
    return atom(a.renamed(positive ? AtomKind::renamed_pos : AtomKind::renamed_neg));
  });
}

Definition prime_definition(const Definition& d) {
  const auto& defined = d.defined();
  std::map<Atom, Formula> rules;
  for (const auto& [head, body] : d.rules()) {
    Formula primed = map_atoms(body, true, [&](const Atom& a, bool) {
      return atom(defined.contains(a) ? a.renamed(AtomKind::primed) : a);
    });
    rules.emplace(head.renamed(AtomKind::primed), std::move(primed));
  }
  return Definition::from_rules(std::move(rules));
}

Definition diamond_definition(const Definition& d, const Vocabulary& v) {
  std::map<Atom, Formula> rules;
  for (const auto& p : v) {
    if (!d.defines(p)) throw ContractViolation("'" + p.name() + "' is not defined in " + d.text());
    rules.emplace(p.renamed(AtomKind::renamed_pos), rename_diamond(d.body(p), v));
  }
  return Definition::from_rules(std::move(rules));
}

std::vector<DefinitionOccurrence> definition_occurrences(const Formula& f, bool positive) {
  std::vector<DefinitionOccurrence> out;
  collect_defs(f, positive, out);
  return out;
}

}  // namespace pcid
