#pragma once

#include <utility>
#include <vector>

#include "pcid/formula.hpp"

namespace pcid {

enum class Polarity { absent, positive_only, negative_only, both };

const char* to_string(Polarity p);

// Merges rules with equal heads by disjunction, in input order.
// Throws MalformedDefinition if a body contains a definition.
Definition normalize(const std::vector<std::pair<Atom, Formula>>& rules);

// Classifies the occurrences of p in f by the parity of enclosing negations.
// Throws PolarityError if p occurs inside a definition nested in f.
Polarity polarity(const Formula& f, const Atom& p);

// No rule P <- phi has a negatively occurring Q with P < Q.
bool is_stratified(const Definition& d);

// Positive occurrences of atoms in u become their `__r` renamings.
Formula rename_pos(const Formula& f, const Vocabulary& u);

// Positive occurrences of atoms in v become `__r`, negative ones `__d`.
Formula rename_diamond(const Formula& f, const Vocabulary& v);

// Every occurrence of a defined atom, heads included, becomes `__p`.
Definition prime_definition(const Definition& d);

// { P__r <- rename_diamond(phi_P, v) : P in v }.
Definition diamond_definition(const Definition& d, const Vocabulary& v);

struct DefinitionOccurrence {
  Definition definition;
  bool positive;
};

// Every definition node inside f with the parity of the negations above it,
// starting from `positive`. Order follows a left-to-right traversal.
std::vector<DefinitionOccurrence> definition_occurrences(const Formula& f, bool positive = true);

}  // namespace pcid
