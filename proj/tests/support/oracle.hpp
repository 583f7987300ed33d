#pragma once

// Reference semantics written independently of the library: plain recursion
// over the syntax tree, well-founded models by brute-force unfounded-set
// search, and validity by recursive case splitting. Slow, small, obvious.

#include <map>
#include <optional>

#include "pcid/formula.hpp"
#include "pcid/interpretation.hpp"
#include "pcid/sequent.hpp"

namespace pcid::test {

using Assignment = std::map<Atom, TruthValue>;

TruthValue ref_eval3(const Formula& f, const Assignment& a);

// Well-founded model of d extended from a two-valued assignment of its open
// atoms. Applies derivation rule 1 to every eligible atom, then rule 2 with
// the union of all unfounded subsets.
Assignment ref_wf_model(const Definition& d, const Assignment& open);

// All unfounded subsets' union, by enumerating subsets.
Vocabulary ref_greatest_unfounded(const Definition& d, const Assignment& a);

bool ref_truth(const Formula& f, const Assignment& a);

// First counter-model with the first atom most significant, F before T.
std::optional<Assignment> ref_counter_model(const Sequent& s);
std::optional<Assignment> ref_first_model(const Theory& t);
// First model of t (over vocab(t) plus open(d)) whose open restriction
// leaves d partial.
std::optional<Assignment> ref_non_total_witness(const Definition& d, const Theory& t);

Assignment to_assignment(const Interpretation& i);

}  // namespace pcid::test
