#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcid/formula.hpp"
#include "pcid/interpretation.hpp"
#include "pcid/sequent.hpp"

namespace pcid {

// Bounds for the enumeration oracles.
struct Limits {
  std::size_t max_atoms = 22;
};

// Kleene evaluation. Definitions are evaluated only when the interpretation
// is two-valued on their vocabulary; otherwise ContractViolation.
TruthValue eval3(const Formula& f, const Interpretation& i);

enum class StepKind { derive_true, derive_false };

struct WfStep {
  StepKind kind;
  // {P} for derive-true, the unfounded set for derive-false.
  Vocabulary atoms;
  Interpretation before;
  Interpretation after;
};

struct WfTrace {
  Definition definition;
  Interpretation initial;
  std::vector<WfStep> steps;
  Interpretation limit;
  bool terminal = true;
};

// How the next derivation step is chosen. The default derives the least
// eligible true atom first, then the greatest unfounded set. A seeded policy
// picks uniformly among the true atoms and unfounded subsets of random
// candidate sets.
struct StepPolicy {
  std::optional<std::uint64_t> seed;

  static StepPolicy deterministic() { return {}; }
  static StepPolicy randomized(std::uint64_t s) { return {s}; }
};

// `open` must be two-valued on open(d). Its other atoms are carried into
// every interpretation of the trace unchanged, except defined atoms, which
// start at U.
WfTrace wf_trace(const Definition& d, const Interpretation& open, const StepPolicy& policy = {});
Interpretation wf_model(const Definition& d, const Interpretation& open);

// Largest set of U-valued defined atoms whose bodies are all false once the
// set itself is made false.
Vocabulary greatest_unfounded_set(const Definition& d, const Interpretation& i);
// Same, restricted to subsets of `candidates`.
Vocabulary greatest_unfounded_subset(const Definition& d, const Interpretation& i,
                                     const Vocabulary& candidates);

// Two-valued truth of a PC(ID)-formula.
TruthValue truth_pcid(const Formula& f, const Interpretation& i);
bool satisfies(const Interpretation& i, const Theory& t);

struct ValidityResult {
  bool valid = true;
  std::optional<Interpretation> counter_model;
};

// Exhaustive check over the sequent's vocabulary. The counter-model is the
// first one in lexicographic order (first atom most significant, F first).
ValidityResult is_valid(const Sequent& s, const Limits& limits = {});

struct SatResult {
  std::optional<Interpretation> model;
  bool satisfiable() const { return model.has_value(); }
};

SatResult satisfiable(const Theory& t, const Limits& limits = {});

struct TotalityResult {
  bool total = true;
  std::optional<Interpretation> witness;
};

// Total iff every model of t, restricted to open(d), yields a two-valued
// well-founded model. Models range over vocab(t) and open(d).
TotalityResult is_total(const Definition& d, const Theory& t = {}, const Limits& limits = {});

}  // namespace pcid
