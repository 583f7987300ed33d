#include "pcid/semantics.hpp"

#include <random>

#include "compiled.hpp"
#include "pcid/error.hpp"

namespace pcid {

namespace {

bool two_valued_on(const Interpretation& i, const Vocabulary& v) {
  for (const auto& a : v) {
    if (i[a] == TruthValue::U) return false;
  }
  return true;
}

bool definition_holds(const Definition& d, const Interpretation& i) {
  Interpretation model = wf_model(d, i);
  for (const auto& p : d.defined()) {
    if (model[p] != i[p]) return false;
  }
  return true;
}

void check_size(std::size_t n, const Limits& limits) {
  if (n > limits.max_atoms) {
    throw ResourceLimit("vocabulary has " + std::to_string(n) + " atoms, limit is " +
                        std::to_string(limits.max_atoms));
  }
}

Interpretation initial_interpretation(const Definition& d, const Interpretation& open) {
  Interpretation init = open;
  for (const auto& o : d.open()) {
    if (!open.contains(o)) throw ContractViolation("open atom '" + o.name() + "' is not interpreted");
    TruthValue v = open[o];
    if (v == TruthValue::U) throw ContractViolation("open atom '" + o.name() + "' is unknown");
  }
  for (const auto& p : d.defined()) init.set(p, TruthValue::U);
  return init;
}

std::vector<Atom> eligible_true(const Definition& d, const Interpretation& i) {
  std::vector<Atom> out;
  for (const auto& [head, body] : d.rules()) {
    if (i[head] == TruthValue::U && eval3(body, i) == TruthValue::T) out.push_back(head);
  }
  return out;
}

}  // namespace

TruthValue eval3(const Formula& f, const Interpretation& i) {
  switch (f.kind()) {
    case Formula::Kind::atom: return i[f.atom()];
    case Formula::Kind::top: return TruthValue::T;
    case Formula::Kind::bottom: return TruthValue::F;
    case Formula::Kind::negation: return inverse(eval3(f.operand(), i));
    case Formula::Kind::conjunction: {
      TruthValue l = eval3(f.lhs(), i);
      if (l == TruthValue::F) return l;
      return min_truth(l, eval3(f.rhs(), i));
    }
    case Formula::Kind::disjunction: {
      TruthValue l = eval3(f.lhs(), i);
      if (l == TruthValue::T) return l;
      return max_truth(l, eval3(f.rhs(), i));
    }
    case Formula::Kind::definition: {
      const auto& d = f.definition();
      if (!two_valued_on(i, d.vocabulary())) {
        throw ContractViolation("definition " + d.text() + " evaluated in a three-valued interpretation");
      }
      return from_bool(definition_holds(d, i));
    }
  }
  return TruthValue::U;
}

Vocabulary greatest_unfounded_subset(const Definition& d, const Interpretation& i,
                                     const Vocabulary& candidates) {
  Vocabulary u;
  for (const auto& p : candidates) {
    if (d.defines(p) && i[p] == TruthValue::U) u.insert(p);
  }
  while (!u.empty()) {
    Interpretation trial = i;
    for (const auto& p : u) trial.set(p, TruthValue::F);
    Vocabulary keep;
    for (const auto& p : u) {
      if (eval3(d.body(p), trial) == TruthValue::F) keep.insert(p);
    }
    if (keep.size() == u.size()) break;
    u = std::move(keep);
  }
  return u;
}

Vocabulary greatest_unfounded_set(const Definition& d, const Interpretation& i) {
  return greatest_unfounded_subset(d, i, d.defined());
}

WfTrace wf_trace(const Definition& d, const Interpretation& open, const StepPolicy& policy) {
  WfTrace trace;
  trace.definition = d;
  trace.initial = initial_interpretation(d, open);
  Interpretation current = trace.initial;
  std::optional<std::mt19937_64> rng;
  if (policy.seed) rng.emplace(*policy.seed);

  while (true) {
    WfStep step{StepKind::derive_true, {}, current, current};
    auto trues = eligible_true(d, current);
    if (!rng) {
      if (!trues.empty()) {
        step.atoms = {trues.front()};
      } else {
        step.kind = StepKind::derive_false;
        step.atoms = greatest_unfounded_set(d, current);
      }
    } else {
      std::vector<Vocabulary> falses;
      std::vector<Atom> undecided;
      for (const auto& p : d.defined()) {
        if (current[p] == TruthValue::U) undecided.push_back(p);
      }
      if (!undecided.empty()) {
        Vocabulary pick;
        std::bernoulli_distribution coin(0.5);
        for (const auto& p : undecided) {
          if (coin(*rng)) pick.insert(p);
        }
        if (pick.empty()) {
          std::uniform_int_distribution<std::size_t> any(0, undecided.size() - 1);
          pick.insert(undecided[any(*rng)]);
        }
        auto u = greatest_unfounded_subset(d, current, pick);
        if (!u.empty()) falses.push_back(std::move(u));
      }
      std::size_t options = trues.size() + falses.size();
      if (options == 0) {
        step.kind = StepKind::derive_false;
        step.atoms = greatest_unfounded_set(d, current);
      } else {
        std::uniform_int_distribution<std::size_t> choose(0, options - 1);
        std::size_t k = choose(*rng);
        if (k < trues.size()) {
          step.atoms = {trues[k]};
        } else {
          step.kind = StepKind::derive_false;
          step.atoms = falses[k - trues.size()];
        }
      }
    }
    if (step.atoms.empty()) break;
    TruthValue v = step.kind == StepKind::derive_true ? TruthValue::T : TruthValue::F;
    for (const auto& p : step.atoms) step.after.set(p, v);
    current = step.after;
    trace.steps.push_back(std::move(step));
  }
  trace.limit = current;
  trace.terminal = true;
  return trace;
}

Interpretation wf_model(const Definition& d, const Interpretation& open) {
  return wf_trace(d, open).limit;
}

TruthValue truth_pcid(const Formula& f, const Interpretation& i) {
  if (!two_valued_on(i, atoms_of(f))) {
    throw ContractViolation("truth of '" + f.text() + "' requires a two-valued interpretation");
  }
  return eval3(f, i);
}

bool satisfies(const Interpretation& i, const Theory& t) {
  for (const auto& f : t) {
    if (truth_pcid(f, i) != TruthValue::T) return false;
  }
  return true;
}

ValidityResult is_valid(const Sequent& s, const Limits& limits) {
  Vocabulary vocab = s.vocabulary();
  check_size(vocab.size(), limits);
  detail::CompiledSet cs(vocab);
  std::vector<std::size_t> ante, succ;
  for (const auto& f : s.antecedent) ante.push_back(cs.compile(f));
  for (const auto& f : s.succedent) succ.push_back(cs.compile(f));
  ValidityResult result;
  detail::enumerate_assignments(vocab.size(), [&](const std::vector<std::uint8_t>& values) {
    for (auto p : ante) {
      if (!cs.eval2(p, values)) return true;
    }
    for (auto p : succ) {
      if (cs.eval2(p, values)) return true;
    }
    result.valid = false;
    result.counter_model = cs.to_interpretation(values);
    return false;
  });
  return result;
}

SatResult satisfiable(const Theory& t, const Limits& limits) {
  Vocabulary vocab;
  for (const auto& f : t) {
    auto v = atoms_of(f);
    vocab.insert(v.begin(), v.end());
  }
  check_size(vocab.size(), limits);
  detail::CompiledSet cs(vocab);
  std::vector<std::size_t> programs;
  for (const auto& f : t) programs.push_back(cs.compile(f));
  SatResult result;
  detail::enumerate_assignments(vocab.size(), [&](const std::vector<std::uint8_t>& values) {
    for (auto p : programs) {
      if (!cs.eval2(p, values)) return true;
    }
    result.model = cs.to_interpretation(values);
    return false;
  });
  return result;
}

TotalityResult is_total(const Definition& d, const Theory& t, const Limits& limits) {
  Vocabulary vocab = d.open();
  for (const auto& f : t) {
    auto v = atoms_of(f);
    vocab.insert(v.begin(), v.end());
  }
  check_size(vocab.size(), limits);
  // The definition's own atoms are scratch space for the fixpoint.
  Vocabulary scratch = vocab;
  for (const auto& p : d.defined()) scratch.insert(p);
  detail::CompiledSet cs(scratch);
  std::vector<std::size_t> programs;
  for (const auto& f : t) programs.push_back(cs.compile(f));
  std::size_t def = cs.add_definition(d);

  // Positions of the enumerated atoms inside the scratch vector.
  std::vector<std::size_t> slots;
  {
    std::size_t k = 0;
    for (const auto& a : scratch) {
      if (vocab.contains(a)) slots.push_back(k);
      ++k;
    }
  }
  TotalityResult result;
  std::vector<std::uint8_t> full(scratch.size(), 0);
  detail::enumerate_assignments(vocab.size(), [&](const std::vector<std::uint8_t>& values) {
    for (std::size_t k = 0; k < slots.size(); ++k) full[slots[k]] = values[k];
    for (auto p : programs) {
      if (!cs.eval2(p, full)) return true;
    }
    if (cs.is_two_valued_at(def, full)) return true;
    result.total = false;
    std::map<Atom, TruthValue> m;
    std::size_t k = 0;
    for (const auto& a : vocab) m.emplace(a, static_cast<TruthValue>(values[k++]));
    result.witness = Interpretation(std::move(m));
    return false;
  });
  return result;
}

}  // namespace pcid
