// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every criterion is zero-tolerance and has a time budget.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracle.hpp"
#include "pcid/error.hpp"
#include "pcid/prover.hpp"
#include "pcid/semantics.hpp"
#include "pcid/syntax.hpp"
#include "pcid/textio.hpp"

namespace pcid::test {
namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;
  std::string note;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (violations++ == 0) first_violation = what;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::size_t min_cases;
  std::function<Tally()> run;
};

Formula F(std::string_view text) { return parse_formula(text, ParseOptions{true}); }
Sequent S(std::string_view text) { return parse_sequent(text, ParseOptions{true}); }

// 1: the worked examples.

Tally golden() {
  Tally t;

  // {p <- q. q <- p.} has exactly one model, both atoms false.
  Formula d = F("{ p <- q. q <- p. }");
  std::size_t models = 0;
  Interpretation only;
  for (TruthValue p : {TruthValue::F, TruthValue::T}) {
    for (TruthValue q : {TruthValue::F, TruthValue::T}) {
      Interpretation i({{Atom("p"), p}, {Atom("q"), q}});
      if (truth_pcid(d, i) == TruthValue::T) {
        ++models;
        only = i;
      }
    }
  }
  t.check(models == 1 && only.to_string() == "p=F q=F", "loop definition models: " + std::to_string(models));

  // The worked proof is accepted.
  std::ifstream in(PCID_TEST_DATA_DIR "/worked_proof.lpidproof");
  std::stringstream buf;
  buf << in.rdbuf();
  CheckReport r = check_proof(parse_proof(buf.str()));
  t.check(r.accepted && r.root == S("o, { p <- o. q <- q & p. } |- p & ~q"), "worked proof rejected: " + r.error);

  // Left definition rule without renaming is not an instance of the rule.
  RuleParams params;
  params.formula = F("{ p <- true. }");
  params.atom = Atom("p");
  params.uset = Vocabulary{Atom("p")};
  bool mismatch = false;
  try {
    make_rule_instance(RuleKind::def_l, params, S("p, { p <- true. } |-"), {S("~p, p |- ~true")});
  } catch (const SchemaMismatch&) {
    mismatch = true;
  }
  t.check(mismatch, "unrenamed left definition rule accepted");

  // The prover reproduces a checked proof of the worked sequent.
  Sequent root = S("o, { p <- o. q <- q & p. } |- p & ~q");
  ProveOutcome out = prove(root);
  t.check(out.kind == OutcomeKind::proof && out.proof->conclusion == root && check_proof(out.proof).accepted,
          "worked sequent not proved");
  return t;
}

// 2: every produced proof has a valid root.

Tally soundness() {
  Tally t;
  Gen gen(2024);
  std::size_t proofs = 0, invalid = 0, outside = 0;
  for (int k = 0; k < 6000; ++k) {
    Sequent s = gen.sequent({5, 2, 3, 3, 2});
    ProveOutcome r = prove(s);
    switch (r.kind) {
      case OutcomeKind::proof: {
        ++proofs;
        bool ok = r.proof->conclusion == s && !ref_counter_model(r.proof->conclusion) && check_proof(r.proof).accepted;
        t.check(ok, s.text());
        break;
      }
      case OutcomeKind::counter_model: {
        ++invalid;
        auto cm = ref_counter_model(s);
        t.check(cm && to_assignment(*r.counter_model) == *cm, "counter-model mismatch: " + s.text());
        break;
      }
      case OutcomeKind::out_of_scope: ++outside; break;
      case OutcomeKind::resource_limit: t.check(false, "resource limit: " + s.text()); break;
    }
  }
  t.note = std::to_string(proofs) + " proofs, " + std::to_string(invalid) + " counter-models, " +
           std::to_string(outside) + " out of scope";
  return t;
}

// 3: exhaustive restricted class over {p, q, o} with one definition.

std::vector<Formula> depth_two_bodies() {
  std::vector<Formula> lits;
  for (const char* a : {"p", "q", "o"}) {
    lits.push_back(atom(a));
    lits.push_back(neg(atom(a)));
  }
  std::vector<Formula> out = lits;
  for (const auto& x : lits) {
    for (const auto& y : lits) {
      out.push_back(conj(x, y));
      out.push_back(disj(x, y));
    }
  }
  return out;
}

Tally completeness() {
  Tally t;
  std::vector<Formula> bodies = depth_two_bodies();
  std::vector<Definition> defs;
  for (const auto& b : bodies) defs.push_back(Definition::from_rules({{Atom("p"), b}}));
  for (const auto& b1 : bodies) {
    for (const auto& b2 : bodies) defs.push_back(Definition::from_rules({{Atom("p"), b1}, {Atom("q"), b2}}));
  }
  std::vector<FormulaSet> gammas = {{}, {atom("o")}, {neg(atom("o"))}};
  std::vector<FormulaSet> deltas = {{}, {atom("p")}, {neg(atom("p"))}, {atom("q")}, {neg(atom("q"))}};

  // A definition in the succedent needs its defined atoms fixed by the
  // context, so those sequents range over every consistent literal set.
  std::vector<FormulaSet> literal_contexts = {{}};
  for (const char* a : {"o", "p", "q"}) {
    std::vector<FormulaSet> next;
    for (const auto& g : literal_contexts) {
      next.push_back(g);
      FormulaSet with_pos = g, with_neg = g;
      with_pos.insert(atom(a));
      with_neg.insert(neg(atom(a)));
      next.push_back(with_pos);
      next.push_back(with_neg);
    }
    literal_contexts = std::move(next);
  }

  std::size_t valid = 0, total_defs = 0;
  auto attempt = [&](const Sequent& s) {
    if (ref_counter_model(s)) return;
    ++valid;
    ProveOutcome r = prove(s);
    t.check(r.kind == OutcomeKind::proof && r.proof->conclusion == s,
            s.text() + " -> " + to_string(r.kind) + " " + r.reason);
  };
  for (const auto& d : defs) {
    Formula df = Formula::definition(d);
    for (const auto& g : gammas) {
      for (const auto& delta : deltas) {
        Sequent s{g, delta};
        s.antecedent.insert(df);
        attempt(s);
      }
    }
    if (ref_non_total_witness(d, {})) continue;
    ++total_defs;
    for (const auto& g : literal_contexts) attempt(Sequent{g, {df}});
  }
  t.note = std::to_string(defs.size()) + " definitions, " + std::to_string(total_defs) + " total, " +
           std::to_string(valid) + " valid sequents";
  return t;
}

// 4: monotonicity, confluence and the rule body agreement.

TruthValue random_value(Gen& gen) { return static_cast<TruthValue>(gen.below(3)); }

Tally semantics_invariants() {
  Tally t;
  Gen gen(4040);
  std::vector<Atom> pool = atoms({"p", "q", "r", "s", "o"});
  Vocabulary vocab(pool.begin(), pool.end());

  std::size_t triples = 0;
  for (int k = 0; k < 6000; ++k) {
    Formula f = gen.pc(pool, 4);
    Interpretation i = gen.three_valued(vocab);

    // More precise J.
    Interpretation j = i;
    for (const auto& a : pool) {
      if (i[a] == TruthValue::U && gen.coin()) j.set(a, gen.coin() ? TruthValue::T : TruthValue::F);
    }
    ++triples;
    t.check(leq_precision(eval3(f, i), eval3(f, j)), "precision: " + f.text() + " " + i.to_string());

    // J moved in the truth order along the polarity of each atom.
    Interpretation h = i;
    for (const auto& a : pool) {
      TruthValue v = random_value(gen);
      switch (polarity(f, a)) {
        case Polarity::positive_only: h.set(a, max_truth(i[a], v)); break;
        case Polarity::negative_only: h.set(a, min_truth(i[a], v)); break;
        case Polarity::absent: h.set(a, v); break;
        case Polarity::both: break;
      }
    }
    ++triples;
    t.check(leq_truth(eval3(f, i), eval3(f, h)), "truth: " + f.text() + " " + i.to_string() + " " + h.to_string());
  }

  std::size_t instances = 0;
  for (int k = 0; k < 1000; ++k) {
    Definition d = gen.definition(gen.subset(pool, 4), pool, 3);
    Interpretation open = gen.two_valued(d.open());
    Interpretation expected = wf_model(d, open);
    t.check(to_assignment(expected) == ref_wf_model(d, to_assignment(open)), "reference model: " + d.text());
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      WfTrace w = wf_trace(d, open, StepPolicy::randomized(seed * 7919 + static_cast<std::uint64_t>(k)));
      t.check(w.terminal && w.limit == expected, "confluence: " + d.text() + " " + open.to_string());
    }
    ++instances;
  }

  std::size_t models = 0;
  for (int k = 0; k < 2000; ++k) {
    Theory th;
    std::size_t defs = 1 + gen.below(2);
    std::vector<Atom> heads = gen.subset(pool, 3);
    for (std::size_t n = 0; n < defs; ++n) {
      th.push_back(Formula::definition(gen.definition(heads, pool, 3)));
      heads = gen.subset(pool, 3);
    }
    std::size_t extra = gen.below(3);
    for (std::size_t n = 0; n < extra; ++n) th.push_back(gen.pc(pool, 2));
    SatResult r = satisfiable(th);
    t.check(r.satisfiable() == ref_first_model(th).has_value(), "solve disagrees with reference");
    if (!r.satisfiable()) continue;
    ++models;
    for (const auto& stmt : th) {
      t.check(ref_truth(stmt, to_assignment(*r.model)), "model violates " + stmt.text());
      if (!stmt.is(Formula::Kind::definition)) continue;
      for (const auto& [head, body] : stmt.definition().rules()) {
        t.check((*r.model)[head] == eval3(body, *r.model), "rule body agreement: " + stmt.text() + " " + r.model->to_string());
      }
    }
  }
  t.note = std::to_string(triples) + " triples, " + std::to_string(instances) + " trace instances x 20 policies, " +
           std::to_string(models) + " models";
  if (triples < 10000 || instances < 1000) t.check(false, "too few instances");
  return t;
}

// 5: stratified definitions are total; the totality/unsatisfiability reduction.

Tally complexity_shape() {
  Tally t;
  Gen gen(5050);
  std::vector<Atom> heads = atoms({"p", "q", "r", "s"});
  std::vector<Atom> opens = atoms({"o", "x"});
  for (int k = 0; k < 1000; ++k) {
    Definition d = gen.stratified(gen.subset(heads, 4), opens, 3);
    t.check(is_stratified(d) && is_total(d).total, "stratified but not total: " + d.text());
  }

  std::vector<Atom> pool = numbered_atoms("o", 10);
  std::size_t sat = 0;
  for (int k = 0; k < 500; ++k) {
    std::vector<Atom> vocab = gen.subset(pool, 10);
    std::vector<Formula> theory;
    std::size_t n = 1 + gen.below(5);
    for (std::size_t i = 0; i < n; ++i) theory.push_back(gen.pc(vocab, 3));
    Definition d = Definition::from_rules({{Atom("p"), conj(neg(atom("p")), conj_all(theory))}});
    bool satisfiable_t = ref_first_model(theory).has_value();
    sat += satisfiable_t;
    t.check(is_total(d).total == !satisfiable_t, "reduction: " + d.text());
  }
  t.note = "1000 stratified, 500 reductions (" + std::to_string(sat) + " satisfiable)";
  return t;
}

// 6: parse after print is the identity.

bool same_proof(const ProofPtr& a, const ProofPtr& b) {
  if (a->rule != b->rule || !(a->params == b->params) || a->conclusion != b->conclusion) return false;
  if (a->premises.size() != b->premises.size()) return false;
  for (std::size_t k = 0; k < a->premises.size(); ++k) {
    if (!same_proof(a->premises[k], b->premises[k])) return false;
  }
  return true;
}

Tally round_trip() {
  Tally t;
  Gen gen(6060);
  std::vector<Atom> pool = atoms({"p", "q", "r", "o", "s"});
  std::size_t theories = 0, sequents = 0, proofs = 0;
  auto guarded = [&](const std::string& what, auto&& f) {
    try {
      t.check(f(), what);
    } catch (const Error& e) {
      t.check(false, what + ": " + e.what());
    }
  };
  for (int k = 0; k < 2000; ++k) {
    Theory th;
    std::size_t n = gen.below(5);
    for (std::size_t i = 0; i < n; ++i) th.push_back(gen.pcid(pool, 3, gen.coin(0.6)));
    guarded("theory", [&] { return parse_theory(print_theory(th)) == th; });
    ++theories;
  }
  for (int k = 0; k < 2000; ++k) {
    Sequent s = gen.sequent({});
    guarded("sequent " + s.text(), [&] { return parse_sequent(print_sequent(s), ParseOptions{true}) == s; });
    ++sequents;
  }
  std::size_t from_prover = 0;
  for (int k = 0; k < 3000 && from_prover < 600; ++k) {
    ProveOutcome r = prove(gen.sequent({}));
    if (r.kind != OutcomeKind::proof) continue;
    ++from_prover;
    ++proofs;
    guarded("prover proof", [&] { return same_proof(parse_proof(print_proof(r.proof)), r.proof); });
  }
  for (int k = 0; k < 600; ++k) {
    ProofPtr p = gen.proof_shape(pool, 4);
    ++proofs;
    guarded("proof shape", [&] { return same_proof(parse_proof(print_proof(p)), p); });
  }
  t.note = std::to_string(theories) + " theories, " + std::to_string(sequents) + " sequents, " +
           std::to_string(proofs) + " proofs";
  return t;
}

}  // namespace
}  // namespace pcid::test

int main() {
  using namespace pcid::test;
  std::vector<Criterion> criteria = {
      {"AC1", "worked examples", 1.0, 4, golden},
      {"AC2", "soundness of produced proofs", 300.0, 5000, soundness},
      {"AC3", "completeness on the restricted class", 600.0, 1, completeness},
      {"AC4", "semantic invariants", 300.0, 10000, semantics_invariants},
      {"AC5", "stratification and totality reduction", 300.0, 1500, complexity_shape},
      {"AC6", "parse/print round trip", 60.0, 5000, round_trip},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string crash;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      crash = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = crash.empty() && t.violations == 0 && t.cases >= c.min_cases && secs <= c.budget_seconds;
    all = all && pass;
    std::ostringstream line;
    line << (pass ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << t.cases << " checks, " << t.violations
         << " violations";
    if (!t.note.empty()) line << " (" << t.note << ")";
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " in " << secs << "s, budget " << c.budget_seconds << "s";
    if (!crash.empty()) line << "; exception: " << crash;
    if (t.violations) line << "; first: " << t.first_violation;
    if (t.cases < c.min_cases) line << "; fewer than " << c.min_cases << " checks";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
