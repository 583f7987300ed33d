#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "pcid/calculus.hpp"
#include "pcid/error.hpp"
#include "pcid/prover.hpp"
#include "pcid/syntax.hpp"

namespace pcid::test {
namespace {

RuleParams with_formula(const Formula& f) {
  RuleParams p;
  p.formula = f;
  return p;
}

RuleParams def_params(std::string_view d, std::string_view atom_name = {}) {
  RuleParams p = with_formula(F(d));
  if (!atom_name.empty()) p.atom = A(atom_name);
  return p;
}

std::vector<Sequent> seqs(std::initializer_list<std::string_view> texts) {
  std::vector<Sequent> out;
  for (auto t : texts) out.push_back(S(t));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_rule(const std::vector<RuleTemplate>& ts, RuleKind r) {
  return std::any_of(ts.begin(), ts.end(), [&](const RuleTemplate& t) { return t.rule == r; });
}

TEST(Rules, NamesRoundTrip) {
  ASSERT_EQ(all_rules().size(), kRuleCount);
  for (RuleKind r : all_rules()) EXPECT_EQ(rule_from_name(rule_name(r)), r);
  EXPECT_EQ(rule_name(RuleKind::def_nontotal), "def-nontotal");
  EXPECT_FALSE(rule_from_name("modus-ponens").has_value());
}

TEST(Rules, ArityFollowsParameters) {
  RuleParams l = def_params("{ p <- p & ~q. q <- q. }", "p");
  l.uset = V({"p", "q"});
  EXPECT_EQ(expected_arity(RuleKind::def_l, l), 2u);
  EXPECT_EQ(expected_arity(RuleKind::def_intro, def_params("{ p <- o. q <- p. }")), 2u);
  EXPECT_EQ(expected_arity(RuleKind::def_intro, def_params("{ }")), 0u);
  EXPECT_EQ(expected_arity(RuleKind::and_r, with_formula(F("p & q"))), 2u);
  EXPECT_EQ(expected_arity(RuleKind::axiom_id, with_formula(F("p"))), 0u);
  EXPECT_FALSE(expected_arity(RuleKind::def_l, with_formula(F("p"))).has_value());
}

TEST(MakeRuleInstance, RightDefinitionRule) {
  const char* d = "{ p <- p & ~q. q <- ~p. }";
  EXPECT_NO_THROW(make_rule_instance(RuleKind::def_r, def_params(d, "p"), S("{ p <- p & ~q. q <- ~p. }, o |- r, p"),
                                     seqs({"o |- r, p & ~q"})));
  EXPECT_NO_THROW(make_rule_instance(RuleKind::def_r, def_params(d, "q"), S("{ p <- p & ~q. q <- ~p. }, o |- r, q"),
                                     seqs({"o |- r, ~p"})));
  EXPECT_THROW(make_rule_instance(RuleKind::def_r, def_params(d, "p"), S("{ p <- p & ~q. q <- ~p. }, o |- r, p"),
                                  seqs({"o |- r, ~p"})),
               SchemaMismatch);
}

TEST(MakeRuleInstance, LeftDefinitionRule) {
  const char* d = "{ p <- p & ~q. q <- q. }";
  RuleParams both = def_params(d, "p");
  both.uset = V({"p", "q"});
  EXPECT_NO_THROW(make_rule_instance(RuleKind::def_l, both, S("p, { p <- p & ~q. q <- q. } |-"),
                                     seqs({"~p__r, ~q__r |- ~(p__r & ~q)", "~p__r, ~q__r |- ~q__r"})));
  RuleParams only_q = def_params(d, "q");
  only_q.uset = V({"q"});
  EXPECT_NO_THROW(
      make_rule_instance(RuleKind::def_l, only_q, S("q, { p <- p & ~q. q <- q. } |-"), seqs({"~q__r |- ~q__r"})));
  // The atom must belong to U.
  RuleParams outside = def_params(d, "p");
  outside.uset = V({"q"});
  EXPECT_THROW(
      make_rule_instance(RuleKind::def_l, outside, S("p, { p <- p & ~q. q <- q. } |-"), seqs({"~q__r |- ~q__r"})),
      SchemaMismatch);
}

TEST(MakeRuleInstance, LeftDefinitionRuleWithoutRenamingIsRejected) {
  RuleParams p = def_params("{ p <- true. }", "p");
  p.uset = V({"p"});
  EXPECT_THROW(make_rule_instance(RuleKind::def_l, p, S("p, { p <- true. } |-"), seqs({"~p, p |- ~true"})),
               SchemaMismatch);
}

TEST(MakeRuleInstance, NonTotalDefinitionRule) {
  RuleParams p = def_params("{ p <- p & ~q. q <- ~q & r. r <- ~r. }");
  p.vset = V({"q", "r"});
  const char* dd = "{ q__r <- ~q__d & r__r. r__r <- ~r__d. }";
  std::string first = std::string("q__d, r__d, ") + dd + " |- ~q__r & ~r__r";
  std::string second = std::string("~q__d, ~r__d, ") + dd + " |- q__r & r__r";
  EXPECT_NO_THROW(make_rule_instance(RuleKind::def_nontotal, p, S("{ p <- p & ~q. q <- ~q & r. r <- ~r. } |-"),
                                     {S(first), S(second)}));
  EXPECT_THROW(make_rule_instance(RuleKind::def_nontotal, p, S("{ p <- p & ~q. q <- ~q & r. r <- ~r. } |-"),
                                  {S(second), S(first)}),
               SchemaMismatch);
}

TEST(MakeRuleInstance, DefinitionIntroductionRule) {
  RuleParams p = def_params("{ p <- o. q <- q & p. }");
  const char* primed = "{ p__p <- o. q__p <- q__p & p__p. }";
  std::string first = std::string(primed) + ", o, p, ~q |- p__p <=> p";
  std::string second = std::string(primed) + ", o, p, ~q |- q__p <=> q";
  EXPECT_NO_THROW(make_rule_instance(RuleKind::def_intro, p, S("o, p, ~q |- { p <- o. q <- q & p. }"),
                                     {S(first), S(second)}));
  EXPECT_NO_THROW(make_rule_instance(RuleKind::def_intro, def_params("{ }"), S("|- { }"), {}));
}

TEST(MakeRuleInstance, FreshnessOfGeneratedAtoms) {
  RuleParams p = def_params("{ q <- q. }", "q");
  p.uset = V({"q"});
  EXPECT_THROW(make_rule_instance(RuleKind::def_l, p, S("q, q__r, { q <- q. } |-"), seqs({"~q__r, q__r |- ~q__r"})),
               SchemaMismatch);
}

TEST(MakeRuleInstance, StructuralAndLogicalRules) {
  EXPECT_NO_THROW(make_rule_instance(RuleKind::axiom_id, with_formula(F("{ p <- o. }")),
                                     S("{ p <- o. }, q |- { p <- o. }"), {}));
  EXPECT_NO_THROW(make_rule_instance(RuleKind::axiom_bot, {}, S("false |- p, q"), {}));
  EXPECT_NO_THROW(make_rule_instance(RuleKind::axiom_top, {}, S("p |- true"), {}));
  EXPECT_THROW(make_rule_instance(RuleKind::axiom_bot, {}, S("false, q |- p"), {}), SchemaMismatch);
  EXPECT_NO_THROW(make_rule_instance(RuleKind::weaken_l, with_formula(F("q")), S("q, p |- p"), seqs({"p |- p"})));
  EXPECT_NO_THROW(make_rule_instance(RuleKind::contract_r, with_formula(F("p")), S("p |- p"), seqs({"p |- p"})));
  RuleParams cut;
  cut.cut_formula = F("q");
  EXPECT_NO_THROW(make_rule_instance(RuleKind::cut, cut, S("p |- r"), seqs({"p |- r, q", "q, p |- r"})));
  EXPECT_NO_THROW(make_rule_instance(RuleKind::not_l, with_formula(F("~p")), S("~p |-"), seqs({"|- p"})));
  EXPECT_NO_THROW(make_rule_instance(RuleKind::or_l, with_formula(F("p | q")), S("p | q |- r"),
                                     seqs({"p |- r", "q |- r"})));
  EXPECT_NO_THROW(make_rule_instance(RuleKind::or_r, with_formula(F("p | q")), S("|- p | q"), seqs({"|- p, q"})));
  EXPECT_THROW(make_rule_instance(RuleKind::or_r, with_formula(F("p | q")), S("|- p | q"), seqs({"|- p"})),
               SchemaMismatch);
  // Unexpected parameters are rejected.
  RuleParams extra = with_formula(F("~p"));
  extra.atom = A("p");
  EXPECT_THROW(make_rule_instance(RuleKind::not_l, extra, S("~p |-"), seqs({"|- p"})), SchemaMismatch);
}

TEST(CheckProof, WorkedProofIsAccepted) {
  ProofPtr proof = parse_proof(read_file(std::string(PCID_TEST_DATA_DIR) + "/worked_proof.lpidproof"));
  EXPECT_EQ(proof_size(proof), 11u);
  CheckReport r = check_proof(proof);
  EXPECT_TRUE(r.accepted) << r.error;
  EXPECT_FALSE(r.uses_def_intro);
  EXPECT_TRUE(r.certifies_validity());
  EXPECT_EQ(r.root, S("o, { p <- o. q <- q & p. } |- p & ~q"));
}

TEST(CheckProof, SingleAxiom) {
  CheckReport r = check_proof(make_proof(RuleKind::axiom_id, with_formula(F("p")), S("p |- p")));
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.root, S("p |- p"));
}

TEST(CheckProof, RejectionReportsThePath) {
  ProofPtr leaf = make_proof(RuleKind::axiom_id, with_formula(F("p")), S("p |- q"));
  ProofPtr root = make_proof(RuleKind::not_r, with_formula(F("~p")), S("|- ~p, q"), {leaf});
  CheckReport r = check_proof(root);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.path, std::vector<std::size_t>{0});
  EXPECT_FALSE(r.error.empty());
}

TEST(CheckProof, DefinitionIntroductionOfANonTotalDefinition) {
  // D' |- p' <=> p holds because D' has no model.
  ProveOutcome premise = prove(S("{ p__p <- ~p__p. } |- p__p <=> p"));
  ASSERT_EQ(premise.kind, OutcomeKind::proof);
  ProofPtr root = make_proof(RuleKind::def_intro, def_params("{ p <- ~p. }"), S("|- { p <- ~p. }"), {premise.proof});

  CheckReport plain = check_proof(root);
  EXPECT_TRUE(plain.accepted) << plain.error;
  EXPECT_TRUE(plain.uses_def_intro);
  ASSERT_EQ(plain.introduced.size(), 1u);
  EXPECT_EQ(plain.introduced[0], D("{ p <- ~p. }"));

  CheckReport verified = check_proof(root, {true, {}});
  EXPECT_TRUE(verified.accepted);
  ASSERT_EQ(verified.totality.size(), 1u);
  EXPECT_EQ(verified.totality[0].status, TotalityStatus::not_total);
  EXPECT_FALSE(verified.certifies_validity());
  EXPECT_TRUE(ref_counter_model(S("|- { p <- ~p. }")).has_value());
}

TEST(ApplicableRules, Examples) {
  auto right = applicable_rules(S("{ p <- q. }, o |- p"));
  EXPECT_TRUE(has_rule(right, RuleKind::def_r));
  auto left = applicable_rules(S("p, { p <- q. } |-"));
  auto it = std::find_if(left.begin(), left.end(), [](const RuleTemplate& t) { return t.rule == RuleKind::def_l; });
  ASSERT_NE(it, left.end());
  EXPECT_EQ(it->unresolved, std::vector<std::string>{"uset"});
  auto bot = applicable_rules(S("false |-"));
  EXPECT_TRUE(has_rule(bot, RuleKind::axiom_bot));
  EXPECT_FALSE(has_rule(bot, RuleKind::axiom_id));
  EXPECT_FALSE(has_rule(bot, RuleKind::axiom_top));
}

// Rule-local soundness and counter-model preservation on random instances.

class RuleProperties : public ::testing::Test {
 protected:
  Gen gen{23};
  std::vector<Atom> pool = atoms({"p", "q", "o"});
  std::vector<Atom> heads = atoms({"p", "q"});

  FormulaSet side(std::size_t max) {
    FormulaSet fs;
    std::size_t n = gen.below(max + 1);
    for (std::size_t k = 0; k < n; ++k) fs.insert(gen.coin(0.6) ? gen.pc(pool, 1) : gen.pc(pool, 2));
    return fs;
  }

  // A random conclusion and parameters for the rule, or nullopt.
  std::optional<std::pair<RuleParams, Sequent>> instance(RuleKind rule) {
    Sequent c{side(2), side(2)};
    RuleParams p;
    Definition d = gen.definition(gen.subset(heads, 2), pool, 2);
    Formula df = Formula::definition(d);
    std::vector<Atom> defined(d.defined().begin(), d.defined().end());
    switch (rule) {
      case RuleKind::not_l: p.formula = neg(gen.pc(pool, 2)); c.antecedent.insert(*p.formula); break;
      case RuleKind::not_r: p.formula = neg(gen.pc(pool, 2)); c.succedent.insert(*p.formula); break;
      case RuleKind::and_l: p.formula = conj(gen.pc(pool, 1), gen.pc(pool, 1)); c.antecedent.insert(*p.formula); break;
      case RuleKind::and_r: p.formula = conj(gen.pc(pool, 1), gen.pc(pool, 1)); c.succedent.insert(*p.formula); break;
      case RuleKind::or_l: p.formula = disj(gen.pc(pool, 1), gen.pc(pool, 1)); c.antecedent.insert(*p.formula); break;
      case RuleKind::or_r: p.formula = disj(gen.pc(pool, 1), gen.pc(pool, 1)); c.succedent.insert(*p.formula); break;
      case RuleKind::def_r:
        p.formula = df;
        p.atom = gen.pick(defined);
        c.antecedent.insert(df);
        c.succedent.insert(atom(*p.atom));
        break;
      case RuleKind::def_l: {
        p.formula = df;
        auto u = gen.subset(defined, 2);
        p.uset = Vocabulary(u.begin(), u.end());
        p.atom = gen.pick(u);
        c.antecedent.insert(df);
        c.antecedent.insert(atom(*p.atom));
        break;
      }
      case RuleKind::def_nontotal: {
        p.formula = df;
        auto v = gen.subset(defined, 2);
        p.vset = Vocabulary(v.begin(), v.end());
        c.antecedent.insert(df);
        break;
      }
      case RuleKind::def_intro:
        p.formula = df;
        c.succedent.insert(df);
        break;
      default: return std::nullopt;
    }
    return std::pair{p, c};
  }
};

TEST_F(RuleProperties, DefinitionRulesAreLocallySound) {
  for (RuleKind rule : {RuleKind::def_r, RuleKind::def_l, RuleKind::def_nontotal, RuleKind::not_l, RuleKind::not_r,
                        RuleKind::and_l, RuleKind::and_r, RuleKind::or_l, RuleKind::or_r}) {
    std::size_t applicable = 0;
    for (int k = 0; k < 600; ++k) {
      auto inst = instance(rule);
      ASSERT_TRUE(inst.has_value());
      auto premises = canonical_premises(rule, inst->first, inst->second);
      bool all_valid = std::all_of(premises.begin(), premises.end(),
                                   [](const Sequent& s) { return !ref_counter_model(s).has_value(); });
      if (!all_valid) continue;
      ++applicable;
      EXPECT_FALSE(ref_counter_model(inst->second).has_value())
          << rule_name(rule) << " concluded " << inst->second.text();
    }
    EXPECT_GT(applicable, 5u) << rule_name(rule) << " was rarely exercised";
  }
}

TEST_F(RuleProperties, LogicalRulesAndIntroductionPreserveCounterModels) {
  for (RuleKind rule : {RuleKind::not_l, RuleKind::not_r, RuleKind::and_l, RuleKind::and_r, RuleKind::or_l,
                        RuleKind::or_r, RuleKind::def_intro}) {
    std::size_t seen = 0;
    for (int k = 0; k < 400; ++k) {
      auto inst = instance(rule);
      auto premises = canonical_premises(rule, inst->first, inst->second);
      for (const auto& premise : premises) {
        auto cm = ref_counter_model(premise);
        if (!cm) continue;
        ++seen;
        Assignment restricted;
        for (const auto& a : inst->second.vocabulary()) {
          restricted[a] = cm->contains(a) ? cm->at(a) : TruthValue::F;
        }
        for (const auto& g : inst->second.antecedent) EXPECT_TRUE(ref_truth(g, restricted)) << rule_name(rule);
        for (const auto& g : inst->second.succedent) EXPECT_FALSE(ref_truth(g, restricted)) << rule_name(rule);
      }
    }
    EXPECT_GT(seen, 20u) << rule_name(rule);
  }
}

TEST_F(RuleProperties, CanonicalPremisesPassTheSchemaCheck) {
  for (RuleKind rule : {RuleKind::def_r, RuleKind::def_l, RuleKind::def_nontotal, RuleKind::def_intro,
                        RuleKind::and_r, RuleKind::or_l}) {
    for (int k = 0; k < 100; ++k) {
      auto inst = instance(rule);
      auto premises = canonical_premises(rule, inst->first, inst->second);
      EXPECT_NO_THROW(make_rule_instance(rule, inst->first, inst->second, premises)) << rule_name(rule);
    }
  }
}

}  // namespace
}  // namespace pcid::test
