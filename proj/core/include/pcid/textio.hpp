#pragma once

#include <string>
#include <string_view>

#include "pcid/calculus.hpp"
#include "pcid/error.hpp"
#include "pcid/formula.hpp"
#include "pcid/sequent.hpp"

namespace pcid {

// Concrete syntax
//
//   formula   ::= formula '<=>' formula          (left associative, loosest)
//               | formula '=>' formula           (right associative)
//               | formula '|' formula | formula '&' formula | '~' formula
//               | atom | 'true' | 'false' | '(' formula ')' | definition
//   definition ::= '{' (atom '<-' formula '.')* '}'
//   theory    ::= (formula '.' | definition)*
//   sequent   ::= [formula (',' formula)*] '|-' [formula (',' formula)*]
//
// `=>` and `<=>` are read as ~a | b and (a & b) | (~a & ~b). Rules with the
// same head are merged by disjunction. `#` starts a line comment.

struct ParseOptions {
  // Accept `__r`, `__d`, `__p` atoms; proof documents always do.
  bool allow_generated = false;
};

Formula parse_formula(std::string_view text, const ParseOptions& options = {});
Theory parse_theory(std::string_view text, const ParseOptions& options = {});
Sequent parse_sequent(std::string_view text, const ParseOptions& options = {});

// One statement per line; bare definitions carry no trailing dot.
std::string print_theory(const Theory& t);
std::string print_sequent(const Sequent& s);

// Proof documents: one node per block
//
//   rule-name {
//     sequent: <sequent>
//     formula: <formula>        (and cutformula, atom, index, uset, vset)
//     <premise blocks, in order>
//   }
//
// Throws ParseError for unknown rules, malformed or missing parameters and
// premise counts that do not match the rule.
ProofPtr parse_proof(std::string_view text);
std::string print_proof(const ProofPtr& proof);

}  // namespace pcid
