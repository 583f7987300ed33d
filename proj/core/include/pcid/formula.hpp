#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcid/atom.hpp"

namespace pcid {

class Definition;

namespace detail {
struct FormulaNode;
struct DefinitionData;
}  // namespace detail

// Immutable PC(ID) formula. Copies share structure.
//
// Every formula caches its canonical text (the form the printer emits).
// Equality and ordering are structural and are decided on that text, which
// is injective on abstract syntax. Sets of formulas therefore iterate in the
// canonical printing order.
class Formula {
 public:
  enum class Kind { atom, top, bottom, negation, conjunction, disjunction, definition };

  static Formula make_atom(Atom a);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula definition(Definition d);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }

  const Atom& atom() const;
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Definition& definition() const;

  const std::string& text() const noexcept;
  std::size_t hash() const noexcept;

  // Binding strength used by the printer: 4 for atoms, constants,
  // definitions and negations, 3 for conjunctions, 2 for disjunctions.
  int precedence() const noexcept;

  // An atom or the negation of an atom.
  bool is_literal() const noexcept;
  // No definition node anywhere inside.
  bool is_pc() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

using FormulaSet = std::set<Formula>;

// Convenience constructors.
Formula atom(const Atom& a);
Formula atom(std::string_view user_name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);  // ~a | b
Formula equiv(Formula a, Formula b);    // (a & b) | (~a & ~b)
// Left-nested conjunction of the formulas in order; top for an empty list.
Formula conj_all(const std::vector<Formula>& fs);

// A normalized definition: exactly one rule per defined atom.
class Definition {
 public:
  // The empty definition.
  Definition();

  // Builds a definition from one body per head. Throws MalformedDefinition
  // if a body contains a definition.
  static Definition from_rules(std::map<Atom, Formula> rules);

  const std::map<Atom, Formula>& rules() const noexcept;
  const Formula& body(const Atom& head) const;
  bool defines(const Atom& a) const;

  const Vocabulary& defined() const noexcept;
  const Vocabulary& open() const noexcept;
  Vocabulary vocabulary() const;

  // Dependency relation: depends(q, p) iff q < p, i.e. p's definition
  // reaches q (transitively closed).
  bool depends(const Atom& q, const Atom& p) const;
  const std::set<std::pair<Atom, Atom>>& dependencies() const noexcept;

  const std::string& text() const noexcept;

  friend bool operator==(const Definition& a, const Definition& b) noexcept;
  friend std::strong_ordering operator<=>(const Definition& a, const Definition& b) noexcept;

 private:
  explicit Definition(std::shared_ptr<const detail::DefinitionData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::DefinitionData> data_;
};

// A theory is a list of PC(ID)-formulas read conjunctively.
using Theory = std::vector<Formula>;

// All atoms occurring in f, including inside definitions.
Vocabulary atoms_of(const Formula& f);
Vocabulary atoms_of(const FormulaSet& fs);

std::size_t formula_size(const Formula& f);
std::size_t formula_depth(const Formula& f);

}  // namespace pcid

template <>
struct std::hash<pcid::Formula> {
  std::size_t operator()(const pcid::Formula& f) const noexcept { return f.hash(); }
};
