#pragma once

// Flat postfix programs for fast repeated evaluation of formulas over a
// fixed vocabulary. Used by the enumeration oracles.

#include <cstdint>
#include <map>
#include <vector>

#include "pcid/formula.hpp"
#include "pcid/interpretation.hpp"

namespace pcid::detail {

class CompiledSet {
 public:
  // `vocab` must contain every atom of the formulas compiled later.
  explicit CompiledSet(const Vocabulary& vocab);

  std::size_t compile(const Formula& f);

  std::size_t add_definition(const Definition& d);
  // Whether the well-founded model of definition `def` is two-valued for
  // the open values in `values`.
  bool is_two_valued_at(std::size_t def, const std::vector<std::uint8_t>& values);

  std::size_t atom_count() const noexcept { return atoms_.size(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  // Two-valued evaluation with definitions; `values` holds 0 (F) or 2 (T).
  bool eval2(std::size_t program, const std::vector<std::uint8_t>& values);

  Interpretation to_interpretation(const std::vector<std::uint8_t>& values) const;

 private:
  enum class Code : std::uint8_t { atom, top, bottom, negation, conjunction, disjunction, definition };
  struct Op {
    Code code;
    std::uint32_t arg;
  };
  struct Def {
    std::vector<std::uint32_t> defined;
    std::vector<std::size_t> bodies;
  };

  std::uint32_t index_of(const Atom& a) const;
  void emit(const Formula& f, std::vector<Op>& out);
  std::uint32_t compile_definition(const Definition& d);
  std::uint8_t run(std::size_t program, const std::vector<std::uint8_t>& values);
  void well_founded(const Def& d, std::vector<std::uint8_t>& work);
  bool is_model(const Def& d, const std::vector<std::uint8_t>& values);

  std::vector<Atom> atoms_;
  std::map<Atom, std::uint32_t> index_;
  std::vector<std::vector<Op>> programs_;
  std::vector<Def> defs_;
  std::map<std::string, std::uint32_t> def_ids_;
  std::vector<std::uint8_t> stack_;
};

// Calls `visit(values)` for each two-valued assignment over `n` atoms in
// lexicographic order (atom 0 most significant, F before T). Stops when
// `visit` returns false.
template <typename Visit>
void enumerate_assignments(std::size_t n, Visit&& visit) {
  std::vector<std::uint8_t> values(n, 0);
  while (true) {
    if (!visit(values)) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (values[i] == 0) {
        values[i] = 2;
        break;
      }
      values[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace pcid::detail
