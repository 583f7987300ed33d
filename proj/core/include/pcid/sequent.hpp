#pragma once

#include <compare>
#include <string>

#include "pcid/formula.hpp"

namespace pcid {

// Gamma --> Delta over sets of formulas. An empty antecedent reads as top,
// an empty succedent as bottom.
struct Sequent {
  FormulaSet antecedent;
  FormulaSet succedent;

  Vocabulary vocabulary() const;
  // Canonical `a, b |- c` form.
  std::string text() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
    if (auto c = a.antecedent <=> b.antecedent; c != 0) return c;
    return a.succedent <=> b.succedent;
  }
};

// Comma-separated canonical text of a formula set.
std::string join_formulas(const FormulaSet& fs);

// True when `small` is contained in `big` side by side.
bool is_subsequent(const Sequent& small, const Sequent& big);

}  // namespace pcid
