#include "pcid/sequent.hpp"

#include <algorithm>

namespace pcid {

Vocabulary Sequent::vocabulary() const {
  Vocabulary v = atoms_of(antecedent);
  auto s = atoms_of(succedent);
  v.insert(s.begin(), s.end());
  return v;
}

std::string join_formulas(const FormulaSet& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ", ";
    out += f.text();
  }
  return out;
}

std::string Sequent::text() const {
  std::string out = join_formulas(antecedent);
  if (!out.empty()) out += ' ';
  out += "|-";
  if (!succedent.empty()) out += ' ' + join_formulas(succedent);
  return out;
}

bool is_subsequent(const Sequent& small, const Sequent& big) {
  return std::includes(big.antecedent.begin(), big.antecedent.end(), small.antecedent.begin(),
                       small.antecedent.end()) &&
         std::includes(big.succedent.begin(), big.succedent.end(), small.succedent.begin(),
                       small.succedent.end());
}

}  // namespace pcid
