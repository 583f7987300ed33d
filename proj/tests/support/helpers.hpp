#pragma once

#include <string_view>

#include "pcid/textio.hpp"

namespace pcid::test {

inline Formula F(std::string_view text) { return parse_formula(text, ParseOptions{true}); }
inline Definition D(std::string_view text) { return F(text).definition(); }
inline Sequent S(std::string_view text) { return parse_sequent(text, ParseOptions{true}); }
inline Atom A(std::string_view name) { return Atom(std::string(name)); }

inline Vocabulary V(std::initializer_list<const char*> names) {
  Vocabulary v;
  for (const char* n : names) v.insert(Atom(n));
  return v;
}

}  // namespace pcid::test
