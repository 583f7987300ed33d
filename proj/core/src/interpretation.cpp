#include "pcid/interpretation.hpp"

#include "pcid/error.hpp"

namespace pcid {

char to_char(TruthValue v) {
  switch (v) {
    case TruthValue::F: return 'F';
    case TruthValue::U: return 'U';
    case TruthValue::T: return 'T';
  }
  return '?';
}

TruthValue Interpretation::operator[](const Atom& a) const {
  auto it = values_.find(a);
  if (it == values_.end()) throw UnknownAtom("atom '" + a.name() + "' is not interpreted");
  return it->second;
}

Interpretation Interpretation::with(const Atom& a, TruthValue v) const {
  Interpretation out = *this;
  out.set(a, v);
  return out;
}

Vocabulary Interpretation::vocabulary() const {
  Vocabulary v;
  for (const auto& [a, _] : values_) v.insert(v.end(), a);
  return v;
}

bool Interpretation::is_two_valued() const {
  for (const auto& [_, v] : values_) {
    if (v == TruthValue::U) return false;
  }
  return true;
}

Interpretation Interpretation::restrict(const Vocabulary& v) const {
  Interpretation out;
  for (const auto& [a, val] : values_) {
    if (v.contains(a)) out.values_.emplace_hint(out.values_.end(), a, val);
  }
  return out;
}

std::string Interpretation::to_string() const {
  std::string out;
  for (const auto& [a, v] : values_) {
    if (!out.empty()) out += ' ';
    out += a.name();
    out += '=';
    out += to_char(v);
  }
  return out;
}

bool leq_precision(const Interpretation& a, const Interpretation& b) {
  if (a.size() != b.size()) return false;
  auto it = b.values().begin();
  for (const auto& [atom, v] : a.values()) {
    if (!(atom == it->first) || !leq_precision(v, it->second)) return false;
    ++it;
  }
  return true;
}

}  // namespace pcid
