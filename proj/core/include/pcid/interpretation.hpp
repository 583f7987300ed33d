#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pcid/atom.hpp"

namespace pcid {

// Ordered by truth: F < U < T.
enum class TruthValue : std::uint8_t { F = 0, U = 1, T = 2 };

constexpr TruthValue inverse(TruthValue v) {
  return static_cast<TruthValue>(2 - static_cast<int>(v));
}
constexpr bool leq_truth(TruthValue a, TruthValue b) {
  return static_cast<int>(a) <= static_cast<int>(b);
}
// U is below both F and T; F and T are incomparable.
constexpr bool leq_precision(TruthValue a, TruthValue b) { return a == TruthValue::U || a == b; }
constexpr TruthValue min_truth(TruthValue a, TruthValue b) { return leq_truth(a, b) ? a : b; }
constexpr TruthValue max_truth(TruthValue a, TruthValue b) { return leq_truth(a, b) ? b : a; }
constexpr TruthValue from_bool(bool b) { return b ? TruthValue::T : TruthValue::F; }

char to_char(TruthValue v);

// Three-valued assignment over a finite vocabulary.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::map<Atom, TruthValue> values) : values_(std::move(values)) {}

  // Throws UnknownAtom if a is not in the vocabulary.
  TruthValue operator[](const Atom& a) const;
  bool contains(const Atom& a) const { return values_.contains(a); }

  void set(const Atom& a, TruthValue v) { values_[a] = v; }
  Interpretation with(const Atom& a, TruthValue v) const;

  Vocabulary vocabulary() const;
  const std::map<Atom, TruthValue>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool is_two_valued() const;

  // Values for the atoms of v that this interpretation assigns.
  Interpretation restrict(const Vocabulary& v) const;

  // `p=F q=T`, atoms in name order; empty string for the empty vocabulary.
  std::string to_string() const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::map<Atom, TruthValue> values_;
};

// Pointwise precision order; false when the vocabularies differ.
bool leq_precision(const Interpretation& a, const Interpretation& b);

}  // namespace pcid
