#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace pcid {

// User atoms come from input text. The other kinds are fresh atoms built by
// the renamings of the definition rules and are encoded by a name suffix:
// `__r` (positive renaming), `__d` (diamond renaming), `__p` (primed copy).
enum class AtomKind { user, renamed_pos, renamed_neg, primed };

std::string_view suffix_of(AtomKind kind);

// True for `[a-z][a-zA-Z0-9_]*` names without `__` that are not keywords.
bool is_user_atom_name(std::string_view name);

// True for a user name followed by any chain of generated-name suffixes.
bool is_atom_name(std::string_view name);

class Atom {
 public:
  // Accepts user and generated names; throws InvalidAtomName otherwise.
  explicit Atom(std::string name);

  static Atom user(std::string_view name);

  const std::string& name() const noexcept { return name_; }
  AtomKind kind() const noexcept;
  bool is_generated() const noexcept { return kind() != AtomKind::user; }

  // The atom this one renames, absent for user atoms.
  std::optional<Atom> base() const;
  // The user atom at the bottom of a renaming chain.
  Atom user_base() const;

  // Same base and kind always give the same atom.
  Atom renamed(AtomKind kind) const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  struct Unchecked {};
  Atom(std::string name, Unchecked) : name_(std::move(name)) {}

  std::string name_;
};

using Vocabulary = std::set<Atom>;

Vocabulary rename_all(const Vocabulary& atoms, AtomKind kind);

}  // namespace pcid
