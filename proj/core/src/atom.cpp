#include "pcid/atom.hpp"

#include "pcid/error.hpp"

namespace pcid {

namespace {

constexpr std::string_view kPos = "__r";
constexpr std::string_view kNeg = "__d";
constexpr std::string_view kPrime = "__p";

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::optional<AtomKind> trailing_kind(std::string_view s) {
  if (ends_with(s, kPos)) return AtomKind::renamed_pos;
  if (ends_with(s, kNeg)) return AtomKind::renamed_neg;
  if (ends_with(s, kPrime)) return AtomKind::primed;
  return std::nullopt;
}

}  // namespace

std::string_view suffix_of(AtomKind kind) {
  switch (kind) {
    case AtomKind::renamed_pos: return kPos;
    case AtomKind::renamed_neg: return kNeg;
    case AtomKind::primed: return kPrime;
    case AtomKind::user: break;
  }
  return {};
}

bool is_user_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  if (name.find("__") != std::string_view::npos) return false;
  return name != "true" && name != "false";
}

bool is_atom_name(std::string_view name) {
  while (auto kind = trailing_kind(name)) {
    name.remove_suffix(suffix_of(*kind).size());
  }
  return is_user_atom_name(name);
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_atom_name(name_)) throw InvalidAtomName("invalid atom name '" + name_ + "'");
}

Atom Atom::user(std::string_view name) {
  if (!is_user_atom_name(name)) {
    throw InvalidAtomName("invalid user atom name '" + std::string(name) + "'");
  }
  return Atom(std::string(name), Unchecked{});
}

AtomKind Atom::kind() const noexcept {
  return trailing_kind(name_).value_or(AtomKind::user);
}

std::optional<Atom> Atom::base() const {
  auto kind = trailing_kind(name_);
  if (!kind) return std::nullopt;
  return Atom(name_.substr(0, name_.size() - suffix_of(*kind).size()), Unchecked{});
}

Atom Atom::user_base() const {
  Atom current = *this;
  while (auto b = current.base()) current = *b;
  return current;
}

Atom Atom::renamed(AtomKind kind) const {
  if (kind == AtomKind::user) return *this;
  return Atom(name_ + std::string(suffix_of(kind)), Unchecked{});
}

Vocabulary rename_all(const Vocabulary& atoms, AtomKind kind) {
  Vocabulary out;
  for (const auto& a : atoms) out.insert(a.renamed(kind));
  return out;
}

}  // namespace pcid
