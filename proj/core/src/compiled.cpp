#include "compiled.hpp"

#include <algorithm>

#include "pcid/error.hpp"

namespace pcid::detail {

CompiledSet::CompiledSet(const Vocabulary& vocab) : atoms_(vocab.begin(), vocab.end()) {
  for (std::uint32_t i = 0; i < atoms_.size(); ++i) index_.emplace(atoms_[i], i);
}

std::uint32_t CompiledSet::index_of(const Atom& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw UnknownAtom("atom '" + a.name() + "' is not in the vocabulary");
  return it->second;
}

std::size_t CompiledSet::compile(const Formula& f) {
  std::vector<Op> program;
  emit(f, program);
  programs_.push_back(std::move(program));
  return programs_.size() - 1;
}

void CompiledSet::emit(const Formula& f, std::vector<Op>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom: out.push_back({Code::atom, index_of(f.atom())}); break;
    case Formula::Kind::top: out.push_back({Code::top, 0}); break;
    case Formula::Kind::bottom: out.push_back({Code::bottom, 0}); break;
    case Formula::Kind::negation:
      emit(f.operand(), out);
      out.push_back({Code::negation, 0});
      break;
    case Formula::Kind::conjunction:
      emit(f.lhs(), out);
      emit(f.rhs(), out);
      out.push_back({Code::conjunction, 0});
      break;
    case Formula::Kind::disjunction:
      emit(f.lhs(), out);
      emit(f.rhs(), out);
      out.push_back({Code::disjunction, 0});
      break;
    case Formula::Kind::definition:
      out.push_back({Code::definition, compile_definition(f.definition())});
      break;
  }
}

std::uint32_t CompiledSet::compile_definition(const Definition& d) {
  if (auto it = def_ids_.find(d.text()); it != def_ids_.end()) return it->second;
  Def def;
  for (const auto& [head, body] : d.rules()) {
    def.defined.push_back(index_of(head));
    def.bodies.push_back(compile(body));
  }
  defs_.push_back(std::move(def));
  auto id = static_cast<std::uint32_t>(defs_.size() - 1);
  def_ids_.emplace(d.text(), id);
  return id;
}

std::uint8_t CompiledSet::run(std::size_t program, const std::vector<std::uint8_t>& values) {
  std::size_t base = stack_.size();
  for (const Op& op : programs_[program]) {
    switch (op.code) {
      case Code::atom: stack_.push_back(values[op.arg]); break;
      case Code::top: stack_.push_back(2); break;
      case Code::bottom: stack_.push_back(0); break;
      case Code::negation: stack_.back() = static_cast<std::uint8_t>(2 - stack_.back()); break;
      case Code::conjunction: {
        std::uint8_t r = stack_.back();
        stack_.pop_back();
        stack_.back() = std::min(stack_.back(), r);
        break;
      }
      case Code::disjunction: {
        std::uint8_t r = stack_.back();
        stack_.pop_back();
        stack_.back() = std::max(stack_.back(), r);
        break;
      }
      case Code::definition: {
        // Definitions only appear in formulas evaluated two-valued.
        bool m = is_model(defs_[op.arg], values);
        stack_.push_back(m ? 2 : 0);
        break;
      }
    }
  }
  std::uint8_t result = stack_.back();
  stack_.resize(base);
  return result;
}

// Runs the well-founded construction in place: defined atoms start at U.
void CompiledSet::well_founded(const Def& d, std::vector<std::uint8_t>& work) {
  for (auto i : d.defined) work[i] = 1;
  const std::size_t n = d.defined.size();
  std::vector<bool> in_set(n);
  std::vector<std::uint8_t> trial;
  while (true) {
    bool changed = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (work[d.defined[k]] == 1 && run(d.bodies[k], work) == 2) {
        work[d.defined[k]] = 2;
        changed = true;
      }
    }
    if (changed) continue;
    std::size_t count = 0;
    for (std::size_t k = 0; k < n; ++k) {
      in_set[k] = work[d.defined[k]] == 1;
      count += in_set[k];
    }
    while (count > 0) {
      trial = work;
      for (std::size_t k = 0; k < n; ++k) {
        if (in_set[k]) trial[d.defined[k]] = 0;
      }
      bool removed = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (in_set[k] && run(d.bodies[k], trial) != 0) {
          in_set[k] = false;
          --count;
          removed = true;
        }
      }
      if (!removed) break;
    }
    if (count == 0) break;
    for (std::size_t k = 0; k < n; ++k) {
      if (in_set[k]) work[d.defined[k]] = 0;
    }
  }
}

bool CompiledSet::is_model(const Def& d, const std::vector<std::uint8_t>& values) {
  std::vector<std::uint8_t> work = values;
  well_founded(d, work);
  for (auto i : d.defined) {
    if (work[i] != values[i]) return false;
  }
  return true;
}

std::size_t CompiledSet::add_definition(const Definition& d) { return compile_definition(d); }

bool CompiledSet::is_two_valued_at(std::size_t def, const std::vector<std::uint8_t>& values) {
  std::vector<std::uint8_t> work = values;
  well_founded(defs_[def], work);
  for (auto i : defs_[def].defined) {
    if (work[i] == 1) return false;
  }
  return true;
}

bool CompiledSet::eval2(std::size_t program, const std::vector<std::uint8_t>& values) {
  return run(program, values) == 2;
}

Interpretation CompiledSet::to_interpretation(const std::vector<std::uint8_t>& values) const {
  std::map<Atom, TruthValue> m;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    m.emplace_hint(m.end(), atoms_[i], static_cast<TruthValue>(values[i]));
  }
  return Interpretation(std::move(m));
}

}  // namespace pcid::detail
