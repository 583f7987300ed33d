#include "pcid/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pcid/calculus.hpp"
#include "pcid/error.hpp"
#include "pcid/prover.hpp"
#include "pcid/semantics.hpp"
#include "pcid/textio.hpp"

namespace pcid::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad input that is not a parse error: missing file, bad flag value.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  bool json = false;
  std::optional<std::size_t> max_atoms;
  std::optional<std::size_t> max_extensions;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  const Flags& flags;

  Limits limits() const {
    Limits l;
    if (flags.max_atoms) l.max_atoms = *flags.max_atoms;
    return l;
  }

  // Human text or the JSON mirror, never both.
  void emit(const std::string& text, const json& j) const {
    if (flags.json) {
      out << j.dump(2) << '\n';
    } else {
      out << text;
    }
  }
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

json assignment_json(const Interpretation& i) {
  json j = json::object();
  for (const auto& [a, v] : i.values()) j[a.name()] = std::string(1, to_char(v));
  return j;
}

std::string line(std::string_view verdict, const Interpretation& i) {
  std::string s(verdict);
  std::string a = i.to_string();
  if (!a.empty()) s += " " + a;
  return s + "\n";
}

Interpretation parse_assignment(const std::string& text) {
  Interpretation out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected atom=T or atom=F, got '" + item + "'");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (!is_user_atom_name(name)) throw UsageError("invalid atom name '" + name + "'");
    if (value != "T" && value != "F") throw UsageError("value of '" + name + "' must be T or F");
    Atom a(name);
    if (out.contains(a)) throw UsageError("atom '" + name + "' assigned twice");
    out.set(a, value == "T" ? TruthValue::T : TruthValue::F);
  }
  return out;
}

// The index-th (1-based) statement that is a definition.
std::size_t definition_statement(const Theory& t, std::size_t index) {
  std::size_t seen = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].is(Formula::Kind::definition) && ++seen == index) return k;
  }
  throw UsageError("theory has " + std::to_string(seen) + " definition(s); --def " + std::to_string(index) +
                   " is out of range");
}

int cmd_solve(const Io& io, const std::string& path) {
  Theory t = parse_theory(read_input(path, io.in));
  SatResult r = satisfiable(t, io.limits());
  if (r.satisfiable()) {
    io.emit(line("SAT", *r.model), json{{"verdict", "SAT"}, {"model", assignment_json(*r.model)}});
    return kSuccess;
  }
  io.emit("UNSAT\n", json{{"verdict", "UNSAT"}});
  return kNegative;
}

const char* step_name(StepKind k) { return k == StepKind::derive_true ? "derive-true" : "derive-false"; }

std::string atom_set_text(const Vocabulary& v) {
  std::string s = "{";
  for (const auto& a : v) {
    if (s.size() > 1) s += ", ";
    s += a.name();
  }
  return s + "}";
}

int cmd_wfmodel(const Io& io, const std::string& path, std::size_t def_index, const std::string& open,
                bool trace) {
  Theory t = parse_theory(read_input(path, io.in));
  const Definition& d = t[definition_statement(t, def_index)].definition();
  Interpretation given = parse_assignment(open);
  for (const auto& a : given.vocabulary()) {
    if (!d.open().contains(a)) throw UsageError("'" + a.name() + "' is not an open atom of the definition");
  }
  for (const auto& a : d.open()) {
    if (!given.contains(a)) throw UsageError("--open does not assign open atom '" + a.name() + "'");
  }
  WfTrace w = wf_trace(d, given);
  bool two_valued = w.limit.is_two_valued();
  std::string verdict = two_valued ? "TWO-VALUED" : "PARTIAL";
  std::string text;
  json j{{"verdict", verdict}, {"limit", assignment_json(w.limit)}};
  if (trace) {
    json steps = json::array();
    text += line("start", w.initial);
    for (std::size_t k = 0; k < w.steps.size(); ++k) {
      const WfStep& s = w.steps[k];
      text += line("step " + std::to_string(k + 1) + " " + step_name(s.kind) + " " + atom_set_text(s.atoms), s.after);
      json atoms = json::array();
      for (const auto& a : s.atoms) atoms.push_back(a.name());
      steps.push_back({{"kind", step_name(s.kind)}, {"atoms", atoms}, {"after", assignment_json(s.after)}});
    }
    j["initial"] = assignment_json(w.initial);
    j["steps"] = steps;
  }
  text += line(verdict, w.limit);
  io.emit(text, j);
  return kSuccess;
}

int cmd_totality(const Io& io, const std::string& path, std::size_t def_index) {
  Theory t = parse_theory(read_input(path, io.in));
  std::size_t k = definition_statement(t, def_index);
  Definition d = t[k].definition();
  Theory context;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != k) context.push_back(t[i]);
  }
  TotalityResult r = is_total(d, context, io.limits());
  if (r.total) {
    io.emit("TOTAL\n", json{{"verdict", "TOTAL"}});
    return kSuccess;
  }
  io.emit(line("NOT-TOTAL", *r.witness), json{{"verdict", "NOT-TOTAL"}, {"witness", assignment_json(*r.witness)}});
  return kNegative;
}

int cmd_prove(const Io& io, const std::string& path, const std::string& output) {
  Sequent s = parse_sequent(read_input(path, io.in));
  ProverOptions options;
  if (io.flags.max_atoms) {
    options.max_atoms = *io.flags.max_atoms;
    options.oracle_limits.max_atoms = *io.flags.max_atoms;
  }
  if (io.flags.max_extensions) options.max_extensions = *io.flags.max_extensions;
  ProveOutcome r = prove(s, options);
  switch (r.kind) {
    case OutcomeKind::proof: {
      std::string text = print_proof(r.proof);
      json j{{"verdict", "PROVED"}, {"nodes", proof_size(r.proof)}};
      std::string human = "PROVED " + std::to_string(proof_size(r.proof)) + " nodes\n";
      if (output.empty()) {
        human += text;
        j["proof"] = text;
      } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + output + "'");
        file << text;
        j["output"] = output;
      }
      io.emit(human, j);
      return kSuccess;
    }
    case OutcomeKind::counter_model:
      io.emit(line("INVALID", *r.counter_model),
              json{{"verdict", "INVALID"}, {"counter_model", assignment_json(*r.counter_model)}});
      return kNegative;
    case OutcomeKind::out_of_scope:
      io.emit("OUT-OF-SCOPE " + r.reason + "\n", json{{"verdict", "OUT-OF-SCOPE"}, {"reason", r.reason}});
      return kOutOfScope;
    case OutcomeKind::resource_limit:
      io.emit("RESOURCE-LIMIT " + r.reason + "\n", json{{"verdict", "RESOURCE-LIMIT"}, {"reason", r.reason}});
      return kResourceLimit;
  }
  return kUsage;
}

const char* status_name(TotalityStatus s) {
  switch (s) {
    case TotalityStatus::not_requested: return "unchecked";
    case TotalityStatus::total: return "total";
    case TotalityStatus::not_total: return "not-total";
    case TotalityStatus::undecided: return "undecided";
  }
  return "?";
}

int cmd_check(const Io& io, const std::string& path, bool verify_totality) {
  ProofPtr proof = parse_proof(read_input(path, io.in));
  CheckOptions options;
  options.verify_totality = verify_totality;
  options.limits = io.limits();
  CheckReport r = check_proof(proof, options);

  std::string verdict = r.accepted ? "ACCEPTED" : "REJECTED";
  std::string text = verdict + "\n";
  json j{{"verdict", verdict}, {"root", r.root.text()}};
  if (!r.accepted) {
    std::string where;
    for (std::size_t k : r.path) where += (where.empty() ? "" : ".") + std::to_string(k + 1);
    text += "error: " + r.error + "\n";
    text += "at: " + (where.empty() ? std::string("root") : where) + "\n";
    j["error"] = r.error;
    j["path"] = r.path;
  }
  text += "root: " + r.root.text() + "\n";
  text += std::string("uses-def-intro: ") + (r.uses_def_intro ? "yes" : "no") + "\n";
  j["uses_def_intro"] = r.uses_def_intro;
  json introduced = json::array();
  for (const auto& t : r.totality) {
    text += "introduced: " + t.definition.text() + " " + status_name(t.status);
    json entry{{"definition", t.definition.text()}, {"totality", status_name(t.status)}};
    if (t.witness) {
      text += " witness " + t.witness->to_string();
      entry["witness"] = assignment_json(*t.witness);
    }
    text += "\n";
    introduced.push_back(entry);
  }
  j["introduced"] = introduced;
  if (r.accepted && verify_totality) j["certifies_validity"] = r.certifies_validity();
  io.emit(text, j);

  if (!r.accepted) return kNegative;
  if (!verify_totality) return kSuccess;
  for (const auto& t : r.totality) {
    if (t.status == TotalityStatus::not_total) return kNegative;
  }
  for (const auto& t : r.totality) {
    if (t.status == TotalityStatus::undecided) return kResourceLimit;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Reasoning toolkit for propositional logic with inductive definitions", "pcid"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "Machine-readable output");
  app.add_option("--max-atoms", flags.max_atoms, "Atom bound for the enumeration oracles and the prover")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-extensions", flags.max_extensions, "Bound on case splits per prover leaf")
      ->check(CLI::PositiveNumber);

  std::string path;
  std::size_t def_index = 1;

  auto* solve = app.add_subcommand("solve", "Find a model of a theory");
  solve->add_option("theory", path, "Theory file (.pcid) or -")->required();

  auto* wfmodel = app.add_subcommand("wfmodel", "Well-founded model of a definition");
  std::string open;
  bool trace = false;
  wfmodel->add_option("theory", path, "Theory file (.pcid) or -")->required();
  wfmodel->add_option("--open", open, "Open atom values, e.g. o=T,q=F");
  wfmodel->add_option("--def", def_index, "Which definition statement (1-based)")->check(CLI::PositiveNumber);
  wfmodel->add_flag("--trace", trace, "Print every derivation step");

  auto* totality = app.add_subcommand("totality", "Decide totality of a definition in its theory");
  totality->add_option("theory", path, "Theory file (.pcid) or -")->required();
  totality->add_option("--def", def_index, "Which definition statement (1-based)")->check(CLI::PositiveNumber);

  auto* prove_cmd = app.add_subcommand("prove", "Prove a sequent or find a counter-model");
  std::string output;
  prove_cmd->add_option("sequent", path, "Sequent file (.seq) or -")->required();
  prove_cmd->add_option("-o,--output", output, "Write the proof here instead of stdout");

  auto* check = app.add_subcommand("check", "Check a proof document");
  bool verify = false;
  check->add_option("proof", path, "Proof file (.lpidproof) or -")->required();
  check->add_flag("--verify-totality", verify, "Decide totality of definitions introduced by def-intro");

  for (auto* sub : {solve, wfmodel, totality, prove_cmd, check}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Io io{out, err, in, flags};
  try {
    if (*solve) return cmd_solve(io, path);
    if (*wfmodel) return cmd_wfmodel(io, path, def_index, open, trace);
    if (*totality) return cmd_totality(io, path, def_index);
    if (*prove_cmd) return cmd_prove(io, path, output);
    if (*check) return cmd_check(io, path, verify);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const OutOfScope& e) {
    err << "out of scope: " << e.what() << '\n';
    return kOutOfScope;
  } catch (const ParseError& e) {
    err << path << ":" << e.span().line << ":" << e.span().column << ": error: " << e.message() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pcid::cli
