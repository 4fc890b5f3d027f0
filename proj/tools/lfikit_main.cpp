// lfikit: consequence checking, table dumps, sum-of-products synthesis, proof
// checking and metatheory suites for the bundled finite-valued logics.
//
// Exit codes: 0 valid/success, 1 refuted or failed claim, 2 usage error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfikit/consequence.hpp"
#include "lfikit/hilbert.hpp"
#include "lfikit/logics.hpp"
#include "lfikit/metalogic.hpp"
#include "lfikit/minterm.hpp"
#include "lfikit/parser.hpp"
#include "lfikit/structures.hpp"

namespace {

using namespace lfikit;

constexpr int kExitValid = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LogicId require_logic(const std::string& text) {
  auto id = LogicId::parse(text);
  if (!id) throw UsageError("unknown logic id '" + text + "'");
  return *id;
}

Semantics require_semantics(const LogicSpec& spec, const std::string& pref_text) {
  auto pref = parse_preference(pref_text);
  if (!pref) throw UsageError("unknown semantics preference '" + pref_text + "'");
  auto sem = semantics_of(spec, *pref);
  if (!sem)
    throw UsageError(spec.id.str() + " has no " +
                     (pref_text == "any" ? "registered" : pref_text) + " semantics");
  return *sem;
}

std::string fmt(const Formula& f, bool pretty) {
  return pretty ? render_pretty(f) : render(f);
}

int cmd_check(const std::string& logic_text, const std::string& premises_text,
              const std::string& goal_text, const std::string& pref, bool json, bool pretty) {
  LogicId id = require_logic(logic_text);
  Semantics sem = require_semantics(get_logic(id), pref);
  std::vector<Formula> premises = parse_list(premises_text);
  Formula goal = parse(goal_text);

  Verdict v = check_consequence(sem, premises, goal);
  if (json) {
    std::cout << verdict_to_json(v, *sem.matrix, pretty).dump(2) << "\n";
  } else if (v.valid()) {
    std::cout << "Valid in " << sem.name << "\n";
  } else {
    std::cout << "Refuted in " << sem.name << " (goal takes "
              << sem.matrix->value_name(v.conclusion_value) << "):\n";
    const Assignment& a = *v.countermodel;
    for (std::size_t i = 0; i < a.closure->size(); ++i)
      std::cout << "  " << fmt(a.closure->at(i), pretty) << " = "
                << sem.matrix->value_name(a.values[i]) << "\n";
  }
  return v.valid() ? kExitValid : kExitRefuted;
}

int cmd_tables(const std::string& logic_text, const std::string& connective,
               const std::string& pref, bool json, bool pretty) {
  LogicId id = require_logic(logic_text);
  const LogicSpec& spec = get_logic(id);
  if (spec.hilbert_only()) throw UsageError(id.str() + " is Hilbert-only; no tables");
  Semantics sem = require_semantics(spec, pref);
  const Nmatrix& m = *sem.matrix;

  struct Conn {
    const char* key;
    Formula::Kind kind;
    bool unary;
  };
  static const Conn conns[] = {
      {"neg", Formula::Kind::Neg, true},   {"circ", Formula::Kind::Circ, true},
      {"and", Formula::Kind::And, false},  {"or", Formula::Kind::Or, false},
      {"imp", Formula::Kind::Imp, false},
  };
  auto wanted = [&](const char* key) { return connective.empty() || connective == key; };
  bool any = false;
  for (const Conn& c : conns) any = any || wanted(c.key);
  if (!any) throw UsageError("unknown connective '" + connective + "'");

  auto cell_json = [&](ValueSet s) {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < m.n(); ++v)
      if (vs_contains(s, static_cast<int>(v))) arr.push_back(m.domain.names[v]);
    return arr;
  };

  if (json) {
    nlohmann::ordered_json j;
    j["logic"] = id.str();
    j["semantics"] = sem.name;
    j["domain"] = m.domain.names;
    auto designated = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < m.n(); ++v)
      if (m.is_designated(static_cast<int>(v))) designated.push_back(m.domain.names[v]);
    j["designated"] = designated;
    auto restrictions = nlohmann::ordered_json::array();
    for (const Restriction& rr : sem.restrictions) restrictions.push_back(rr.str());
    if (!restrictions.empty()) j["restrictions"] = restrictions;
    auto tables = nlohmann::ordered_json::object();
    for (const Conn& c : conns) {
      if (!wanted(c.key)) continue;
      if (c.unary) {
        auto t = nlohmann::ordered_json::object();
        for (std::size_t a = 0; a < m.n(); ++a)
          t[m.domain.names[a]] = cell_json(m.cell(c.kind, static_cast<int>(a)));
        tables[c.key] = t;
      } else {
        auto t = nlohmann::ordered_json::object();
        for (std::size_t a = 0; a < m.n(); ++a) {
          auto row = nlohmann::ordered_json::object();
          for (std::size_t b = 0; b < m.n(); ++b)
            row[m.domain.names[b]] = cell_json(m.cell(c.kind, static_cast<int>(a), static_cast<int>(b)));
          t[m.domain.names[a]] = row;
        }
        tables[c.key] = t;
      }
    }
    j["tables"] = tables;
    std::cout << j.dump(2) << "\n";
    return kExitValid;
  }

  std::cout << "logic " << id.str() << ", semantics " << sem.name << "\n";
  std::cout << "domain: ";
  for (std::size_t v = 0; v < m.n(); ++v) std::cout << (v ? ", " : "") << m.domain.names[v];
  std::cout << "   designated: " << m.set_str(m.designated) << "\n";
  if (!sem.restrictions.empty()) {
    std::cout << "restrictions: ";
    for (std::size_t i = 0; i < sem.restrictions.size(); ++i)
      std::cout << (i ? ", " : "") << sem.restrictions[i].str();
    std::cout << "\n";
  }
  const char* symbols[] = {"~", "o", "&", "|", "->"};
  const char* symbols_pretty[] = {"¬", "∘", "∧", "∨", "→"};
  for (std::size_t ci = 0; ci < std::size(conns); ++ci) {
    const Conn& c = conns[ci];
    if (!wanted(c.key)) continue;
    std::cout << "\n" << (pretty ? symbols_pretty[ci] : symbols[ci]) << " (" << c.key << ")\n";
    if (c.unary) {
      for (std::size_t a = 0; a < m.n(); ++a)
        std::cout << "  " << m.domain.names[a] << " -> "
                  << m.set_str(m.cell(c.kind, static_cast<int>(a))) << "\n";
    } else {
      for (std::size_t a = 0; a < m.n(); ++a) {
        std::cout << "  " << m.domain.names[a] << ": ";
        for (std::size_t b = 0; b < m.n(); ++b)
          std::cout << (b ? "  " : "") << m.domain.names[b] << "->"
                    << m.set_str(m.cell(c.kind, static_cast<int>(a), static_cast<int>(b)));
        std::cout << "\n";
      }
    }
  }
  return kExitValid;
}

int cmd_axioms(const std::string& logic_text, bool json, bool pretty) {
  LogicId id = require_logic(logic_text);
  const LogicSpec& spec = get_logic(id);
  if (json) {
    nlohmann::ordered_json j;
    j["logic"] = id.str();
    auto axioms = nlohmann::ordered_json::array();
    for (const AxiomSchema& a : spec.axioms) {
      nlohmann::ordered_json ja;
      ja["id"] = a.id;
      ja["name"] = a.display;
      ja["schema"] = fmt(a.schema, pretty);
      axioms.push_back(std::move(ja));
    }
    j["axioms"] = axioms;
    j["rule"] = "MP";
    auto sems = nlohmann::ordered_json::array();
    for (const Semantics& s : spec.semantics) sems.push_back(s.name);
    j["semantics"] = sems;
    std::cout << j.dump(2) << "\n";
    return kExitValid;
  }
  std::cout << "logic " << id.str() << " (rule: MP)\n";
  for (const AxiomSchema& a : spec.axioms)
    std::cout << "  " << a.display << "  " << fmt(a.schema, pretty) << "\n";
  if (spec.hilbert_only())
    std::cout << "semantics: none (Hilbert-only)\n";
  else {
    std::cout << "semantics: ";
    for (std::size_t i = 0; i < spec.semantics.size(); ++i)
      std::cout << (i ? ", " : "") << spec.semantics[i].name;
    std::cout << "\n";
  }
  return kExitValid;
}

int cmd_synth(const std::string& table_path, bool minimize, bool json) {
  std::ifstream in(table_path);
  if (!in) throw UsageError("cannot open table file '" + table_path + "'");
  TruthTable t = load_truth_table(in);
  BoolExpr raw = synthesize_minterms(t);
  BoolExpr chosen = minimize ? minimize_sop(t) : raw;
  bool ok = agrees(chosen, t);
  auto var_name = [](int i) { return "x" + std::to_string(i + 1); };
  if (json) {
    nlohmann::ordered_json j;
    j["width"] = t.width;
    j["expression"] = chosen.str(var_name);
    j["minimized"] = minimize;
    j["verified"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (minimize ? "minimized: " : "sum of products: ") << chosen.str(var_name)
              << "\n"
              << (ok ? "verified against every listed row" : "VERIFICATION FAILED") << "\n";
  }
  return ok ? kExitValid : kExitInternal;
}

int cmd_prove(const std::string& proof_path, bool json, bool pretty) {
  std::ifstream in(proof_path);
  if (!in) throw UsageError("cannot open proof file '" + proof_path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad proof JSON: ") + e.what());
  }
  Proof p = proof_from_json(j);
  ProofCheckResult r = check_proof(p);
  if (json) {
    nlohmann::ordered_json out;
    out["ok"] = r.ok;
    if (r.ok) {
      out["conclusion"] = fmt(*r.conclusion, pretty);
      out["steps"] = r.derived.size();
    } else {
      out["step"] = r.step;
      out["error"] = r.message;
    }
    std::cout << out.dump(2) << "\n";
  } else if (r.ok) {
    std::cout << "ok: " << p.logic.str() << " proof of " << fmt(*r.conclusion, pretty) << " in "
              << r.derived.size() << " step(s)\n";
  } else {
    std::cout << "error at step " << r.step << ": " << r.message << "\n";
  }
  return r.ok ? kExitValid : kExitRefuted;
}

int cmd_meta(const std::string& suite, int depth, int n, int m, bool json) {
  std::vector<WitnessReport> reports;
  if (suite == "lfi3-properties" || suite == "strong-negation" || suite == "circ-star" ||
      suite == "triviality") {
    reports.push_back(run_property_suite(suite));
  } else if (suite == "congruence") {
    reports.push_back(check_congruence());
  } else if (suite == "sublogic") {
    reports.push_back(check_sublogic_inclusion(*LogicId::parse("LFI3"), *LogicId::parse("CPL")));
    reports.push_back(check_sublogic_inclusion(*LogicId::parse("LFI3"), *LogicId::parse("LFI1")));
  } else if (suite == "maximality") {
    reports.push_back(find_maximality_witnesses(depth));
  } else if (suite == "recovery") {
    Formula p = Formula::atom("p");
    reports.push_back(check_recovery_gate(*LogicId::parse("LFI3"), *LogicId::parse("CPL"),
                                          circ_star(p)));
    reports.push_back(check_recovery_gate(*LogicId::parse("LFI3"), *LogicId::parse("LFI1"),
                                          circ_hash(p)));
    RecoveryBounds quick;
    quick.depth = std::min(depth, 3);
    quick.extra_goal_samples = 100;
    reports.push_back(recovery_sweep(*LogicId::parse("LFI3"), *LogicId::parse("CPL"),
                                     circ_star(p), quick));
    reports.push_back(recovery_sweep(*LogicId::parse("LFI3"), *LogicId::parse("LFI1"),
                                     circ_hash(p), quick));
  } else if (suite == "fixed-point") {
    reports.push_back(check_fixed_point_axiom(n, m));
  } else if (suite == "cross-check") {
    SequentFamily family;
    family.depth = depth;
    family.samples = 500;
    for (int k = 0; k <= 2; ++k) {
      const LogicSpec& spec = get_logic(LogicId::param(1, k));
      reports.push_back(cross_check_semantics(*semantics_of(spec, SemPreference::Nmatrix),
                                              *semantics_of(spec, SemPreference::RNmatrix),
                                              family));
    }
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }

  bool all_ok = true;
  for (const WitnessReport& r : reports) all_ok = all_ok && r.verified();
  if (json) {
    auto arr = nlohmann::ordered_json::array();
    for (const WitnessReport& r : reports) arr.push_back(r.to_json());
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const WitnessReport& r : reports) {
      std::cout << "[" << WitnessReport::status_name(r.status) << "] " << r.claim;
      if (!r.bounds.empty()) std::cout << "  (" << r.bounds << ")";
      std::cout << "\n";
      if (r.evidence.contains("passed"))
        std::cout << "    " << r.evidence["passed"].get<std::string>() << " items\n";
      if (!r.verified()) std::cout << "    evidence: " << r.evidence.dump() << "\n";
    }
  }
  return all_ok ? kExitValid : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-valued logic engine: consequence, tables, synthesis, proofs, metatheory"};
  app.require_subcommand(1);

  std::string logic = "LFI3";
  std::string premises;
  std::string goal;
  std::string semantics = "any";
  std::string connective;
  std::string table_path;
  std::string proof_path;
  std::string suite;
  int depth = 4;
  int fp_n = 0, fp_m = 2;
  bool json = false, pretty = false, minimize = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->add_flag("--pretty", pretty, "render formulas with logic symbols");
  };

  CLI::App* check = app.add_subcommand("check", "decide premises |- goal");
  check->add_option("--logic", logic, "logic id (mbCciw, LFI3, L:1,2, ...)")->required();
  check->add_option("--premises", premises, "semicolon-separated premise list");
  check->add_option("--goal", goal, "goal formula")->required();
  check->add_option("--semantics", semantics, "matrix|nmatrix|rnmatrix|any");
  add_common(check);

  CLI::App* tables = app.add_subcommand("tables", "print the truth tables of a logic");
  tables->add_option("--logic", logic)->required();
  tables->add_option("--connective", connective, "neg|circ|and|or|imp");
  tables->add_option("--semantics", semantics, "matrix|nmatrix|rnmatrix|any");
  add_common(tables);

  CLI::App* axioms = app.add_subcommand("axioms", "list the Hilbert schemas of a logic");
  axioms->add_option("--logic", logic)->required();
  add_common(axioms);

  CLI::App* synth = app.add_subcommand("synth", "sum-of-products synthesis from a table file");
  synth->add_option("--table", table_path, "truth table file (bits -> bit)")->required();
  synth->add_flag("--minimize", minimize, "merge implicants before printing");
  add_common(synth);

  CLI::App* prove = app.add_subcommand("prove", "check a Hilbert proof file");
  prove->add_option("--file", proof_path, "proof JSON file")->required();
  add_common(prove);

  CLI::App* meta = app.add_subcommand("meta", "run a metatheory suite");
  meta->add_option("--suite", suite,
                   "lfi3-properties|strong-negation|circ-star|triviality|congruence|"
                   "sublogic|maximality|recovery|fixed-point|cross-check")
      ->required();
  meta->add_option("--depth", depth, "search/enumeration depth bound");
  meta->add_option("--n", fp_n, "fixed point: hierarchy level");
  meta->add_option("--m", fp_m, "fixed point: collapsed axiom height");
  add_common(meta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitValid : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(logic, premises, goal, semantics, json, pretty);
    if (tables->parsed()) return cmd_tables(logic, connective, semantics, json, pretty);
    if (axioms->parsed()) return cmd_axioms(logic, json, pretty);
    if (synth->parsed()) return cmd_synth(table_path, minimize, json);
    if (prove->parsed()) return cmd_prove(proof_path, json, pretty);
    if (meta->parsed()) return cmd_meta(suite, depth, fp_n, fp_m, json);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
