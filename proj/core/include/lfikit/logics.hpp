#pragma once

// Registry mapping logic identifiers to Hilbert axiomatizations and their
// registered semantics. Covers the named logics and the two-parameter family
// L:n,k. The registry is immutable once built; lookups are thread-safe.

#include <optional>
#include <string>
#include <vector>

#include "lfikit/formula.hpp"
#include "lfikit/nmatrix.hpp"

namespace lfikit {

struct LogicId {
  enum class Name { mbC, mbCciw, mbCci, Cie, Cbr, LFI1, LFI3, CPL, Param };
  Name name = Name::Param;
  int n = -1, k = -1;  // Param only

  static LogicId named(Name n);
  // L:n,k; L:0,0 and L:0,1 canonicalize to mbCci and Cie.
  static LogicId param(int n, int k);
  // "mbCciw", "LFI3", "L:1,2", ...; nullopt if unknown.
  static std::optional<LogicId> parse(std::string_view text);

  std::string str() const;
  bool operator==(const LogicId&) const = default;
};

struct AxiomSchema {
  std::string id;       // stable key used in proof files, e.g. "bc1", "Ax1", "ip^1"
  std::string display;  // listing name, e.g. "(bc1)"
  Schema schema;        // metavariables: alpha, beta, gamma
};

struct LogicSpec {
  LogicId id;
  std::vector<AxiomSchema> axioms;  // rule: modus ponens
  // Ordering: the presentation semantics first (used by preference "any");
  // Hilbert-only logics have none.
  std::vector<Semantics> semantics;

  bool hilbert_only() const { return semantics.empty(); }
  const AxiomSchema* find_axiom(std::string_view id) const;
};

struct UnknownLogicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const LogicSpec& get_logic(const LogicId& id);

enum class SemPreference { Matrix, Nmatrix, RNmatrix, Any };
std::optional<SemPreference> parse_preference(std::string_view text);

// The requested semantics, or nullopt when the logic does not register that
// exact kind (no silent substitution).
std::optional<Semantics> semantics_of(const LogicSpec& spec, SemPreference pref);

struct AxiomInstance {
  std::string schema_id;
  Formula formula;
};

// Every schema of the logic instantiated with every tuple of argument
// formulas from the pool.
std::vector<AxiomInstance> axiom_instances(const LogicSpec& spec,
                                           std::span<const Formula> pool);
// Pool = all formulas over the atoms with depth <= depth (size unbounded).
std::vector<AxiomInstance> axiom_instances(const LogicSpec& spec,
                                           std::span<const std::string> atoms, int depth);

// Ids accepted by LogicId::parse, for help text.
std::vector<std::string> known_logic_names();

}  // namespace lfikit
