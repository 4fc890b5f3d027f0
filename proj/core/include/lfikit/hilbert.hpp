#pragma once

// Hilbert-style proof objects and checking (axiom instances + modus ponens),
// two-valued valuations on finite closure sets with their clause conditions,
// and the triple-snapshot embedding into the 5-valued swap semantics.

#include <functional>
#include <optional>

#include "json.hpp"
#include "lfikit/consequence.hpp"
#include "lfikit/logics.hpp"

namespace lfikit {

struct ProofStep {
  enum class Kind { Premise, Axiom, MP };
  Kind kind;
  int premise = -1;    // 1-based index into the premise list
  std::string schema;  // axiom id in the logic's schema list
  Substitution subst;
  int major = -1, minor = -1;  // 1-based references to earlier steps
};

struct Proof {
  LogicId logic;
  std::vector<Formula> premises;
  std::vector<ProofStep> steps;
};

struct ProofCheckResult {
  bool ok = false;
  int step = -1;  // 1-based failing step; -1 when ok or the proof is empty
  std::string message;
  std::vector<Formula> derived;       // formula established by each checked step
  std::optional<Formula> conclusion;  // last step's formula when ok
};

ProofCheckResult check_proof(const Proof& p);

// {"logic": id, "premises": [...], "steps": [{"kind": "axiom", "schema": ...,
// "subst": {...}} | {"kind": "premise", "index": n} | {"kind": "mp",
// "major": i, "minor": j}]}. Throws std::invalid_argument on malformed input.
Proof proof_from_json(const nlohmann::json& j);
nlohmann::ordered_json proof_to_json(const Proof& p);

// --- bivaluations -----------------------------------------------------------

// A 0/1 valuation on a subformula-closed set.
struct BiValuation {
  std::shared_ptr<const ClosureSet> domain;
  std::vector<std::uint8_t> bits;

  int bit(const Formula& f) const;  // throws std::out_of_range if absent
};

struct BivalCheckResult {
  bool ok = true;
  std::string clause;  // violated clause name
  std::optional<Formula> where;
};

// Clause-wise legality for L:1,0 (and L:1,1, which adds the double-negation
// clause). A clause instance is checked iff all formulas it mentions lie in
// the domain. Throws std::invalid_argument for other logic ids.
BivalCheckResult check_bivaluation(const LogicId& logic, const BiValuation& v);

// All legal bivaluations on the domain, deterministically ordered (0 before
// 1, closure order). Visitor returns false to stop; function returns false
// iff stopped.
bool for_each_bivaluation(const LogicId& logic,
                          const std::shared_ptr<const ClosureSet>& domain,
                          const std::function<bool(const BiValuation&)>& visit);

// The domain needed to embed S: S plus ~a, o a and ~o a for every a in S.
std::shared_ptr<const ClosureSet> snapshot_closure(const ClosureSet& S);

// h(a) = (v(a), v(~a), v(~o a)) as a value of the 5-valued swap domain, for
// every a in S. Throws std::out_of_range when v misses a required formula and
// std::invalid_argument when a triple is not a snapshot (v was not legal).
Assignment snapshot_embedding(const BiValuation& v,
                              const std::shared_ptr<const ClosureSet>& S);

// Converse direction: read a bivaluation off a legal 5-valued assignment on S
// for any target domain whose members are in S or of the form ~a, o a, ~o a
// with a in S.
BiValuation bivaluation_from_assignment(const Assignment& a,
                                        const std::shared_ptr<const ClosureSet>& target);

// Bounded forward search (testing aid, not part of the checker contract):
// tries to derive the goal by modus ponens from premises and axiom instances
// over the goal/premise subformulas; gives up beyond max_steps steps.
std::optional<Proof> search_proof(const LogicId& logic, std::span<const Formula> premises,
                                  const Formula& goal, int max_steps = 8);

}  // namespace lfikit
