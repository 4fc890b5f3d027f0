#pragma once

// Finite-premise consequence over (R)Nmatrices by exhaustive enumeration of
// legal assignments on a subformula-closed set. Enumeration is depth-first in
// closure order with candidates in domain order, so the stream and the first
// countermodel are deterministic.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>

#include "json.hpp"
#include "lfikit/formula.hpp"
#include "lfikit/nmatrix.hpp"

namespace lfikit {

// A subformula-closed formula list, topologically ordered (children first),
// with child links resolved to indices.
class ClosureSet {
 public:
  static ClosureSet build(std::span<const Formula> roots);
  static ClosureSet build(std::initializer_list<Formula> roots);

  std::size_t size() const { return items_.size(); }
  const Formula& at(std::size_t i) const { return items_[i]; }
  std::span<const Formula> items() const { return items_; }
  int find(const Formula& f) const;  // -1 if absent
  Formula::Kind kind(std::size_t i) const { return kinds_[i]; }
  int left(std::size_t i) const { return left_[i]; }
  int right(std::size_t i) const { return right_[i]; }

 private:
  std::vector<Formula> items_;
  std::vector<Formula::Kind> kinds_;
  std::vector<int> left_, right_;
  std::unordered_map<Formula, int, FormulaHash> index_;
};

// A total map from a closure set to domain values.
struct Assignment {
  std::shared_ptr<const ClosureSet> closure;
  std::vector<std::uint8_t> values;

  int value_of(const Formula& f) const;  // throws std::out_of_range if absent
  bool covers(const Formula& f) const { return closure && closure->find(f) >= 0; }
};

// One materialized restriction instance over a closure set.
struct ConstraintInstance {
  Restriction::Family family;
  // CC: if value(antecedent) lies in classical, value(consequent) must equal
  // forced. IP: value(antecedent) == value(consequent).
  Formula antecedent, consequent;
  ValueSet classical = 0;
  std::uint8_t forced = 0;
  std::string str() const;
};

// Instantiates the restriction schemas over every member of S whose towers
// lie inside S. S must be subformula-closed.
std::vector<ConstraintInstance> restriction_closure(const Nmatrix& m,
                                                    std::span<const Restriction> rs,
                                                    const ClosureSet& S);

// Truth of one constraint under an assignment; throws std::out_of_range if
// the assignment does not cover the mentioned formulas.
bool restriction_holds(const ConstraintInstance& c, const Assignment& a);

// Visits every assignment over S where atoms take any value, each compound
// lies in its cell, every constraint holds, and each value is inside the
// per-index allowed mask (empty span = unconstrained). The visitor returns
// false to stop; the function returns false iff stopped early.
bool for_each_legal_assignment(
    const Nmatrix& m, const ClosureSet& S,
    std::span<const ConstraintInstance> constraints,
    std::span<const ValueSet> allowed,
    const std::function<bool(std::span<const std::uint8_t>)>& visit);

std::size_t count_legal_assignments(const Semantics& sem, const ClosureSet& S);

struct Verdict {
  enum class Status { Valid, Refuted };
  Status status = Status::Valid;
  std::optional<Assignment> countermodel;  // present iff Refuted
  int conclusion_value = -1;               // non-designated goal value iff Refuted

  bool valid() const { return status == Status::Valid; }
};

struct ConsequenceOptions {
  // Extra formulas merged into the closure set; the verdict must not depend
  // on them (tested as the extension-stability property).
  std::vector<Formula> extra_closure;
};

Verdict check_consequence(const Semantics& sem, std::span<const Formula> premises,
                          const Formula& goal, const ConsequenceOptions& opts = {});
Verdict check_consequence(const Semantics& sem, std::initializer_list<Formula> premises,
                          const Formula& goal);

// Re-checks a reported countermodel from scratch: legal, designates all
// premises, not the goal.
bool verify_countermodel(const Semantics& sem, std::span<const Formula> premises,
                         const Formula& goal, const Assignment& a);

// Compositional evaluation in a singleton-celled matrix; throws on a
// non-deterministic cell or an unmapped atom.
int eval_matrix(const Nmatrix& m, const std::map<std::string, int>& atom_values,
                const Formula& f);

// {"status": "valid"} or {"status": "refuted", "assignment": {...}}
nlohmann::ordered_json verdict_to_json(const Verdict& v, const Nmatrix& m,
                                       bool pretty = false);

}  // namespace lfikit
