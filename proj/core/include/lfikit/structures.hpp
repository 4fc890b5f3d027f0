#pragma once

// Generators that produce concrete (N)matrices from snapshot predicates and
// per-coordinate rules, plus the catalog of stock matrices used by the logic
// registry. Every table here is generated from the defining rules and checked
// at build time, never transcribed by hand.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lfikit/boolexpr.hpp"
#include "lfikit/nmatrix.hpp"

namespace lfikit {

struct SnapshotSpec {
  int width = 0;
  std::function<bool(const Snapshot&)> admits;
  // Injective on admitted snapshots; defaults to the bit string ("101").
  std::function<std::string(const Snapshot&)> label;
  // Optional explicit listing order by name; admitted values not mentioned are
  // an error. When empty, snapshots come in ascending numeric order.
  std::vector<std::string> order;
};

// All and only the admitted bit tuples, named and ordered per the spec.
// Throws std::invalid_argument if no snapshot is admitted or naming collides.
Domain generate_snapshot_domain(const SnapshotSpec& spec);

// Per-connective output-coordinate rules. Coordinate expressions read the
// inputs as variables 0..w-1 (first operand) and w..2w-1 (second operand for
// binary connectives); nullopt leaves the coordinate free.
struct CoordinateRule {
  std::vector<std::optional<BoolExpr>> neg, circ;       // width entries each
  std::vector<std::optional<BoolExpr>> conj, disj, imp; // width entries each
};

// Cell for inputs x (and y) = all domain values whose constrained coordinates
// match the rule outputs. Throws std::invalid_argument on an empty cell.
Nmatrix build_swap_nmatrix(std::string name, const Domain& domain,
                           const CoordinateRule& rules,
                           const std::function<bool(const Snapshot&)>& designated);

// Reusable rule fragments for triple snapshots (value, negation, circ-negation).
CoordinateRule swap_rules_width3(int neg_determinism);  // 0, 1, 2 fixed coordinates beyond z1
CoordinateRule twist_rules_lfi3();

// --- stock matrices -------------------------------------------------------
// All shared and immutable; safe to use from any thread.

std::shared_ptr<const Nmatrix> m0_nmatrix();      // 3-valued, fully non-deterministic circ
std::shared_ptr<const Nmatrix> m1_nmatrix();      // 3-valued, deterministic negation
std::shared_ptr<const Nmatrix> mbcci_nmatrix();   // 3-valued, deterministic circ
std::shared_ptr<const Nmatrix> cie_nmatrix();     // 3-valued, deterministic circ and negation
std::shared_ptr<const Nmatrix> swap5_nmatrix(int k);  // 5-valued swap family, k in {0,1,2}
std::shared_ptr<const Nmatrix> lfi3_matrix();     // 5-valued deterministic twist
std::shared_ptr<const Nmatrix> lfi1_matrix();     // {T,b,F} submatrix of the twist
std::shared_ptr<const Nmatrix> cpl_matrix();      // {T,F} submatrix of the twist

// Restriction of m to the named values; throws if some operation leaves the
// subset (the subset is not a subalgebra).
Nmatrix submatrix(const Nmatrix& m, std::string name, std::span<const std::string> names);

// Equivalent of build_swap_nmatrix for the deterministic twist: built from
// twist_rules_lfi3() over the triple-snapshot domain.
Nmatrix build_lfi3_twist();

// --- cross-validation reports ---------------------------------------------

struct LatticeReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks the 5-valued twist matrix against its order-theoretic derivation:
// conjunction = infimum and disjunction = supremum on the chain, negation an
// antitone involution, implication ~a | b, and the De Morgan laws, cell by
// cell. chain lists value names from bottom to top.
LatticeReport check_lattice_agreement(const Nmatrix& m, std::span<const std::string> chain);
LatticeReport check_lattice_agreement(const Nmatrix& m);  // default chain F,f,b,t,T

}  // namespace lfikit
