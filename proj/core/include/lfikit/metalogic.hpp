#pragma once

// Desk-scale verification of the metatheory: subalgebra/sublogic checks,
// maximality witness search, recovery-operator properties, congruence, the
// named property suites, cross-semantics agreement and fixed-point collapse.
// Every report carries reproducible evidence and the search bounds used.

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lfikit/consequence.hpp"
#include "lfikit/logics.hpp"

namespace lfikit {

struct WitnessReport {
  std::string claim;
  enum class Status { Verified, Refuted, Inconclusive } status = Status::Verified;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  std::string bounds;

  bool verified() const { return status == Status::Verified; }
  nlohmann::ordered_json to_json() const;
  static const char* status_name(Status s);
};

// Subalgebra closure of the named subset inside m, with the failing cell on
// refutation (e.g. circ(t) = b outside {T, t}).
WitnessReport check_subalgebra(const Nmatrix& m, std::span<const std::string> names);

// sub's algebra must contain super's values, be closed over them with
// identical cells, and designate exactly the shared designated values. Both
// logics must register a plain matrix semantics.
WitnessReport check_sublogic_inclusion(const LogicId& sub, const LogicId& super);

// Confirms the constant-top/bottom formulas and searches unary formulas of
// depth <= bound mapping each of the two values outside the 3-valued
// subalgebra to every value of the 5-valued domain.
WitnessReport find_maximality_witnesses(int depth_bound = 4);

// Pointwise gate property: gate(p) designated exactly on the values of
// small's domain, evaluated in big's matrix.
WitnessReport check_recovery_gate(const LogicId& big, const LogicId& small,
                                  const Formula& gate);

// One brute-forced instance of the recovery equivalence:
// gates over Var(premises+goal) added to the big side iff derivable in small.
WitnessReport check_recovery_instance(const LogicId& big, const LogicId& small,
                                      const Formula& gate,
                                      std::span<const Formula> premises,
                                      const Formula& goal);

struct RecoveryBounds {
  std::vector<std::string> atoms = {"p", "q"};
  int depth = 3;
  int premise_size = 2;  // premises: all formulas with depth<=depth, size<=premise_size
  int goal_size = 2;     // goals likewise, plus the sampled tail below
  int extra_goal_size = 3;
  int extra_goal_samples = 400;
  unsigned seed = 7;
  int max_premises = 2;
};

// Sweeps the recovery equivalence over the bounded sequent family; both
// logics must be matrix-based with the subalgebra relation verified.
WitnessReport recovery_sweep(const LogicId& big, const LogicId& small,
                             const Formula& gate, const RecoveryBounds& bounds = {});

// Designation of the three-part equivalence formula coincides with value
// equality on all value pairs of the 5-valued matrix.
WitnessReport check_congruence();

// Named consequence/non-consequence suites (see property_suites()).
WitnessReport run_property_suite(const std::string& suite);
std::vector<std::string> property_suites();

struct SequentFamily {
  std::vector<std::string> atoms = {"p"};
  int depth = 3;
  int exhaustive_size = 4;  // premise-free goals: everything up to this size
  int pair_size = 2;        // single-premise pairs: both sides up to this size
  int samples = 2000;       // extra seeded pairs from the full pool
  unsigned seed = 99;
  std::string str() const;
};

// Verdict identity of two semantics on the family (premise-free and
// single-premise sequents).
WitnessReport cross_check_semantics(const Semantics& a, const Semantics& b,
                                    const SequentFamily& family = {});

// Validity, in the n-th fixed-point semantics, of the collapsed axiom at
// height m (m >= n+2) and of the circ-iterate equivalences up to n+1.
WitnessReport check_fixed_point_axiom(int n, int m);

}  // namespace lfikit
