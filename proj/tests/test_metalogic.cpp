#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lfikit/metalogic.hpp"
#include "lfikit/parser.hpp"
#include "lfikit/structures.hpp"

using namespace lfikit;

TEST_CASE("subalgebra checks on the 5-valued matrix") {
  const Nmatrix& m = *lfi3_matrix();
  const std::vector<std::string> boolean{"T", "F"};
  const std::vector<std::string> three{"T", "b", "F"};
  const std::vector<std::string> broken{"T", "t"};

  CHECK(check_subalgebra(m, boolean).verified());
  CHECK(check_subalgebra(m, three).verified());

  WitnessReport r = check_subalgebra(m, broken);
  CHECK(!r.verified());
  std::string cell = r.evidence["failing_cell"].get<std::string>();
  CHECK(cell.find("circ(t)") != std::string::npos);
  CHECK(cell.find("{b}") != std::string::npos);
}

TEST_CASE("sublogic inclusions") {
  CHECK(check_sublogic_inclusion(*LogicId::parse("LFI3"), *LogicId::parse("CPL")).verified());
  CHECK(check_sublogic_inclusion(*LogicId::parse("LFI3"), *LogicId::parse("LFI1")).verified());
  CHECK(check_sublogic_inclusion(*LogicId::parse("LFI1"), *LogicId::parse("CPL")).verified());
  // needs plain matrices on both sides
  CHECK_THROWS_AS(check_sublogic_inclusion(*LogicId::parse("mbCciw"), *LogicId::parse("CPL")),
                  std::invalid_argument);
}

TEST_CASE("maximality witness search") {
  WitnessReport r = find_maximality_witnesses(4);
  REQUIRE(r.verified());
  CHECK(r.evidence["top"] == "o o o p");
  CHECK(r.evidence["bottom"] == "~o o o p");
  const auto& w = r.evidence["witnesses"];
  // ten entries, all filled
  REQUIRE(w.size() == 10);
  for (const auto& [key, formula] : w.items()) {
    CAPTURE(key);
    CHECK(!formula.is_null());
  }
  CHECK(w["t -> b"] == "o p");
  CHECK(w["f -> b"] == "o p");
  CHECK(w["t -> t"] == "p");

  // a depth-0 search cannot reach every value
  WitnessReport shallow = find_maximality_witnesses(0);
  CHECK(shallow.status == WitnessReport::Status::Inconclusive);
}

TEST_CASE("recovery gates designate exactly the sublogic values") {
  Formula p = Formula::atom("p");
  WitnessReport star =
      check_recovery_gate(*LogicId::parse("LFI3"), *LogicId::parse("CPL"), circ_star(p));
  REQUIRE(star.verified());
  CHECK(star.evidence["gate_values"]["T"] == "T");
  CHECK(star.evidence["gate_values"]["t"] == "F");
  CHECK(star.evidence["gate_values"]["b"] == "F");
  CHECK(star.evidence["gate_values"]["f"] == "F");
  CHECK(star.evidence["gate_values"]["F"] == "T");

  WitnessReport hash =
      check_recovery_gate(*LogicId::parse("LFI3"), *LogicId::parse("LFI1"), circ_hash(p));
  REQUIRE(hash.verified());
  CHECK(hash.evidence["gate_values"]["b"] == "T");
  CHECK(hash.evidence["gate_values"]["t"] == "F");
  CHECK(hash.evidence["gate_values"]["f"] == "F");

  // a wrong gate is caught pointwise
  WitnessReport bad =
      check_recovery_gate(*LogicId::parse("LFI3"), *LogicId::parse("CPL"), Formula::circ(p));
  CHECK(!bad.verified());
}

TEST_CASE("recovery instances and a bounded sweep") {
  Formula p = Formula::atom("p");
  Formula q = Formula::atom("q");
  std::vector<Formula> contradiction{p, Formula::neg(p)};
  WitnessReport inst = check_recovery_instance(*LogicId::parse("LFI3"), *LogicId::parse("LFI1"),
                                               circ_hash(p), contradiction, q);
  CHECK(inst.verified());
  CHECK(inst.evidence["gated_big"] == "refuted");
  CHECK(inst.evidence["small"] == "refuted");

  RecoveryBounds small_bounds;
  small_bounds.premise_size = 1;
  small_bounds.goal_size = 1;
  small_bounds.extra_goal_samples = 50;
  CHECK(recovery_sweep(*LogicId::parse("LFI3"), *LogicId::parse("CPL"), circ_star(p),
                       small_bounds)
            .verified());
  CHECK(recovery_sweep(*LogicId::parse("LFI3"), *LogicId::parse("LFI1"), circ_hash(p),
                       small_bounds)
            .verified());
}

TEST_CASE("congruence designation equals value equality") {
  WitnessReport r = check_congruence();
  CHECK(r.verified());
  CHECK(r.evidence["pairs_checked"] == 25);

  // spot-check one unequal pair directly
  const Nmatrix& m = *lfi3_matrix();
  Formula e = equiv3(Formula::atom("p"), Formula::atom("q"));
  std::map<std::string, int> env{{"p", m.domain.index_of("t")}, {"q", m.domain.index_of("b")}};
  CHECK(!m.is_designated(eval_matrix(m, env, e)));
  env["q"] = m.domain.index_of("t");
  CHECK(m.is_designated(eval_matrix(m, env, e)));
}

TEST_CASE("property suites all verify") {
  for (const std::string& suite : property_suites()) {
    WitnessReport r = run_property_suite(suite);
    CAPTURE(suite);
    CAPTURE(r.evidence.dump());
    CHECK(r.verified());
  }
  CHECK(run_property_suite("lfi3-properties").evidence["passed"] == "6/6");
  CHECK_THROWS_AS(run_property_suite("nonsense"), std::invalid_argument);
}

TEST_CASE("cross-semantics agreement on a reduced family") {
  SequentFamily family;
  family.exhaustive_size = 3;
  family.pair_size = 2;
  family.samples = 300;
  for (int k = 0; k <= 2; ++k) {
    const LogicSpec& spec = get_logic(LogicId::param(1, k));
    auto nm = semantics_of(spec, SemPreference::Nmatrix);
    auto rn = semantics_of(spec, SemPreference::RNmatrix);
    REQUIRE(nm);
    REQUIRE(rn);
    WitnessReport r = cross_check_semantics(*nm, *rn, family);
    CAPTURE(k);
    CAPTURE(r.evidence.dump());
    CHECK(r.verified());
  }
}

TEST_CASE("cross-check catches a genuinely different pair") {
  // the 3-valued collapse semantics differs from the plain swap base
  Semantics a = Semantics::nmatrix("M_0", m0_nmatrix());
  Semantics b = Semantics::nmatrix("N_0^0", mbcci_nmatrix());
  SequentFamily family;
  family.exhaustive_size = 2;
  family.samples = 0;
  WitnessReport r = cross_check_semantics(a, b, family);
  CHECK(!r.verified());
  CHECK(r.evidence.contains("disagreement"));
}

TEST_CASE("fixed point collapse") {
  CHECK(check_fixed_point_axiom(0, 2).verified());
  CHECK(check_fixed_point_axiom(0, 3).verified());
  CHECK(check_fixed_point_axiom(1, 3).verified());
  CHECK_THROWS_AS(check_fixed_point_axiom(1, 2), std::invalid_argument);

  // semantic form of the collapse: verdict identity across the tower
  SequentFamily family;
  family.exhaustive_size = 3;
  family.pair_size = 2;
  family.samples = 200;
  auto r01 = semantics_of(get_logic(LogicId::param(0, 1)), SemPreference::RNmatrix);
  auto r03 = semantics_of(get_logic(LogicId::param(0, 3)), SemPreference::RNmatrix);
  REQUIRE(r01);
  REQUIRE(r03);
  CHECK(cross_check_semantics(*r01, *r03, family).verified());
}

TEST_CASE("witness reports serialize with claim, status and evidence") {
  WitnessReport r = check_congruence();
  auto j = r.to_json();
  CHECK(j["claim"].is_string());
  CHECK(j["status"] == "verified");
  CHECK(j.contains("evidence"));
}
