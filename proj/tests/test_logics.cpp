#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lfikit/consequence.hpp"
#include "lfikit/logics.hpp"
#include "lfikit/parser.hpp"

using namespace lfikit;

namespace {

bool has_instance(const std::vector<AxiomInstance>& instances, const Formula& f) {
  for (const AxiomInstance& i : instances)
    if (i.formula == f) return true;
  return false;
}

std::vector<std::string> axiom_ids(const LogicSpec& spec) {
  std::vector<std::string> ids;
  for (const AxiomSchema& a : spec.axioms) ids.push_back(a.id);
  return ids;
}

std::vector<std::string> semantics_names(const LogicSpec& spec) {
  std::vector<std::string> names;
  for (const Semantics& s : spec.semantics) names.push_back(s.name);
  return names;
}

}  // namespace

TEST_CASE("logic id parsing and aliases") {
  CHECK(LogicId::parse("mbCciw")->str() == "mbCciw");
  CHECK(LogicId::parse("L:1,2")->str() == "L:1,2");
  CHECK(LogicId::parse("L:0,0")->str() == "mbCci");
  CHECK(LogicId::parse("L:0,1")->str() == "Cie");
  CHECK(!LogicId::parse("L:1"));
  CHECK(!LogicId::parse("L:1,x"));
  CHECK(!LogicId::parse("nope"));
  CHECK(LogicId::param(0, 0) == *LogicId::parse("mbCci"));
  CHECK(LogicId::param(0, 1) == *LogicId::parse("Cie"));
  CHECK_THROWS_AS(LogicId::param(-1, 0), std::invalid_argument);
}

TEST_CASE("alias coherence: the collapsed parameters equal the named logics") {
  const LogicSpec& a = get_logic(LogicId::param(0, 0));
  const LogicSpec& b = get_logic(*LogicId::parse("mbCci"));
  CHECK(a.id == b.id);
  CHECK(axiom_ids(a) == axiom_ids(b));
  CHECK(semantics_names(a) == semantics_names(b));

  const LogicSpec& c = get_logic(LogicId::param(0, 1));
  const LogicSpec& d = get_logic(*LogicId::parse("Cie"));
  CHECK(axiom_ids(c) == axiom_ids(d));
  CHECK(semantics_names(c) == semantics_names(d));
}

TEST_CASE("registry contents per logic") {
  const LogicSpec& mbc = get_logic(*LogicId::parse("mbC"));
  CHECK(mbc.hilbert_only());
  CHECK(mbc.find_axiom("bc1"));
  CHECK(mbc.find_axiom("TND"));
  CHECK(!mbc.find_axiom("ciw"));

  const LogicSpec& mbcciw = get_logic(*LogicId::parse("mbCciw"));
  CHECK(mbcciw.find_axiom("ciw"));
  CHECK(!mbcciw.find_axiom("cc"));
  CHECK(semantics_names(mbcciw) == std::vector<std::string>{"M_0"});

  const LogicSpec& l10 = get_logic(LogicId::param(1, 0));
  REQUIRE(l10.find_axiom("cc^1"));
  CHECK(l10.find_axiom("cc^1")->schema == parse("o o o alpha"));
  CHECK(semantics_names(l10) == std::vector<std::string>{"M_1^0", "R_1^0"});

  const LogicSpec& l12 = get_logic(LogicId::param(1, 2));
  CHECK(l12.find_axiom("cf"));
  CHECK(l12.find_axiom("ce"));
  CHECK(l12.find_axiom("ip^1"));
  CHECK(semantics_names(l12) == std::vector<std::string>{"M_1^2", "R_1^2"});

  const LogicSpec& l20 = get_logic(LogicId::param(2, 0));
  REQUIRE(l20.find_axiom("cc^2"));
  CHECK(l20.find_axiom("cc^2")->schema == parse("o o o o alpha"));
  CHECK(semantics_names(l20) == std::vector<std::string>{"R_2^0"});

  const LogicSpec& l13 = get_logic(LogicId::param(1, 3));
  CHECK(l13.find_axiom("ip^1"));
  CHECK(l13.find_axiom("ip^2"));
  CHECK(semantics_names(l13) == std::vector<std::string>{"R_1^3"});

  const LogicSpec& lfi3 = get_logic(*LogicId::parse("LFI3"));
  for (const char* id : {"A1", "A2", "A3", "A4", "A5", "A6", "ip^1", "cc^1"})
    CHECK(lfi3.find_axiom(id));
  CHECK(semantics_names(lfi3) == std::vector<std::string>{"M_2"});

  const LogicSpec& lfi1 = get_logic(*LogicId::parse("LFI1"));
  CHECK(lfi1.find_axiom("cc"));
  CHECK(lfi1.semantics.front().matrix->n() == 3);

  const LogicSpec& cpl = get_logic(*LogicId::parse("CPL"));
  CHECK(cpl.find_axiom("co"));
  CHECK(cpl.semantics.front().matrix->n() == 2);
}

TEST_CASE("rnmatrix composition per parameter") {
  auto r12 = semantics_of(get_logic(LogicId::param(1, 2)), SemPreference::RNmatrix);
  REQUIRE(r12);
  CHECK(r12->matrix->n() == 3);
  REQUIRE(r12->restrictions.size() == 2);
  CHECK(r12->restrictions[0].str() == "CC(1)");
  CHECK(r12->restrictions[1].str() == "IP(1)");

  auto r20 = semantics_of(get_logic(LogicId::param(2, 0)), SemPreference::RNmatrix);
  REQUIRE(r20);
  CHECK(r20->restrictions.size() == 1);
  CHECK(r20->restrictions[0].str() == "CC(2)");
  // the k = 0 base has fully non-deterministic negation
  CHECK(vs_count(r20->matrix->cell(Formula::Kind::Neg, r20->matrix->domain.index_of("t"))) == 2);

  auto r03 = semantics_of(get_logic(LogicId::param(0, 3)), SemPreference::RNmatrix);
  REQUIRE(r03);
  REQUIRE(r03->restrictions.size() == 3);
  CHECK(r03->restrictions[2].str() == "IP(2)");
}

TEST_CASE("semantics_of never substitutes silently") {
  CHECK(!semantics_of(get_logic(*LogicId::parse("mbC")), SemPreference::Nmatrix));
  CHECK(!semantics_of(get_logic(*LogicId::parse("mbC")), SemPreference::Any));
  CHECK(!semantics_of(get_logic(*LogicId::parse("mbCciw")), SemPreference::Matrix));
  CHECK(!semantics_of(get_logic(*LogicId::parse("mbCciw")), SemPreference::RNmatrix));
  CHECK(!semantics_of(get_logic(*LogicId::parse("LFI3")), SemPreference::Nmatrix));

  auto nm = semantics_of(get_logic(LogicId::param(1, 2)), SemPreference::Nmatrix);
  REQUIRE(nm);
  CHECK(nm->name == "M_1^2");
  auto any = semantics_of(get_logic(LogicId::param(1, 2)), SemPreference::Any);
  REQUIRE(any);
  CHECK(any->name == "M_1^2");
  CHECK(parse_preference("rnmatrix") == SemPreference::RNmatrix);
  CHECK(!parse_preference("weird"));
}

TEST_CASE("axiom instance materialization") {
  Formula p = Formula::atom("p");
  const std::vector<std::string> one_atom{"p"};

  auto mbcciw = axiom_instances(get_logic(*LogicId::parse("mbCciw")), one_atom, 0);
  CHECK(has_instance(mbcciw, parse("o p | (p & ~p)")));

  auto mbcci = axiom_instances(get_logic(LogicId::param(0, 0)), one_atom, 0);
  CHECK(has_instance(mbcci, parse("o o p")));

  auto l12 = axiom_instances(get_logic(LogicId::param(1, 2)), one_atom, 0);
  CHECK(has_instance(l12, iff(parse("~o~p"), parse("~o p"))));

  // depth-0 over one atom: one instance per metavariable tuple
  const LogicSpec& spec = get_logic(*LogicId::parse("mbCciw"));
  CHECK(mbcciw.size() == spec.axioms.size());
}

TEST_CASE("the 3-valued collapse separates from the 5-valued one") {
  Formula oop = parse("o o p");
  auto lfi1 = semantics_of(get_logic(*LogicId::parse("LFI1")), SemPreference::Matrix);
  auto lfi3 = semantics_of(get_logic(*LogicId::parse("LFI3")), SemPreference::Matrix);
  REQUIRE(lfi1);
  REQUIRE(lfi3);
  CHECK(check_consequence(*lfi1, std::span<const Formula>{}, oop).valid());
  Verdict v = check_consequence(*lfi3, std::span<const Formula>{}, oop);
  REQUIRE(!v.valid());
  CHECK(lfi3->matrix->value_name(v.countermodel->value_of(Formula::atom("p"))) == "t");
}

TEST_CASE("modus ponens preserves designation in every registered semantics") {
  Formula p = Formula::atom("p");
  Formula q = Formula::atom("q");
  for (const char* name : {"mbCciw", "mbCci", "Cie", "Cbr", "LFI1", "LFI3", "CPL"}) {
    const LogicSpec& spec = get_logic(*LogicId::parse(name));
    for (const Semantics& sem : spec.semantics) {
      CAPTURE(name);
      CAPTURE(sem.name);
      CHECK(check_consequence(sem, {p, Formula::imp(p, q)}, q).valid());
    }
  }
}
