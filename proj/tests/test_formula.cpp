#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lfikit/formula.hpp"
#include "lfikit/parser.hpp"

using namespace lfikit;

namespace {

Formula P() { return Formula::atom("p"); }
Formula Q() { return Formula::atom("q"); }

// Seeded random formulas for the deep round-trip property.
Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  switch (pick(rng)) {
    case 0: return P();
    case 1: return Q();
    case 2: return Formula::neg(random_formula(rng, depth - 1));
    case 3: return Formula::circ(random_formula(rng, depth - 1));
    case 4: return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return Formula::imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parse: atoms and circ towers") {
  CHECK(parse("p") == P());
  CHECK(parse("o o o p") == circ_tower(P(), 3));
  CHECK(parse("~p -> q | r") ==
        Formula::imp(Formula::neg(P()), Formula::disj(Q(), Formula::atom("r"))));
}

TEST_CASE("parse: precedence and associativity") {
  CHECK(parse("p -> q -> p") == Formula::imp(P(), Formula::imp(Q(), P())));
  CHECK(parse("p & q & r") ==
        Formula::conj(Formula::conj(P(), Q()), Formula::atom("r")));
  CHECK(parse("p | q & r") == Formula::disj(P(), Formula::conj(Q(), Formula::atom("r"))));
  CHECK(parse("~o p") == Formula::neg(Formula::circ(P())));
  CHECK(parse("(p | q) & r") ==
        Formula::conj(Formula::disj(P(), Q()), Formula::atom("r")));
  CHECK(parse("p <-> q") == iff(P(), Q()));
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p &"), ParseError);
  CHECK_THROWS_AS(parse("p @ q"), ParseError);
  CHECK_THROWS_AS(parse("((p)"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  try {
    parse("p @ q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
  // "o" alone is the reserved operator, not an atom
  CHECK_THROWS_AS(parse("o"), ParseError);
  CHECK_THROWS_AS(Formula::atom("o"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom(""), std::invalid_argument);
}

TEST_CASE("render: minimal parentheses") {
  CHECK(render(Formula::circ(P())) == "o p");
  CHECK(render(Formula::imp(P(), Formula::imp(Q(), P()))) == "p -> q -> p");
  CHECK(render(Formula::conj(Formula::disj(P(), Q()), Formula::atom("r"))) ==
        "(p | q) & r");
  CHECK(render(Formula::imp(Formula::imp(P(), Q()), P())) == "(p -> q) -> p");
  CHECK(render(Formula::neg(Formula::conj(P(), Q()))) == "~(p & q)");
  CHECK(render(Formula::conj(P(), Formula::conj(Q(), P()))) == "p & (q & p)");
}

TEST_CASE("render/parse round trip over the enumerator") {
  const std::vector<std::string> atoms{"p", "q"};
  for (const Formula& f : enumerate_formulas(atoms, 5, 4)) {
    CAPTURE(render(f));
    CHECK(parse(render(f)) == f);
  }
  std::mt19937 rng(12345);
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(rng, 5);
    CAPTURE(render(f));
    CHECK(parse(render(f)) == f);
  }
}

TEST_CASE("subformula closure: contents and order") {
  auto c1 = subformula_closure({circ_tower(P(), 2)});
  REQUIRE(c1.size() == 3);
  CHECK(c1[0] == P());
  CHECK(c1[1] == Formula::circ(P()));
  CHECK(c1[2] == circ_tower(P(), 2));

  auto c2 = subformula_closure({Formula::imp(P(), Q()), Q()});
  REQUIRE(c2.size() == 3);
  CHECK(c2[0] == P());
  CHECK(c2[1] == Q());
  CHECK(c2[2] == Formula::imp(P(), Q()));

  auto c3 = subformula_closure({Formula::neg(Formula::circ(Formula::neg(P())))});
  REQUIRE(c3.size() == 4);
  CHECK(c3[0] == P());
  CHECK(c3[1] == Formula::neg(P()));
  CHECK(c3[2] == Formula::circ(Formula::neg(P())));
  CHECK(c3[3] == Formula::neg(Formula::circ(Formula::neg(P()))));
}

TEST_CASE("subformula closure: idempotent and monotone") {
  const std::vector<std::string> atoms{"p", "q"};
  auto pool = enumerate_formulas(atoms, 3, 3);
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 100; ++i) {
    std::vector<Formula> fs{pool[pick(rng)], pool[pick(rng)]};
    auto once = subformula_closure(fs);
    auto twice = subformula_closure(once);
    CHECK(once == twice);
    // subformulas precede their parents
    for (std::size_t j = 0; j < once.size(); ++j) {
      const Formula& f = once[j];
      if (f.is_atom()) continue;
      auto before = [&](const Formula& g) {
        for (std::size_t k = 0; k < j; ++k)
          if (once[k] == g) return true;
        return false;
      };
      if (is_unary(f.kind())) {
        CHECK(before(f.child()));
      } else {
        CHECK(before(f.lhs()));
        CHECK(before(f.rhs()));
      }
    }
    // monotone: enlarging the root set never loses members
    std::vector<Formula> more = fs;
    more.push_back(pool[pick(rng)]);
    auto bigger = subformula_closure(more);
    for (const Formula& f : once)
      CHECK(std::count(bigger.begin(), bigger.end(), f) == 1);
  }
}

TEST_CASE("circ_tower composes") {
  CHECK(circ_tower(P(), 0) == P());
  CHECK(circ_tower(P(), 2) == Formula::circ(Formula::circ(P())));
  CHECK(circ_tower(Formula::neg(P()), 3) ==
        Formula::circ(Formula::circ(Formula::circ(Formula::neg(P())))));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(circ_tower(P(), m + n) == circ_tower(circ_tower(P(), m), n));
  CHECK_THROWS_AS(circ_tower(P(), -1), std::invalid_argument);
}

TEST_CASE("instantiate: examples and uniformity") {
  Schema bc1 = parse("o alpha -> (alpha -> (~alpha -> beta))");
  Substitution s1{{"alpha", P()}, {"beta", Q()}};
  CHECK(instantiate(bc1, s1) == parse("o p -> (p -> (~p -> q))"));

  Schema ciw = parse("o alpha | (alpha & ~alpha)");
  Substitution s2{{"alpha", Formula::circ(P())}};
  CHECK(instantiate(ciw, s2) == parse("o o p | (o p & ~o p)"));

  Schema ident = parse("alpha");
  CHECK(instantiate(ident, s1) == P());

  // uniform replacement: all occurrences take the same image
  Schema twice = parse("alpha -> alpha & alpha");
  Formula inst = instantiate(twice, Substitution{{"alpha", parse("~q")}});
  CHECK(inst == parse("~q -> ~q & ~q"));

  CHECK_THROWS_AS(instantiate(bc1, Substitution{{"alpha", P()}}), MissingBindingError);
}

TEST_CASE("derived connectives expand to their definitions") {
  CHECK(strong_neg(P()) == parse("~p & o p"));
  CHECK(bullet(P()) == parse("~o p"));
  CHECK(top_formula(P()) == parse("o o o p"));
  CHECK(bot_formula(P()) == parse("~o o o p"));
  CHECK(circ_star(P()) == parse("(p & o p) & o o p | (~p & o p) & o o p"));
  CHECK(circ_hash(P()) ==
        Formula::disj(circ_star(P()), Formula::conj(bullet(P()), circ_tower(P(), 2))));
  CHECK(iff(P(), Q()) == parse("(p -> q) & (q -> p)"));
  CHECK(equiv3(P(), Q()) ==
        Formula::conj(Formula::conj(iff(P(), Q()), iff(Formula::neg(P()), Formula::neg(Q()))),
                      iff(Formula::neg(Formula::circ(P())), Formula::neg(Formula::circ(Q())))));

  std::vector<Formula> one{P()};
  std::vector<Formula> two{P(), Q()};
  CHECK(build_derived(DerivedKind::Bullet, one) == bullet(P()));
  CHECK(build_derived(DerivedKind::Iff, two) == iff(P(), Q()));
  CHECK_THROWS_AS(build_derived(DerivedKind::Iff, one), std::invalid_argument);
  CHECK_THROWS_AS(build_derived(DerivedKind::Top, two), std::invalid_argument);
}

TEST_CASE("formula enumerator is duplicate-free and respects bounds") {
  const std::vector<std::string> atoms{"p"};
  auto pool = enumerate_formulas(atoms, 3, 3);
  for (const Formula& f : pool) {
    CHECK(f.depth() <= 3);
    CHECK(f.size() <= 3);
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      REQUIRE(!(pool[i] == pool[j]));
  // sizes 0..3 over one atom: 1, 5, 40, 395 trees, minus none at these depths
  CHECK(pool.size() == 441);
}
