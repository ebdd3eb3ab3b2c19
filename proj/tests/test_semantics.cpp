#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "gen.hpp"
#include "graded/errors.hpp"
#include "graded/parser.hpp"
#include "graded/score_derivation.hpp"
#include "graded/semantics.hpp"

using namespace graded;

namespace {

constexpr std::array kKinds{TNormKind::Lukasiewicz, TNormKind::Product, TNormKind::Minimum};

Grade g(long p, long q) { return Grade(p, q); }

Evaluation with(std::initializer_list<std::pair<const char*, Grade>> xs,
                TNormKind kind = TNormKind::Lukasiewicz) {
  Evaluation v(kind);
  for (const auto& [name, value] : xs) v.set(name, value);
  return v;
}

}  // namespace

TEST_CASE("eval_basic") {
  CHECK(eval_basic(parse_basic("~p"), with({{"p", g(2, 5)}})) == g(3, 5));
  CHECK(eval_basic(parse_basic("p * q"), with({{"p", g(7, 10)}, {"q", g(6, 10)}})) == g(3, 10));
  CHECK(eval_basic(parse_basic("p * q"), with({{"p", g(7, 10)}, {"q", g(6, 10)}}, TNormKind::Product)) ==
        g(21, 50));
  CHECK(eval_basic(parse_basic("p & q | ~q"), with({{"p", g(7, 10)}, {"q", g(6, 10)}})) == g(3, 5));
  CHECK(eval_basic(Expr::top(), Evaluation{}) == Grade::one());
  CHECK(eval_basic(Expr::bottom(), Evaluation{}) == Grade::zero());
  CHECK_THROWS_AS(eval_basic(parse_basic("p & z"), with({{"p", g(1, 2)}})), UnboundVariable);
}

TEST_CASE("satisfaction of graded implications") {
  auto v = with({{"a", g(4, 5)}, {"b", g(1, 2)}});
  CHECK(satisfies_gi(v, parse_implication("a ->[7/10] b")));
  CHECK_FALSE(satisfies_gi(v, parse_implication("a ->[4/5] b")));
  CHECK(satisfies_gi_luk_form(v, parse_implication("a ->[7/10] b")));
  CHECK(satisfies_gi_luk_form(v, parse_implication("a ->[0] b")));
  CHECK_FALSE(satisfies_gi_luk_form(with({{"a", Grade::one()}, {"b", Grade::zero()}}),
                                    parse_implication("a ->[1] b")));
  CHECK_THROWS_AS(satisfies_gi_luk_form(v, parse_implication("a, b ->[1] b")), ValidationError);

  auto w = with({{"a1", g(1, 4)}, {"a2", g(1, 2)}, {"a3", g(3, 4)}, {"a4", Grade::one()}, {"b", g(5, 8)}});
  CHECK(satisfies_gi(w, parse_implication("a1, a2, a3, a4 ->[1] b")));
  w.set("b", g(9, 16));
  CHECK_FALSE(satisfies_gi(w, parse_implication("a1, a2, a3, a4 ->[1] b")));
}

TEST_CASE("outer connectives are classical") {
  gen::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    auto kind = kKinds[rng.index(kKinds.size())];
    Evaluation v = gen::evaluation(rng, kind);
    Formula atom = Formula::atom(gen::implication(rng));
    CHECK(satisfies_formula(v, Formula::disj(atom, Formula::negation(atom))));
    CHECK_FALSE(satisfies_formula(v, Formula::conj(atom, Formula::negation(atom))));
    CHECK(satisfies_formula(v, parse_formula("(p ->[1] q) \\/ (q ->[1] p)")));
  }
  CHECK_THROWS_AS(satisfies_formula(Evaluation{}, parse_formula("(x, 1)")), ValidationError);
}

// Independent oracle: scans p over {0, 1/m, ..., 1} with inline arithmetic
// for the two single-variable theories used below.
TEST_CASE("countermodel search matches a hand-written scan") {
  const unsigned m = 10;
  std::optional<Rational> expected;
  for (unsigned i = 0; i <= m && !expected; ++i) {
    Rational p(i, m);
    p.canonicalize();
    const bool theory_holds = 1 <= p + 1 - Rational(3, 5);  // top ->[3/5] p
    const bool goal_holds = 1 <= p + 1 - Rational(7, 10);   // top ->[7/10] p
    if (theory_holds && !goal_holds) expected = p;
  }
  REQUIRE(expected);
  CHECK(*expected == Rational(3, 5));

  auto cm = find_countermodel({parse_formula("top ->[3/5] p")}, parse_formula("top ->[7/10] p"), m,
                              TNormKind::Lukasiewicz);
  REQUIRE(cm);
  CHECK(cm->at("p").value() == *expected);

  // top ->[1/2] p, p ->[1] q entails top ->[1/2] q: the scan over (p, q)
  // finds nothing, so neither may the search.
  bool oracle_found = false;
  for (unsigned i = 0; i <= 4; ++i) {
    for (unsigned j = 0; j <= 4; ++j) {
      Rational p(i, 4), q(j, 4);
      p.canonicalize();
      q.canonicalize();
      bool theory = Rational(1, 2) <= p && p <= q;
      bool goal = Rational(1, 2) <= q;
      oracle_found = oracle_found || (theory && !goal);
    }
  }
  CHECK_FALSE(oracle_found);
  Theory t{parse_formula("top ->[1/2] p"), parse_formula("p ->[1] q")};
  CHECK(entails_on_grid(t, parse_formula("top ->[1/2] q"), 4, TNormKind::Lukasiewicz));
}

TEST_CASE("grid verdicts") {
  auto none = check_on_grid({}, parse_formula("!(top ->[1/2] bot)"), 6, TNormKind::Lukasiewicz);
  CHECK(none.holds());
  CHECK(none.label() == "no countermodel with denominator 6");

  auto some = check_on_grid({}, parse_formula("top ->[1/2] p"), 4, TNormKind::Lukasiewicz);
  REQUIRE_FALSE(some.holds());
  CHECK(some.countermodel->at("p") == Grade::zero());
  CHECK(some.label() == "countermodel found with denominator 4");

  CHECK(entails_on_grid({}, parse_formula("p ->[1/2] p"), 8, TNormKind::Product));

  auto all_ones = score_theory(default_item_names(4), "delta", std::vector<Grade>(4, Grade::one()));
  CHECK(entails_on_grid(all_ones, parse_formula("top ->[1] delta"), 2, TNormKind::Lukasiewicz));
}

TEST_CASE("countermodels are the lexicographic first, whatever the worker count") {
  gen::Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    Theory t;
    for (long j = rng.range(0, 2); j > 0; --j) t.push_back(gen::formula(rng, 1));
    Formula goal = gen::formula(rng, 1);
    auto kind = kKinds[rng.index(kKinds.size())];
    auto one = find_countermodel(t, goal, 3, kind, {.max_points = 1'000'000, .workers = 1});
    auto many = find_countermodel(t, goal, 3, kind, {.max_points = 1'000'000, .workers = 5});
    CHECK(one == many);
    if (one) {
      CHECK(satisfies_theory(*one, t));
      CHECK_FALSE(satisfies_formula(*one, goal));
    }
  }
}

TEST_CASE("the grid budget is explicit") {
  auto goal = parse_formula("a, b, c, d ->[1/2] e");
  CHECK_THROWS_AS(find_countermodel({}, goal, 100, TNormKind::Lukasiewicz, {.max_points = 1000}),
                  ResourceError);
  CHECK_THROWS_AS(find_countermodel({}, goal, 0, TNormKind::Lukasiewicz), ValidationError);
}

TEST_CASE("semantic laws on fuzzed cases") {
  gen::Rng rng(33);
  for (int i = 0; i < 3000; ++i) {
    auto kind = kKinds[rng.index(kKinds.size())];
    Evaluation v = gen::evaluation(rng, kind);
    Expr a = gen::basic(rng, 3), b = gen::basic(rng, 3);
    Grade c = gen::grade(rng), d = gen::grade(rng);
    GradedImplication at_d(a, b, d);

    CHECK(satisfies_gi(v, at_d) == satisfies_gi_luk_form(v, at_d));
    if (satisfies_gi(v, at_d) && c <= d) CHECK(satisfies_gi(v, GradedImplication(a, b, c)));
    CHECK(satisfies_gi(v, GradedImplication(a, b, Grade::zero())));

    // explicit degrees
    const Grade va = eval_basic(a, v);
    CHECK(satisfies_gi(v, GradedImplication(a, Expr::bottom(), negate(c))) == (va <= c));
    CHECK(satisfies_gi(v, GradedImplication(Expr::top(), a, c)) == (c <= va));

    // connectives
    const Grade vb = eval_basic(b, v);
    CHECK(eval_basic(Expr::conj(a, b), v) == min(va, vb));
    CHECK(eval_basic(Expr::disj(a, b), v) == max(va, vb));
    CHECK(eval_basic(Expr::strong(a, b), v) == tnorm(kind, va, vb));
    CHECK(eval_basic(Expr::neg(a), v) == negate(va));
  }
}
