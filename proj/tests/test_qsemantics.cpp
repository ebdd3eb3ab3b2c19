#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "graded/errors.hpp"
#include "graded/parser.hpp"
#include "graded/qsemantics.hpp"

using namespace graded;
using namespace graded::q;

namespace {

Grade g(long p, long q) { return Grade(p, q); }

World grid_world(std::initializer_list<std::pair<long, long>> xs) {
  World w;
  for (auto [p, q] : xs) w.push_back(g(p, q));
  return w;
}

const std::vector<std::string> kFour{"phi1", "phi2", "phi3", "phi4"};

}  // namespace

TEST_CASE("distances") {
  CHECK(l1_distance(World(4, Grade::one()), World(4, Grade::zero())) == 4);
  World w = grid_world({{1, 4}, {1, 2}});
  CHECK(l1_distance(w, w) == 0);
  CHECK(l1_distance(w, grid_world({{1, 2}, {1, 4}})) == Rational(1, 2));
  CHECK_THROWS_AS(l1_distance(w, World(3, Grade::one())), ValidationError);

  CHECK(set_distance(grid_world({{1, 2}, {1, 2}}), FiniteSet{{World(2, Grade::zero()), World(2, Grade::one())}}) ==
        1);
  CHECK(set_distance(w, FiniteSet{{World(2, Grade::one()), w}}) == 0);
}

// The face distance is a closed form; the oracle minimises over a fine grid
// of the face instead.
TEST_CASE("face distance agrees with a search over the face") {
  const World w = grid_world({{3, 10}, {1, 2}, {4, 5}});
  for (std::size_t index = 0; index < 3; ++index) {
    for (bool upper : {true, false}) {
      std::optional<Rational> best;
      for_each_grid_world(3, 10, [&](const World& a) {
        if (a[index] != (upper ? Grade::one() : Grade::zero())) return true;
        Rational d = l1_distance(w, a);
        if (!best || d < *best) best = d;
        return true;
      });
      CHECK(set_distance(w, Face{index, upper}) == *best);
    }
  }
  CHECK(set_distance(w, Face{0, true}) == Rational(7, 10));
}

TEST_CASE("degrees") {
  QEvaluation e = canonical_disorder_eval(4, "delta");
  World w = grid_world({{1, 4}, {1, 2}, {3, 4}, {1, 1}});
  CHECK(degree(e, "delta", w) == g(5, 8));
  CHECK(degree(e, "phi3", w) == g(3, 4));
  CHECK(degree(e, "delta", World(4, Grade::one())) == Grade::one());
  CHECK(degree(e, "delta", World(4, Grade::zero())) == Grade::zero());
  CHECK_THROWS_AS(degree(e, "eta", w), UnboundVariable);
  CHECK_THROWS_AS(degree(e, "delta", World(3, Grade::one())), ValidationError);

  QEvaluation three({"a", "b", "c"});
  CHECK(degree(three, "b", grid_world({{1, 4}, {3, 5}, {1, 1}})) == g(3, 5));

  QEvaluation two = canonical_disorder_eval(2, "delta");
  CHECK(degree(two, "delta", grid_world({{1, 1}, {0, 1}})) == g(1, 2));
}

TEST_CASE("one item: the disorder is the item") {
  QEvaluation e = canonical_disorder_eval(1, "delta");
  for_each_grid_world(1, 12, [&](const World& w) {
    CHECK(degree(e, "delta", w) == degree(e, "phi1", w));
    return true;
  });
}

TEST_CASE("binding dependent variables") {
  QEvaluation e({"a", "b"});
  CHECK_THROWS_AS(e.bind("a", PCPair{Face{0, true}, Face{0, false}}), ValidationError);
  CHECK_THROWS_AS(e.bind("x", PCPair{FiniteSet{}, Face{0, false}}), ValidationError);
  CHECK_THROWS_AS(e.bind("x", PCPair{Face{2, true}, Face{0, false}}), ValidationError);
  CHECK_THROWS_AS(e.bind("x", PCPair{Face{0, true}, Face{1, false}}), ValidationError);  // meet at (1,0)
  CHECK_THROWS_AS(e.bind("x", PCPair{FiniteSet{{grid_world({{1, 1}, {0, 1}})}}, Face{1, false}}),
                  ValidationError);
  CHECK_THROWS_AS(e.bind("x", PCPair{FiniteSet{{World(3, Grade::one())}}, Face{1, false}}), ValidationError);
  e.bind("x", PCPair{Face{0, true}, FiniteSet{{World(2, Grade::zero())}}});
  CHECK(e.binds("x"));
  CHECK(degree(e, "x", grid_world({{1, 2}, {1, 2}})) == g(2, 3));  // 1 / (1/2 + 1)
  CHECK_THROWS_AS(QEvaluation({"a", "a"}), ValidationError);
  CHECK_THROWS_AS(QEvaluation(std::vector<std::string>{}), ValidationError);
}

TEST_CASE("regions") {
  QEvaluation e = canonical_disorder_eval(4, "delta");
  World w = grid_world({{1, 1}, {0, 1}, {1, 2}, {1, 2}});
  CHECK(in_region(e, parse_formula("(phi1, 1) /\\ (phi2, 0)"), w));
  CHECK(in_region(e, parse_formula("(delta, 5/8)"), grid_world({{1, 4}, {1, 2}, {3, 4}, {1, 1}})));
  CHECK_FALSE(in_region(e, parse_formula("(delta, 1)"), World(4, Grade::zero())));
  CHECK(in_region(e, parse_formula("!(delta, 1)"), World(4, Grade::zero())));
  CHECK_THROWS_AS(in_region(e, parse_formula("p ->[1] q"), w), ValidationError);
}

TEST_CASE("grid satisfaction") {
  QEvaluation e = canonical_disorder_eval(4, "delta");
  Theory t = canonical_disorder_theory(kFour, "delta");
  for (unsigned k = 1; k <= 4; ++k) {
    for (const auto& f : t) {
      auto verdict = check_on_grid(e, f, k);
      CHECK(verdict.holds());
      CHECK(verdict.label() == "holds on grid " + std::to_string(k));
    }
  }
  QEvaluation one = canonical_disorder_eval(1, "delta");
  auto half = check_on_grid(one, parse_formula("(phi1, 1/2)"), 2);
  REQUIRE_FALSE(half.holds());
  CHECK(half.failing_world == World{Grade::zero()});
  CHECK(half.label() == "fails on grid 2");
  CHECK(satisfied_on_grid(e, parse_formula("(delta, 1/3) \\/ !(delta, 1/3)"), 3));
}

TEST_CASE("grid enumeration") {
  std::vector<World> seen;
  for_each_grid_world(2, 2, [&](const World& w) {
    seen.push_back(w);
    return true;
  });
  REQUIRE(seen.size() == 9);
  CHECK(seen[1] == grid_world({{0, 1}, {1, 2}}));
  CHECK(seen[3] == grid_world({{1, 2}, {0, 1}}));
  std::size_t visited = 0;
  for_each_grid_world(3, 4, [&](const World&) { return ++visited < 7; });
  CHECK(visited == 7);
  CHECK_THROWS_AS(for_each_grid_world(8, 9, [](const World&) { return true; }, {.max_worlds = 1000}),
                  ResourceError);
  CHECK_THROWS_AS(for_each_grid_world(2, 0, [](const World&) { return true; }), ValidationError);
}

TEST_CASE("canonical theory recognition") {
  Theory t = canonical_disorder_theory(kFour, "delta");
  auto ok = check_theory_correct_canonical(t, kFour, 4);
  REQUIRE(ok.evaluation);
  CHECK(ok.disorder == "delta");

  Theory swapped{t[1], t[0]};
  CHECK(check_theory_correct_canonical(swapped, kFour, 2).evaluation);

  Theory flipped{parse_formula("(phi1, 1) /\\ (phi2, 1) <=> (dis, 1)"),
                 parse_formula("(dis, 0) <=> (phi2, 0) /\\ (phi1, 0)")};
  CHECK(check_theory_correct_canonical(flipped, {"phi1", "phi2"}, 3).evaluation);

  Theory extra = t;
  extra.push_back(parse_formula("(phi1, 1)"));
  auto bad = check_theory_correct_canonical(extra, kFour, 4);
  CHECK_FALSE(bad.evaluation);
  CHECK(bad.reason == "outside supported pattern");
  CHECK(check_theory_correct_canonical({}, kFour, 4).reason == "outside supported pattern");
  CHECK_FALSE(check_theory_correct_canonical(t, {"phi1", "phi2", "phi3"}, 4).evaluation);
  CHECK_FALSE(check_theory_correct_canonical({t[0], t[0]}, kFour, 4).evaluation);
}

TEST_CASE("laws on sampled worlds") {
  gen::Rng rng(71);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
    World a = gen::world(rng, n), b = gen::world(rng, n), c = gen::world(rng, n);
    CHECK(l1_distance(a, b) >= 0);
    CHECK((l1_distance(a, b) == 0) == (a == b));
    CHECK(l1_distance(a, b) == l1_distance(b, a));
    CHECK(l1_distance(a, c) <= l1_distance(a, b) + l1_distance(b, c));

    QEvaluation e = canonical_disorder_eval(n, "delta");
    CHECK(degree(e, "delta", a) == mean(a));
    for (std::size_t j = 0; j < n; ++j) CHECK(degree(e, "phi" + std::to_string(j + 1), a) == a[j]);
  }
}

TEST_CASE("degree extremes coincide with membership") {
  QEvaluation e = canonical_disorder_eval(3, "delta");
  for (const auto& name : {"delta", "phi1", "phi2", "phi3"}) {
    const PCPair& pair = e.at(name);
    for_each_grid_world(3, 4, [&](const World& w) {
      const Grade d = degree(e, name, w);
      CHECK((d == Grade::one()) == contains(pair.protos, w));
      CHECK((d == Grade::zero()) == contains(pair.counters, w));
      CHECK((d == Grade::one()) == (set_distance(w, pair.protos) == 0));
      return true;
    });
  }
}

// The canonical theory yields the mean for each particular outcome: every
// grid world satisfies (phi1,c1) /\ ... /\ (phin,cn) => (delta, mean(c)).
TEST_CASE("questionnaire outcomes follow from the canonical theory") {
  const std::vector<std::string> names{"phi1", "phi2", "phi3"};
  QEvaluation e = canonical_disorder_eval(names, "delta");
  for_each_grid_world(3, 4, [&](const World& c) {
    std::vector<Formula> facts;
    for (std::size_t i = 0; i < 3; ++i) facts.push_back(Formula::atom(GradedVariable{names[i], c[i]}));
    Formula outcome = Formula::implies(conjunction(facts), Formula::atom(GradedVariable{"delta", mean(c)}));
    CHECK(satisfied_on_grid(e, outcome, 4));
    return true;
  });
}
