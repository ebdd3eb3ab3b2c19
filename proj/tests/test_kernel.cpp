#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "gen.hpp"
#include "graded/errors.hpp"
#include "graded/parser.hpp"
#include "graded/proof.hpp"
#include "graded/semantics.hpp"
#include "proof_gen.hpp"

using namespace graded;

namespace {

constexpr std::array kKinds{TNormKind::Lukasiewicz, TNormKind::Product, TNormKind::Minimum};
constexpr auto L = TNormKind::Lukasiewicz;

std::optional<AxiomSchema> first_schema(const char* text) {
  auto m = match_axiom(parse_formula(text), L);
  if (!m) return std::nullopt;
  return m->schema;
}

/// Whether some single-slot change of the original parameters rebuilds
/// `target`. Independent of the recognisers: it only uses instantiate.
bool reachable_by_one_slot(AxiomSchema schema, const AxiomParams& base, const Formula& target,
                           const Grade& value, TNormKind kind) {
  std::vector<AxiomParams> candidates;
  auto with_c = base;
  with_c.c = value;
  candidates.push_back(with_c);
  auto with_d = base;
  with_d.d = value;
  candidates.push_back(with_d);
  for (std::size_t i = 0; i < base.cs.size(); ++i) {
    auto with_ci = base;
    with_ci.cs[i] = value;
    candidates.push_back(with_ci);
  }
  for (const auto& p : candidates) {
    try {
      if (instantiate(schema, p, kind) == target) return true;
    } catch (const ValidationError&) {
    }
  }
  return false;
}

}  // namespace

TEST_CASE("schema names round trip") {
  for (auto s : kAllSchemas) CHECK(schema_from_name(schema_name(s)) == s);
  CHECK_FALSE(schema_from_name("modus"));
  CHECK(is_mean_schema(AxiomSchema::MeanTop));
  CHECK_FALSE(is_mean_schema(AxiomSchema::Trans1));
}

TEST_CASE("match_axiom examples") {
  CHECK(first_schema("(p & q) ->[1] p") == AxiomSchema::And2);
  CHECK(first_schema("(p & q) ->[1] q") == AxiomSchema::And3);
  CHECK(first_schema("(p ->[1] q) \\/ (q ->[1] p)") == AxiomSchema::Lin1);
  CHECK(first_schema("(top ->[1/3] p) \\/ (p ->[2/3] bot)") == AxiomSchema::Lin2);
  CHECK(first_schema("(p ->[0.7] q) /\\ (q ->[0.8] r) => (p ->[1/2] r)") == AxiomSchema::Trans1);
  CHECK_FALSE(first_schema("(p ->[0.7] q) /\\ (q ->[0.8] r) => (p ->[3/5] r)"));
  CHECK(first_schema("p ->[1/2] p") == AxiomSchema::Reflexive);
  CHECK(first_schema("p ->[0] q") == AxiomSchema::Zero);
  CHECK(first_schema("!(top ->[1/4] bot)") == AxiomSchema::Inconsistency);
  CHECK_FALSE(first_schema("!(top ->[0] bot)"));
  CHECK(first_schema("top ->[1] top * top") == AxiomSchema::Strong3);
  CHECK(first_schema("(top, top ->[2/5] p) => (top ->[2/5] p)") == AxiomSchema::MeanTop);
  CHECK(first_schema("(a ->[1/2] x) /\\ (b ->[1] y) /\\ (x, y ->[1] g) => (a, b ->[3/4] g)") ==
        AxiomSchema::MeanTrans1);
  // any bracketing of the premise conjunction
  CHECK(first_schema("(a ->[1/2] x) /\\ ((b ->[1] y) /\\ (x, y ->[1] g)) => (a, b ->[3/4] g)") ==
        AxiomSchema::MeanTrans1);
  CHECK_FALSE(first_schema("p ->[1] q"));
}

TEST_CASE("strong-conjunction schemas follow the session t-norm") {
  auto f = parse_formula("(top ->[1/2] p) /\\ (top ->[1/2] q) => (top ->[1/4] p * q)");
  CHECK_FALSE(match_schema(f, AxiomSchema::Strong1, L));
  CHECK(match_schema(f, AxiomSchema::Strong1, TNormKind::Product));
  CHECK(match_schema(parse_formula("(top ->[1/2] p) /\\ (top ->[1/2] q) => (top ->[0] p * q)"),
                     AxiomSchema::Strong1, L));
}

TEST_CASE("every instance is recognised by its own schema") {
  gen::Rng rng(41);
  for (auto kind : kKinds) {
    for (auto schema : kAllSchemas) {
      for (int i = 0; i < 40; ++i) {
        auto p = gen::params(rng, schema);
        Formula f = instantiate(schema, p, kind);
        INFO(render(f));
        auto m = match_schema(f, schema, kind);
        REQUIRE(m);
        CHECK(m->schema == schema);
        auto first = match_axiom(f, kind);
        REQUIRE(first);
        CHECK(static_cast<int>(first->schema) <= static_cast<int>(schema));
      }
    }
  }
  AxiomParams zero;
  zero.c = Grade::zero();
  CHECK_THROWS_AS(instantiate(AxiomSchema::Inconsistency, zero, L), ValidationError);
}

TEST_CASE("one-grade perturbations are rejected unless still an instance") {
  gen::Rng rng(42);
  int rejected = 0, still_valid = 0;
  for (auto kind : kKinds) {
    for (auto schema : kAllSchemas) {
      for (int i = 0; i < 40; ++i) {
        auto p = gen::params(rng, schema);
        Formula f = instantiate(schema, p, kind);
        const std::size_t k = rng.index(gen::atom_occurrences(f));
        const Rational delta(rng.coin() ? 1 : -1, 12);
        auto moved = gen::perturb(f, k, delta);
        if (!moved) continue;
        std::size_t counter = 0;
        Grade new_grade;
        gen::map_atoms(
            *moved,
            [&](const Formula& a, std::size_t j) {
              if (j == k) new_grade = a.implication().grade();
              return a;
            },
            counter);
        const bool expected = reachable_by_one_slot(schema, p, *moved, new_grade, kind);
        INFO(schema_name(schema), ": ", render(*moved));
        CHECK(match_schema(*moved, schema, kind).has_value() == expected);
        (expected ? still_valid : rejected) += 1;
      }
    }
  }
  CHECK(rejected > 1000);
  CHECK(still_valid > 0);
}

TEST_CASE("tautologies") {
  CHECK(match_tautology(parse_formula("(p ->[1/2] q) \\/ !(p ->[1/2] q)")));
  CHECK(match_tautology(parse_formula("(p ->[1] q) => ((r ->[1] s) => (p ->[1] q))")));
  CHECK_FALSE(match_tautology(parse_formula("(p ->[1] q) => (r ->[1] s)")));
  // the antecedent multiset is part of the atom
  CHECK_FALSE(match_tautology(parse_formula("(a, a ->[1] b) => (a ->[1] b)")));
  CHECK(match_tautology(parse_formula("(b, a ->[1] c) => (a, b ->[1] c)")));

  std::string wide = "(x0 ->[1] y)";
  for (int i = 1; i < 18; ++i) wide = "(" + wide + " \\/ (x" + std::to_string(i) + " ->[1] y))";
  CHECK_THROWS_AS(match_tautology(parse_formula(wide)), ResourceError);
  CHECK(count_atoms(parse_formula(wide)) == 18);
}

TEST_CASE("check_proof") {
  Theory t{parse_formula("top ->[3/4] p"), parse_formula("p ->[1] q")};
  Proof proof;
  proof.add(t[0], Hypothesis{0});
  proof.add(t[1], Hypothesis{1});
  AxiomParams ap;
  ap.alpha = Expr::top();
  ap.beta = Expr::var("p");
  ap.gamma = Expr::var("q");
  ap.c = Grade(3, 4);
  ap.d = Grade::one();
  std::size_t last = append_rule(proof, AxiomSchema::Trans1, ap, {0, 1}, L);
  CHECK(proof.lines[last].formula == parse_formula("top ->[3/4] q"));
  CHECK(check_proof(t, proof).accepted);
  CHECK(check_proof_of(t, proof, parse_formula("top ->[3/4] q")).accepted);
  CHECK_FALSE(check_proof_of(t, proof, parse_formula("top ->[1] q")).accepted);

  SUBCASE("a raised conclusion grade breaks the axiom line") {
    Proof bad = proof;
    const std::size_t axiom_line = last - 1;
    bad.lines[axiom_line].formula =
        *gen::perturb(bad.lines[axiom_line].formula, 2, Rational(1, 10));  // 3/4 -> 17/20
    auto v = check_proof(t, bad);
    CHECK_FALSE(v.accepted);
    CHECK(v.line == axiom_line);
  }
  SUBCASE("empty") {
    auto v = check_proof(t, Proof{});
    CHECK_FALSE(v.accepted);
    CHECK_FALSE(v.line);
  }
  SUBCASE("forward reference") {
    Proof bad;
    bad.add(parse_formula("top ->[3/4] q"), ModusPonens{0, 1});
    CHECK(check_proof(t, bad).line == 0);
  }
  SUBCASE("wrong hypothesis") {
    Proof bad;
    bad.add(t[1], Hypothesis{0});
    CHECK_FALSE(check_proof(t, bad).accepted);
    bad.lines[0].justification = Hypothesis{7};
    CHECK_FALSE(check_proof(t, bad).accepted);
  }
  SUBCASE("recorded grades must match") {
    Proof bad = proof;
    auto& use = std::get<AxiomUse>(bad.lines[last - 1].justification);
    use.grades = std::vector<Grade>{Grade(1, 2), Grade::one()};
    CHECK(check_proof(t, bad).line == last - 1);
  }
  SUBCASE("tautology witness and cap") {
    Proof bad = proof;
    std::get<TautologyUse>(bad.lines[2].justification).atoms = 5;
    CHECK(check_proof(t, bad).line == 2);
    KernelOptions tight;
    tight.tautology_atom_cap = 1;
    auto v = check_proof(t, proof, tight);
    CHECK_FALSE(v.accepted);
    CHECK(v.reason.find("cap") != std::string::npos);
  }
  SUBCASE("Q lines are not proof lines") {
    Proof bad;
    bad.add(parse_formula("(x, 1)"), TautologyUse{});
    CHECK_FALSE(check_proof({}, bad).accepted);
  }
}

TEST_CASE("the plain calculus refuses mean schemas") {
  Proof p;
  p.add(parse_formula("(top, top ->[1/2] p) => (top ->[1/2] p)"), AxiomUse{AxiomSchema::MeanTop, {}});
  CHECK(check_proof({}, p).accepted);
  KernelOptions plain;
  plain.plain_only = true;
  CHECK_FALSE(check_proof({}, p, plain).accepted);
}

TEST_CASE("weakening") {
  Theory t{parse_formula("a, b ->[3/4] g"), parse_formula("top ->[2/3] p")};
  Proof p;
  p.add(t[0], Hypothesis{0});
  p.add(t[1], Hypothesis{1});
  auto w0 = append_weakening(p, 0, Grade(1, 4));
  auto w1 = append_weakening(p, 1, Grade(1, 6));
  CHECK(p.lines[w0].formula == parse_formula("a, b ->[1/4] g"));
  CHECK(p.lines[w1].formula == parse_formula("top ->[1/6] p"));
  CHECK(append_weakening(p, 1, Grade(2, 3)) == 1);
  CHECK(check_proof(t, p).accepted);
  CHECK_THROWS_AS(append_weakening(p, 1, Grade::one()), ValidationError);
}

TEST_CASE("tau formulas") {
  auto p = Expr::var("p");
  auto half = tau_formulas(p, Grade(1, 2), {2});
  REQUIRE(half.size() == 2);
  CHECK(half[0] == parse_formula("top ->[0] p"));
  CHECK(half[1] == parse_formula("p ->[0] bot"));
  for (const auto& f : tau_formulas(p, Grade::one(), {2, 3, 5})) {
    CHECK(f.implication().antecedent() == Expr::top());
  }
  for (const auto& f : tau_formulas(p, Grade::zero(), {2, 3, 5})) {
    CHECK(f.implication().consequent() == Expr::bottom());
  }
  CHECK(tau_formulas(p, Grade(1, 3), {3, 6}).size() == 6);  // {0,1/6,...,1} minus 1/3

  // On sixths, the twelfths-restriction pins v(p) down to c exactly.
  for (long i = 0; i <= 6; ++i) {
    for (long j = 0; j <= 6; ++j) {
      Evaluation v;
      v.set("p", Grade(i, 6));
      bool all = true;
      for (const auto& f : tau_formulas(p, Grade(j, 6), {12})) all = all && satisfies_formula(v, f);
      CHECK(all == (i == j));
    }
  }
}

TEST_CASE("accepted fuzzed proofs are sound on the grid") {
  gen::Rng rng(43);
  const std::vector<std::string> vars{"p", "q", "r"};
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    auto fp = gen::fuzz_proof(rng, vars, 10);
    REQUIRE(check_proof(fp.theory, fp.proof).accepted);
    for (int e = 0; e < 40; ++e) {
      Evaluation v = gen::evaluation(rng, L, 6, vars);
      if (!satisfies_theory(v, fp.theory)) continue;
      ++checked;
      for (const auto& line : fp.proof.lines) CHECK(satisfies_formula(v, line.formula));
    }
  }
  CHECK(checked > 50);
}
