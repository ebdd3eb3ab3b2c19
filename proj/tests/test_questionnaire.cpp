#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "graded/errors.hpp"
#include "graded/questionnaire.hpp"

using namespace graded;

namespace {

Grade g(long p, long q) { return Grade(p, q); }

std::string error_of(std::string_view csv, const QuestionnaireSpec& spec) {
  try {
    parse_answers(csv, spec);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

QuestionnaireSpec small_spec(std::size_t n, unsigned k) {
  QuestionnaireSpec s;
  s.name = "small";
  for (std::size_t i = 0; i < n; ++i) s.items.push_back({"q" + std::to_string(i + 1), ""});
  s.scale_steps = k;
  s.disorder = "dis";
  return s;
}

// Oracle: integer sum over n*k, reduced by the rational type.
Rational raw_mean(const std::vector<unsigned>& raw, unsigned k) {
  long sum = 0;
  for (unsigned r : raw) sum += r;
  Rational x(sum, static_cast<long>(raw.size() * k));
  x.canonicalize();
  return x;
}

}  // namespace

TEST_CASE("spec json") {
  auto spec = spec_from_json(nlohmann::json::parse(R"({
    "name": "demo", "scale_steps": 4, "disorder": "dep",
    "items": [{"id": "mood", "text": "Low mood"}, {"id": "sleep"}]
  })"));
  CHECK(spec.item_ids() == std::vector<std::string>{"mood", "sleep"});
  CHECK(spec.items[0].text == "Low mood");
  CHECK(spec_to_json(spec).dump() ==
        R"({"name":"demo","items":[{"id":"mood","text":"Low mood"},{"id":"sleep","text":""}],)"
        R"("scale_steps":4,"disorder":"dep","aggregation":"mean"})");
  CHECK(spec_from_json(nlohmann::json::parse(spec_to_json(spec).dump())).item_ids() == spec.item_ids());
}

TEST_CASE("spec errors") {
  auto bad = [](const char* text) {
    CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(text)), ValidationError);
  };
  bad(R"({"name": "x", "items": [], "scale_steps": 4, "disorder": "d"})");
  bad(R"({"name": "x", "items": [{"id": "a"}], "scale_steps": 0, "disorder": "d"})");
  bad(R"({"name": "x", "items": [{"id": "a"}, {"id": "a"}], "scale_steps": 4, "disorder": "d"})");
  bad(R"({"name": "x", "items": [{"id": "a"}], "scale_steps": 4, "disorder": "a"})");
  bad(R"({"name": "x", "items": [{"id": "1a"}], "scale_steps": 4, "disorder": "d"})");
  bad(R"({"name": "x", "items": [{"id": "respondent"}], "scale_steps": 4, "disorder": "d"})");
  bad(R"({"name": "x", "items": [{"id": "a"}], "scale_steps": 4, "disorder": "d", "aggregation": "sum"})");
  bad(R"({"name": "x", "items": [{"id": "a"}], "disorder": "d"})");
  bad(R"({"name": "x", "items": "a", "scale_steps": 4, "disorder": "d"})");
  CHECK_NOTHROW(validate_spec(demo_spec()));
}

TEST_CASE("answer files") {
  const auto spec = demo_spec();
  auto sheets = parse_answers("respondent,sleep,mood,energy,interest\nr1,1,4,2,3\n\nr2,0,0,0,0\n", spec);
  REQUIRE(sheets.size() == 2);
  CHECK(sheets[0].respondent == "r1");
  CHECK(sheets[0].answers == std::vector<Grade>{Grade::one(), g(3, 4), g(1, 2), g(1, 4)});
  CHECK(sheets[1].answers == std::vector<Grade>(4, Grade::zero()));

  const std::string header = "respondent,mood,interest,energy,sleep\n";
  CHECK(error_of(header + "r1,4,3,2\n", spec) == "answers line 2: expected 5 cells, got 4");
  CHECK(error_of(header + "r1,4,3,2,5\n", spec) == "answers line 2: answer 5 outside 0..4");
  CHECK(error_of(header + "r1,4,3,2,x\n", spec) == "answers line 2: answer 'x' is not an integer");
  CHECK(error_of(header + "r1,4,3,2,1\nr1,0,0,0,0\n", spec) == "answers line 3: duplicate respondent 'r1'");
  CHECK(error_of(header + "../x,4,3,2,1\n", spec) == "answers line 2: invalid respondent id '../x'");
  CHECK(error_of("respondent,mood,interest,energy\n", spec) == "answers line 1: missing item 'sleep'");
  CHECK(error_of("respondent,mood,mood,energy,sleep\n", spec) == "answers line 1: duplicate column 'mood'");
  CHECK(error_of("respondent,mood,interest,energy,sleep,extra\n", spec) ==
        "answers line 1: unknown item id 'extra'");
  CHECK(error_of("id,mood\n", spec) == "answers line 1: header must start with 'respondent'");
  CHECK(error_of("", spec) == "answers file has no header");
}

TEST_CASE("worked scores") {
  const auto spec = demo_spec();
  auto check = [&](std::vector<unsigned> raw, Grade expected) {
    auto report = cross_check(make_sheet("r", raw, spec), spec);
    CHECK(report.score_mean == expected);
    CHECK(report.score_q == expected);
    CHECK(report.score_lgim == expected);
    CHECK(report.proof_accepted);
    CHECK(report.agreement);
    CHECK(report.diagnostics.empty());
  };
  check({4, 3, 2, 1}, g(5, 8));
  check({4, 0, 0, 0}, g(1, 4));
  check({2, 2, 2, 2}, g(1, 2));
  check({4, 4, 4, 4}, Grade::one());
  check({0, 0, 0, 0}, Grade::zero());
  CHECK_THROWS_AS(make_sheet("r", {4, 3, 2}, spec), ValidationError);
  CHECK_THROWS_AS(make_sheet("r", {4, 3, 2, 7}, spec), ValidationError);
}

TEST_CASE("scores are the mean on random sheets") {
  gen::Rng rng(81);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
    const unsigned k = static_cast<unsigned>(rng.range(1, 6));
    const auto spec = small_spec(n, k);
    std::vector<unsigned> raw;
    for (std::size_t j = 0; j < n; ++j) raw.push_back(static_cast<unsigned>(rng.range(0, k)));
    auto report = cross_check(make_sheet("r", raw, spec), spec);
    CHECK(report.score_mean.value() == raw_mean(raw, k));
    CHECK(report.agreement);

    // Permuting the answers leaves the score unchanged.
    std::vector<unsigned> shuffled = raw;
    std::rotate(shuffled.begin(), shuffled.begin() + static_cast<long>(rng.index(n)), shuffled.end());
    CHECK(score_via_q(make_sheet("r", shuffled, spec), spec) == report.score_q);

    // Raising one answer never lowers the score.
    std::vector<unsigned> raised = raw;
    std::size_t at = rng.index(n);
    if (raised[at] < k) ++raised[at];
    CHECK(score_via_lgim(make_sheet("r", raised, spec), spec).score >= report.score_lgim);
  }
}

TEST_CASE("batches keep input order for any worker count") {
  const auto spec = demo_spec();
  std::vector<AnswerSheet> sheets;
  gen::Rng rng(82);
  for (int i = 0; i < 24; ++i) {
    std::vector<unsigned> raw;
    for (int j = 0; j < 4; ++j) raw.push_back(static_cast<unsigned>(rng.range(0, 4)));
    sheets.push_back(make_sheet("r" + std::to_string(i), raw, spec));
  }
  auto dump = [](const std::vector<ScoreReport>& reports) {
    std::string s;
    for (const auto& r : reports) s += report_to_json(r).dump() + "\n";
    return s;
  };
  const auto one = score_batch(sheets, spec, 1);
  REQUIRE(one.size() == sheets.size());
  for (std::size_t i = 0; i < sheets.size(); ++i) CHECK(one[i].respondent == sheets[i].respondent);
  CHECK(dump(score_batch(sheets, spec, 3)) == dump(one));
  CHECK(dump(score_batch(sheets, spec, 8)) == dump(one));
}

TEST_CASE("report json") {
  const auto spec = demo_spec();
  auto report = cross_check(make_sheet("r7", {4, 3, 2, 1}, spec), spec);
  CHECK(report_to_json(report).dump() ==
        R"({"respondent":"r7","score_mean":"5/8","score_q":"5/8","score_lgim":"5/8",)"
        R"("proof_accepted":true,"agreement":true})");
  CHECK(report_to_json(report, "out/r7.proof.jsonl").dump().ends_with(R"("proof":"out/r7.proof.jsonl"})"));

  report.score_q = g(1, 2);
  report.agreement = false;
  report.diagnostics = "mean=5/8 q=1/2 lgim=5/8";
  CHECK(report_to_json(report).dump().find(R"("diagnostics":"mean=5/8 q=1/2 lgim=5/8")") != std::string::npos);
}
