// Questionnaire scoring: three independent routes to the total score.
//
//   score_mean     arithmetic mean of the item grades
//   score_via_q    degree of the disorder at the answer world under the
//                  canonical prototype/counterexample evaluation
//   score_via_lgim grade d of the kernel-checked derivation of
//                  top ->[d] disorder
//
// cross_check runs all three and reports whether they coincide exactly.

#ifndef GRADED_QUESTIONNAIRE_HPP
#define GRADED_QUESTIONNAIRE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "graded/grade.hpp"
#include "graded/proof.hpp"
#include "graded/score_derivation.hpp"

namespace graded {

enum class Aggregation { Mean };

struct QuestionnaireItem {
  std::string id;
  std::string text;
};

struct QuestionnaireSpec {
  std::string name;
  std::vector<QuestionnaireItem> items;
  unsigned scale_steps = 4;  // answers lie on {0, 1/k, ..., 1}
  std::string disorder;
  Aggregation aggregation = Aggregation::Mean;

  std::vector<std::string> item_ids() const;
};

struct AnswerSheet {
  std::string respondent;
  /// Grades in spec item order.
  std::vector<Grade> answers;
};

/// Throws ValidationError: duplicate or non-identifier item ids, k < 1,
/// unsupported aggregation, disorder name clashing with an item.
void validate_spec(const QuestionnaireSpec& spec);

QuestionnaireSpec spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json spec_to_json(const QuestionnaireSpec& spec);
QuestionnaireSpec load_spec(const std::filesystem::path& path);

/// Parses answer CSV text: header "respondent,<item ids...>" (any column
/// order, every item exactly once), integer cells 0..k.
std::vector<AnswerSheet> parse_answers(std::string_view csv, const QuestionnaireSpec& spec);
std::vector<AnswerSheet> ingest_answers(const std::filesystem::path& path,
                                        const QuestionnaireSpec& spec);

/// Converts raw integer answers 0..k, in item order.
AnswerSheet make_sheet(std::string respondent, const std::vector<unsigned>& raw,
                       const QuestionnaireSpec& spec);

Grade score_mean(const AnswerSheet& sheet, const QuestionnaireSpec& spec);
Grade score_via_q(const AnswerSheet& sheet, const QuestionnaireSpec& spec);

struct LgimScore {
  Grade score;
  ScoreDerivation derivation;
  Verdict verdict;
};

/// Builds and kernel-checks the derivation; the score is read off the
/// proved line top ->[d] disorder.
LgimScore score_via_lgim(const AnswerSheet& sheet, const QuestionnaireSpec& spec);

struct ScoreReport {
  std::string respondent;
  Grade score_mean;
  Grade score_q;
  Grade score_lgim;
  bool proof_accepted = false;
  bool agreement = false;
  std::string diagnostics;  // empty on agreement
  ScoreDerivation derivation;
};

ScoreReport cross_check(const AnswerSheet& sheet, const QuestionnaireSpec& spec);

/// Scores sheets independently on up to `workers` threads; the output order
/// matches the input order.
std::vector<ScoreReport> score_batch(const std::vector<AnswerSheet>& sheets,
                                     const QuestionnaireSpec& spec, unsigned workers = 1);

/// {respondent, score_mean, score_q, score_lgim, proof_accepted, agreement,
///  diagnostics?, proof?}
nlohmann::ordered_json report_to_json(const ScoreReport& report, const std::string& proof_path = {});

/// Four-item depression questionnaire on the five-point scale.
QuestionnaireSpec demo_spec();

}  // namespace graded

#endif  // GRADED_QUESTIONNAIRE_HPP
