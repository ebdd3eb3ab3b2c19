#include "graded/questionnaire.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "graded/errors.hpp"
#include "graded/parser.hpp"
#include "graded/qsemantics.hpp"

namespace graded {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) return cells;
    start = comma + 1;
  }
}

bool safe_respondent(const std::string& id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char ch) {
    auto u = static_cast<unsigned char>(ch);
    return std::isalnum(u) || ch == '_' || ch == '-' || ch == '.';
  });
}

Grade answer_grade(unsigned raw, unsigned k) {
  if (raw > k) {
    throw ValidationError("answer " + std::to_string(raw) + " outside 0.." + std::to_string(k));
  }
  return Grade(static_cast<long>(raw), static_cast<long>(k));
}

void validate_sheet(const AnswerSheet& sheet, const QuestionnaireSpec& spec) {
  if (sheet.answers.size() != spec.items.size()) {
    throw ValidationError("sheet '" + sheet.respondent + "' has " + std::to_string(sheet.answers.size()) +
                          " answers for " + std::to_string(spec.items.size()) + " items");
  }
  for (const auto& g : sheet.answers) {
    Rational scaled = g.value() * spec.scale_steps;
    if (scaled.get_den() != 1) {
      throw ValidationError("answer " + g.str() + " is not on the " + std::to_string(spec.scale_steps) +
                            "-step scale");
    }
  }
}

}  // namespace

std::vector<std::string> QuestionnaireSpec::item_ids() const {
  std::vector<std::string> ids;
  for (const auto& item : items) ids.push_back(item.id);
  return ids;
}

void validate_spec(const QuestionnaireSpec& spec) {
  if (spec.items.empty()) throw ValidationError("questionnaire has no items");
  if (spec.scale_steps < 1) throw ValidationError("scale_steps must be at least 1");
  if (!is_identifier(spec.disorder)) throw ValidationError("invalid disorder name '" + spec.disorder + "'");
  std::set<std::string> seen;
  for (const auto& item : spec.items) {
    if (!is_identifier(item.id)) throw ValidationError("invalid item id '" + item.id + "'");
    if (item.id == "respondent") throw ValidationError("item id 'respondent' is reserved");
    if (!seen.insert(item.id).second) throw ValidationError("duplicate item id '" + item.id + "'");
    if (item.id == spec.disorder) throw ValidationError("item id equals the disorder name");
  }
}

QuestionnaireSpec spec_from_json(const json& j) {
  try {
    QuestionnaireSpec spec;
    spec.name = j.at("name").get<std::string>();
    for (const auto& item : j.at("items")) {
      spec.items.push_back({item.at("id").get<std::string>(), item.value("text", std::string{})});
    }
    const auto steps = j.at("scale_steps").get<long long>();
    if (steps < 1) throw ValidationError("scale_steps must be at least 1");
    spec.scale_steps = static_cast<unsigned>(steps);
    spec.disorder = j.at("disorder").get<std::string>();
    const std::string aggregation = j.value("aggregation", std::string("mean"));
    if (aggregation != "mean") throw ValidationError("unsupported aggregation '" + aggregation + "'");
    validate_spec(spec);
    return spec;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed questionnaire spec: ") + e.what());
  }
}

ordered_json spec_to_json(const QuestionnaireSpec& spec) {
  ordered_json j;
  j["name"] = spec.name;
  ordered_json items = ordered_json::array();
  for (const auto& item : spec.items) items.push_back({{"id", item.id}, {"text", item.text}});
  j["items"] = std::move(items);
  j["scale_steps"] = spec.scale_steps;
  j["disorder"] = spec.disorder;
  j["aggregation"] = "mean";
  return j;
}

QuestionnaireSpec load_spec(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ValidationError("'" + path.string() + "': " + e.what());
  }
  return spec_from_json(j);
}

AnswerSheet make_sheet(std::string respondent, const std::vector<unsigned>& raw,
                       const QuestionnaireSpec& spec) {
  if (raw.size() != spec.items.size()) {
    throw ValidationError("expected " + std::to_string(spec.items.size()) + " answers, got " +
                          std::to_string(raw.size()));
  }
  AnswerSheet sheet{std::move(respondent), {}};
  for (unsigned r : raw) sheet.answers.push_back(answer_grade(r, spec.scale_steps));
  return sheet;
}

std::vector<AnswerSheet> parse_answers(std::string_view csv, const QuestionnaireSpec& spec) {
  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::size_t> column_item;  // csv column -> item index
  std::vector<AnswerSheet> sheets;
  std::set<std::string> respondents;
  bool header_seen = false;

  std::map<std::string, std::size_t> item_index;
  for (std::size_t i = 0; i < spec.items.size(); ++i) item_index[spec.items[i].id] = i;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string where = "answers line " + std::to_string(line_no) + ": ";
    auto cells = split_csv(line);
    if (!header_seen) {
      header_seen = true;
      if (cells.empty() || cells[0] != "respondent") throw ValidationError(where + "header must start with 'respondent'");
      std::set<std::string> seen;
      for (std::size_t c = 1; c < cells.size(); ++c) {
        auto it = item_index.find(cells[c]);
        if (it == item_index.end()) throw ValidationError(where + "unknown item id '" + cells[c] + "'");
        if (!seen.insert(cells[c]).second) throw ValidationError(where + "duplicate column '" + cells[c] + "'");
        column_item.push_back(it->second);
      }
      for (const auto& item : spec.items) {
        if (!seen.contains(item.id)) throw ValidationError(where + "missing item '" + item.id + "'");
      }
      continue;
    }
    if (cells.size() != column_item.size() + 1) {
      throw ValidationError(where + "expected " + std::to_string(column_item.size() + 1) + " cells, got " +
                            std::to_string(cells.size()));
    }
    if (!safe_respondent(cells[0])) throw ValidationError(where + "invalid respondent id '" + cells[0] + "'");
    if (!respondents.insert(cells[0]).second) {
      throw ValidationError(where + "duplicate respondent '" + cells[0] + "'");
    }
    std::vector<unsigned> raw(spec.items.size());
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const std::string& cell = cells[c];
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ValidationError(where + "answer '" + cell + "' is not an integer");
      }
      if (value > spec.scale_steps) {
        throw ValidationError(where + "answer " + cell + " outside 0.." + std::to_string(spec.scale_steps));
      }
      raw[column_item[c - 1]] = value;
    }
    sheets.push_back(make_sheet(cells[0], raw, spec));
  }
  if (!header_seen) throw ValidationError("answers file has no header");
  return sheets;
}

std::vector<AnswerSheet> ingest_answers(const std::filesystem::path& path, const QuestionnaireSpec& spec) {
  return parse_answers(read_file(path), spec);
}

Grade score_mean(const AnswerSheet& sheet, const QuestionnaireSpec& spec) {
  validate_sheet(sheet, spec);
  return mean(sheet.answers);
}

Grade score_via_q(const AnswerSheet& sheet, const QuestionnaireSpec& spec) {
  validate_sheet(sheet, spec);
  auto e = q::canonical_disorder_eval(spec.item_ids(), spec.disorder);
  return q::degree(e, spec.disorder, sheet.answers);
}

LgimScore score_via_lgim(const AnswerSheet& sheet, const QuestionnaireSpec& spec) {
  validate_sheet(sheet, spec);
  ScoreDerivation derivation = build_score_derivation(spec.item_ids(), spec.disorder, sheet.answers);
  KernelOptions options;
  options.tautology_atom_cap = std::max(kDefaultTautologyAtomCap, spec.items.size() + 1);
  Verdict verdict = check_proof(derivation.theory, derivation.proof, options);

  // Read the score off the proved line, not off the constructor's bookkeeping.
  const Formula& lower = derivation.proof.lines.at(derivation.lower_line).formula;
  const GradedImplication& gi = lower.implication();
  if (verdict.accepted &&
      !(gi.is_simple() && gi.antecedent() == Expr::top() && gi.consequent() == Expr::var(spec.disorder))) {
    verdict = Verdict::reject(derivation.lower_line, "score line is not top ->[d] " + spec.disorder);
  }
  Grade score = gi.grade();
  return LgimScore{std::move(score), std::move(derivation), std::move(verdict)};
}

ScoreReport cross_check(const AnswerSheet& sheet, const QuestionnaireSpec& spec) {
  ScoreReport report;
  report.respondent = sheet.respondent;
  report.score_mean = score_mean(sheet, spec);
  report.score_q = score_via_q(sheet, spec);
  LgimScore lgim = score_via_lgim(sheet, spec);
  report.score_lgim = lgim.score;
  report.proof_accepted = lgim.verdict.accepted;
  report.derivation = std::move(lgim.derivation);
  report.agreement = report.proof_accepted && report.score_mean == report.score_q &&
                     report.score_q == report.score_lgim;
  if (!report.agreement) {
    std::ostringstream d;
    d << "mean=" << report.score_mean.str() << " q=" << report.score_q.str()
      << " lgim=" << report.score_lgim.str();
    if (!lgim.verdict.accepted) {
      d << "; proof rejected";
      if (lgim.verdict.line) d << " at line " << *lgim.verdict.line;
      d << ": " << lgim.verdict.reason;
    }
    report.diagnostics = d.str();
  }
  return report;
}

std::vector<ScoreReport> score_batch(const std::vector<AnswerSheet>& sheets, const QuestionnaireSpec& spec,
                                     unsigned workers) {
  std::vector<ScoreReport> out(sheets.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(sheets.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < sheets.size(); ++i) out[i] = cross_check(sheets[i], spec);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < sheets.size(); i += workers) out[i] = cross_check(sheets[i], spec);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

ordered_json report_to_json(const ScoreReport& report, const std::string& proof_path) {
  ordered_json j;
  j["respondent"] = report.respondent;
  j["score_mean"] = report.score_mean.str();
  j["score_q"] = report.score_q.str();
  j["score_lgim"] = report.score_lgim.str();
  j["proof_accepted"] = report.proof_accepted;
  j["agreement"] = report.agreement;
  if (!report.diagnostics.empty()) j["diagnostics"] = report.diagnostics;
  if (!proof_path.empty()) j["proof"] = proof_path;
  return j;
}

QuestionnaireSpec demo_spec() {
  QuestionnaireSpec spec;
  spec.name = "depression screening (four items)";
  spec.items = {
      {"mood", "Low or depressed mood"},
      {"interest", "Loss of interest or pleasure"},
      {"energy", "Lack of energy or increased fatigue"},
      {"sleep", "Disturbed sleep"},
  };
  spec.scale_steps = 4;
  spec.disorder = "depression";
  return spec;
}

}  // namespace graded
