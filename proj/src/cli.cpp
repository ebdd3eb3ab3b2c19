#include "graded/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "graded/errors.hpp"
#include "graded/parser.hpp"
#include "graded/proof_script.hpp"
#include "graded/qsemantics.hpp"
#include "graded/questionnaire.hpp"
#include "graded/semantics.hpp"

namespace graded::cli {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Globals {
  std::string tnorm = "lukasiewicz";
  std::optional<unsigned> grid;
  bool json = false;

  TNormKind kind() const { return parse_tnorm(tnorm); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << text;
}

ordered_json evaluation_json(const Evaluation& v) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, g] : v.values()) j[name] = g.str();
  return j;
}

std::string evaluation_text(const Evaluation& v) {
  std::string s;
  for (const auto& [name, g] : v.values()) {
    if (!s.empty()) s += ' ';
    s += name + '=' + g.str();
  }
  return s;
}

// ---- parse ------------------------------------------------------------

struct ParseArgs {
  std::string formula, basic, theory;
};

int cmd_parse(const Globals& g, const ParseArgs& a, std::ostream& out) {
  ordered_json j;
  std::vector<std::string> lines;
  if (!a.theory.empty()) {
    j["kind"] = "theory";
    ordered_json arr = ordered_json::array();
    for (const auto& f : parse_theory(slurp(a.theory))) {
      lines.push_back(render(f));
      arr.push_back(lines.back());
    }
    j["formulas"] = std::move(arr);
  } else if (!a.basic.empty()) {
    lines.push_back(render(parse_basic(a.basic)));
    j["kind"] = "basic";
    j["render"] = lines.back();
  } else {
    Formula f = parse_formula(a.formula);
    lines.push_back(render(f));
    j["kind"] = "formula";
    j["mode"] = f.mode() == FormulaMode::Graded ? "graded-variable" : "implication";
    j["render"] = lines.back();
  }
  if (g.json) {
    out << j.dump() << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
  }
  return kExitOk;
}

// ---- eval -------------------------------------------------------------

struct EvalArgs {
  std::string formula, basic;
  std::vector<std::string> assign;
};

Evaluation evaluation_from(const std::vector<std::string>& assign, TNormKind kind) {
  Evaluation v(kind);
  for (const auto& item : assign) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("assignment '" + item + "' is not name=grade");
    std::string name = item.substr(0, eq);
    if (!is_identifier(name)) throw ValidationError("invalid variable name '" + name + "'");
    if (v.binds(name)) throw ValidationError("variable '" + name + "' assigned twice");
    v.set(name, Grade::parse(item.substr(eq + 1)));
  }
  return v;
}

int cmd_eval(const Globals& g, const EvalArgs& a, std::ostream& out) {
  const Evaluation v = evaluation_from(a.assign, g.kind());
  if (!a.basic.empty()) {
    Grade d = eval_basic(parse_basic(a.basic), v);
    if (g.json) {
      ordered_json j;
      j["degree"] = d.str();
      j["tnorm"] = std::string(tnorm_name(v.tnorm()));
      out << j.dump() << '\n';
    } else {
      out << d.str() << '\n';
    }
    return kExitOk;
  }
  const bool sat = satisfies_formula(v, parse_formula(a.formula));
  if (g.json) {
    ordered_json j;
    j["satisfied"] = sat;
    j["tnorm"] = std::string(tnorm_name(v.tnorm()));
    out << j.dump() << '\n';
  } else {
    out << (sat ? "satisfied" : "not satisfied") << '\n';
  }
  return sat ? kExitOk : kExitFalse;
}

// ---- entail -----------------------------------------------------------

struct EntailArgs {
  std::string theory, formula;
  unsigned workers = 1;
};

int cmd_entail(const Globals& g, const EntailArgs& a, std::ostream& out) {
  const Theory t = parse_theory(slurp(a.theory));
  const Formula f = parse_formula(a.formula);
  const unsigned m = g.grid.value_or(8);
  GridSearchOptions options;
  options.workers = a.workers;
  const GridVerdict verdict = check_on_grid(t, f, m, g.kind(), options);
  if (g.json) {
    ordered_json j;
    j["verdict"] = verdict.label();
    j["holds"] = verdict.holds();
    j["denominator"] = m;
    j["tnorm"] = std::string(tnorm_name(g.kind()));
    if (verdict.countermodel) j["countermodel"] = evaluation_json(*verdict.countermodel);
    out << j.dump() << '\n';
  } else {
    out << verdict.label() << '\n';
    if (verdict.countermodel) out << "countermodel: " << evaluation_text(*verdict.countermodel) << '\n';
  }
  return verdict.holds() ? kExitOk : kExitFalse;
}

// ---- check-proof ------------------------------------------------------

struct CheckProofArgs {
  std::string theory, proof, goal;
  std::size_t atom_cap = kDefaultTautologyAtomCap;
  bool plain = false;
};

int cmd_check_proof(const Globals& g, const CheckProofArgs& a, std::ostream& out) {
  const Theory t = a.theory.empty() ? Theory{} : parse_theory(slurp(a.theory));
  const Proof p = read_proof_script(slurp(a.proof));
  KernelOptions options;
  options.tnorm = g.kind();
  options.tautology_atom_cap = a.atom_cap;
  options.plain_only = a.plain;
  const Verdict v = a.goal.empty() ? check_proof(t, p, options)
                                   : check_proof_of(t, p, parse_formula(a.goal), options);
  // The verdict object is the interface; --json only affects other commands.
  out << verdict_to_json(v).dump() << '\n';
  return v.accepted ? kExitOk : kExitFalse;
}

// ---- qcheck -----------------------------------------------------------

struct QCheckArgs {
  std::string theory, dump;
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::optional<unsigned> grid;
};

int cmd_qcheck(const Globals& g, const QCheckArgs& a, std::ostream& out) {
  const Theory t = parse_theory(slurp(a.theory));
  std::vector<std::string> names = a.names;
  if (names.empty()) {
    if (a.dim == 0) throw ValidationError("give --dim or --basic");
    for (std::size_t i = 1; i <= a.dim; ++i) names.push_back("phi" + std::to_string(i));
  } else if (a.dim != 0 && a.dim != names.size()) {
    throw ValidationError("--dim disagrees with the number of --basic names");
  }
  const unsigned k = a.grid.value_or(g.grid.value_or(4));
  q::CorrectnessResult result = q::check_theory_correct_canonical(t, names, k);
  const bool ok = result.evaluation.has_value();

  if (ok && !a.dump.empty()) {
    std::ostringstream csv;
    for (const auto& n : names) csv << n << ',';
    csv << result.disorder << '\n';
    q::for_each_grid_world(names.size(), k, [&](const q::World& w) {
      for (const auto& c : w) csv << c.str() << ',';
      csv << q::degree(*result.evaluation, result.disorder, w).str() << '\n';
      return true;
    });
    spill(a.dump, csv.str());
  }

  if (g.json) {
    ordered_json j;
    j["correct"] = ok;
    j["grid"] = k;
    if (ok) j["disorder"] = result.disorder;
    j["reason"] = result.reason;
    if (ok && !a.dump.empty()) j["dump"] = a.dump;
    out << j.dump() << '\n';
  } else {
    out << (ok ? "correct: " : "not shown correct: ") << result.reason << '\n';
  }
  return ok ? kExitOk : kExitFalse;
}

// ---- score ------------------------------------------------------------

struct ScoreArgs {
  std::string spec, answers, out;
  unsigned workers = 0;
};

std::string theory_text(const Theory& t) {
  std::string s;
  for (const auto& f : t) s += render(f) + '\n';
  return s;
}

int cmd_score(const Globals& g, const ScoreArgs& a, std::ostream& out) {
  const QuestionnaireSpec spec = load_spec(a.spec);
  const auto sheets = ingest_answers(a.answers, spec);
  unsigned workers = a.workers ? a.workers : std::max(1u, std::thread::hardware_concurrency());
  const auto reports = score_batch(sheets, spec, workers);

  std::ostringstream jsonl;
  bool all_agree = true;
  const fs::path out_path = a.out;
  const fs::path dir = out_path.has_parent_path() ? out_path.parent_path() : fs::path(".");
  const std::string stem = out_path.stem().string();
  if (!a.out.empty()) fs::create_directories(dir);
  for (const auto& r : reports) {
    all_agree = all_agree && r.agreement;
    std::string proof_name;
    if (!a.out.empty()) {
      proof_name = stem + "." + r.respondent + ".proof.jsonl";
      spill(dir / proof_name, write_proof_script(r.derivation.proof));
      spill(dir / (stem + "." + r.respondent + ".theory.lgi"), theory_text(r.derivation.theory));
    }
    jsonl << report_to_json(r, proof_name).dump() << '\n';
  }

  if (!a.out.empty()) {
    spill(out_path, jsonl.str());
    const std::size_t agreeing = static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const ScoreReport& r) { return r.agreement; }));
    if (g.json) {
      ordered_json j;
      j["respondents"] = reports.size();
      j["agreeing"] = agreeing;
      j["reports"] = a.out;
      out << j.dump() << '\n';
    } else {
      out << agreeing << "/" << reports.size() << " respondents with three-way agreement; reports in "
          << a.out << '\n';
    }
  } else {
    out << jsonl.str();
  }
  return all_agree ? kExitOk : kExitFalse;
}

// ---- demo -------------------------------------------------------------

struct DemoArgs {
  std::string proof_out;
};

int cmd_demo(const Globals& g, const DemoArgs& a, std::ostream& out) {
  const QuestionnaireSpec spec = demo_spec();
  const std::vector<unsigned> raw{4, 3, 2, 1};
  const AnswerSheet sheet = make_sheet("demo", raw, spec);
  const ScoreReport r = cross_check(sheet, spec);
  if (!a.proof_out.empty()) spill(a.proof_out, write_proof_script(r.derivation.proof));

  if (g.json) {
    ordered_json j = report_to_json(r, a.proof_out);
    j["proof_lines"] = r.derivation.proof.lines.size();
    out << j.dump() << '\n';
  } else {
    out << spec.name << ", answers on 0.." << spec.scale_steps << '\n';
    for (std::size_t i = 0; i < spec.items.size(); ++i) {
      out << "  " << spec.items[i].id << " = " << raw[i] << "  (" << spec.items[i].text << ")\n";
    }
    out << "score_mean  " << r.score_mean.str() << '\n'
        << "score_q     " << r.score_q.str() << '\n'
        << "score_lgim  " << r.score_lgim.str() << "  ("
        << render(r.derivation.proof.lines[r.derivation.lower_line].formula) << ", "
        << r.derivation.proof.lines.size() << " lines, " << (r.proof_accepted ? "accepted" : "rejected")
        << ")\n"
        << "agreement   " << (r.agreement ? "yes" : "no") << '\n';
    if (!r.diagnostics.empty()) out << "diagnostics " << r.diagnostics << '\n';
  }
  return r.agreement ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded-implication logics, prototype semantics and questionnaire scoring", "graded"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  unsigned grid_value = 0;
  app.add_option("--tnorm", g.tnorm, "session t-norm")
      ->check(CLI::IsMember({"lukasiewicz", "product", "min"}))
      ->capture_default_str();
  auto* grid_opt = app.add_option("--grid-denominator", grid_value, "grid denominator m (values 0, 1/m, ..., 1)")
                       ->check(CLI::Range(1u, 1000000u));
  app.add_flag("--json", g.json, "machine-readable output");

  ParseArgs pa;
  auto* parse = app.add_subcommand("parse", "parse and print canonical text");
  auto* pg = parse->add_option_group("input");
  pg->add_option("--formula", pa.formula, "outer formula");
  pg->add_option("--basic", pa.basic, "basic expression");
  pg->add_option("--theory", pa.theory, "theory file")->check(CLI::ExistingFile);
  pg->require_option(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate under an assignment");
  auto* eg = eval->add_option_group("input");
  eg->add_option("--formula", ea.formula, "outer formula (satisfaction)");
  eg->add_option("--basic", ea.basic, "basic expression (degree)");
  eg->require_option(1);
  eval->add_option("--assign,-a", ea.assign, "name=grade, repeatable");

  EntailArgs na;
  auto* entail = app.add_subcommand("entail", "search a grid for a countermodel");
  entail->add_option("--theory", na.theory, "theory file")->required()->check(CLI::ExistingFile);
  entail->add_option("--formula", na.formula, "goal formula")->required();
  entail->add_option("--workers", na.workers, "search threads")->check(CLI::Range(1u, 256u));

  CheckProofArgs ca;
  auto* check = app.add_subcommand("check-proof", "verify a proof script");
  check->add_option("--theory", ca.theory, "theory file")->check(CLI::ExistingFile);
  check->add_option("--proof", ca.proof, "proof script (JSON lines)")->required()->check(CLI::ExistingFile);
  check->add_option("--goal", ca.goal, "required last line");
  check->add_option("--atom-cap", ca.atom_cap, "tautology atom cap")->capture_default_str();
  check->add_flag("--plain", ca.plain, "reject the mean-value schemas");

  QCheckArgs qa;
  unsigned q_grid = 0;
  auto* qcheck = app.add_subcommand("qcheck", "check a canonical disorder theory on a grid");
  qcheck->add_option("--theory", qa.theory, "Q theory file")->required()->check(CLI::ExistingFile);
  qcheck->add_option("--dim", qa.dim, "number of basic variables phi1..phin");
  qcheck->add_option("--basic", qa.names, "basic variable names, in coordinate order")->delimiter(',');
  auto* q_grid_opt = qcheck->add_option("--grid", q_grid, "grid denominator k")->check(CLI::Range(1u, 1000000u));
  qcheck->add_option("--dump", qa.dump, "write the degree field as CSV");

  ScoreArgs sa;
  auto* score = app.add_subcommand("score", "score answer sheets three ways");
  score->add_option("--spec", sa.spec, "questionnaire spec (JSON)")->required()->check(CLI::ExistingFile);
  score->add_option("--answers", sa.answers, "answers (CSV)")->required()->check(CLI::ExistingFile);
  score->add_option("--out", sa.out, "reports (JSON lines); proofs go next to it");
  score->add_option("--workers", sa.workers, "scoring threads (0: all cores)");

  DemoArgs da;
  auto* demo = app.add_subcommand("demo", "score the bundled four-item sheet");
  demo->add_option("--proof-out", da.proof_out, "write the derivation as a proof script");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  if (grid_opt->count() > 0) g.grid = grid_value;
  if (q_grid_opt->count() > 0) qa.grid = q_grid;

  try {
    if (parse->parsed()) return cmd_parse(g, pa, out);
    if (eval->parsed()) return cmd_eval(g, ea, out);
    if (entail->parsed()) return cmd_entail(g, na, out);
    if (check->parsed()) return cmd_check_proof(g, ca, out);
    if (qcheck->parsed()) return cmd_qcheck(g, qa, out);
    if (score->parsed()) return cmd_score(g, sa, out);
    if (demo->parsed()) return cmd_demo(g, da, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace graded::cli
