#include "graded/score_derivation.hpp"

#include <set>

#include "graded/errors.hpp"

namespace graded {

namespace {

constexpr auto kLuk = TNormKind::Lukasiewicz;

Formula gi(Expr a, Expr b, Grade c) {
  return Formula::atom(GradedImplication(std::move(a), std::move(b), std::move(c)));
}

void validate(const std::vector<std::string>& items, const std::string& disorder,
              const std::vector<Grade>& answers) {
  if (items.empty()) throw ValidationError("a questionnaire needs at least one item");
  if (items.size() != answers.size()) {
    throw ValidationError("expected " + std::to_string(items.size()) + " answers, got " +
                          std::to_string(answers.size()));
  }
  std::set<std::string> seen;
  for (const auto& name : items) {
    if (!is_identifier(name)) throw ValidationError("invalid item name '" + name + "'");
    if (!seen.insert(name).second) throw ValidationError("duplicate item name '" + name + "'");
    if (name == disorder) throw ValidationError("item name clashes with the disorder name");
  }
  if (!is_identifier(disorder)) throw ValidationError("invalid disorder name '" + disorder + "'");
}

}  // namespace

std::vector<std::string> default_item_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("phi" + std::to_string(i));
  return out;
}

Theory score_theory(const std::vector<std::string>& items, const std::string& disorder,
                    const std::vector<Grade>& answers) {
  validate(items, disorder, answers);
  std::vector<Expr> phis;
  std::vector<Expr> neg_phis;
  for (const auto& name : items) {
    phis.push_back(Expr::var(name));
    neg_phis.push_back(Expr::neg(phis.back()));
  }
  const Expr delta = Expr::var(disorder);

  Theory t;
  t.push_back(Formula::atom(GradedImplication(phis, delta, Grade::one())));
  t.push_back(Formula::atom(GradedImplication(neg_phis, Expr::neg(delta), Grade::one())));
  for (std::size_t i = 0; i < items.size(); ++i) t.push_back(gi(phis[i], Expr::bottom(), negate(answers[i])));
  for (std::size_t i = 0; i < items.size(); ++i) t.push_back(gi(Expr::top(), phis[i], answers[i]));
  return t;
}

ScoreDerivation build_score_derivation(const std::vector<std::string>& items,
                                       const std::string& disorder,
                                       const std::vector<Grade>& answers) {
  ScoreDerivation out;
  out.theory = score_theory(items, disorder, answers);
  out.score = mean(answers);
  const std::size_t n = items.size();
  const Grade d = out.score;
  const Grade not_d = negate(d);
  const Expr top = Expr::top();
  const Expr bot = Expr::bottom();
  const Expr delta = Expr::var(disorder);
  std::vector<Expr> phis;
  for (const auto& name : items) phis.push_back(Expr::var(name));
  Proof& p = out.proof;

  // Lower bound: top, ..., top ->[d] delta by mtrans1, then mtop.
  std::vector<std::size_t> lower_premises;
  for (std::size_t i = 0; i < n; ++i) lower_premises.push_back(p.add(out.theory[n + 2 + i], Hypothesis{n + 2 + i}));
  lower_premises.push_back(p.add(out.theory[0], Hypothesis{0}));
  AxiomParams mt;
  mt.alphas.assign(n, top);
  mt.betas = phis;
  mt.cs = answers;
  mt.d = Grade::one();
  mt.gamma = delta;
  std::size_t tops_to_delta = append_rule(p, AxiomSchema::MeanTrans1, mt, lower_premises, kLuk);
  AxiomParams mtop;
  mtop.n = n;
  mtop.c = d;
  mtop.alpha = delta;
  std::size_t lower_rule = append_axiom(p, AxiomSchema::MeanTop, mtop, kLuk);

  // top ->[1] ~bot: bot ->1 ~top, contraposed, chained after top ->1 ~~top.
  AxiomParams ps;
  ps.alpha = Expr::neg(top);
  std::size_t bot_rule = append_axiom(p, AxiomSchema::Bottom, ps, kLuk);
  ps = {};
  ps.alpha = bot;
  ps.beta = Expr::neg(top);
  ps.d = Grade::one();
  std::size_t nnt_nb = append_rule(p, AxiomSchema::Neg1, ps, {bot_rule}, kLuk);
  ps = {};
  ps.alpha = top;
  std::size_t t_nnt = append_axiom(p, AxiomSchema::Neg3, ps, kLuk);
  ps = {};
  ps.alpha = top;
  ps.beta = Expr::neg(Expr::neg(top));
  ps.gamma = Expr::neg(bot);
  ps.c = ps.d = Grade::one();
  std::size_t top_notbot = append_rule(p, AxiomSchema::Trans1, ps, {t_nnt, nnt_nb}, kLuk);

  // ~top ->[1] bot: ~bot ->1 top, contraposed, chained before ~~bot ->1 bot.
  ps = {};
  ps.alpha = Expr::neg(bot);
  std::size_t top_rule = append_axiom(p, AxiomSchema::Top, ps, kLuk);
  ps = {};
  ps.alpha = Expr::neg(bot);
  ps.beta = top;
  ps.d = Grade::one();
  std::size_t nt_nnb = append_rule(p, AxiomSchema::Neg1, ps, {top_rule}, kLuk);
  ps = {};
  ps.alpha = bot;
  std::size_t nnb_b = append_axiom(p, AxiomSchema::Neg2, ps, kLuk);
  ps = {};
  ps.alpha = Expr::neg(top);
  ps.beta = Expr::neg(Expr::neg(bot));
  ps.gamma = bot;
  ps.c = ps.d = Grade::one();
  std::size_t nottop_bot = append_rule(p, AxiomSchema::Trans1, ps, {nt_nnb, nnb_b}, kLuk);

  // top ->[1 - c_i] ~phi_i from phi_i ->[1 - c_i] bot.
  std::vector<std::size_t> upper_premises;
  std::vector<Grade> neg_answers;
  std::vector<Expr> neg_phis;
  for (std::size_t i = 0; i < n; ++i) {
    const Grade nc = negate(answers[i]);
    neg_answers.push_back(nc);
    neg_phis.push_back(Expr::neg(phis[i]));
    std::size_t hyp = p.add(out.theory[2 + i], Hypothesis{2 + i});
    ps = {};
    ps.alpha = phis[i];
    ps.beta = bot;
    ps.d = nc;
    std::size_t nb_nphi = append_rule(p, AxiomSchema::Neg1, ps, {hyp}, kLuk);
    ps = {};
    ps.alpha = top;
    ps.beta = Expr::neg(bot);
    ps.gamma = neg_phis.back();
    ps.c = Grade::one();
    ps.d = nc;
    upper_premises.push_back(append_rule(p, AxiomSchema::Trans1, ps, {top_notbot, nb_nphi}, kLuk));
  }
  upper_premises.push_back(p.add(out.theory[1], Hypothesis{1}));

  // top ->[1 - d] ~delta, by mtrans1 and mtop as above.
  mt = {};
  mt.alphas.assign(n, top);
  mt.betas = neg_phis;
  mt.cs = neg_answers;
  mt.d = Grade::one();
  mt.gamma = Expr::neg(delta);
  std::size_t tops_to_ndelta = append_rule(p, AxiomSchema::MeanTrans1, mt, upper_premises, kLuk);
  mtop = {};
  mtop.n = n;
  mtop.c = not_d;
  mtop.alpha = Expr::neg(delta);
  std::size_t top_ndelta = append_rule(p, AxiomSchema::MeanTop, mtop, {tops_to_ndelta}, kLuk);

  // ~~delta ->[1 - d] ~top, then delta ->[1 - d] ~top.
  ps = {};
  ps.alpha = top;
  ps.beta = Expr::neg(delta);
  ps.d = not_d;
  std::size_t nnd_nt = append_rule(p, AxiomSchema::Neg1, ps, {top_ndelta}, kLuk);
  ps = {};
  ps.alpha = delta;
  std::size_t d_nnd = append_axiom(p, AxiomSchema::Neg3, ps, kLuk);
  ps = {};
  ps.alpha = delta;
  ps.beta = Expr::neg(Expr::neg(delta));
  ps.gamma = Expr::neg(top);
  ps.c = Grade::one();
  ps.d = not_d;
  std::size_t d_nt = append_rule(p, AxiomSchema::Trans1, ps, {d_nnd, nnd_nt}, kLuk);

  // Final trans1 prepared here; both conclusions are drawn last.
  std::size_t upper_conj = append_conjunction(p, {d_nt, nottop_bot});
  ps = {};
  ps.alpha = delta;
  ps.beta = Expr::neg(top);
  ps.gamma = bot;
  ps.c = not_d;
  ps.d = Grade::one();
  std::size_t upper_rule = append_axiom(p, AxiomSchema::Trans1, ps, kLuk);

  out.lower_line = append_modus_ponens(p, tops_to_delta, lower_rule);
  out.upper_line = append_modus_ponens(p, upper_conj, upper_rule);
  return out;
}

ScoreDerivation build_score_derivation(std::size_t n, const std::vector<Grade>& answers) {
  return build_score_derivation(default_item_names(n), "delta", answers);
}

}  // namespace graded
