#include "graded/axioms.hpp"

#include <algorithm>

#include "graded/errors.hpp"

namespace graded {

namespace {

constexpr std::array<std::string_view, 25> kNames = {
    "and1",  "and2",  "and3",  "or1",   "or2",   "or3",    "strong1", "strong2", "strong3",
    "neg1",  "neg2",  "neg3",  "top",   "bot",   "zero",   "refl",    "inkons",  "trans1",
    "trans2", "lin1", "lin2",  "mtrans1", "mtrans2", "mtrans3", "mtop",
};

Formula gi(Expr a, Expr b, Grade c) {
  return Formula::atom(GradedImplication(std::move(a), std::move(b), std::move(c)));
}

Formula gi(std::vector<Expr> as, Expr b, Grade c) {
  return Formula::atom(GradedImplication(std::move(as), std::move(b), std::move(c)));
}

/// The implication atom inside `f`, or null.
const GradedImplication* atom_of(const Formula& f) {
  if (!f.is_atom() || f.mode() != FormulaMode::Implication) return nullptr;
  return &f.implication();
}

/// Single-antecedent implication atom, or null.
const GradedImplication* simple_of(const Formula& f) {
  const auto* g = atom_of(f);
  return g && g->is_simple() ? g : nullptr;
}

/// Splits P => Q and flattens P into its conjuncts.
bool split(const Formula& f, std::vector<Formula>& premises, const Formula*& conclusion) {
  const Formula* premise = nullptr;
  if (!f.as_implication(&premise, &conclusion)) return false;
  premises = conjuncts(*premise);
  return true;
}

/// P => Q where P has exactly `k` single-antecedent atoms and Q is a
/// single-antecedent atom.
bool simple_rule(const Formula& f, std::size_t k, std::vector<const GradedImplication*>& prem,
                 const GradedImplication*& concl) {
  std::vector<Formula> parts;
  const Formula* q = nullptr;
  if (!split(f, parts, q) || parts.size() != k) return false;
  prem.clear();
  for (const auto& p : parts) {
    const auto* g = simple_of(p);
    if (!g) return false;
    prem.push_back(g);
  }
  concl = simple_of(*q);
  return concl != nullptr;
}

bool is(const Expr& e, Expr::Kind k) { return e.kind() == k; }

using Grades = std::vector<Grade>;
using Result = std::optional<Grades>;

std::vector<Expr> sorted(std::vector<Expr> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Result match_impl(const Formula& f, AxiomSchema schema, TNormKind kind) {
  std::vector<const GradedImplication*> p;
  const GradedImplication* q = nullptr;
  const GradedImplication* g = simple_of(f);

  switch (schema) {
    case AxiomSchema::And1:
      // (a ->d b) /\ (a ->d c) => (a ->d b & c)
      if (!simple_rule(f, 2, p, q)) return {};
      if (p[0]->antecedent() == p[1]->antecedent() && p[0]->grade() == p[1]->grade() &&
          q->antecedent() == p[0]->antecedent() && q->grade() == p[0]->grade() &&
          q->consequent() == Expr::conj(p[0]->consequent(), p[1]->consequent())) {
        return Grades{p[0]->grade()};
      }
      return {};
    case AxiomSchema::And2:
    case AxiomSchema::And3: {
      if (!g || !g->grade().is_one() || !is(g->antecedent(), Expr::Kind::And)) return {};
      const Expr& side = schema == AxiomSchema::And2 ? g->antecedent().lhs() : g->antecedent().rhs();
      if (side == g->consequent()) return Grades{};
      return {};
    }
    case AxiomSchema::Or1:
      // (a ->d c) /\ (b ->d c) => (a | b ->d c)
      if (!simple_rule(f, 2, p, q)) return {};
      if (p[0]->consequent() == p[1]->consequent() && p[0]->grade() == p[1]->grade() &&
          q->consequent() == p[0]->consequent() && q->grade() == p[0]->grade() &&
          q->antecedent() == Expr::disj(p[0]->antecedent(), p[1]->antecedent())) {
        return Grades{p[0]->grade()};
      }
      return {};
    case AxiomSchema::Or2:
    case AxiomSchema::Or3: {
      if (!g || !g->grade().is_one() || !is(g->consequent(), Expr::Kind::Or)) return {};
      const Expr& side = schema == AxiomSchema::Or2 ? g->consequent().lhs() : g->consequent().rhs();
      if (side == g->antecedent()) return Grades{};
      return {};
    }
    case AxiomSchema::Strong1:
      // (top ->c a) /\ (top ->d b) => (top ->[c*d] a * b)
      if (!simple_rule(f, 2, p, q)) return {};
      if (is(p[0]->antecedent(), Expr::Kind::Top) && is(p[1]->antecedent(), Expr::Kind::Top) &&
          is(q->antecedent(), Expr::Kind::Top) &&
          q->consequent() == Expr::strong(p[0]->consequent(), p[1]->consequent()) &&
          q->grade() == tnorm(kind, p[0]->grade(), p[1]->grade())) {
        return Grades{p[0]->grade(), p[1]->grade()};
      }
      return {};
    case AxiomSchema::Strong2:
      // (a ->c bot) /\ (b ->d bot) => (a * b ->[c (+) d] bot)
      if (!simple_rule(f, 2, p, q)) return {};
      if (is(p[0]->consequent(), Expr::Kind::Bottom) && is(p[1]->consequent(), Expr::Kind::Bottom) &&
          is(q->consequent(), Expr::Kind::Bottom) &&
          q->antecedent() == Expr::strong(p[0]->antecedent(), p[1]->antecedent()) &&
          q->grade() == tconorm(kind, p[0]->grade(), p[1]->grade())) {
        return Grades{p[0]->grade(), p[1]->grade()};
      }
      return {};
    case AxiomSchema::Strong3:
      if (g && g->grade().is_one() && is(g->antecedent(), Expr::Kind::Top) &&
          g->consequent() == Expr::strong(Expr::top(), Expr::top())) {
        return Grades{};
      }
      return {};
    case AxiomSchema::Neg1:
      // (a ->d b) => (~b ->d ~a)
      if (!simple_rule(f, 1, p, q)) return {};
      if (q->grade() == p[0]->grade() && q->antecedent() == Expr::neg(p[0]->consequent()) &&
          q->consequent() == Expr::neg(p[0]->antecedent())) {
        return Grades{p[0]->grade()};
      }
      return {};
    case AxiomSchema::Neg2:
      if (g && g->grade().is_one() && g->antecedent() == Expr::neg(Expr::neg(g->consequent()))) {
        return Grades{};
      }
      return {};
    case AxiomSchema::Neg3:
      if (g && g->grade().is_one() && g->consequent() == Expr::neg(Expr::neg(g->antecedent()))) {
        return Grades{};
      }
      return {};
    case AxiomSchema::Top:
      if (g && g->grade().is_one() && is(g->consequent(), Expr::Kind::Top)) return Grades{};
      return {};
    case AxiomSchema::Bottom:
      if (g && g->grade().is_one() && is(g->antecedent(), Expr::Kind::Bottom)) return Grades{};
      return {};
    case AxiomSchema::Zero:
      if (g && g->grade().is_zero()) return Grades{};
      return {};
    case AxiomSchema::Reflexive:
      if (g && g->antecedent() == g->consequent()) return Grades{g->grade()};
      return {};
    case AxiomSchema::Inconsistency: {
      if (f.kind() != Formula::Kind::Not) return {};
      const auto* h = simple_of(f.operand());
      if (h && is(h->antecedent(), Expr::Kind::Top) && is(h->consequent(), Expr::Kind::Bottom) &&
          !h->grade().is_zero()) {
        return Grades{h->grade()};
      }
      return {};
    }
    case AxiomSchema::Trans1:
      // (a ->c b) /\ (b ->d g) => (a ->[c (*)L d] g)
      if (!simple_rule(f, 2, p, q)) return {};
      if (p[0]->consequent() == p[1]->antecedent() && q->antecedent() == p[0]->antecedent() &&
          q->consequent() == p[1]->consequent() &&
          q->grade() == luk_tnorm(p[0]->grade(), p[1]->grade())) {
        return Grades{p[0]->grade(), p[1]->grade()};
      }
      return {};
    case AxiomSchema::Trans2:
      // (a ->c bot) /\ (top ->d b) => (a ->[c (+)L d] b)
      if (!simple_rule(f, 2, p, q)) return {};
      if (is(p[0]->consequent(), Expr::Kind::Bottom) && is(p[1]->antecedent(), Expr::Kind::Top) &&
          q->antecedent() == p[0]->antecedent() && q->consequent() == p[1]->consequent() &&
          q->grade() == luk_tconorm(p[0]->grade(), p[1]->grade())) {
        return Grades{p[0]->grade(), p[1]->grade()};
      }
      return {};
    case AxiomSchema::Lin1: {
      if (f.kind() != Formula::Kind::Or) return {};
      const auto* a = simple_of(f.lhs());
      const auto* b = simple_of(f.rhs());
      if (a && b && a->grade().is_one() && b->grade().is_one() &&
          a->antecedent() == b->consequent() && a->consequent() == b->antecedent()) {
        return Grades{};
      }
      return {};
    }
    case AxiomSchema::Lin2: {
      // (top ->d a) \/ (a ->[~d] bot)
      if (f.kind() != Formula::Kind::Or) return {};
      const auto* a = simple_of(f.lhs());
      const auto* b = simple_of(f.rhs());
      if (a && b && is(a->antecedent(), Expr::Kind::Top) && is(b->consequent(), Expr::Kind::Bottom) &&
          b->antecedent() == a->consequent() && b->grade() == negate(a->grade())) {
        return Grades{a->grade()};
      }
      return {};
    }
    case AxiomSchema::MeanTrans1:
    case AxiomSchema::MeanTrans3: {
      // mtrans1: (a1 ->c1 b1) /\ ... /\ (an ->cn bn) /\ (b1..bn ->d g) => (a1..an ->[<c> (*)L d] g)
      // mtrans3: (a1 ->c1 bot) /\ ... /\ (an ->cn bot) /\ (top ->d b) => (a1..an ->[<c> (+)L d] b)
      std::vector<Formula> parts;
      const Formula* qf = nullptr;
      if (!split(f, parts, qf) || parts.size() < 2) return {};
      const auto* last = atom_of(parts.back());
      const auto* concl = atom_of(*qf);
      if (!last || !concl) return {};
      const std::size_t n = parts.size() - 1;
      std::vector<Expr> alphas;
      std::vector<Expr> betas;
      Grades cs;
      for (std::size_t i = 0; i < n; ++i) {
        const auto* h = simple_of(parts[i]);
        if (!h) return {};
        if (schema == AxiomSchema::MeanTrans3 && !is(h->consequent(), Expr::Kind::Bottom)) return {};
        alphas.push_back(h->antecedent());
        betas.push_back(h->consequent());
        cs.push_back(h->grade());
      }
      if (concl->antecedents() != sorted(alphas)) return {};
      Grade expected;
      if (schema == AxiomSchema::MeanTrans1) {
        if (last->antecedents() != sorted(betas) || concl->consequent() != last->consequent()) return {};
        expected = luk_tnorm(mean(cs), last->grade());
      } else {
        if (!last->is_simple() || !is(last->antecedent(), Expr::Kind::Top) ||
            concl->consequent() != last->consequent()) {
          return {};
        }
        expected = luk_tconorm(mean(cs), last->grade());
      }
      if (concl->grade() != expected) return {};
      cs.push_back(last->grade());
      return cs;
    }
    case AxiomSchema::MeanTrans2: {
      // (a1..an ->c b) /\ (b ->d g) => (a1..an ->[c (*)L d] g)
      std::vector<Formula> parts;
      const Formula* qf = nullptr;
      if (!split(f, parts, qf) || parts.size() != 2) return {};
      const auto* first = atom_of(parts[0]);
      const auto* second = simple_of(parts[1]);
      const auto* concl = atom_of(*qf);
      if (!first || !second || !concl) return {};
      if (second->antecedent() == first->consequent() &&
          concl->antecedents() == first->antecedents() &&
          concl->consequent() == second->consequent() &&
          concl->grade() == luk_tnorm(first->grade(), second->grade())) {
        return Grades{first->grade(), second->grade()};
      }
      return {};
    }
    case AxiomSchema::MeanTop: {
      // (top, ..., top ->c a) => (top ->c a)
      std::vector<Formula> parts;
      const Formula* qf = nullptr;
      if (!split(f, parts, qf) || parts.size() != 1) return {};
      const auto* prem = atom_of(parts[0]);
      const auto* concl = simple_of(*qf);
      if (!prem || !concl) return {};
      bool all_top = std::all_of(prem->antecedents().begin(), prem->antecedents().end(),
                                 [](const Expr& e) { return is(e, Expr::Kind::Top); });
      if (all_top && is(concl->antecedent(), Expr::Kind::Top) &&
          concl->consequent() == prem->consequent() && concl->grade() == prem->grade()) {
        return Grades{prem->grade()};
      }
      return {};
    }
  }
  return {};
}

}  // namespace

std::string_view schema_name(AxiomSchema s) { return kNames[static_cast<std::size_t>(s)]; }

std::optional<AxiomSchema> schema_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<AxiomSchema>(i);
  }
  return std::nullopt;
}

bool is_mean_schema(AxiomSchema s) {
  return s == AxiomSchema::MeanTrans1 || s == AxiomSchema::MeanTrans2 ||
         s == AxiomSchema::MeanTrans3 || s == AxiomSchema::MeanTop;
}

std::optional<AxiomMatch> match_schema(const Formula& f, AxiomSchema schema, TNormKind tnorm) {
  if (f.mode() != FormulaMode::Implication) return std::nullopt;
  if (auto grades = match_impl(f, schema, tnorm)) return AxiomMatch{schema, std::move(*grades)};
  return std::nullopt;
}

std::optional<AxiomMatch> match_axiom(const Formula& f, TNormKind tnorm) {
  for (auto s : kAllSchemas) {
    if (auto m = match_schema(f, s, tnorm)) return m;
  }
  return std::nullopt;
}

Formula instantiate(AxiomSchema schema, const AxiomParams& p, TNormKind kind) {
  const Expr& a = p.alpha;
  const Expr& b = p.beta;
  const Expr& g = p.gamma;
  const Grade one = Grade::one();
  auto rule = [](std::vector<Formula> premises, Formula conclusion) {
    return Formula::implies(conjunction(premises), std::move(conclusion));
  };

  switch (schema) {
    case AxiomSchema::And1:
      return rule({gi(a, b, p.d), gi(a, g, p.d)}, gi(a, Expr::conj(b, g), p.d));
    case AxiomSchema::And2: return gi(Expr::conj(a, b), a, one);
    case AxiomSchema::And3: return gi(Expr::conj(a, b), b, one);
    case AxiomSchema::Or1:
      return rule({gi(a, g, p.d), gi(b, g, p.d)}, gi(Expr::disj(a, b), g, p.d));
    case AxiomSchema::Or2: return gi(a, Expr::disj(a, b), one);
    case AxiomSchema::Or3: return gi(b, Expr::disj(a, b), one);
    case AxiomSchema::Strong1:
      return rule({gi(Expr::top(), a, p.c), gi(Expr::top(), b, p.d)},
                  gi(Expr::top(), Expr::strong(a, b), tnorm(kind, p.c, p.d)));
    case AxiomSchema::Strong2:
      return rule({gi(a, Expr::bottom(), p.c), gi(b, Expr::bottom(), p.d)},
                  gi(Expr::strong(a, b), Expr::bottom(), tconorm(kind, p.c, p.d)));
    case AxiomSchema::Strong3: return gi(Expr::top(), Expr::strong(Expr::top(), Expr::top()), one);
    case AxiomSchema::Neg1: return rule({gi(a, b, p.d)}, gi(Expr::neg(b), Expr::neg(a), p.d));
    case AxiomSchema::Neg2: return gi(Expr::neg(Expr::neg(a)), a, one);
    case AxiomSchema::Neg3: return gi(a, Expr::neg(Expr::neg(a)), one);
    case AxiomSchema::Top: return gi(a, Expr::top(), one);
    case AxiomSchema::Bottom: return gi(Expr::bottom(), a, one);
    case AxiomSchema::Zero: return gi(a, b, Grade::zero());
    case AxiomSchema::Reflexive: return gi(a, a, p.c);
    case AxiomSchema::Inconsistency:
      if (p.c.is_zero()) throw ValidationError("inkons requires a positive grade");
      return Formula::negation(gi(Expr::top(), Expr::bottom(), p.c));
    case AxiomSchema::Trans1:
      return rule({gi(a, b, p.c), gi(b, g, p.d)}, gi(a, g, luk_tnorm(p.c, p.d)));
    case AxiomSchema::Trans2:
      return rule({gi(a, Expr::bottom(), p.c), gi(Expr::top(), b, p.d)}, gi(a, b, luk_tconorm(p.c, p.d)));
    case AxiomSchema::Lin1: return Formula::disj(gi(a, b, one), gi(b, a, one));
    case AxiomSchema::Lin2:
      return Formula::disj(gi(Expr::top(), a, p.d), gi(a, Expr::bottom(), negate(p.d)));
    case AxiomSchema::MeanTrans1: {
      const std::size_t n = p.alphas.size();
      if (n == 0 || p.betas.size() != n || p.cs.size() != n) {
        throw ValidationError("mtrans1 needs matching alphas, betas and grades");
      }
      std::vector<Formula> premises;
      for (std::size_t i = 0; i < n; ++i) premises.push_back(gi(p.alphas[i], p.betas[i], p.cs[i]));
      premises.push_back(gi(p.betas, g, p.d));
      return rule(std::move(premises), gi(p.alphas, g, luk_tnorm(mean(p.cs), p.d)));
    }
    case AxiomSchema::MeanTrans2:
      if (p.alphas.empty()) throw ValidationError("mtrans2 needs antecedents");
      return rule({gi(p.alphas, b, p.c), gi(b, g, p.d)}, gi(p.alphas, g, luk_tnorm(p.c, p.d)));
    case AxiomSchema::MeanTrans3: {
      const std::size_t n = p.alphas.size();
      if (n == 0 || p.cs.size() != n) throw ValidationError("mtrans3 needs matching alphas and grades");
      std::vector<Formula> premises;
      for (std::size_t i = 0; i < n; ++i) premises.push_back(gi(p.alphas[i], Expr::bottom(), p.cs[i]));
      premises.push_back(gi(Expr::top(), b, p.d));
      return rule(std::move(premises), gi(p.alphas, b, luk_tconorm(mean(p.cs), p.d)));
    }
    case AxiomSchema::MeanTop: {
      if (p.n == 0) throw ValidationError("mtop needs at least one antecedent");
      std::vector<Expr> tops(p.n, Expr::top());
      return rule({gi(std::move(tops), a, p.c)}, gi(Expr::top(), a, p.c));
    }
  }
  throw ValidationError("unknown schema");
}

}  // namespace graded
