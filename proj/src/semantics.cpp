#include "graded/semantics.hpp"

#include <atomic>
#include <limits>
#include <thread>

#include "graded/errors.hpp"

namespace graded {

const Grade& Evaluation::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw UnboundVariable(name);
  return it->second;
}

Grade eval_basic(const Expr& e, const Evaluation& v) {
  switch (e.kind()) {
    case Expr::Kind::Var: return v.at(e.name());
    case Expr::Kind::Top: return Grade::one();
    case Expr::Kind::Bottom: return Grade::zero();
    case Expr::Kind::Neg: return negate(eval_basic(e.operand(), v));
    case Expr::Kind::And: return min(eval_basic(e.lhs(), v), eval_basic(e.rhs(), v));
    case Expr::Kind::Or: return max(eval_basic(e.lhs(), v), eval_basic(e.rhs(), v));
    case Expr::Kind::Strong:
      return tnorm(v.tnorm(), eval_basic(e.lhs(), v), eval_basic(e.rhs(), v));
  }
  return Grade::zero();
}

bool satisfies_gi(const Evaluation& v, const GradedImplication& g) {
  Rational sum = 0;
  for (const auto& a : g.antecedents()) sum += eval_basic(a, v).value();
  // mean <= v(b) + 1 - c  <=>  sum <= n * (v(b) + 1 - c)
  Rational bound = eval_basic(g.consequent(), v).value() + 1 - g.grade().value();
  bound *= static_cast<long>(g.antecedents().size());
  return sum <= bound;
}

bool satisfies_gi_luk_form(const Evaluation& v, const GradedImplication& g) {
  if (!g.is_simple()) {
    throw ValidationError("Lukasiewicz form applies to single-antecedent implications only");
  }
  return luk_tnorm(eval_basic(g.antecedent(), v), g.grade()) <= eval_basic(g.consequent(), v);
}

bool satisfies_formula(const Evaluation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (f.mode() != FormulaMode::Implication) {
        throw ValidationError("graded-variable formula has no evaluation-based satisfaction");
      }
      return satisfies_gi(v, f.implication());
    case Formula::Kind::Not: return !satisfies_formula(v, f.operand());
    case Formula::Kind::And: return satisfies_formula(v, f.lhs()) && satisfies_formula(v, f.rhs());
    case Formula::Kind::Or: return satisfies_formula(v, f.lhs()) || satisfies_formula(v, f.rhs());
  }
  return false;
}

bool satisfies_theory(const Evaluation& v, const Theory& t) {
  for (const auto& f : t) {
    if (!satisfies_formula(v, f)) return false;
  }
  return true;
}

namespace {

struct Grid {
  std::vector<std::string> vars;
  std::vector<Grade> values;  // 0, 1/m, ..., 1
  std::uint64_t points = 1;

  Evaluation at(std::uint64_t index, TNormKind tnorm) const {
    Evaluation v(tnorm);
    const std::uint64_t radix = values.size();
    for (std::size_t i = vars.size(); i-- > 0;) {
      v.set(vars[i], values[index % radix]);
      index /= radix;
    }
    return v;
  }
};

Grid make_grid(const Theory& theory, const Formula& goal, unsigned m, std::uint64_t budget) {
  if (m == 0) throw ValidationError("grid denominator must be at least 1");
  std::set<std::string> names;
  for (const auto& f : theory) f.collect_vars(names);
  goal.collect_vars(names);

  Grid grid;
  grid.vars.assign(names.begin(), names.end());
  for (unsigned i = 0; i <= m; ++i) grid.values.emplace_back(static_cast<long>(i), static_cast<long>(m));
  for (std::size_t i = 0; i < grid.vars.size(); ++i) {
    if (grid.points > budget / (m + 1)) {
      throw ResourceError("grid with " + std::to_string(grid.vars.size()) + " variables and denominator " +
                          std::to_string(m) + " exceeds the budget of " + std::to_string(budget) +
                          " points");
    }
    grid.points *= (m + 1);
  }
  if (grid.points > budget) throw ResourceError("grid exceeds the point budget");
  return grid;
}

}  // namespace

std::optional<Evaluation> find_countermodel(const Theory& theory, const Formula& goal,
                                            unsigned m, TNormKind tnorm,
                                            const GridSearchOptions& options) {
  const Grid grid = make_grid(theory, goal, m, options.max_points);

  auto refutes = [&](std::uint64_t index) {
    Evaluation v = grid.at(index, tnorm);
    return satisfies_theory(v, theory) && !satisfies_formula(v, goal);
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || grid.points < 2 * workers) {
    for (std::uint64_t i = 0; i < grid.points; ++i) {
      if (refutes(i)) return grid.at(i, tnorm);
    }
    return std::nullopt;
  }

  // Contiguous chunks; the smallest hit index wins regardless of timing.
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  const std::uint64_t chunk = (grid.points + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(grid.points, begin + chunk);
    pool.emplace_back([&, begin, end] {
      for (std::uint64_t i = begin; i < end && i < best.load(std::memory_order_relaxed); ++i) {
        if (refutes(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  pool.clear();
  if (best.load() == kNone) return std::nullopt;
  return grid.at(best.load(), tnorm);
}

std::string GridVerdict::label() const {
  return (holds() ? "no countermodel with denominator " : "countermodel found with denominator ") +
         std::to_string(denominator);
}

GridVerdict check_on_grid(const Theory& theory, const Formula& goal, unsigned m, TNormKind tnorm,
                          const GridSearchOptions& options) {
  return GridVerdict{m, find_countermodel(theory, goal, m, tnorm, options)};
}

}  // namespace graded
