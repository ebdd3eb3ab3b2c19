#include "graded/qsemantics.hpp"

#include <algorithm>
#include <set>

#include "graded/errors.hpp"

namespace graded::q {

namespace {

void require_dimension(const World& w, std::size_t n) {
  if (w.size() != n) {
    throw ValidationError("world has dimension " + std::to_string(w.size()) + ", expected " +
                          std::to_string(n));
  }
}

}  // namespace

Rational l1_distance(const World& w, const World& u) {
  require_dimension(u, w.size());
  Rational sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += abs(w[i].value() - u[i].value());
  return sum;
}

void validate(const PointSet& s, std::size_t dimension) {
  if (const auto* f = std::get_if<FiniteSet>(&s)) {
    if (f->points.empty()) throw ValidationError("empty point set");
    for (const auto& p : f->points) require_dimension(p, dimension);
    return;
  }
  const auto& face = std::get<Face>(s);
  if (face.index >= dimension) {
    throw ValidationError("face index " + std::to_string(face.index) + " outside dimension " +
                          std::to_string(dimension));
  }
}

bool contains(const PointSet& s, const World& w) {
  if (const auto* f = std::get_if<FiniteSet>(&s)) {
    return std::find(f->points.begin(), f->points.end(), w) != f->points.end();
  }
  const auto& face = std::get<Face>(s);
  return face.upper ? w.at(face.index).is_one() : w.at(face.index).is_zero();
}

Rational set_distance(const World& w, const PointSet& s) {
  if (const auto* f = std::get_if<FiniteSet>(&s)) {
    if (f->points.empty()) throw ValidationError("distance to an empty set");
    Rational best = l1_distance(w, f->points.front());
    for (std::size_t i = 1; i < f->points.size(); ++i) {
      Rational d = l1_distance(w, f->points[i]);
      if (d < best) best = d;
    }
    return best;
  }
  // The other coordinates can be matched exactly, so only one term remains.
  const auto& face = std::get<Face>(s);
  const Rational& wi = w.at(face.index).value();
  return face.upper ? Rational(1 - wi) : wi;
}

bool disjoint(const PointSet& a, const PointSet& b, std::size_t dimension) {
  const auto* fa = std::get_if<FiniteSet>(&a);
  const auto* fb = std::get_if<FiniteSet>(&b);
  if (fa && fb) {
    return std::none_of(fa->points.begin(), fa->points.end(),
                        [&](const World& p) { return contains(b, p); });
  }
  if (fa) return std::none_of(fa->points.begin(), fa->points.end(), [&](const World& p) { return contains(b, p); });
  if (fb) return std::none_of(fb->points.begin(), fb->points.end(), [&](const World& p) { return contains(a, p); });
  const auto& x = std::get<Face>(a);
  const auto& y = std::get<Face>(b);
  if (x.index == y.index) return x.upper != y.upper;
  // Faces on different axes meet unless the cube is one-dimensional.
  return dimension < 2;
}

QEvaluation::QEvaluation(std::vector<std::string> basic_names) : basic_(std::move(basic_names)) {
  if (basic_.empty()) throw ValidationError("dimension must be at least 1");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < basic_.size(); ++i) {
    if (!is_identifier(basic_[i])) throw ValidationError("invalid variable name '" + basic_[i] + "'");
    if (!seen.insert(basic_[i]).second) throw ValidationError("duplicate basic variable '" + basic_[i] + "'");
    pairs_.emplace(basic_[i], PCPair{Face{i, true}, Face{i, false}});
  }
}

void QEvaluation::bind(const std::string& name, PCPair pair) {
  if (std::find(basic_.begin(), basic_.end(), name) != basic_.end()) {
    throw ValidationError("basic variable '" + name + "' is fixed to its faces");
  }
  if (!is_identifier(name)) throw ValidationError("invalid variable name '" + name + "'");
  validate(pair.protos, dimension());
  validate(pair.counters, dimension());
  if (!disjoint(pair.protos, pair.counters, dimension())) {
    throw ValidationError("prototypes and counterexamples of '" + name + "' overlap");
  }
  pairs_.insert_or_assign(name, std::move(pair));
}

const PCPair& QEvaluation::at(const std::string& name) const {
  auto it = pairs_.find(name);
  if (it == pairs_.end()) throw UnboundVariable(name);
  return it->second;
}

Grade degree(const QEvaluation& e, const std::string& var, const World& w) {
  require_dimension(w, e.dimension());
  const PCPair& pair = e.at(var);
  Rational to_counter = set_distance(w, pair.counters);
  Rational total = set_distance(w, pair.protos) + to_counter;
  return Grade(Rational(to_counter / total));
}

bool in_region(const QEvaluation& e, const Formula& f, const World& w) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      if (f.mode() != FormulaMode::Graded) {
        throw ValidationError("graded implications have no region semantics");
      }
      const auto& gv = f.graded_variable();
      return degree(e, gv.name, w) == gv.grade;
    }
    case Formula::Kind::Not: return !in_region(e, f.operand(), w);
    case Formula::Kind::And: return in_region(e, f.lhs(), w) && in_region(e, f.rhs(), w);
    case Formula::Kind::Or: return in_region(e, f.lhs(), w) || in_region(e, f.rhs(), w);
  }
  return false;
}

void for_each_grid_world(std::size_t n, unsigned k, const std::function<bool(const World&)>& visit,
                         const QGridOptions& options) {
  if (k == 0) throw ValidationError("grid denominator must be at least 1");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > options.max_worlds / (k + 1)) {
      throw ResourceError("grid {0,1/" + std::to_string(k) + ",...,1}^" + std::to_string(n) +
                          " exceeds the budget of " + std::to_string(options.max_worlds) + " worlds");
    }
    total *= (k + 1);
  }
  std::vector<Grade> values;
  for (unsigned i = 0; i <= k; ++i) values.emplace_back(static_cast<long>(i), static_cast<long>(k));
  std::vector<unsigned> digits(n, 0);
  World w(n, values[0]);
  for (;;) {
    if (!visit(w)) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] <= k) {
        w[i] = values[digits[i]];
        break;
      }
      digits[i] = 0;
      w[i] = values[0];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::string QGridVerdict::label() const {
  return (holds() ? "holds on grid " : "fails on grid ") + std::to_string(grid);
}

QGridVerdict check_on_grid(const QEvaluation& e, const Formula& f, unsigned k,
                           const QGridOptions& options) {
  QGridVerdict verdict{k, std::nullopt};
  for_each_grid_world(
      e.dimension(), k,
      [&](const World& w) {
        if (in_region(e, f, w)) return true;
        verdict.failing_world = w;
        return false;
      },
      options);
  return verdict;
}

QEvaluation canonical_disorder_eval(const std::vector<std::string>& basic_names,
                                    const std::string& disorder) {
  QEvaluation e(basic_names);
  const std::size_t n = basic_names.size();
  e.bind(disorder, PCPair{FiniteSet{{World(n, Grade::one())}}, FiniteSet{{World(n, Grade::zero())}}});
  return e;
}

QEvaluation canonical_disorder_eval(std::size_t n, const std::string& disorder) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("phi" + std::to_string(i));
  return canonical_disorder_eval(names, disorder);
}

Theory canonical_disorder_theory(const std::vector<std::string>& basic_names,
                                 const std::string& disorder) {
  Theory t;
  for (const auto& value : {Grade::one(), Grade::zero()}) {
    std::vector<Formula> parts;
    for (const auto& name : basic_names) parts.push_back(Formula::atom(GradedVariable{name, value}));
    t.push_back(Formula::iff(Formula::atom(GradedVariable{disorder, value}), conjunction(parts)));
  }
  return t;
}

namespace {

struct CanonicalClause {
  std::string disorder;
  Grade value;
};

/// (x, v) with v in {0, 1}.
std::optional<GradedVariable> extreme_atom(const Formula& f) {
  if (!f.is_atom() || f.mode() != FormulaMode::Graded) return std::nullopt;
  const auto& gv = f.graded_variable();
  if (!gv.grade.is_zero() && !gv.grade.is_one()) return std::nullopt;
  return gv;
}

/// Whether `f` is (b1, v) /\ ... /\ (bn, v) over exactly the basic names.
bool covers_basics(const Formula& f, const std::vector<std::string>& basics, const Grade& v) {
  std::set<std::string> seen;
  for (const auto& part : conjuncts(f)) {
    auto gv = extreme_atom(part);
    if (!gv || gv->grade != v || !seen.insert(gv->name).second) return false;
  }
  return seen == std::set<std::string>(basics.begin(), basics.end());
}

std::optional<CanonicalClause> match_clause(const Formula& f, const std::vector<std::string>& basics) {
  // iff(a, b) is (!a \/ b) /\ (!b \/ a)
  if (f.kind() != Formula::Kind::And) return std::nullopt;
  const Formula *a = nullptr, *b = nullptr, *b2 = nullptr, *a2 = nullptr;
  if (!f.lhs().as_implication(&a, &b) || !f.rhs().as_implication(&b2, &a2)) return std::nullopt;
  if (!(*a == *a2) || !(*b == *b2)) return std::nullopt;
  for (auto [atom, body] : {std::pair{a, b}, std::pair{b, a}}) {
    auto head = extreme_atom(*atom);
    if (!head) continue;
    if (std::find(basics.begin(), basics.end(), head->name) != basics.end()) continue;
    if (covers_basics(*body, basics, head->grade)) return CanonicalClause{head->name, head->grade};
  }
  return std::nullopt;
}

}  // namespace

CorrectnessResult check_theory_correct_canonical(const Theory& theory,
                                                 const std::vector<std::string>& basic_names,
                                                 unsigned k, const QGridOptions& options) {
  CorrectnessResult result;
  const std::string outside = "outside supported pattern";
  if (theory.size() != 2) {
    result.reason = outside;
    return result;
  }
  for (const auto& f : theory) {
    if (f.mode() != FormulaMode::Graded) {
      result.reason = outside;
      return result;
    }
  }
  auto first = match_clause(theory[0], basic_names);
  auto second = match_clause(theory[1], basic_names);
  if (!first || !second || first->disorder != second->disorder || first->value == second->value) {
    result.reason = outside;
    return result;
  }
  result.disorder = first->disorder;
  QEvaluation e = canonical_disorder_eval(basic_names, first->disorder);
  for (std::size_t i = 0; i < theory.size(); ++i) {
    auto verdict = check_on_grid(e, theory[i], k, options);
    if (!verdict.holds()) {
      result.reason = "formula " + std::to_string(i) + " " + verdict.label();
      return result;
    }
  }
  result.evaluation = std::move(e);
  result.reason = "canonical evaluation satisfies the theory on grid " + std::to_string(k);
  return result;
}

}  // namespace graded::q
