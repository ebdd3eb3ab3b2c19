// Model theory of the graded-implication logics: evaluations, satisfaction,
// and refutation search on finite rational grids.

#ifndef GRADED_SEMANTICS_HPP
#define GRADED_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graded/grade.hpp"
#include "graded/syntax.hpp"

namespace graded {

/// Assignment of degrees to variables under a fixed session t-norm.
class Evaluation {
 public:
  explicit Evaluation(TNormKind tnorm = TNormKind::Lukasiewicz) : tnorm_(tnorm) {}

  void set(const std::string& name, Grade value) { values_.insert_or_assign(name, std::move(value)); }
  /// Throws UnboundVariable.
  const Grade& at(const std::string& name) const;
  bool binds(const std::string& name) const { return values_.contains(name); }

  TNormKind tnorm() const { return tnorm_; }
  const std::map<std::string, Grade>& values() const { return values_; }

  friend bool operator==(const Evaluation&, const Evaluation&) = default;

 private:
  TNormKind tnorm_;
  std::map<std::string, Grade> values_;
};

Grade eval_basic(const Expr& e, const Evaluation& v);

/// mean(v(a1), ..., v(an)) <= v(b) + (1 - c).
bool satisfies_gi(const Evaluation& v, const GradedImplication& g);

/// v(a) (*)Luk c <= v(b). Single-antecedent implications only; throws
/// ValidationError otherwise.
bool satisfies_gi_luk_form(const Evaluation& v, const GradedImplication& g);

/// Classical evaluation of the outer connectives over atom verdicts.
/// Throws ValidationError for graded-variable formulas.
bool satisfies_formula(const Evaluation& v, const Formula& f);

bool satisfies_theory(const Evaluation& v, const Theory& t);

struct GridSearchOptions {
  /// Upper bound on the number of grid points visited.
  std::uint64_t max_points = 50'000'000;
  /// Worker threads. The result never depends on this value.
  unsigned workers = 1;
};

/// Scans every evaluation with values in {0, 1/m, ..., 1} (variables of
/// `theory` and `goal`, ordered by name, first variable most significant)
/// and returns the first one satisfying the theory but not the goal.
/// Throws ResourceError when (m+1)^vars exceeds the budget.
std::optional<Evaluation> find_countermodel(const Theory& theory, const Formula& goal,
                                            unsigned m, TNormKind tnorm,
                                            const GridSearchOptions& options = {});

/// Outcome of a grid-restricted entailment check.
struct GridVerdict {
  unsigned denominator = 1;
  std::optional<Evaluation> countermodel;

  bool holds() const { return !countermodel.has_value(); }
  /// "no countermodel with denominator m" or "countermodel found with
  /// denominator m". A grid verdict never claims full entailment.
  std::string label() const;
};

GridVerdict check_on_grid(const Theory& theory, const Formula& goal, unsigned m,
                          TNormKind tnorm, const GridSearchOptions& options = {});

inline bool entails_on_grid(const Theory& theory, const Formula& goal, unsigned m,
                            TNormKind tnorm, const GridSearchOptions& options = {}) {
  return check_on_grid(theory, goal, m, tnorm, options).holds();
}

}  // namespace graded

#endif  // GRADED_SEMANTICS_HPP
