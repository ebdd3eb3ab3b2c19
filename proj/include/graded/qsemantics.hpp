// Prototype/counterexample semantics over the world cube [0,1]^n.
//
// A variable denotes a pair of disjoint nonempty closed sets (prototypes,
// counterexamples). At world w it holds to the degree
//
//     d(w, counters) / (d(w, protos) + d(w, counters))
//
// under the L1 metric. Closed sets are limited to finite point sets and
// axis-aligned faces {a : a_i = v}, v in {0, 1}; both give exact rational
// distances. Satisfaction ([f] = W) is only ever checked on finite grids.

#ifndef GRADED_QSEMANTICS_HPP
#define GRADED_QSEMANTICS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graded/grade.hpp"
#include "graded/syntax.hpp"

namespace graded::q {

using World = std::vector<Grade>;

Rational l1_distance(const World& w, const World& u);

struct FiniteSet {
  std::vector<World> points;
};

/// {a in W : a[index] = (upper ? 1 : 0)}.
struct Face {
  std::size_t index;
  bool upper;
};

using PointSet = std::variant<FiniteSet, Face>;

/// Throws ValidationError on an empty set, a point of the wrong
/// dimension, or a face index >= dimension.
void validate(const PointSet& s, std::size_t dimension);
bool contains(const PointSet& s, const World& w);
Rational set_distance(const World& w, const PointSet& s);

struct PCPair {
  PointSet protos;
  PointSet counters;
};

/// Whether the two denoted sets share no point.
bool disjoint(const PointSet& a, const PointSet& b, std::size_t dimension);

class QEvaluation {
 public:
  /// Binds each basic variable i to (Face(i, 1), Face(i, 0)).
  explicit QEvaluation(std::vector<std::string> basic_names);

  std::size_t dimension() const { return basic_.size(); }
  const std::vector<std::string>& basic_names() const { return basic_; }

  /// Binds a dependent variable. Throws ValidationError for basic names,
  /// malformed sets, or overlapping prototypes and counterexamples.
  void bind(const std::string& name, PCPair pair);

  /// Throws UnboundVariable.
  const PCPair& at(const std::string& name) const;
  bool binds(const std::string& name) const { return pairs_.contains(name); }

 private:
  std::vector<std::string> basic_;
  std::map<std::string, PCPair> pairs_;
};

/// Degree of `var` at `w`. Throws UnboundVariable, or ValidationError on a
/// dimension mismatch.
Grade degree(const QEvaluation& e, const std::string& var, const World& w);

/// Membership of `w` in the region of a graded-variable formula.
bool in_region(const QEvaluation& e, const Formula& f, const World& w);

struct QGridOptions {
  std::uint64_t max_worlds = 20'000'000;
};

/// Calls `visit` on every world of {0, 1/k, ..., 1}^n in lexicographic
/// order until it returns false. Throws ResourceError beyond the budget.
void for_each_grid_world(std::size_t n, unsigned k, const std::function<bool(const World&)>& visit,
                         const QGridOptions& options = {});

struct QGridVerdict {
  unsigned grid = 1;
  std::optional<World> failing_world;
  bool holds() const { return !failing_world.has_value(); }
  /// "holds on grid k" / "fails on grid k".
  std::string label() const;
};

QGridVerdict check_on_grid(const QEvaluation& e, const Formula& f, unsigned k,
                           const QGridOptions& options = {});

inline bool satisfied_on_grid(const QEvaluation& e, const Formula& f, unsigned k,
                              const QGridOptions& options = {}) {
  return check_on_grid(e, f, k, options).holds();
}

/// Basic variables plus `disorder` with prototypes {(1,...,1)} and
/// counterexamples {(0,...,0)}.
QEvaluation canonical_disorder_eval(const std::vector<std::string>& basic_names,
                                    const std::string& disorder);
/// Basic variables phi1..phin.
QEvaluation canonical_disorder_eval(std::size_t n, const std::string& disorder);

/// (disorder, 1) <=> (phi1, 1) /\ ... /\ (phin, 1) and the same with 0.
Theory canonical_disorder_theory(const std::vector<std::string>& basic_names,
                                 const std::string& disorder);

struct CorrectnessResult {
  std::optional<QEvaluation> evaluation;
  std::string disorder;
  std::string reason;
};

/// Recognises the two-formula canonical disorder theory (either order) over
/// the given basic variables. On a match, builds the canonical evaluation
/// and confirms both formulas on grid `k`; otherwise returns no evaluation
/// and the reason ("outside supported pattern", or the grid failure).
CorrectnessResult check_theory_correct_canonical(const Theory& theory,
                                                 const std::vector<std::string>& basic_names,
                                                 unsigned k, const QGridOptions& options = {});

}  // namespace graded::q

#endif  // GRADED_QSEMANTICS_HPP
