// Abstract syntax for the two-level graded logics and for the
// prototype/counterexample formalism.
//
//   Expr               inner level: variables, top, bot, &, |, *, ~
//   GradedImplication  a1, ..., an ->[c] b   (n = 1 is the plain form)
//   GradedVariable     (x, c)
//   Formula            outer level: classical /\, \/, ! over atoms
//
// All nodes are immutable and shared; copying any of these types is cheap
// and instances may be read concurrently. Structural comparison is a total
// order, which is what keeps antecedent multisets canonical.

#ifndef GRADED_SYNTAX_HPP
#define GRADED_SYNTAX_HPP

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "graded/grade.hpp"

namespace graded {

/// True for nonempty [A-Za-z_][A-Za-z0-9_]* other than "top" and "bot".
bool is_identifier(const std::string& name);

class Expr {
 public:
  enum class Kind : unsigned char { Var, Bottom, Top, And, Or, Strong, Neg };

  static Expr var(std::string name);
  static Expr top();
  static Expr bottom();
  static Expr conj(Expr lhs, Expr rhs);
  static Expr disj(Expr lhs, Expr rhs);
  static Expr strong(Expr lhs, Expr rhs);
  static Expr neg(Expr operand);

  Kind kind() const;
  bool is_binary() const;
  /// Variable name; empty for other kinds.
  const std::string& name() const;
  /// Left child of a binary node, or the operand of a negation.
  const Expr& lhs() const;
  const Expr& rhs() const;
  const Expr& operand() const { return lhs(); }

  /// Collects variable names into `out`.
  void collect_vars(std::set<std::string>& out) const;
  std::size_t depth() const;

  friend bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static int compare(const Expr& a, const Expr& b);

  std::shared_ptr<const Node> node_;
};

/// a1, ..., an ->[grade] b with the antecedents kept sorted.
class GradedImplication {
 public:
  /// Throws ValidationError if `antecedents` is empty.
  GradedImplication(std::vector<Expr> antecedents, Expr consequent, Grade grade);
  GradedImplication(Expr antecedent, Expr consequent, Grade grade)
      : GradedImplication(std::vector<Expr>{std::move(antecedent)}, std::move(consequent),
                          std::move(grade)) {}

  const std::vector<Expr>& antecedents() const { return antecedents_; }
  const Expr& consequent() const { return consequent_; }
  const Grade& grade() const { return grade_; }
  bool is_simple() const { return antecedents_.size() == 1; }
  /// The sole antecedent. Only meaningful when is_simple().
  const Expr& antecedent() const { return antecedents_.front(); }

  void collect_vars(std::set<std::string>& out) const;

  friend bool operator==(const GradedImplication&, const GradedImplication&) = default;
  friend std::strong_ordering operator<=>(const GradedImplication& a,
                                          const GradedImplication& b);

 private:
  std::vector<Expr> antecedents_;
  Expr consequent_;
  Grade grade_;
};

/// (name, grade): the worlds at which `name` holds to exactly `grade`.
struct GradedVariable {
  std::string name;
  Grade grade;

  friend bool operator==(const GradedVariable&, const GradedVariable&) = default;
  friend std::strong_ordering operator<=>(const GradedVariable& a, const GradedVariable& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.grade <=> b.grade;
  }
};

using Atom = std::variant<GradedImplication, GradedVariable>;

/// Which kind of atoms a formula is built from. Never mixed.
enum class FormulaMode : unsigned char { Implication, Graded };

class Formula {
 public:
  enum class Kind : unsigned char { Atom, And, Or, Not };

  static Formula atom(GradedImplication gi);
  static Formula atom(GradedVariable gv);
  /// The binary constructors throw ValidationError on mixed modes.
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula negation(Formula operand);
  /// lhs => rhs, stored as !lhs \/ rhs.
  static Formula implies(Formula lhs, Formula rhs);
  /// (lhs => rhs) /\ (rhs => lhs).
  static Formula iff(Formula lhs, Formula rhs);

  Kind kind() const;
  FormulaMode mode() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  const Atom& atom_value() const;
  /// Only valid for implication-mode atoms.
  const GradedImplication& implication() const;
  /// Only valid for graded-variable atoms.
  const GradedVariable& graded_variable() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& operand() const { return lhs(); }

  /// If this is !a \/ b, returns pointers to a and b.
  bool as_implication(const Formula** premise, const Formula** conclusion) const;

  void collect_vars(std::set<std::string>& out) const;

  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Kind kind, Formula lhs, Formula rhs);
  static int compare(const Formula& a, const Formula& b);

  std::shared_ptr<const Node> node_;
};

/// Flattens nested /\ (any bracketing) into its conjuncts, left to right.
std::vector<Formula> conjuncts(const Formula& f);
/// Left-associated conjunction of a nonempty list.
Formula conjunction(const std::vector<Formula>& parts);

/// A finite set of formulas, in file order.
using Theory = std::vector<Formula>;

}  // namespace graded

#endif  // GRADED_SYNTAX_HPP
