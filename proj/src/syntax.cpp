#include "graded/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "graded/errors.hpp"

namespace graded {

namespace {

template <typename T>
int three_way(const T& a, const T& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

bool is_identifier(const std::string& name) {
  if (name.empty() || name == "top" || name == "bot") return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    auto u = static_cast<unsigned char>(ch);
    return std::isalnum(u) || u == '_';
  });
}

// ---------------------------------------------------------------------------
// Expr

struct Expr::Node {
  Kind kind;
  std::string name;
  std::vector<Expr> children;
};

Expr Expr::var(std::string name) {
  if (!is_identifier(name)) throw ValidationError("invalid variable name '" + name + "'");
  return Expr(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Expr Expr::top() {
  static const Expr instance(std::make_shared<const Node>(Node{Kind::Top, {}, {}}));
  return instance;
}

Expr Expr::bottom() {
  static const Expr instance(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}}));
  return instance;
}

Expr Expr::conj(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::disj(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::strong(Expr lhs, Expr rhs) {
  return Expr(
      std::make_shared<const Node>(Node{Kind::Strong, {}, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::neg(Expr operand) {
  return Expr(std::make_shared<const Node>(Node{Kind::Neg, {}, {std::move(operand)}}));
}

Expr::Kind Expr::kind() const { return node_->kind; }

bool Expr::is_binary() const {
  auto k = node_->kind;
  return k == Kind::And || k == Kind::Or || k == Kind::Strong;
}

const std::string& Expr::name() const { return node_->name; }
const Expr& Expr::lhs() const { return node_->children.at(0); }
const Expr& Expr::rhs() const { return node_->children.at(1); }

void Expr::collect_vars(std::set<std::string>& out) const {
  if (node_->kind == Kind::Var) out.insert(node_->name);
  for (const auto& c : node_->children) c.collect_vars(out);
}

std::size_t Expr::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

int Expr::compare(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return 0;
  if (a.node_->kind != b.node_->kind) return a.node_->kind < b.node_->kind ? -1 : 1;
  if (int c = a.node_->name.compare(b.node_->name); c != 0) return c < 0 ? -1 : 1;
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (int c = compare(ac[i], bc[i]); c != 0) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// GradedImplication

GradedImplication::GradedImplication(std::vector<Expr> antecedents, Expr consequent, Grade grade)
    : antecedents_(std::move(antecedents)),
      consequent_(std::move(consequent)),
      grade_(std::move(grade)) {
  if (antecedents_.empty()) throw ValidationError("graded implication without antecedents");
  std::sort(antecedents_.begin(), antecedents_.end());
}

void GradedImplication::collect_vars(std::set<std::string>& out) const {
  for (const auto& a : antecedents_) a.collect_vars(out);
  consequent_.collect_vars(out);
}

std::strong_ordering operator<=>(const GradedImplication& a, const GradedImplication& b) {
  if (auto c = a.antecedents_.size() <=> b.antecedents_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.antecedents_.size(); ++i) {
    if (auto c = a.antecedents_[i] <=> b.antecedents_[i]; c != 0) return c;
  }
  if (auto c = a.consequent_ <=> b.consequent_; c != 0) return c;
  return a.grade_ <=> b.grade_;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  FormulaMode mode;
  std::variant<std::monostate, Atom> atom;
  std::vector<Formula> children;
};

Formula Formula::atom(GradedImplication gi) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Atom, FormulaMode::Implication, Atom(std::move(gi)), {}}));
}

Formula Formula::atom(GradedVariable gv) {
  if (!is_identifier(gv.name)) throw ValidationError("invalid variable name '" + gv.name + "'");
  return Formula(
      std::make_shared<const Node>(Node{Kind::Atom, FormulaMode::Graded, Atom(std::move(gv)), {}}));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  if (lhs.mode() != rhs.mode()) {
    throw ValidationError("formula mixes graded implications with graded variables");
  }
  auto mode = lhs.mode();
  return Formula(std::make_shared<const Node>(
      Node{kind, mode, std::monostate{}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return binary(Kind::And, std::move(lhs), std::move(rhs));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return binary(Kind::Or, std::move(lhs), std::move(rhs));
}

Formula Formula::negation(Formula operand) {
  auto mode = operand.mode();
  return Formula(
      std::make_shared<const Node>(Node{Kind::Not, mode, std::monostate{}, {std::move(operand)}}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return disj(negation(std::move(lhs)), std::move(rhs));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return conj(implies(lhs, rhs), implies(rhs, lhs));
}

Formula::Kind Formula::kind() const { return node_->kind; }
FormulaMode Formula::mode() const { return node_->mode; }

const Atom& Formula::atom_value() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("formula is not an atom");
  return std::get<Atom>(node_->atom);
}

const GradedImplication& Formula::implication() const {
  return std::get<GradedImplication>(atom_value());
}

const GradedVariable& Formula::graded_variable() const {
  return std::get<GradedVariable>(atom_value());
}

const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }

bool Formula::as_implication(const Formula** premise, const Formula** conclusion) const {
  if (kind() != Kind::Or || lhs().kind() != Kind::Not) return false;
  *premise = &lhs().operand();
  *conclusion = &rhs();
  return true;
}

void Formula::collect_vars(std::set<std::string>& out) const {
  if (node_->kind == Kind::Atom) {
    const auto& a = atom_value();
    if (const auto* gi = std::get_if<GradedImplication>(&a)) {
      gi->collect_vars(out);
    } else {
      out.insert(std::get<GradedVariable>(a).name);
    }
    return;
  }
  for (const auto& c : node_->children) c.collect_vars(out);
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.node_->mode != b.node_->mode) return a.node_->mode < b.node_->mode ? -1 : 1;
  if (a.node_->kind != b.node_->kind) return a.node_->kind < b.node_->kind ? -1 : 1;
  if (a.node_->kind == Kind::Atom) {
    const auto& x = a.atom_value();
    const auto& y = b.atom_value();
    if (x.index() != y.index()) return x.index() < y.index() ? -1 : 1;
    if (const auto* gi = std::get_if<GradedImplication>(&x)) {
      return three_way(*gi, std::get<GradedImplication>(y));
    }
    return three_way(std::get<GradedVariable>(x), std::get<GradedVariable>(y));
  }
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (int c = compare(ac[i], bc[i]); c != 0) return c;
  }
  return 0;
}

std::vector<Formula> conjuncts(const Formula& f) {
  std::vector<Formula> out;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    if (cur->kind() == Formula::Kind::And) {
      stack.push_back(&cur->rhs());
      stack.push_back(&cur->lhs());
    } else {
      out.push_back(*cur);
    }
  }
  return out;
}

Formula conjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) throw ValidationError("empty conjunction");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
  return acc;
}

}  // namespace graded
