#include "graded/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "graded/errors.hpp"

namespace graded {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  template <typename T, typename F>
  T parse_all(F&& production) {
    try {
      T result = production();
      skip_ws();
      if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
      return result;
    } catch (const ParseError& e) {
      if (furthest_ && furthest_->offset() > e.offset()) throw *furthest_;
      throw;
    }
  }

  Expr basic() { return basic_disj(); }

  GradedImplication implication() {
    std::vector<Expr> antecedents{basic()};
    while (accept(",")) antecedents.push_back(basic());
    skip_ws();
    if (!accept("->[")) fail(pos_, "expected '->['");
    Grade g = grade();
    if (!accept("]")) fail(pos_, "expected ']'");
    Expr consequent = basic();
    return GradedImplication(std::move(antecedents), std::move(consequent), std::move(g));
  }

  Formula formula() {
    Formula lhs = impl();
    skip_ws();
    std::size_t at = pos_;
    if (accept("<=>")) {
      Formula rhs = impl();
      return combine(at, [&] { return Formula::iff(lhs, rhs); });
    }
    return lhs;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message) {
    throw ParseError(at, message);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool lookahead(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!lookahead(token)) return false;
    pos_ += token.size();
    return true;
  }

  std::optional<std::string> word() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size()) {
      auto head = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalpha(head) && head != '_') return std::nullopt;
    }
    while (pos_ < text_.size()) {
      auto ch = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalnum(ch) && ch != '_') break;
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  Grade grade() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '.' && ch != '/') break;
      ++pos_;
    }
    if (pos_ == start) fail(start, "expected grade literal");
    try {
      return Grade::parse(text_.substr(start, pos_ - start));
    } catch (const ValidationError& e) {
      fail(start, e.what());
    }
  }

  // -- basic expressions ---------------------------------------------------

  Expr basic_disj() {
    Expr acc = basic_conj();
    while (accept("|")) acc = Expr::disj(acc, basic_conj());
    return acc;
  }

  Expr basic_conj() {
    Expr acc = basic_strong();
    while (accept("&")) acc = Expr::conj(acc, basic_strong());
    return acc;
  }

  Expr basic_strong() {
    Expr acc = basic_unary();
    while (accept("*")) acc = Expr::strong(acc, basic_unary());
    return acc;
  }

  Expr basic_unary() {
    if (accept("~")) return Expr::neg(basic_unary());
    skip_ws();
    std::size_t at = pos_;
    if (accept("(")) {
      Expr inner = basic();
      if (!accept(")")) fail(pos_, "expected ')'");
      return inner;
    }
    auto w = word();
    if (!w) {
      if (at >= text_.size()) fail(at, "unexpected end of input, expected expression");
      fail(at, std::string("unknown token '") + text_[at] + "'");
    }
    if (*w == "top") return Expr::top();
    if (*w == "bot") return Expr::bottom();
    return Expr::var(std::move(*w));
  }

  // -- outer formulas ------------------------------------------------------

  template <typename F>
  Formula combine(std::size_t at, F&& make) {
    try {
      return make();
    } catch (const ValidationError& e) {
      fail(at, e.what());
    }
  }

  Formula impl() {
    Formula lhs = or_();
    skip_ws();
    std::size_t at = pos_;
    if (lookahead("=>")) {
      pos_ += 2;
      Formula rhs = impl();
      return combine(at, [&] { return Formula::implies(lhs, rhs); });
    }
    return lhs;
  }

  Formula or_() {
    Formula acc = and_();
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      if (!accept("\\/")) return acc;
      Formula rhs = and_();
      acc = combine(at, [&] { return Formula::disj(acc, rhs); });
    }
  }

  Formula and_() {
    Formula acc = not_();
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      if (!accept("/\\")) return acc;
      Formula rhs = not_();
      acc = combine(at, [&] { return Formula::conj(acc, rhs); });
    }
  }

  Formula not_() {
    if (accept("!")) return Formula::negation(not_());
    skip_ws();
    const std::size_t start = pos_;
    // A leading "(" may open a graded variable, a parenthesised basic
    // expression heading an implication, or a parenthesised formula.
    if (auto q = attempt(start, [&] { return qatom(); })) return *q;
    if (auto g = attempt(start, [&] { return Formula::atom(implication()); })) return *g;
    pos_ = start;
    if (!accept("(")) {
      // Re-run the implication alternative so its own error surfaces.
      return Formula::atom(implication());
    }
    Formula inner = formula();
    if (!accept(")")) fail(pos_, "expected ')'");
    return inner;
  }

  Formula qatom() {
    if (!accept("(")) fail(pos_, "expected '('");
    auto name = word();
    if (!name || *name == "top" || *name == "bot") fail(pos_, "expected variable");
    if (!accept(",")) fail(pos_, "expected ','");
    Grade g = grade();
    if (!accept(")")) fail(pos_, "expected ')'");
    return Formula::atom(GradedVariable{std::move(*name), std::move(g)});
  }

  template <typename F>
  std::optional<Formula> attempt(std::size_t start, F&& production) {
    pos_ = start;
    try {
      return production();
    } catch (const ParseError& e) {
      if (!furthest_ || e.offset() > furthest_->offset()) furthest_ = e;
      pos_ = start;
      return std::nullopt;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<ParseError> furthest_;
};

void render_into(std::ostream& os, const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Var: os << e.name(); return;
    case Expr::Kind::Top: os << "top"; return;
    case Expr::Kind::Bottom: os << "bot"; return;
    case Expr::Kind::Neg:
      os << '~';
      render_into(os, e.operand());
      return;
    case Expr::Kind::And:
    case Expr::Kind::Or:
    case Expr::Kind::Strong: {
      const char* op = e.kind() == Expr::Kind::And ? " & " : (e.kind() == Expr::Kind::Or ? " | " : " * ");
      os << '(';
      render_into(os, e.lhs());
      os << op;
      render_into(os, e.rhs());
      os << ')';
      return;
    }
  }
}

void render_atom(std::ostream& os, const Atom& a) {
  if (const auto* gi = std::get_if<GradedImplication>(&a)) {
    os << render(*gi);
  } else {
    os << render(std::get<GradedVariable>(a));
  }
}

void render_into(std::ostream& os, const Formula& f, bool nested) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (nested && f.mode() == FormulaMode::Implication) {
        os << '(';
        render_atom(os, f.atom_value());
        os << ')';
      } else {
        render_atom(os, f.atom_value());
      }
      return;
    case Formula::Kind::Not:
      os << '!';
      render_into(os, f.operand(), true);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      os << '(';
      render_into(os, f.lhs(), true);
      os << (f.kind() == Formula::Kind::And ? " /\\ " : " \\/ ");
      render_into(os, f.rhs(), true);
      os << ')';
      return;
  }
}

}  // namespace

Expr parse_basic(std::string_view text) {
  Parser p(text);
  return p.parse_all<Expr>([&] { return p.basic(); });
}

GradedImplication parse_implication(std::string_view text) {
  Parser p(text);
  return p.parse_all<GradedImplication>([&] { return p.implication(); });
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  return p.parse_all<Formula>([&] { return p.formula(); });
}

Theory parse_theory(std::string_view text) {
  Theory out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      try {
        out.push_back(parse_formula(line));
      } catch (const ParseError& e) {
        throw ParseError(e.offset(), "line " + std::to_string(line_no) + ": " + e.detail());
      }
    }
    start = end + 1;
  }
  return out;
}

std::string render(const Expr& e) {
  std::ostringstream os;
  render_into(os, e);
  return os.str();
}

std::string render(const GradedImplication& gi) {
  std::ostringstream os;
  bool first = true;
  for (const auto& a : gi.antecedents()) {
    if (!first) os << ", ";
    first = false;
    render_into(os, a);
  }
  os << " ->[" << gi.grade().str() << "] ";
  render_into(os, gi.consequent());
  return os.str();
}

std::string render(const GradedVariable& gv) {
  return "(" + gv.name + ", " + gv.grade.str() + ")";
}

std::string render(const Formula& f) {
  std::ostringstream os;
  render_into(os, f, false);
  return os.str();
}

}  // namespace graded
