// Concrete syntax.
//
//   basic    := disj
//   disj     := conj ("|" conj)*
//   conj     := strong ("&" strong)*
//   strong   := unary ("*" unary)*
//   unary    := "~" unary | ident | "top" | "bot" | "(" basic ")"
//   gi       := basic ("," basic)* "->[" grade "]" basic
//   qatom    := "(" ident "," grade ")"
//   formula  := equiv
//   equiv    := impl ("<=>" impl)?
//   impl     := or ("=>" impl)?
//   or       := and ("\/" and)*
//   and      := not ("/\" not)*
//   not      := "!" not | qatom | gi | "(" formula ")"
//
// Grades are "p/q", integers, or decimals; decimals become exact rationals.
// "=>" and "<=>" are desugared on the spot. render() emits a fully
// parenthesised canonical text that parses back to the identical tree.

#ifndef GRADED_PARSER_HPP
#define GRADED_PARSER_HPP

#include <string>
#include <string_view>

#include "graded/syntax.hpp"

namespace graded {

Expr parse_basic(std::string_view text);
GradedImplication parse_implication(std::string_view text);
Formula parse_formula(std::string_view text);

/// Parses one formula per nonblank line; '#' starts a comment line.
/// Errors carry the 1-based line number in their message.
Theory parse_theory(std::string_view text);

std::string render(const Expr& e);
std::string render(const GradedImplication& gi);
std::string render(const GradedVariable& gv);
std::string render(const Formula& f);

}  // namespace graded

#endif  // GRADED_PARSER_HPP
