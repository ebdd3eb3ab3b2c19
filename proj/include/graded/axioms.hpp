// Axiom schemas of the graded-implication calculus and its mean-value
// extension, with exact recognisers and instance builders.
//
// Schemas are listed in match order. Every side condition is an exact
// equation over rationals; a conclusion grade that is merely weaker than the
// computed one is not an instance.

#ifndef GRADED_AXIOMS_HPP
#define GRADED_AXIOMS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "graded/grade.hpp"
#include "graded/syntax.hpp"

namespace graded {

enum class AxiomSchema : unsigned char {
  And1, And2, And3,
  Or1, Or2, Or3,
  Strong1, Strong2, Strong3,
  Neg1, Neg2, Neg3,
  Top, Bottom, Zero, Reflexive, Inconsistency,
  Trans1, Trans2,
  Lin1, Lin2,
  MeanTrans1, MeanTrans2, MeanTrans3, MeanTop,
};

inline constexpr std::array<AxiomSchema, 25> kAllSchemas = {
    AxiomSchema::And1,       AxiomSchema::And2,        AxiomSchema::And3,
    AxiomSchema::Or1,        AxiomSchema::Or2,         AxiomSchema::Or3,
    AxiomSchema::Strong1,    AxiomSchema::Strong2,     AxiomSchema::Strong3,
    AxiomSchema::Neg1,       AxiomSchema::Neg2,        AxiomSchema::Neg3,
    AxiomSchema::Top,        AxiomSchema::Bottom,      AxiomSchema::Zero,
    AxiomSchema::Reflexive,  AxiomSchema::Inconsistency,
    AxiomSchema::Trans1,     AxiomSchema::Trans2,
    AxiomSchema::Lin1,       AxiomSchema::Lin2,
    AxiomSchema::MeanTrans1, AxiomSchema::MeanTrans2,  AxiomSchema::MeanTrans3,
    AxiomSchema::MeanTop,
};

/// Script name: and1, ..., strong1, neg1, top, bot, zero, refl, inkons,
/// trans1, trans2, lin1, lin2, mtrans1, mtrans2, mtrans3, mtop.
std::string_view schema_name(AxiomSchema s);
std::optional<AxiomSchema> schema_from_name(std::string_view name);

/// Schemas that exist only in the mean-value extension.
bool is_mean_schema(AxiomSchema s);

struct AxiomMatch {
  AxiomSchema schema;
  /// Grade parameters in pattern order, e.g. {c, d} for trans1,
  /// {c1, ..., cn, d} for mtrans1.
  std::vector<Grade> grades;
};

/// Checks `f` against one schema. `tnorm` fixes the meaning of the
/// strong-conjunction schemas.
std::optional<AxiomMatch> match_schema(const Formula& f, AxiomSchema schema, TNormKind tnorm);

/// First schema in kAllSchemas order that `f` instantiates.
std::optional<AxiomMatch> match_axiom(const Formula& f, TNormKind tnorm);

/// Parameters for building an instance. Schemas read what they need:
///   alpha/beta/gamma, c/d          for the plain schemas
///   alphas/betas, cs, d            for mtrans1 (n = alphas.size())
///   alphas, c, d, gamma            for mtrans2
///   alphas, cs, d, beta            for mtrans3
///   c, alpha, n                    for mtop
struct AxiomParams {
  Expr alpha = Expr::top();
  Expr beta = Expr::top();
  Expr gamma = Expr::top();
  Grade c = Grade::one();
  Grade d = Grade::one();
  std::vector<Expr> alphas;
  std::vector<Expr> betas;
  std::vector<Grade> cs;
  std::size_t n = 1;
};

/// Builds the instance of `schema` selected by `params`, with every
/// computed grade filled in from the side condition.
Formula instantiate(AxiomSchema schema, const AxiomParams& params, TNormKind tnorm);

}  // namespace graded

#endif  // GRADED_AXIOMS_HPP
