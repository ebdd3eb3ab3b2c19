// Hilbert-style proofs and their line-by-line verification.
//
// A proof is a list of formulas, each justified as a theory hypothesis, an
// axiom-schema instance, an instance of a classical tautology (graded
// implications standing in for propositional variables), or modus ponens
// from two strictly earlier lines. The proved formula is the last line.

#ifndef GRADED_PROOF_HPP
#define GRADED_PROOF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graded/axioms.hpp"
#include "graded/syntax.hpp"

namespace graded {

inline constexpr std::size_t kDefaultTautologyAtomCap = 16;

/// True iff `f` holds under all 2^k classical assignments to its k
/// distinct atoms. Throws ResourceError when k exceeds `atom_cap`.
bool match_tautology(const Formula& f, std::size_t atom_cap = kDefaultTautologyAtomCap);

/// Number of distinct atoms of `f`.
std::size_t count_atoms(const Formula& f);

struct Hypothesis {
  std::size_t index;  // position in the theory
};

struct AxiomUse {
  AxiomSchema schema;
  /// When present, must equal the grades the recogniser extracts.
  std::optional<std::vector<Grade>> grades;
};

struct TautologyUse {
  /// Witness summary; when present, must equal the formula's atom count.
  std::optional<std::size_t> atoms;
};

/// From lines `minor` = A and `major` = A => B, conclude B.
struct ModusPonens {
  std::size_t minor;
  std::size_t major;
};

using Justification = std::variant<Hypothesis, AxiomUse, TautologyUse, ModusPonens>;

struct ProofLine {
  Formula formula;
  Justification justification;
};

struct Proof {
  std::vector<ProofLine> lines;

  const Formula& conclusion() const { return lines.back().formula; }
  std::size_t add(Formula f, Justification j) {
    lines.push_back({std::move(f), std::move(j)});
    return lines.size() - 1;
  }
};

struct Verdict {
  bool accepted = false;
  std::optional<std::size_t> line;  // 0-based index of the first bad line
  std::string reason;

  static Verdict accept() { return Verdict{true, std::nullopt, {}}; }
  static Verdict reject(std::optional<std::size_t> line, std::string reason) {
    return Verdict{false, line, std::move(reason)};
  }
};

struct KernelOptions {
  TNormKind tnorm = TNormKind::Lukasiewicz;
  std::size_t tautology_atom_cap = kDefaultTautologyAtomCap;
  /// Reject the mean-value schemas (plain calculus only).
  bool plain_only = false;
};

Verdict check_proof(const Theory& theory, const Proof& proof, const KernelOptions& options = {});

/// As check_proof, and additionally requires the last line to be `goal`.
Verdict check_proof_of(const Theory& theory, const Proof& proof, const Formula& goal,
                       const KernelOptions& options = {});

/// The part of tau(alpha, c) whose grades t have a denominator from
/// `denominators`: top ->[t] alpha for t < c, alpha ->[1-t] bot for t > c.
/// Ordered by t.
std::vector<Formula> tau_formulas(const Expr& alpha, const Grade& c,
                                  const std::vector<unsigned>& denominators);

/// Appends to `proof` the steps that make `premises` (existing line
/// indices, in order) into their left-associated conjunction, using one
/// curried tautology instance and modus ponens. Returns the line index of
/// the conjunction.
std::size_t append_conjunction(Proof& proof, const std::vector<std::size_t>& premises);

/// Given line `rule` = P => Q and line `premise` = P, appends Q. Returns its
/// index.
std::size_t append_modus_ponens(Proof& proof, std::size_t premise, std::size_t rule);

/// Appends an axiom instance justified by `schema` and its grades.
std::size_t append_axiom(Proof& proof, AxiomSchema schema, const AxiomParams& params,
                         TNormKind tnorm);

/// Applies an implication-shaped axiom whose premises are already proved:
/// conjunction introduction, the axiom, then modus ponens. Returns the
/// index of the conclusion.
std::size_t append_rule(Proof& proof, AxiomSchema schema, const AxiomParams& params,
                        const std::vector<std::size_t>& premises, TNormKind tnorm);

/// Grade weakening: from line `line` = A ->[d] b and t <= d, appends
/// A ->[t] b via reflexivity b ->[1 + t - d] b and trans1 (mtrans2 when A
/// has several antecedents).
std::size_t append_weakening(Proof& proof, std::size_t line, const Grade& t);

}  // namespace graded

#endif  // GRADED_PROOF_HPP
