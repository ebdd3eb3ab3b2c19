#include "graded/proof.hpp"

#include <map>
#include <set>

#include "graded/errors.hpp"
#include "graded/parser.hpp"

namespace graded {

namespace {

void collect_atoms(const Formula& f, std::map<Formula, std::size_t>& atoms) {
  if (f.is_atom()) {
    atoms.emplace(f, atoms.size());
    return;
  }
  collect_atoms(f.lhs(), atoms);
  if (f.kind() != Formula::Kind::Not) collect_atoms(f.rhs(), atoms);
}

bool classical(const Formula& f, const std::map<Formula, std::size_t>& atoms, std::uint64_t bits) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return (bits >> atoms.at(f)) & 1U;
    case Formula::Kind::Not: return !classical(f.operand(), atoms, bits);
    case Formula::Kind::And: return classical(f.lhs(), atoms, bits) && classical(f.rhs(), atoms, bits);
    case Formula::Kind::Or: return classical(f.lhs(), atoms, bits) || classical(f.rhs(), atoms, bits);
  }
  return false;
}

std::string describe(const Formula& f) { return render(f); }

Verdict check_line(const Theory& theory, const Proof& proof, std::size_t i,
                   const KernelOptions& options) {
  const ProofLine& line = proof.lines[i];
  const Formula& f = line.formula;
  if (f.mode() != FormulaMode::Implication) {
    return Verdict::reject(i, "line is not built from graded implications");
  }

  if (const auto* h = std::get_if<Hypothesis>(&line.justification)) {
    if (h->index >= theory.size()) {
      return Verdict::reject(i, "hypothesis index " + std::to_string(h->index) + " out of range");
    }
    if (!(theory[h->index] == f)) {
      return Verdict::reject(i, "formula differs from theory element " + std::to_string(h->index));
    }
    return Verdict::accept();
  }

  if (const auto* a = std::get_if<AxiomUse>(&line.justification)) {
    if (options.plain_only && is_mean_schema(a->schema)) {
      return Verdict::reject(i, std::string("schema ") + std::string(schema_name(a->schema)) +
                                    " is not part of the plain calculus");
    }
    auto m = match_schema(f, a->schema, options.tnorm);
    if (!m) {
      return Verdict::reject(i, "not an instance of " + std::string(schema_name(a->schema)) +
                                    " (or its grade side condition fails)");
    }
    if (a->grades && *a->grades != m->grades) {
      return Verdict::reject(i, "recorded grade parameters do not match the instance");
    }
    return Verdict::accept();
  }

  if (const auto* t = std::get_if<TautologyUse>(&line.justification)) {
    try {
      if (t->atoms && *t->atoms != count_atoms(f)) {
        return Verdict::reject(i, "tautology witness records the wrong atom count");
      }
      if (!match_tautology(f, options.tautology_atom_cap)) {
        return Verdict::reject(i, "not a classical tautology");
      }
    } catch (const ResourceError& e) {
      return Verdict::reject(i, e.what());
    }
    return Verdict::accept();
  }

  const auto& mp = std::get<ModusPonens>(line.justification);
  if (mp.minor >= i || mp.major >= i) {
    return Verdict::reject(i, "modus ponens must cite strictly earlier lines");
  }
  const Formula* premise = nullptr;
  const Formula* conclusion = nullptr;
  if (!proof.lines[mp.major].formula.as_implication(&premise, &conclusion)) {
    return Verdict::reject(i, "line " + std::to_string(mp.major) + " is not an implication");
  }
  if (!(*premise == proof.lines[mp.minor].formula)) {
    return Verdict::reject(i, "premise of line " + std::to_string(mp.major) + " differs from line " +
                                  std::to_string(mp.minor));
  }
  if (!(*conclusion == f)) {
    return Verdict::reject(i, "modus ponens yields " + describe(*conclusion) + ", not this line");
  }
  return Verdict::accept();
}

}  // namespace

std::size_t count_atoms(const Formula& f) {
  std::map<Formula, std::size_t> atoms;
  collect_atoms(f, atoms);
  return atoms.size();
}

bool match_tautology(const Formula& f, std::size_t atom_cap) {
  std::map<Formula, std::size_t> atoms;
  collect_atoms(f, atoms);
  if (atoms.size() > atom_cap || atoms.size() >= 63) {
    throw ResourceError("tautology check over " + std::to_string(atoms.size()) +
                        " atoms exceeds the cap of " + std::to_string(atom_cap));
  }
  // Atom indices follow first occurrence; any bijection works for validity.
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  for (std::uint64_t bits = 0; bits < rows; ++bits) {
    if (!classical(f, atoms, bits)) return false;
  }
  return true;
}

Verdict check_proof(const Theory& theory, const Proof& proof, const KernelOptions& options) {
  if (proof.lines.empty()) return Verdict::reject(std::nullopt, "empty proof");
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    Verdict v = check_line(theory, proof, i, options);
    if (!v.accepted) return v;
  }
  return Verdict::accept();
}

Verdict check_proof_of(const Theory& theory, const Proof& proof, const Formula& goal,
                       const KernelOptions& options) {
  Verdict v = check_proof(theory, proof, options);
  if (!v.accepted) return v;
  if (!(proof.conclusion() == goal)) {
    return Verdict::reject(proof.lines.size() - 1, "last line is not the claimed formula");
  }
  return v;
}

std::vector<Formula> tau_formulas(const Expr& alpha, const Grade& c,
                                  const std::vector<unsigned>& denominators) {
  std::set<Grade> grades;
  for (unsigned den : denominators) {
    if (den == 0) throw ValidationError("denominator must be positive");
    for (unsigned num = 0; num <= den; ++num) grades.emplace(static_cast<long>(num), static_cast<long>(den));
  }
  std::vector<Formula> out;
  for (const auto& t : grades) {
    if (t < c) {
      out.push_back(Formula::atom(GradedImplication(Expr::top(), alpha, t)));
    } else if (t > c) {
      out.push_back(Formula::atom(GradedImplication(alpha, Expr::bottom(), negate(t))));
    }
  }
  return out;
}

std::size_t append_modus_ponens(Proof& proof, std::size_t premise, std::size_t rule) {
  const Formula* p = nullptr;
  const Formula* q = nullptr;
  if (!proof.lines.at(rule).formula.as_implication(&p, &q)) {
    throw ValidationError("modus ponens on a line that is not an implication");
  }
  Formula conclusion = *q;
  return proof.add(std::move(conclusion), ModusPonens{premise, rule});
}

std::size_t append_conjunction(Proof& proof, const std::vector<std::size_t>& premises) {
  if (premises.empty()) throw ValidationError("conjunction of no lines");
  if (premises.size() == 1) return premises.front();
  std::vector<Formula> parts;
  for (auto idx : premises) parts.push_back(proof.lines.at(idx).formula);

  // P1 => (P2 => (... => (Pk => P1 /\ ... /\ Pk)))
  Formula curried = conjunction(parts);
  for (std::size_t i = parts.size(); i-- > 0;) curried = Formula::implies(parts[i], curried);
  std::size_t at = proof.add(curried, TautologyUse{count_atoms(curried)});
  for (auto idx : premises) at = append_modus_ponens(proof, idx, at);
  return at;
}

std::size_t append_axiom(Proof& proof, AxiomSchema schema, const AxiomParams& params,
                         TNormKind tnorm) {
  Formula f = instantiate(schema, params, tnorm);
  auto m = match_schema(f, schema, tnorm);
  if (!m) throw std::logic_error("instance does not match its own schema");
  return proof.add(std::move(f), AxiomUse{schema, m->grades});
}

std::size_t append_rule(Proof& proof, AxiomSchema schema, const AxiomParams& params,
                        const std::vector<std::size_t>& premises, TNormKind tnorm) {
  std::size_t conj = append_conjunction(proof, premises);
  std::size_t rule = append_axiom(proof, schema, params, tnorm);
  return append_modus_ponens(proof, conj, rule);
}

std::size_t append_weakening(Proof& proof, std::size_t line, const Grade& t) {
  const Formula& f = proof.lines.at(line).formula;
  if (!f.is_atom() || f.mode() != FormulaMode::Implication) {
    throw ValidationError("weakening applies to a graded implication");
  }
  const GradedImplication gi = f.implication();
  if (t > gi.grade()) throw ValidationError("weakening cannot raise a grade");
  if (t == gi.grade()) return line;

  AxiomParams params;
  params.alpha = gi.consequent();
  params.c = Grade(Rational(1 + t.value() - gi.grade().value()));
  std::size_t refl = append_axiom(proof, AxiomSchema::Reflexive, params, TNormKind::Lukasiewicz);

  AxiomParams tp;
  tp.beta = gi.consequent();
  tp.gamma = gi.consequent();
  tp.c = gi.grade();
  tp.d = params.c;
  if (gi.is_simple()) {
    tp.alpha = gi.antecedent();
    return append_rule(proof, AxiomSchema::Trans1, tp, {line, refl}, TNormKind::Lukasiewicz);
  }
  tp.alphas = gi.antecedents();
  return append_rule(proof, AxiomSchema::MeanTrans2, tp, {line, refl}, TNormKind::Lukasiewicz);
}

}  // namespace graded
