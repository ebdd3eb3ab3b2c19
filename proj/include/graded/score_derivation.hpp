// The questionnaire-score derivation in the mean-value calculus.
//
// Theory for n items with answers c1..cn, symptom variables phi_i and
// disorder variable delta (hypothesis indices in this order):
//
//   0                 phi_1, ..., phi_n ->[1] delta
//   1                 ~phi_1, ..., ~phi_n ->[1] ~delta
//   2 .. n+1          phi_i ->[1 - c_i] bot
//   n+2 .. 2n+1       top ->[c_i] phi_i
//
// From it the constructed proof derives top ->[d] delta and then
// delta ->[1 - d] bot as its last two lines, d = mean(c).

#ifndef GRADED_SCORE_DERIVATION_HPP
#define GRADED_SCORE_DERIVATION_HPP

#include <string>
#include <vector>

#include "graded/grade.hpp"
#include "graded/proof.hpp"
#include "graded/syntax.hpp"

namespace graded {

struct ScoreDerivation {
  Theory theory;
  Proof proof;
  Grade score;
  /// Line indices of top ->[d] delta and delta ->[1-d] bot.
  std::size_t lower_line = 0;
  std::size_t upper_line = 0;
};

Theory score_theory(const std::vector<std::string>& items, const std::string& disorder,
                    const std::vector<Grade>& answers);

/// Throws ValidationError on a length mismatch, an empty item list, or
/// names that are not identifiers.
ScoreDerivation build_score_derivation(const std::vector<std::string>& items,
                                       const std::string& disorder,
                                       const std::vector<Grade>& answers);

/// Items phi1..phin and disorder "delta".
ScoreDerivation build_score_derivation(std::size_t n, const std::vector<Grade>& answers);

/// Names phi1..phin.
std::vector<std::string> default_item_names(std::size_t n);

}  // namespace graded

#endif  // GRADED_SCORE_DERIVATION_HPP
