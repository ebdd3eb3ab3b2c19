// Exact rational truth degrees and the connective arithmetic on them.
//
// Every degree in the library is an exact rational in [0,1]. The three
// supported t-norm families (Lukasiewicz, product, minimum) are closed over
// the rationals, so nothing downstream ever needs a tolerance.

#ifndef GRADED_GRADE_HPP
#define GRADED_GRADE_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace graded {

using Rational = mpq_class;

/// Renders a rational as "p/q", or as a bare integer when q = 1.
std::string to_string(const Rational& r);

/// Parses "p/q", an integer, or a decimal such as "0.25" into an exact
/// rational. Signs are not accepted. Throws ValidationError.
Rational parse_rational(std::string_view text);

/// A truth degree: an exact rational in [0,1], always in lowest terms.
class Grade {
 public:
  Grade() = default;  // zero

  /// Throws ValidationError when `value` lies outside [0,1].
  explicit Grade(Rational value);
  Grade(long numerator, long denominator);

  static Grade zero() { return Grade{}; }
  static Grade one() { return Grade(1, 1); }

  /// Parses a grade literal ("3/4", "0.75", "1"). Throws ValidationError
  /// for malformed or out-of-range literals.
  static Grade parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  std::string str() const { return to_string(value_); }

  friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
};

enum class TNormKind { Lukasiewicz, Product, Minimum };

/// "lukasiewicz", "product", "min".
std::string_view tnorm_name(TNormKind kind);
/// Accepts the names produced by tnorm_name plus "minimum"/"godel".
TNormKind parse_tnorm(std::string_view name);

Grade tnorm(TNormKind kind, const Grade& c, const Grade& d);
Grade tconorm(TNormKind kind, const Grade& c, const Grade& d);
Grade negate(const Grade& c);

/// Lukasiewicz combinators; the calculus uses these in its side conditions
/// whatever the session t-norm is.
inline Grade luk_tnorm(const Grade& c, const Grade& d) { return tnorm(TNormKind::Lukasiewicz, c, d); }
inline Grade luk_tconorm(const Grade& c, const Grade& d) {
  return tconorm(TNormKind::Lukasiewicz, c, d);
}

/// Arithmetic mean. Throws ValidationError on an empty list.
Grade mean(std::span<const Grade> values);

inline Grade min(const Grade& a, const Grade& b) { return a <= b ? a : b; }
inline Grade max(const Grade& a, const Grade& b) { return a <= b ? b : a; }

}  // namespace graded

#endif  // GRADED_GRADE_HPP
