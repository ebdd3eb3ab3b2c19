#include "graded/grade.hpp"

#include <cctype>

#include "graded/errors.hpp"

namespace graded {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class to_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ValidationError("malformed number '" + std::string(text) + "'"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class d = to_integer(den);
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rational r(to_integer(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) throw fail();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(to_integer(whole) * scale + to_integer(frac), scale);
    r.canonicalize();
    return r;
  }
  if (!all_digits(text)) throw fail();
  return Rational(to_integer(text));
}

Grade::Grade(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0 || value_ > 1) {
    throw ValidationError("grade " + to_string(value_) + " outside [0,1]");
  }
}

Grade::Grade(long numerator, long denominator) {
  if (denominator == 0) throw ValidationError("zero denominator");
  Rational r(numerator, denominator);
  *this = Grade(std::move(r));
}

Grade Grade::parse(std::string_view text) { return Grade(parse_rational(text)); }

std::string_view tnorm_name(TNormKind kind) {
  switch (kind) {
    case TNormKind::Lukasiewicz: return "lukasiewicz";
    case TNormKind::Product: return "product";
    case TNormKind::Minimum: return "min";
  }
  return "?";
}

TNormKind parse_tnorm(std::string_view name) {
  if (name == "lukasiewicz" || name == "luk") return TNormKind::Lukasiewicz;
  if (name == "product" || name == "prod") return TNormKind::Product;
  if (name == "min" || name == "minimum" || name == "godel") return TNormKind::Minimum;
  throw ValidationError("unknown t-norm '" + std::string(name) + "'");
}

Grade tnorm(TNormKind kind, const Grade& c, const Grade& d) {
  switch (kind) {
    case TNormKind::Lukasiewicz: {
      Rational s = c.value() + d.value() - 1;
      return sgn(s) > 0 ? Grade(std::move(s)) : Grade::zero();
    }
    case TNormKind::Product:
      return Grade(Rational(c.value() * d.value()));
    case TNormKind::Minimum:
      return min(c, d);
  }
  return Grade::zero();
}

Grade tconorm(TNormKind kind, const Grade& c, const Grade& d) {
  return negate(tnorm(kind, negate(c), negate(d)));
}

Grade negate(const Grade& c) { return Grade(Rational(1 - c.value())); }

Grade mean(std::span<const Grade> values) {
  if (values.empty()) throw ValidationError("mean of an empty list");
  Rational sum = 0;
  for (const auto& g : values) sum += g.value();
  sum /= static_cast<long>(values.size());
  return Grade(std::move(sum));
}

}  // namespace graded
