#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sscnet {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Product of symbol powers; the empty product is the constant monomial.
/// Stored as (symbol id, exponent > 0) sorted by symbol id.
class Monomial {
 public:
  Monomial() = default;
  static Monomial symbol(int id, int exponent = 1);

  bool is_one() const { return powers_.empty(); }
  int degree() const;
  const std::vector<std::pair<int, int>>& powers() const { return powers_; }

  Monomial operator*(const Monomial& other) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  /// Exact quotient, or nothing when `other` does not divide this monomial.
  std::optional<Monomial> divided_by(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return powers_ == other.powers_; }
  /// Graded order: higher total degree first, ties by higher exponent on the
  /// lowest-id differing symbol.
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  std::vector<std::pair<int, int>> powers_;
};

/// Sparse multivariate polynomial with exact rational coefficients, kept
/// normalized: no zero coefficients, terms sorted leading-first. Equality is
/// structural equality of normalized forms.
class Polynomial {
 public:
  Polynomial() = default;  // zero
  explicit Polynomial(Rational constant);
  explicit Polynomial(long long constant) : Polynomial(Rational(constant)) {}
  static Polynomial symbol(int id);
  static Polynomial term(Monomial m, Rational coefficient);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }
  int degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  const Rational& leading_coefficient() const;

  /// True when every coefficient has the same sign (nonempty).
  bool same_sign_terms() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Monomial gcd of all terms together with the rational content, signed so
  /// that dividing by it leaves a +1-leading primitive polynomial.
  std::pair<Monomial, Rational> content() const;
  Polynomial divided_by(const Monomial& m, const Rational& c) const;

  double evaluate(const std::function<double(int)>& value) const;

  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  std::vector<std::pair<Monomial, Rational>> terms_;
};

}  // namespace sscnet
