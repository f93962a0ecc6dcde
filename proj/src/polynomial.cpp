#include "sscnet/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace sscnet {

Monomial Monomial::symbol(int id, int exponent) {
  Monomial m;
  if (exponent > 0) m.powers_.push_back({id, exponent});
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [id, e] : powers_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  size_t i = 0;
  size_t j = 0;
  while (i < powers_.size() || j < other.powers_.size()) {
    if (j == other.powers_.size() ||
        (i < powers_.size() && powers_[i].first < other.powers_[j].first)) {
      out.powers_.push_back(powers_[i++]);
    } else if (i == powers_.size() || other.powers_[j].first < powers_[i].first) {
      out.powers_.push_back(other.powers_[j++]);
    } else {
      out.powers_.push_back({powers_[i].first, powers_[i].second + other.powers_[j].second});
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0;
  size_t j = 0;
  while (i < a.powers_.size() && j < b.powers_.size()) {
    if (a.powers_[i].first < b.powers_[j].first) {
      ++i;
    } else if (b.powers_[j].first < a.powers_[i].first) {
      ++j;
    } else {
      out.powers_.push_back(
          {a.powers_[i].first, std::min(a.powers_[i].second, b.powers_[j].second)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
  Monomial out;
  size_t j = 0;
  for (const auto& [id, e] : powers_) {
    int sub = 0;
    if (j < other.powers_.size() && other.powers_[j].first == id) {
      sub = other.powers_[j].second;
      ++j;
    }
    if (sub > e) return std::nullopt;
    if (e - sub > 0) out.powers_.push_back({id, e - sub});
  }
  if (j != other.powers_.size()) return std::nullopt;
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (int d = degree(), e = other.degree(); d != e) return d <=> e;
  // Same degree: walk symbols in ascending id; more weight on an earlier
  // symbol ranks higher.
  size_t i = 0;
  size_t j = 0;
  while (i < powers_.size() && j < other.powers_.size()) {
    if (powers_[i].first != other.powers_[j].first) {
      return powers_[i].first < other.powers_[j].first ? std::strong_ordering::greater
                                                       : std::strong_ordering::less;
    }
    if (powers_[i].second != other.powers_[j].second) {
      return powers_[i].second <=> other.powers_[j].second;
    }
    ++i;
    ++j;
  }
  if (i < powers_.size()) return std::strong_ordering::greater;
  if (j < other.powers_.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const std::function<std::string(int)>& name) const {
  if (powers_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, e] : powers_) {
    if (!first) os << "*";
    first = false;
    os << name(id);
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) terms_.push_back({Monomial{}, std::move(constant)});
}

Polynomial Polynomial::symbol(int id) {
  return term(Monomial::symbol(id), Rational(1));
}

Polynomial Polynomial::term(Monomial m, Rational coefficient) {
  Polynomial p;
  if (coefficient != 0) p.terms_.push_back({std::move(m), std::move(coefficient)});
  return p;
}

const Rational& Polynomial::leading_coefficient() const {
  static const Rational zero(0);
  return terms_.empty() ? zero : terms_.front().second;
}

bool Polynomial::same_sign_terms() const {
  if (terms_.empty()) return false;
  bool pos = terms_.front().second > 0;
  for (const auto& [m, c] : terms_) {
    if ((c > 0) != pos) return false;
  }
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0;
  size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) out.terms_.push_back({terms_[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<Monomial, Rational, std::greater<Monomial>> acc;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      Rational prod = ca * cb;
      auto [it, inserted] = acc.try_emplace(std::move(m), std::move(prod));
      if (!inserted) it->second += ca * cb;
    }
  }
  Polynomial out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  }
  return out;
}

std::pair<Monomial, Rational> Polynomial::content() const {
  if (terms_.empty()) return {Monomial{}, Rational(1)};
  Monomial mg = terms_.front().first;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mg = Monomial::gcd(mg, m);
    num_gcd = boost::multiprecision::gcd(num_gcd,
                                         boost::multiprecision::abs(numerator(c)));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  }
  Rational content(num_gcd, den_lcm);
  if (terms_.front().second < 0) content = -content;
  return {mg, content};
}

Polynomial Polynomial::divided_by(const Monomial& m, const Rational& c) const {
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& [tm, tc] : terms_) {
    auto q = tm.divided_by(m);
    if (!q) throw std::logic_error("monomial does not divide polynomial term");
    out.terms_.push_back({std::move(*q), tc / c});
  }
  return out;
}

double Polynomial::evaluate(const std::function<double(int)>& value) const {
  double total = 0;
  for (const auto& [m, c] : terms_) {
    double t = static_cast<double>(c);
    for (const auto& [id, e] : m.powers()) t *= std::pow(value(id), e);
    total += t;
  }
  return total;
}

std::string Polynomial::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.is_one()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << m.to_string(name);
    }
  }
  return os.str();
}

}  // namespace sscnet
