#include "qpsurf/novikov.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qpsurf {

NovikovScalar::NovikovScalar(long constant) : NovikovScalar(Rational(constant)) {}

NovikovScalar::NovikovScalar(const Rational& constant) { add_term(Rational(0), constant); }

NovikovScalar NovikovScalar::monomial(const Rational& coefficient, const Rational& exponent) {
  NovikovScalar x;
  x.add_term(exponent, coefficient);
  return x;
}

bool NovikovScalar::is_one() const {
  return terms_.size() == 1 && sgn(terms_.begin()->first) == 0 && terms_.begin()->second == 1;
}

std::optional<Rational> NovikovScalar::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational NovikovScalar::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

Rational NovikovScalar::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

NovikovScalar NovikovScalar::truncated(const Rational& max_exponent) const {
  NovikovScalar out;
  for (const auto& [e, c] : terms_) {
    if (e > max_exponent) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

void NovikovScalar::add_term(const Rational& exponent, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return;
  // callers may hand in uncanonicalized values such as 2/2; keys must be canonical
  Rational e = exponent, c = coefficient;
  e.canonicalize();
  c.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

NovikovScalar& NovikovScalar::operator-=(const NovikovScalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
  NovikovScalar out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

NovikovScalar& NovikovScalar::operator*=(const NovikovScalar& other) {
  *this = *this * other;
  return *this;
}

NovikovScalar NovikovScalar::operator-() const {
  NovikovScalar out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const NovikovScalar& a, const NovikovScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

bool operator<(const NovikovScalar& a, const NovikovScalar& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

NovikovScalar NovikovScalar::pow(long n) const {
  if (n < 0) return inverse_monomial(*this).pow(-n);
  NovikovScalar result(1);
  NovikovScalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

namespace {

void append_term(std::ostringstream& os, const Rational& exponent, const Rational& magnitude) {
  if (sgn(exponent) == 0) {
    os << magnitude.get_str();
    return;
  }
  if (magnitude != 1) os << magnitude.get_str() << '*';
  os << "q^" << exponent.get_str();
}

}  // namespace

std::string NovikovScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    append_term(os, e, abs(c));
    first = false;
  }
  return os.str();
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  NovikovScalar parse() {
    NovikovScalar out;
    skip_space();
    if (at_end()) fail("empty scalar");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += parse_term() * NovikovScalar(sign);
      skip_space();
      first = false;
    }
    return out;
  }

 private:
  NovikovScalar parse_term() {
    Rational coefficient(1);
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_unsigned_rational();
      have_coefficient = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 'q') fail("expected 'q' after '*'");
      }
    }
    Rational exponent(0);
    if (!at_end() && peek() == 'q') {
      ++pos_;
      exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        int sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          sign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        exponent = parse_unsigned_rational() * sign;
      }
    } else if (!have_coefficient) {
      fail("expected a coefficient or 'q'");
    }
    return NovikovScalar::monomial(coefficient, exponent);
  }

  Rational parse_unsigned_rational() {
    std::string digits = read_digits();
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::string denominator = read_digits();
      if (denominator.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      digits += "/" + denominator;
    }
    Rational r(digits, 10);
    r.canonicalize();
    return r;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse Novikov scalar '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NovikovScalar NovikovScalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

NovikovScalar inverse_monomial(const NovikovScalar& x) {
  if (x.is_zero()) throw std::domain_error("division by zero");
  if (!x.is_monomial()) throw std::domain_error("exact inverse requires a monomial, got " + x.to_string());
  const auto& [e, c] = *x.terms().begin();
  return NovikovScalar::monomial(1 / c, -e);
}

NovikovScalar inverse_mod(const NovikovScalar& x, const Rational& truncation) {
  if (x.is_zero()) throw std::domain_error("division by zero");
  const Rational v = *x.valuation();
  const Rational c = x.leading_coefficient();
  const NovikovScalar lead_inverse = NovikovScalar::monomial(1 / c, -v);
  // x = lead * (1 + y) with val(y) > 0
  NovikovScalar y = x * lead_inverse - NovikovScalar(1);
  if (y.is_zero()) return lead_inverse;

  const NovikovScalar minus_y = -y;
  NovikovScalar series(1);
  NovikovScalar power(1);
  // The n-th power has valuation >= n*val(y), so the loop stops once it passes T.
  while (true) {
    power = (power * minus_y).truncated(truncation);
    if (power.is_zero()) break;
    series += power;
  }
  return (lead_inverse * series.truncated(truncation));
}

std::ostream& operator<<(std::ostream& os, const NovikovScalar& x) { return os << x.to_string(); }

}  // namespace qpsurf
