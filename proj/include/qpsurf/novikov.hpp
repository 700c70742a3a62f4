#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qpsurf {

using Rational = mpq_class;
using Integer = mpz_class;

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

/// A finite formal sum  sum_i c_i q^{e_i}  with exact rational coefficients
/// and exponents. Terms are kept sorted by exponent with no zero coefficients,
/// so structural equality is value equality.
class NovikovScalar {
 public:
  using TermMap = std::map<Rational, Rational, RationalLess>;

  NovikovScalar() = default;
  NovikovScalar(long constant);  // NOLINT(google-explicit-constructor)
  NovikovScalar(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static NovikovScalar monomial(const Rational& coefficient, const Rational& exponent);
  static NovikovScalar q_power(const Rational& exponent) { return monomial(1, exponent); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  /// Least exponent; nullopt encodes the +infinity valuation of zero.
  std::optional<Rational> valuation() const;
  /// Coefficient of the least exponent (zero for the zero scalar).
  Rational leading_coefficient() const;
  /// Coefficient of q^e.
  Rational coefficient(const Rational& exponent) const;

  /// Drops every term of exponent strictly greater than `max_exponent`.
  NovikovScalar truncated(const Rational& max_exponent) const;

  NovikovScalar& operator+=(const NovikovScalar& other);
  NovikovScalar& operator-=(const NovikovScalar& other);
  NovikovScalar& operator*=(const NovikovScalar& other);
  friend NovikovScalar operator+(NovikovScalar a, const NovikovScalar& b) { return a += b; }
  friend NovikovScalar operator-(NovikovScalar a, const NovikovScalar& b) { return a -= b; }
  friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);
  NovikovScalar operator-() const;

  friend bool operator==(const NovikovScalar& a, const NovikovScalar& b);
  friend bool operator!=(const NovikovScalar& a, const NovikovScalar& b) { return !(a == b); }
  /// Total order (exponent-major, then coefficient) used for deterministic output only.
  friend bool operator<(const NovikovScalar& a, const NovikovScalar& b);

  /// Exact power; negative exponents require a monomial.
  NovikovScalar pow(long n) const;

  /// Canonical text form, e.g. `1 - q^2`, `5*q^1/2`, `-3/4*q^-1`.
  std::string to_string() const;
  static NovikovScalar parse(std::string_view text);

 private:
  void add_term(const Rational& exponent, const Rational& coefficient);
  TermMap terms_;
};

/// Inverse up to order T: x * inverse_mod(x, T) - 1 has valuation > T.
/// Monomials invert exactly. Throws std::domain_error("division by zero") on zero.
NovikovScalar inverse_mod(const NovikovScalar& x, const Rational& truncation);

/// Exact inverse of a monomial. Throws std::domain_error when x is not a monomial.
NovikovScalar inverse_monomial(const NovikovScalar& x);

std::ostream& operator<<(std::ostream& os, const NovikovScalar& x);

}  // namespace qpsurf
