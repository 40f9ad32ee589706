#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tessparam {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Polynomial in x = pi^2, lowest degree first.
using Pi2Poly = std::vector<Integer>;

/// Exact element of the field Q(pi^2).
///
/// Values are stored either as a plain rational or as a reduced quotient
/// of integer polynomials in pi^2. The quotient is kept canonical (coprime,
/// primitive content, positive denominator at pi^2), so equality is
/// structural. Signs are decided by evaluating at increasing precision;
/// since pi^2 is transcendental a nonzero polynomial never vanishes there.
class Scalar {
 public:
  struct Fraction {
    Pi2Poly num;
    Pi2Poly den;
    bool operator==(const Fraction&) const = default;
  };

  Scalar() : repr_(Rational(0)) {}
  Scalar(int v) : repr_(Rational(v)) {}
  Scalar(long v) : repr_(Rational(v)) {}
  Scalar(long long v) : repr_(Rational(v)) {}
  Scalar(const Integer& v) : repr_(Rational(v)) {}
  Scalar(const Rational& v) : repr_(v) {}

  static Scalar ratio(long long p, long long q);
  /// (a + b*pi^2) / (c + d*pi^2)
  static Scalar linear_fraction(const Rational& a, const Rational& b,
                                const Rational& c, const Rational& d);
  static Scalar from_polys(const std::vector<Rational>& num,
                           const std::vector<Rational>& den);
  static Scalar pi_squared();

  bool is_rational() const { return std::holds_alternative<Rational>(repr_); }
  bool is_zero() const;
  const Rational& rational() const;
  const Fraction* fraction() const { return std::get_if<Fraction>(&repr_); }

  /// Integer numerator/denominator polynomials (rationals become degree 0).
  Pi2Poly numerator() const;
  Pi2Poly denominator() const;
  int degree() const;
  bool is_linear_fraction() const { return degree() <= 1; }

  int sign() const;
  double to_double() const;
  /// Decimal rendering with `digits` significant digits.
  std::string to_decimal(int digits) const;
  /// Exact text form: "p/q", "p", or "(...)/(...)" in powers of pi^2.
  std::string to_string() const;

  /// Parses decimals ("2.5", "1e-3"), fractions ("7/2") and arithmetic
  /// expressions in pi^2 such as "(144*pi^2)/(35+24*pi^2)".
  static Scalar parse(std::string_view text);

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.repr_ == b.repr_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  static Scalar canonical(std::vector<Rational> num, std::vector<Rational> den);
  static Scalar from_canonical(Pi2Poly num, Pi2Poly den);

  std::variant<Rational, Fraction> repr_;
};

Scalar pow(const Scalar& base, int exponent);
Scalar abs(const Scalar& v);
const Scalar& min(const Scalar& a, const Scalar& b);
const Scalar& max(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& v);

/// Sign of an integer polynomial evaluated at pi^2.
int sign_at_pi_squared(const Pi2Poly& poly);

/// Helpers for Rational <-> string conversion used by codecs.
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);
Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

}  // namespace tessparam
