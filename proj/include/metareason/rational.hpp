#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace metareason {

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator at all times. Every operation is exact; solvers never touch
/// floating point. The decimal view (approx) exists for display only.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(static_cast<long>(n)) {}            // NOLINT: implicit by design
  Rational(long n) : value_(n) {}                              // NOLINT
  Rational(long long n) : value_(static_cast<long>(n)) {}      // NOLINT (LP64)
  Rational(long long num, long long den);
  explicit Rational(mpq_class q);

  /// Parses "p", "-p", or "p/q" (decimal digits only). Throws ParseError on
  /// malformed text or a zero denominator.
  static Rational from_string(std::string_view text);

  /// Canonical form: "p" when integral, otherwise "p/q" in lowest terms.
  std::string str() const;

  /// Non-authoritative decimal approximation, for reports only.
  double approx() const { return value_.get_d(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_negative() const { return sgn(value_) < 0; }
  bool is_positive() const { return sgn(value_) > 0; }
  bool is_integer() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// base^exp with a nonnegative integer exponent; exact.
  friend Rational pow(const Rational& base, unsigned long exp);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace metareason
