#include "metareason/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rational Rational::from_string(std::string_view text) {
  const auto bad = [&text]() -> ParseError {
    return ParseError("invalid rational literal '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad();
  std::size_t den_begin = text.size();
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    den_begin = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw bad();
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw bad();
  if (sgn(q.get_den()) == 0)
    throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

Rational pow(const Rational& base, unsigned long exp) {
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), base.value_.get_num_mpz_t(), exp);
  mpz_pow_ui(r.value_.get_den_mpz_t(), base.value_.get_den_mpz_t(), exp);
  r.value_.canonicalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace metareason
