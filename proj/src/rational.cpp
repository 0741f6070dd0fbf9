#include "approxcommute/rational.hpp"

#include <charconv>
#include <ostream>

#include "approxcommute/error.hpp"

namespace approxcommute {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::BadParams, "zero denominator");
  value_ = den < 0 ? Value(-BigInt(num), -BigInt(den)) : Value(BigInt(num), BigInt(den));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::BadParams, "zero denominator");
  value_ = den < 0 ? Value(-num, -den) : Value(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorKind::BadParams, "division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorKind::SpecParseError, "bad rational '" + std::string(whole) + "'");
  for (char c : digits)
    if (c < '0' || c > '9') throw Error(ErrorKind::SpecParseError, "bad rational '" + std::string(whole) + "'");
  return BigInt(std::string(digits));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  BigInt num = parse_integer(body.substr(0, slash), text);
  BigInt den = slash == std::string_view::npos ? BigInt(1) : parse_integer(body.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::SpecParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

Rational pow(const Rational& x, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace approxcommute
