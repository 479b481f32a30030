#include "polyana/rational.hpp"

#include <sstream>

#include "polyana/field.hpp"

namespace polyana {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of rational 0");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroInverse, "division by rational 0");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long long e) const {
  Rational base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::uint32_t bigint_mod(const BigInt& n, std::uint32_t p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Rational::mod_p(std::uint32_t p) const {
  std::uint32_t den = bigint_mod(denominator(), p);
  if (den == 0) {
    throw Error(ErrorCode::ZeroInverse, "denominator of " + to_string() + " is divisible by " + std::to_string(p));
  }
  std::uint32_t num = bigint_mod(numerator(), p);
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(num) * inverse_mod(den, p)) % p);
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << numerator();
  if (denominator() != 1) os << '/' << denominator();
  return os.str();
}

Rational Rational::parse(const std::string& text) {
  auto digits = [](const std::string& t, bool sign) {
    std::size_t i = sign && !t.empty() && (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  const bool ok = slash == std::string::npos
                      ? digits(text, true)
                      : digits(text.substr(0, slash), true) && digits(text.substr(slash + 1), true);
  if (!ok) throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + text + "'");
  }
}

}  // namespace polyana
