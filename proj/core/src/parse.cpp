#include "polyana/parse.hpp"

#include <cctype>

namespace polyana {

namespace {

template <class K>
class ExprParser {
 public:
  ExprParser(typename K::Context ctx, const std::string& text) : ctx_(ctx), s_(text) {}

  RatFunc<K> run() {
    RatFunc<K> r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at column " + std::to_string(i_ + 1) + " in '" + s_ + "'");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFunc<K> expr() {
    RatFunc<K> r = term();
    for (;;) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }

  RatFunc<K> term() {
    RatFunc<K> r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        const std::size_t at = i_;
        RatFunc<K> d = unary();
        if (d.is_zero()) {
          i_ = at;
          fail("division by zero");
        }
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFunc<K> unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    RatFunc<K> base = primary();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (i_ < s_.size() && s_[i_] == '-') {
        neg = true;
        ++i_;
      }
      const long long e = integer();
      if (neg && base.is_zero()) fail("negative power of zero");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  long long integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    if (i_ - start > 18) fail("integer literal too long");
    return std::stoll(s_.substr(start, i_ - start));
  }

  RatFunc<K> primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      RatFunc<K> r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc<K>::constant(ctx_, integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return RatFunc<K>::variable(ctx_, s_.substr(start, i_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  typename K::Context ctx_;
  std::string s_;
  std::size_t i_ = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

long long to_int(const std::string& s, const std::string& whole) {
  const std::string t = trim(s);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw Error(ErrorCode::ParseError, "bad integer '" + t + "' in '" + whole + "'");
  return v;
}

}  // namespace

template <class K>
RatFunc<K> parse_ratfunc(typename K::Context ctx, const std::string& text) {
  return ExprParser<K>(ctx, text).run();
}

template <class K>
Derivation<K> parse_derivation(typename K::Context ctx, const std::string& text) {
  Derivation<K> d;
  for (const std::string& part : split(text, ';')) {
    if (trim(part).empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError, "expected 'var:expr' in '" + part + "'");
    const std::string name = trim(part.substr(0, colon));
    if (name.empty()) throw Error(ErrorCode::ParseError, "missing variable name in '" + part + "'");
    RatFunc<K> g = parse_ratfunc<K>(ctx, part.substr(colon + 1));
    auto [it, inserted] = d.coeffs.emplace(var_id(name), g);
    if (!inserted) it->second += g;
  }
  return d;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<int>(to_int(part, text)));
      continue;
    }
    const long long a = to_int(part.substr(0, dots), text);
    const long long b = to_int(part.substr(dots + 2), text);
    if (b < a) throw Error(ErrorCode::ParseError, "empty range '" + part + "'");
    if (b - a > 1'000'000) throw Error(ErrorCode::ParseError, "range too long '" + part + "'");
    for (long long v = a; v <= b; ++v) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::uint32_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const std::string& part : split(text, ',')) {
    const bool range = part.find("..") != std::string::npos;
    for (int v : parse_int_list(part)) {
      if (range) {
        if (v >= 3 && is_prime(static_cast<std::uint64_t>(v))) out.push_back(static_cast<std::uint32_t>(v));
      } else {
        if (v < 3 || !is_prime(static_cast<std::uint64_t>(v)))
          throw Error(ErrorCode::NotPrime, std::to_string(v) + " is not an odd prime");
        out.push_back(static_cast<std::uint32_t>(v));
      }
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "no primes in '" + text + "'");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& part : split(text, ',')) out.push_back(Rational::parse(trim(part)));
  return out;
}

template RatFunc<Fq> parse_ratfunc<Fq>(FieldPtr, const std::string&);
template RatFunc<Rational> parse_ratfunc<Rational>(RationalField, const std::string&);
template Derivation<Fq> parse_derivation<Fq>(FieldPtr, const std::string&);
template Derivation<Rational> parse_derivation<Rational>(RationalField, const std::string&);

}  // namespace polyana
