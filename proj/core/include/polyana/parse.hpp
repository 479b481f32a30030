#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyana/derivmap.hpp"

namespace polyana {

// Rational function expression: integers, identifiers, + - * / ^ and parentheses.
// Exponents are integer literals (negative allowed). Errors carry the column.
template <class K>
RatFunc<K> parse_ratfunc(typename K::Context ctx, const std::string& text);

// "a:a*(1-a);b:b*(1-b)"
template <class K>
Derivation<K> parse_derivation(typename K::Context ctx, const std::string& text);

// "5,7,11", "5..31" (primes only) or a mix such as "5,11..19".
std::vector<std::uint32_t> parse_prime_list(const std::string& text);
// "3..10" or "3,5"; plain integers.
std::vector<int> parse_int_list(const std::string& text);
// "1/4,1/4,1/2"
std::vector<Rational> parse_rational_list(const std::string& text);

extern template RatFunc<Fq> parse_ratfunc<Fq>(FieldPtr, const std::string&);
extern template RatFunc<Rational> parse_ratfunc<Rational>(RationalField, const std::string&);
extern template Derivation<Fq> parse_derivation<Fq>(FieldPtr, const std::string&);
extern template Derivation<Rational> parse_derivation<Rational>(RationalField, const std::string&);

}  // namespace polyana
