#pragma once

#include <cstdint>

#include "polyana/field.hpp"
#include "polyana/rational.hpp"

namespace polyana {

// B_j with B_1 = -1/2. Memoized; safe to call from several threads.
Rational exact_bernoulli(std::uint32_t j);

// G_j = 2(1 - 2^j) B_j. Throws NonIntegral if the value is not an integer.
BigInt genocchi(std::uint32_t j);

// B_j mod p. Throws StaudtClausenPole when j > 0 and (p - 1) | j.
Fq bernoulli_mod_p(std::uint32_t j, std::uint32_t p);

}  // namespace polyana
