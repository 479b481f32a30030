#include "polyana/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace polyana {

Rational exact_bernoulli(std::uint32_t j) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= j) {
    // sum_{k<=m} C(m+1,k) B_k = 0 solved for B_m.
    const std::size_t m = cache.size();
    BigInt binom = 1;  // C(m+1, 0)
    Rational acc(0);
    for (std::size_t k = 0; k < m; ++k) {
      acc += Rational(binom) * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    cache.push_back(-acc / Rational(binom));
  }
  return cache[j];
}

BigInt genocchi(std::uint32_t j) {
  if (j == 0) throw Error(ErrorCode::IndexOutOfRange, "Genocchi numbers start at index 1");
  BigInt two_j = BigInt(1) << j;
  Rational g = Rational(2 * (1 - two_j)) * exact_bernoulli(j);
  if (!g.is_integer()) throw Error(ErrorCode::NonIntegral, "G_" + std::to_string(j) + " = " + g.to_string());
  return g.numerator();
}

Fq bernoulli_mod_p(std::uint32_t j, std::uint32_t p) {
  FieldPtr f = prime_field(p);
  if (j > 0 && j % (p - 1) == 0) {
    throw Error(ErrorCode::StaudtClausenPole, "p = " + std::to_string(p) + " divides the denominator of B_" + std::to_string(j));
  }
  return Fq(f, exact_bernoulli(j).mod_p(p));
}

}  // namespace polyana
