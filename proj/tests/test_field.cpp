#include <doctest.h>

#include <cstdint>
#include <vector>

#include "gen.hpp"
#include "polyana/bernoulli.hpp"
#include "polyana/field.hpp"
#include "polyana/rational.hpp"

using namespace polyana;

namespace {

// Bernoulli numbers from the Akiyama-Tanigawa algorithm, independent of the
// library recurrence. Uses the B_1 = +1/2 convention, flipped at the end.
std::vector<Rational> akiyama_tanigawa(std::uint32_t n) {
  std::vector<Rational> out, a(n + 1);
  for (std::uint32_t m = 0; m <= n; ++m) {
    a[m] = Rational(1) / Rational(m + 1);
    for (std::uint32_t j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  if (n >= 1) out[1] = -out[1];
  return out;
}

std::vector<std::uint64_t> prime_divisors(BigInt n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; BigInt(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint64_t>(n));
  return out;
}

}  // namespace

TEST_CASE("fq_inverse examples") {
  CHECK(fq_inverse(Fq::from_int(prime_field(5), 2)) == Fq::from_int(prime_field(5), 3));
  CHECK(fq_inverse(Fq::from_int(prime_field(7), 4)) == Fq::from_int(prime_field(7), 2));
  CHECK(fq_inverse(Fq::one(prime_field(11))).is_one());
  CHECK_THROWS_AS(fq_inverse(Fq::zero(prime_field(5))), Error);
}

TEST_CASE("build_extension picks the smallest irreducible modulus") {
  auto f9 = build_extension(3, 2);
  CHECK(f9->q == 9);
  // x^2 + 1 is the first monic quadratic over F_3 without roots.
  CHECK(f9->modulus == std::vector<std::uint32_t>{1, 0, 1});
  for (std::uint32_t r = 0; r < 3; ++r) CHECK((r * r + 1) % 3 != 0);
  CHECK(build_extension(5, 1)->q == 5);
  CHECK_THROWS_AS(build_extension(2, 1), Error);
  CHECK_THROWS_AS(build_extension(9, 1), Error);
  CHECK_THROWS_AS(build_extension(3, 40), Error);
}

TEST_CASE("inverse and Fermat laws hold exhaustively for small fields") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {7, 2}, {3, 3}, {5, 3}, {43, 2}, {1999, 1}}) {
    FieldPtr f = build_extension(p, e);
    REQUIRE(f->q <= 2000);
    for (std::uint64_t i = 1; i < f->q; ++i) {
      Fq a = Fq::from_index(f, i);
      CHECK((a * fq_inverse(a)).is_one());
      CHECK(fq_inverse(fq_inverse(a)) == a);
      CHECK(a.pow(static_cast<long long>(f->q - 1)).is_one());
    }
  }
}

TEST_CASE("extension arithmetic agrees with schoolbook polynomial multiplication") {
  FieldPtr f = build_extension(5, 3);
  gen::Rng rng(11);
  for (int it = 0; it < 500; ++it) {
    Fq a = gen::element(rng, f), b = gen::element(rng, f);
    auto ca = a.coords(), cb = b.coords();
    std::vector<std::int64_t> prod(5, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) prod[i + j] += std::int64_t{ca[i]} * cb[j];
    // Reduce modulo the stored monic cubic.
    for (int d = 4; d >= 3; --d) {
      std::int64_t lead = prod[d] % 5;
      for (int k = 0; k < 4; ++k) prod[d - 3 + k] -= lead * f->modulus[k];
    }
    std::vector<std::uint32_t> expect(3);
    for (int i = 0; i < 3; ++i) expect[i] = static_cast<std::uint32_t>(((prod[i] % 5) + 5) % 5);
    CHECK((a * b).coords() == expect);
    CHECK((a + b) - b == a);
    CHECK(a.frobenius() == a.pow(5));
  }
}

TEST_CASE("exact_bernoulli values and oracle agreement") {
  CHECK(exact_bernoulli(0) == Rational(1));
  CHECK(exact_bernoulli(1) == Rational(-1) / Rational(2));
  CHECK(exact_bernoulli(2) == Rational(1) / Rational(6));
  CHECK(exact_bernoulli(3).is_zero());
  auto oracle = akiyama_tanigawa(30);
  for (std::uint32_t j = 0; j <= 30; ++j) CHECK(exact_bernoulli(j) == oracle[j]);
}

TEST_CASE("von Staudt-Clausen denominators") {
  for (std::uint32_t k = 1; 2 * k <= 30; ++k) {
    BigInt den = exact_bernoulli(2 * k).denominator();
    auto primes = prime_divisors(den);
    BigInt product = 1;
    for (auto l : primes) product *= l;
    CHECK(product == den);  // squarefree
    for (std::uint64_t l = 2; l <= 2 * k + 1; ++l) {
      if (!is_prime(l)) continue;
      bool divides = den % l == 0;
      CHECK(divides == ((2 * k) % (l - 1) == 0));
    }
  }
}

TEST_CASE("genocchi numbers") {
  CHECK(genocchi(1) == 1);
  CHECK(genocchi(2) == -1);
  CHECK(genocchi(3) == 0);
  CHECK(genocchi(4) == 1);
  CHECK(genocchi(6) == -3);
  for (std::uint32_t k = 1; k <= 15; ++k) CHECK(genocchi(2 * k + 1) == 0);
  CHECK_THROWS_AS(genocchi(0), Error);
}

TEST_CASE("Kummer congruence for Genocchi numbers") {
  for (std::uint32_t p = 3; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint32_t m = 1; m <= 10; ++m) {
      BigInt lhs = BigInt(m) * genocchi(p - 1 + m) - BigInt(m - 1) * genocchi(m);
      CHECK(lhs % p == 0);
    }
  }
}

TEST_CASE("bernoulli_mod_p") {
  CHECK(bernoulli_mod_p(2, 5).value() == 1);
  CHECK(bernoulli_mod_p(1, 5).value() == 2);
  CHECK_THROWS_AS(bernoulli_mod_p(4, 5), Error);
  try {
    bernoulli_mod_p(4, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StaudtClausenPole);
  }
}

TEST_CASE("rational parsing and reduction") {
  Rational r = Rational::parse("6/-4");
  CHECK(r == Rational(-3) / Rational(2));
  CHECK(r.mod_p(7) == 2);  // -3/2 = -3*4 = -12 = 2 mod 7
  CHECK_THROWS_AS(Rational::parse("x/2"), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}
