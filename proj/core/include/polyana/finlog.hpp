#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polyana/formal_sum.hpp"

namespace polyana {

// L_n(T) = sum_{k=1}^{p-1} T^k / k^n over F_p.
struct FinitePolylog {
  long long n = 0;         // weight as requested
  std::uint32_t n_reduced = 0;  // n mod (p-1), in [0, p-2]
  bool reduced = false;    // true when n_reduced != n
  std::uint32_t p = 0;
  std::vector<Fq> coeffs;  // coeffs[k] = k^{-n}; coeffs[0] = 0
  PolyFq poly;             // in the variable T

  // Horner evaluation at x (any field of characteristic p).
  Fq eval(const Fq& x) const;
};

// Memoized per (n mod p-1, p); the returned object is immutable.
std::shared_ptr<const FinitePolylog> finite_polylog(long long n, std::uint32_t p);

// (1 - T^p - (1-T)^p)/p expanded over the integers and reduced mod p.
PolyFq l1_via_witt(std::uint32_t p);

// sum c_i^p L_m(x_i) as a rational function.
RatFq lhat_apply(long long m, const FormalSumFq& s);

// sum c_i(pt)^p L_m(x_i(pt)); the point is indexed by VarId and may live in
// an extension field. Throws InadmissiblePoint.
Fq lhat_eval(long long m, const FormalSumFq& s, const std::vector<Fq>& point);

struct SpecialValueRow {
  std::uint32_t p = 0;
  long long n_or_m = 0;
  std::string argument;  // "1" or "-1"
  std::string kind;      // "L(1)", "L2n(-1)", "genocchi"
  Fq computed;
  Fq expected;
  std::string status;  // pass, fail or logged
};

std::vector<SpecialValueRow> special_values(std::uint32_t p);
std::string special_values_csv(const std::vector<SpecialValueRow>& rows);

// T^i (1-T)^i (T^{p-3i} + (-1)^i); requires 0 <= i <= floor(p/3).
PolyFq tau(long long i, std::uint32_t p);

struct RecipeParts {
  PolyFq c0;  // part free of the variable
  PolyFq q1;  // exponents not divisible by p
  PolyFq q2;  // exponents divisible by p, divided by p
};

RecipeParts recipe_decompose(const PolyFq& q, VarId v);
// Proves Q = 0 by the split above: c0 = 0, dQ1/dv = 0, and Q2 = 0 recursively.
bool recipe_prove_zero(const PolyFq& q, VarId v);

}  // namespace polyana
