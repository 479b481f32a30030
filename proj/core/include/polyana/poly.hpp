#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyana/field.hpp"
#include "polyana/rational.hpp"
#include "polyana/variables.hpp"

namespace polyana {

// Hard cap on stored terms; exceeded products throw BudgetExceeded.
inline constexpr std::size_t kDefaultTermCap = 10'000'000;

inline int coeff_cmp(const Fq& a, const Fq& b) { return a.value() < b.value() ? -1 : (a.value() > b.value() ? 1 : 0); }
inline int coeff_cmp(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }
inline Fq lift(const Fq& c, FieldPtr target) { return c.embed(target); }
inline Rational lift(const Rational& c, RationalField) { return c; }

// Sparse multivariate polynomial, terms kept in descending graded-lex order
// with nonzero coefficients.
template <class K>
class Poly {
 public:
  using Coeff = K;
  using Context = typename K::Context;
  using Term = std::pair<Monomial, K>;

  Poly() = default;
  explicit Poly(Context ctx) : ctx_(ctx) {}

  static Poly constant(Context ctx, const K& c);
  static Poly constant(Context ctx, long long c) { return constant(ctx, K::from_int(ctx, c)); }
  static Poly variable(Context ctx, VarId v, std::uint32_t exp = 1);
  static Poly variable(Context ctx, std::string_view name) { return variable(ctx, var_id(name)); }
  static Poly monomial(Context ctx, const Monomial& m, const K& c);
  // Sorts and merges arbitrary terms.
  static Poly from_terms(Context ctx, std::vector<Term> terms);

  Context context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one(); }
  K constant_term() const;
  const K& leading_coeff() const { return terms_.front().second; }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().first.deg; }
  std::uint32_t degree_in(VarId v) const;
  // Bit i set iff variable i occurs.
  std::uint32_t variables() const;
  // Largest monomial dividing every term.
  Monomial content_monomial() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scale(const K& c) const;
  Poly shift(const Monomial& m) const;  // multiply by a monomial
  Poly pow(std::uint64_t n) const;
  Poly monic() const;  // divide by leading coefficient

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    }
    return true;
  }
  // Total order: term by term (monomial, then coefficient), shorter first on a tie.
  static int compare(const Poly& a, const Poly& b);

  Poly derivative(VarId v) const;
  // Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coefficient_of(VarId v, std::uint32_t k) const;
  // Point indexed by variable id; coefficients are lifted into `target`.
  K evaluate(const std::vector<K>& point, Context target) const;
  K evaluate(const std::vector<K>& point) const { return evaluate(point, ctx_); }
  // f^p via the coefficient Frobenius and p-th powers of monomials. Finite fields only.
  Poly frobenius() const;
  // Replaces variable v by the polynomial g.
  Poly compose(VarId v, const Poly& g) const;
  // f / g if g divides f exactly.
  std::optional<Poly> divide_exact(const Poly& g) const;
  std::size_t hash() const;

  std::string to_string() const;

 private:
  void check_ctx(const Poly& o) const;
  Context merged_ctx(const Poly& o) const;

  Context ctx_{};
  std::vector<Term> terms_;
};

using PolyFq = Poly<Fq>;
using PolyQ = Poly<Rational>;

extern template class Poly<Fq>;
extern template class Poly<Rational>;

}  // namespace polyana
