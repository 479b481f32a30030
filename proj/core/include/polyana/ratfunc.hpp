#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyana/poly.hpp"

namespace polyana {

// Rational function kept as unit * prod(num atoms^e) / prod(den atoms^e).
// Atoms are monic non-constant polynomials; single variables pulled out of a
// polynomial become their own atoms. Identical atoms cancel between numerator
// and denominator, but no gcd is computed, so two equal values may be stored
// differently. Equality is therefore decided by testing the difference.
template <class K>
class RatFunc {
 public:
  using P = Poly<K>;
  using Context = typename K::Context;
  using Factor = std::pair<P, std::uint32_t>;

  RatFunc() = default;
  explicit RatFunc(Context ctx) : ctx_(ctx), unit_(K::zero(ctx)) {}

  static RatFunc from_poly(const P& p);
  static RatFunc constant(Context ctx, const K& c);
  static RatFunc constant(Context ctx, long long c) { return constant(ctx, K::from_int(ctx, c)); }
  static RatFunc variable(Context ctx, VarId v) { return from_poly(P::variable(ctx, v)); }
  static RatFunc variable(Context ctx, std::string_view name) { return variable(ctx, var_id(name)); }
  // num / den; throws ZeroDenominator when den = 0.
  static RatFunc fraction(const P& num, const P& den);

  Context context() const { return ctx_; }
  bool is_zero() const { return unit_.is_zero(); }
  bool is_constant() const { return num_.empty() && den_.empty(); }
  bool is_polynomial() const { return den_.empty(); }
  const K& unit() const { return unit_; }
  const std::vector<Factor>& num_factors() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }

  // Expanded numerator (carrying the unit) and monic denominator.
  P numerator() const;
  P denominator() const;
  std::uint32_t variables() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc scale(const K& c) const;
  RatFunc inverse() const;
  RatFunc pow(long long n) const;

  bool equals(const RatFunc& o) const { return (*this - o).is_zero(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.equals(b); }
  // Total order on the expanded (numerator, denominator) pair.
  static int compare(const RatFunc& a, const RatFunc& b);

  RatFunc derivative(VarId v) const;
  // Throws InadmissiblePoint if a denominator atom vanishes at the point.
  K evaluate(const std::vector<K>& point, Context target) const;
  K evaluate(const std::vector<K>& point) const { return evaluate(point, ctx_); }
  // True if no denominator atom vanishes at the point.
  bool admissible(const std::vector<K>& point, Context target) const;
  RatFunc substitute(const std::map<VarId, RatFunc>& assignment) const;
  // f^p; finite fields only.
  RatFunc frobenius() const;

  std::string to_string() const;

 private:
  static void add_factor(std::vector<Factor>& list, const P& atom, std::uint32_t e);
  // Splits a polynomial into unit and atoms, appended to `list` with multiplicity e.
  static K absorb(const P& p, std::uint32_t e, std::vector<Factor>& list);
  void cancel();

  Context ctx_{};
  K unit_{};
  std::vector<Factor> num_;
  std::vector<Factor> den_;
};

using RatFq = RatFunc<Fq>;
using RatQ = RatFunc<Rational>;

extern template class RatFunc<Fq>;
extern template class RatFunc<Rational>;

}  // namespace polyana
