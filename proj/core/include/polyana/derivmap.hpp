#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyana/eqcat.hpp"

namespace polyana {

// D = sum_j g_j d/dt_j.
template <class K>
struct Derivation {
  std::map<VarId, RatFunc<K>> coeffs;

  Derivation operator+(const Derivation& o) const {
    Derivation r = *this;
    for (const auto& [v, g] : o.coeffs) {
      auto it = r.coeffs.find(v);
      if (it == r.coeffs.end()) r.coeffs.emplace(v, g);
      else it->second += g;
    }
    return r;
  }
};

// sum_{t in vars} t(1-t) d/dt
template <class K>
Derivation<K> standard_derivation(typename K::Context ctx, const std::vector<VarId>& vars);

template <class K>
RatFunc<K> apply_derivation(const Derivation<K>& d, const RatFunc<K>& f);

template <class K>
struct Derived {
  FormalSum<K> sum;
  std::vector<std::string> notices;  // dropped constant-argument terms
};

// [x] -> D(x)/(x(1-x)) [x]. Constant arguments are dropped with a notice;
// a non-constant representation equal to 0 or 1 throws DegenerateArgument.
template <class K>
Derived<K> derive(const FormalSum<K>& s, const Derivation<K>& d);

struct DerivedMatch {
  bool equal = false;          // difference normalizes to the empty sum
  bool up_to_scalar = false;   // s1 - lambda s2 normalizes to the empty sum
  std::optional<RatFq> scalar;
  std::size_t residual_terms = 0;  // terms left in normalize(s1 - s2)
};

DerivedMatch derived_equals(const FormalSumFq& s1, const FormalSumFq& s2, long long m);

struct DerivedVerdict {
  Verdict weak;
  bool strong_holds = false;
  std::string strong_status;  // "holds", "fails" or an error message
};

DerivedVerdict verify_derived(const FormalSumFq& s, long long m, FieldPtr field, const WeakOptions& opt = {});

// Coefficientwise reduction of a rational formal sum; throws ZeroInverse when
// p divides a denominator and ZeroDenominator when a denominator vanishes mod p.
FormalSumFq reduce_mod_p(const FormalSumQ& s, std::uint32_t p);
RatFq reduce_mod_p(const RatQ& f, FieldPtr field);

extern template Derivation<Fq> standard_derivation<Fq>(FieldPtr, const std::vector<VarId>&);
extern template Derivation<Rational> standard_derivation<Rational>(RationalField, const std::vector<VarId>&);
extern template RatFq apply_derivation<Fq>(const Derivation<Fq>&, const RatFq&);
extern template RatQ apply_derivation<Rational>(const Derivation<Rational>&, const RatQ&);
extern template Derived<Fq> derive<Fq>(const FormalSumFq&, const Derivation<Fq>&);
extern template Derived<Rational> derive<Rational>(const FormalSumQ&, const Derivation<Rational>&);

}  // namespace polyana
