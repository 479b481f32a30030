#pragma once

#include <string>
#include <vector>

#include "polyana/ratfunc.hpp"

namespace polyana {

// One summand c[x] of a formal sum.
template <class K>
struct FormalTerm {
  RatFunc<K> coeff;
  RatFunc<K> arg;
};

// Weighted formal sum  sum_i c_i [x_i]  in infinitesimal convention: the
// coefficients are stored as written, and only the evaluation map raises them
// to the p-th power. `weight` is the infinitesimal weight n; the finite
// polylogarithm that satisfies the equation is L_{n-1}.
template <class K>
struct FormalSum {
  using Context = typename K::Context;

  Context ctx{};
  int weight = 0;
  std::vector<FormalTerm<K>> terms;
  std::vector<VarId> variables;
  std::string id;
  std::string reference;

  FormalSum() = default;
  FormalSum(Context c, int w, std::vector<VarId> vars) : ctx(c), weight(w), variables(std::move(vars)) {}

  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }

  // Appends c[x]; zero coefficients are dropped.
  FormalSum& add(const RatFunc<K>& c, const RatFunc<K>& x) {
    if (!c.is_zero()) terms.push_back({c, x});
    return *this;
  }
  FormalSum& add(long long c, const RatFunc<K>& x) { return add(RatFunc<K>::constant(ctx, c), x); }

  FormalSum operator+(const FormalSum& o) const {
    FormalSum r = *this;
    for (const auto& t : o.terms) r.terms.push_back(t);
    for (VarId v : o.variables) {
      bool seen = false;
      for (VarId w : r.variables) seen = seen || w == v;
      if (!seen) r.variables.push_back(v);
    }
    return r;
  }
  FormalSum operator-(const FormalSum& o) const { return *this + o.scaled(RatFunc<K>::constant(ctx, -1)); }

  FormalSum scaled(const RatFunc<K>& c) const {
    FormalSum r = *this;
    r.terms.clear();
    for (const auto& t : terms) r.add(t.coeff * c, t.arg);
    return r;
  }

  // Applies a substitution to every coefficient and argument.
  FormalSum substituted(const std::map<VarId, RatFunc<K>>& asg) const {
    FormalSum r = *this;
    r.terms.clear();
    for (const auto& t : terms) r.add(t.coeff.substitute(asg), t.arg.substitute(asg));
    return r;
  }

  // Merges terms whose arguments are equal as rational functions.
  FormalSum merged() const {
    FormalSum r = *this;
    r.terms.clear();
    for (const auto& t : terms) {
      bool done = false;
      for (auto& u : r.terms) {
        if (u.arg == t.arg) {
          u.coeff += t.coeff;
          done = true;
          break;
        }
      }
      if (!done) r.terms.push_back(t);
    }
    std::vector<FormalTerm<K>> kept;
    for (auto& u : r.terms) {
      if (!u.coeff.is_zero()) kept.push_back(std::move(u));
    }
    r.terms = std::move(kept);
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& t : terms) {
      if (!s.empty()) s += " + ";
      s += "(" + t.coeff.to_string() + ")[" + t.arg.to_string() + "]";
    }
    return s.empty() ? "0" : s;
  }
};

using FormalSumFq = FormalSum<Fq>;
using FormalSumQ = FormalSum<Rational>;

}  // namespace polyana
