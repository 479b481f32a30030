#include "polyana/ratfunc.hpp"

#include <algorithm>
#include <type_traits>

namespace polyana {

namespace {

// Sums above this size skip the trial division by denominator atoms; the value
// stays correct, only possibly unreduced.
constexpr std::size_t kTrialDivisionLimit = 40'000;

template <class P>
P divide_monomial(const P& p, const Monomial& m) {
  std::vector<typename P::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.emplace_back(t.first / m, t.second);
  return P::from_terms(p.context(), std::move(terms));
}

template <class P>
P expand(const std::vector<std::pair<P, std::uint32_t>>& factors, P acc) {
  for (const auto& [atom, e] : factors) acc = acc * atom.pow(e);
  return acc;
}

}  // namespace

template <class K>
void RatFunc<K>::add_factor(std::vector<Factor>& list, const P& atom, std::uint32_t e) {
  if (e == 0) return;
  for (auto& f : list) {
    if (f.first == atom) {
      f.second += e;
      return;
    }
  }
  auto pos = std::lower_bound(list.begin(), list.end(), atom,
                              [](const Factor& f, const P& a) { return P::compare(f.first, a) < 0; });
  list.insert(pos, Factor(atom, e));
}

template <class K>
K RatFunc<K>::absorb(const P& p, std::uint32_t e, std::vector<Factor>& list) {
  Context ctx = p.context();
  K lc = p.leading_coeff();
  Monomial content = p.content_monomial();
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (content.e[i]) add_factor(list, P::variable(ctx, static_cast<VarId>(i)), content.e[i] * e);
  }
  P rest = content.is_one() ? p : divide_monomial(p, content);
  if (!rest.is_constant()) add_factor(list, rest.monic(), e);
  return lc.pow(e);
}

template <class K>
void RatFunc<K>::cancel() {
  for (auto& n : num_) {
    for (auto& d : den_) {
      if (d.second && n.second && d.first == n.first) {
        std::uint32_t m = std::min(n.second, d.second);
        n.second -= m;
        d.second -= m;
      }
    }
  }
  auto dead = [](const Factor& f) { return f.second == 0; };
  num_.erase(std::remove_if(num_.begin(), num_.end(), dead), num_.end());
  den_.erase(std::remove_if(den_.begin(), den_.end(), dead), den_.end());
}

template <class K>
RatFunc<K> RatFunc<K>::from_poly(const P& p) {
  RatFunc r(p.context());
  if (p.is_zero()) return r;
  r.unit_ = absorb(p, 1, r.num_);
  return r;
}

template <class K>
RatFunc<K> RatFunc<K>::constant(Context ctx, const K& c) {
  RatFunc r(ctx);
  r.unit_ = c;
  return r;
}

template <class K>
RatFunc<K> RatFunc<K>::fraction(const P& num, const P& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator in rational function");
  if (num.is_zero()) return RatFunc(den.context());
  if (auto q = num.divide_exact(den)) return from_poly(*q);
  return from_poly(num) / from_poly(den);
}

template <class K>
typename RatFunc<K>::P RatFunc<K>::numerator() const {
  return expand(num_, P::constant(ctx_, unit_));
}

template <class K>
typename RatFunc<K>::P RatFunc<K>::denominator() const {
  return expand(den_, P::constant(ctx_, K::one(ctx_)));
}

template <class K>
std::uint32_t RatFunc<K>::variables() const {
  std::uint32_t mask = 0;
  for (const auto& f : num_) mask |= f.first.variables();
  for (const auto& f : den_) mask |= f.first.variables();
  return mask;
}

template <class K>
RatFunc<K> RatFunc<K>::operator-() const {
  RatFunc r = *this;
  r.unit_ = -unit_;
  return r;
}

template <class K>
RatFunc<K> RatFunc<K>::scale(const K& c) const {
  if (c.is_zero()) return RatFunc(ctx_);
  RatFunc r = *this;
  r.unit_ = unit_ * c;
  return r;
}

template <class K>
RatFunc<K> RatFunc<K>::operator*(const RatFunc& o) const {
  Context ctx = ctx_ == Context{} ? o.ctx_ : ctx_;
  if (is_zero() || o.is_zero()) return RatFunc(ctx);
  RatFunc r = *this;
  r.ctx_ = ctx;
  r.unit_ = unit_ * o.unit_;
  for (const auto& f : o.num_) add_factor(r.num_, f.first, f.second);
  for (const auto& f : o.den_) add_factor(r.den_, f.first, f.second);
  r.cancel();
  return r;
}

template <class K>
RatFunc<K> RatFunc<K>::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of the zero rational function");
  RatFunc r(ctx_);
  r.unit_ = unit_.inverse();
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

template <class K>
RatFunc<K> RatFunc<K>::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return constant(ctx_, K::one(ctx_));
  RatFunc r = *this;
  r.unit_ = unit_.pow(n);
  for (auto& f : r.num_) f.second *= static_cast<std::uint32_t>(n);
  for (auto& f : r.den_) f.second *= static_cast<std::uint32_t>(n);
  return r;
}

template <class K>
RatFunc<K> RatFunc<K>::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Context ctx = ctx_ == Context{} ? o.ctx_ : ctx_;

  // Common denominator: maximum multiplicity of each atom.
  std::vector<Factor> lcm = den_;
  for (const auto& f : o.den_) {
    bool found = false;
    for (auto& g : lcm) {
      if (g.first == f.first) {
        g.second = std::max(g.second, f.second);
        found = true;
      }
    }
    if (!found) add_factor(lcm, f.first, f.second);
  }
  // Common numerator factor: minimum multiplicity over atoms present in both.
  std::vector<Factor> common;
  for (const auto& f : num_) {
    for (const auto& g : o.num_) {
      if (f.first == g.first) add_factor(common, f.first, std::min(f.second, g.second));
    }
  }
  auto scaled_num = [&](const RatFunc& x) {
    P acc = P::constant(ctx, x.unit_);
    for (const auto& f : x.num_) {
      std::uint32_t e = f.second;
      for (const auto& c : common) {
        if (c.first == f.first) e -= c.second;
      }
      if (e) acc = acc * f.first.pow(e);
    }
    for (const auto& l : lcm) {
      std::uint32_t e = l.second;
      for (const auto& d : x.den_) {
        if (d.first == l.first) e -= d.second;
      }
      if (e) acc = acc * l.first.pow(e);
    }
    return acc;
  };
  P sum = scaled_num(*this) + scaled_num(o);
  if (sum.is_zero()) return RatFunc(ctx);

  if (sum.size() <= kTrialDivisionLimit) {
    for (auto& l : lcm) {
      while (l.second && l.first.size() > 1) {
        auto q = sum.divide_exact(l.first);
        if (!q) break;
        sum = std::move(*q);
        --l.second;
      }
    }
  }
  RatFunc r(ctx);
  r.unit_ = absorb(sum, 1, r.num_);
  for (const auto& c : common) add_factor(r.num_, c.first, c.second);
  for (const auto& l : lcm) add_factor(r.den_, l.first, l.second);
  r.cancel();
  return r;
}

template <class K>
int RatFunc<K>::compare(const RatFunc& a, const RatFunc& b) {
  int c = P::compare(a.numerator(), b.numerator());
  if (c) return c;
  return P::compare(a.denominator(), b.denominator());
}

template <class K>
RatFunc<K> RatFunc<K>::derivative(VarId v) const {
  RatFunc logd(ctx_);
  if (is_zero()) return logd;
  for (const auto& [atom, e] : num_) {
    P d = atom.derivative(v);
    if (!d.is_zero()) logd += from_poly(d.scale(K::from_int(ctx_, e))) / from_poly(atom);
  }
  for (const auto& [atom, e] : den_) {
    P d = atom.derivative(v);
    if (!d.is_zero()) logd -= from_poly(d.scale(K::from_int(ctx_, e))) / from_poly(atom);
  }
  return *this * logd;
}

template <class K>
bool RatFunc<K>::admissible(const std::vector<K>& point, Context target) const {
  for (const auto& f : den_) {
    if (f.first.evaluate(point, target).is_zero()) return false;
  }
  return true;
}

template <class K>
K RatFunc<K>::evaluate(const std::vector<K>& point, Context target) const {
  K den = K::one(target);
  for (const auto& [atom, e] : den_) {
    K v = atom.evaluate(point, target);
    if (v.is_zero()) throw Error(ErrorCode::InadmissiblePoint, "denominator " + atom.to_string() + " vanishes");
    den *= v.pow(e);
  }
  K num = lift(unit_, target);
  for (const auto& [atom, e] : num_) {
    if (num.is_zero()) break;
    num *= atom.evaluate(point, target).pow(e);
  }
  return num / den;
}

namespace {

template <class K>
RatFunc<K> substitute_poly(const Poly<K>& f, const std::map<VarId, RatFunc<K>>& asg) {
  using P = Poly<K>;
  auto ctx = f.context();
  std::uint32_t mask = f.variables();
  struct Slot {
    VarId v;
    std::uint32_t d;
    std::vector<P> npow, dpow;
  };
  std::vector<Slot> slots;
  RatFunc<K> den = RatFunc<K>::constant(ctx, K::one(ctx));
  for (const auto& [v, g] : asg) {
    if (!(mask & (1u << v))) continue;
    Slot s{v, f.degree_in(v), {}, {}};
    P n = g.numerator(), d = g.denominator();
    s.npow.push_back(P::constant(ctx, K::one(ctx)));
    s.dpow.push_back(P::constant(ctx, K::one(ctx)));
    for (std::uint32_t i = 1; i <= s.d; ++i) {
      s.npow.push_back(s.npow.back() * n);
      s.dpow.push_back(d.is_one() ? s.dpow.back() : s.dpow.back() * d);
    }
    RatFunc<K> dr = RatFunc<K>::from_poly(d);
    den = den * dr.pow(s.d);
    slots.push_back(std::move(s));
  }
  if (slots.empty()) return RatFunc<K>::from_poly(f);
  std::vector<std::pair<Monomial, K>> rest_terms;
  P acc(ctx);
  for (const auto& t : f.terms()) {
    Monomial m = t.first;
    P term(ctx);
    std::vector<const P*> factors;
    for (const auto& s : slots) {
      std::uint32_t e = m.e[s.v];
      m.deg -= e;
      m.e[s.v] = 0;
      factors.push_back(&s.npow[e]);
      factors.push_back(&s.dpow[s.d - e]);
    }
    term = P::monomial(ctx, m, t.second);
    for (const P* fp : factors) {
      if (!fp->is_one()) term = term * *fp;
    }
    acc += term;
  }
  return RatFunc<K>::from_poly(acc) / den;
}

}  // namespace

template <class K>
RatFunc<K> RatFunc<K>::substitute(const std::map<VarId, RatFunc>& assignment) const {
  if (is_zero()) return *this;
  RatFunc r = constant(ctx_, unit_);
  for (const auto& [atom, e] : num_) r = r * substitute_poly(atom, assignment).pow(e);
  for (const auto& [atom, e] : den_) {
    RatFunc s = substitute_poly(atom, assignment);
    if (s.is_zero()) throw Error(ErrorCode::ZeroDenominator, "substitution sends a denominator to zero");
    r = r / s.pow(e);
  }
  return r;
}

template <class K>
RatFunc<K> RatFunc<K>::frobenius() const {
  if constexpr (std::is_same_v<K, Fq>) {
    if (is_zero()) return *this;
    const std::uint32_t p = ctx_->p;
    RatFunc r = *this;
    r.unit_ = unit_.frobenius();
    for (auto& f : r.num_) f.second *= p;
    for (auto& f : r.den_) f.second *= p;
    return r;
  } else {
    throw Error(ErrorCode::DomainMismatch, "Frobenius needs finite-field coefficients");
  }
}

template <class K>
std::string RatFunc<K>::to_string() const {
  std::string n = numerator().to_string();
  if (den_.empty()) return n;
  return "(" + n + ")/(" + denominator().to_string() + ")";
}

template class RatFunc<Fq>;
template class RatFunc<Rational>;

}  // namespace polyana
