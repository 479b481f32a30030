#include "polyana/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <type_traits>
#include <unordered_map>

namespace polyana {

namespace {

template <class K>
bool ctx_unset(const typename K::Context& c) {
  return c == typename K::Context{};
}

template <class Term>
bool term_greater(const Term& a, const Term& b) {
  return a.first > b.first;
}

template <class K>
void check_cap(std::size_t n) {
  if (n > kDefaultTermCap) {
    throw Error(ErrorCode::BudgetExceeded, "polynomial exceeds " + std::to_string(kDefaultTermCap) + " terms");
  }
}

// Merge two descending term lists, adding coefficients.
template <class K>
std::vector<std::pair<Monomial, K>> merge_add(const std::vector<std::pair<Monomial, K>>& a,
                                              const std::vector<std::pair<Monomial, K>>& b) {
  std::vector<std::pair<Monomial, K>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].first <=> b[j].first;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      K s = a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

}  // namespace

template <class K>
void Poly<K>::check_ctx(const Poly& o) const {
  if (!(ctx_ == o.ctx_) && !ctx_unset<K>(ctx_) && !ctx_unset<K>(o.ctx_)) {
    throw Error(ErrorCode::DomainMismatch, "polynomials over different coefficient domains");
  }
}

template <class K>
typename Poly<K>::Context Poly<K>::merged_ctx(const Poly& o) const {
  check_ctx(o);
  return ctx_unset<K>(ctx_) ? o.ctx_ : ctx_;
}

template <class K>
Poly<K> Poly<K>::constant(Context ctx, const K& c) {
  Poly r(ctx);
  if (!c.is_zero()) r.terms_.emplace_back(Monomial{}, c);
  return r;
}

template <class K>
Poly<K> Poly<K>::variable(Context ctx, VarId v, std::uint32_t exp) {
  return monomial(ctx, Monomial::var(v, exp), K::one(ctx));
}

template <class K>
Poly<K> Poly<K>::monomial(Context ctx, const Monomial& m, const K& c) {
  Poly r(ctx);
  if (!c.is_zero()) r.terms_.emplace_back(m, c);
  return r;
}

template <class K>
Poly<K> Poly<K>::from_terms(Context ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater<Term>);
  Poly r(ctx);
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

template <class K>
K Poly<K>::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return K::zero(ctx_);
}

template <class K>
std::uint32_t Poly<K>::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.first.e[v]);
  return d;
}

template <class K>
std::uint32_t Poly<K>::variables() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.first.e[i]) mask |= (1u << i);
    }
  }
  return mask;
}

template <class K>
Monomial Poly<K>::content_monomial() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_.front().first;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], t.first.e[i]);
  }
  m.deg = 0;
  for (auto x : m.e) m.deg += x;
  return m;
}

template <class K>
Poly<K> Poly<K>::operator+(const Poly& o) const {
  Poly r(merged_ctx(o));
  r.terms_ = merge_add<K>(terms_, o.terms_);
  return r;
}

template <class K>
Poly<K> Poly<K>::operator-() const {
  Poly r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first, -t.second);
  return r;
}

template <class K>
Poly<K> Poly<K>::operator-(const Poly& o) const {
  return *this + (-o);
}

template <class K>
Poly<K> Poly<K>::scale(const K& c) const {
  Poly r(ctx_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    K v = t.second * c;
    if (!v.is_zero()) r.terms_.emplace_back(t.first, v);
  }
  return r;
}

template <class K>
Poly<K> Poly<K>::shift(const Monomial& m) const {
  Poly r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second);
  return r;
}

template <class K>
Poly<K> Poly<K>::operator*(const Poly& o) const {
  Context ctx = merged_ctx(o);
  if (is_zero() || o.is_zero()) return Poly(ctx);
  const Poly& small = size() <= o.size() ? *this : o;
  const Poly& big = size() <= o.size() ? o : *this;
  Poly r(ctx);
  if (small.size() <= 6) {
    for (const auto& t : small.terms_) {
      Poly part = big.shift(t.first).scale(t.second);
      r.terms_ = merge_add<K>(r.terms_, part.terms_);
      check_cap<K>(r.terms_.size());
    }
    return r;
  }
  std::unordered_map<Monomial, K, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(small.size() * big.size(), 1u << 22));
  for (const auto& a : small.terms_) {
    for (const auto& b : big.terms_) {
      Monomial m = a.first * b.first;
      K c = a.second * b.second;
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
    check_cap<K>(acc.size());
  }
  r.terms_.reserve(acc.size());
  for (auto& kv : acc) {
    if (!kv.second.is_zero()) r.terms_.emplace_back(kv.first, kv.second);
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater<Term>);
  return r;
}

template <class K>
Poly<K> Poly<K>::pow(std::uint64_t n) const {
  if constexpr (std::is_same_v<K, Fq>) {
    // f^n = frob(f)^(n / p) * f^(n % p) keeps intermediate products small.
    if (!ctx_unset<K>(ctx_) && n >= ctx_->p && size() > 1) {
      std::uint32_t p = ctx_->p;
      return frobenius().pow(n / p) * pow(n % p);
    }
  }
  Poly acc = constant(ctx_, K::one(ctx_));
  Poly base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

template <class K>
Poly<K> Poly<K>::monic() const {
  if (is_zero()) return *this;
  return scale(leading_coeff().inverse());
}

template <class K>
int Poly<K>::compare(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.terms_[i].first <=> b.terms_[i].first;
    if (c != 0) return c < 0 ? -1 : 1;
    int cc = coeff_cmp(a.terms_[i].second, b.terms_[i].second);
    if (cc) return cc;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

template <class K>
Poly<K> Poly<K>::derivative(VarId v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.first.e[v];
    if (!e) continue;
    K c = t.second * K::from_int(ctx_, e);
    if (c.is_zero()) continue;
    Monomial m = t.first;
    m.e[v] = static_cast<std::uint16_t>(e - 1);
    m.deg -= 1;
    out.emplace_back(m, c);
  }
  return from_terms(ctx_, std::move(out));
}

template <class K>
Poly<K> Poly<K>::coefficient_of(VarId v, std::uint32_t k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first.e[v] != k) continue;
    Monomial m = t.first;
    m.e[v] = 0;
    m.deg -= k;
    out.emplace_back(m, t.second);
  }
  return from_terms(ctx_, std::move(out));
}

template <class K>
K Poly<K>::evaluate(const std::vector<K>& point, Context target) const {
  K acc = K::zero(target);
  for (const auto& t : terms_) {
    K v = lift(t.second, target);
    for (std::size_t i = 0; i < kMaxVars && v.is_zero() == false; ++i) {
      std::uint32_t e = t.first.e[i];
      if (!e) continue;
      if (i >= point.size()) throw Error(ErrorCode::BadParams, "point does not cover variable " + var_name(static_cast<VarId>(i)));
      v *= point[i].pow(static_cast<long long>(e));
    }
    acc += v;
  }
  return acc;
}

template <class K>
Poly<K> Poly<K>::frobenius() const {
  if constexpr (std::is_same_v<K, Fq>) {
    if (is_zero()) return *this;
    const std::uint32_t p = ctx_->p;
    Poly r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first.scaled(p), t.second.frobenius());
    return r;
  } else {
    throw Error(ErrorCode::DomainMismatch, "Frobenius needs finite-field coefficients");
  }
}

template <class K>
Poly<K> Poly<K>::compose(VarId v, const Poly& g) const {
  Context ctx = merged_ctx(g);
  std::uint32_t d = degree_in(v);
  std::vector<Poly> powers{constant(ctx, K::one(ctx))};
  for (std::uint32_t i = 1; i <= d; ++i) powers.push_back(powers.back() * g);
  std::vector<std::vector<Term>> by_exp(d + 1);
  for (const auto& t : terms_) {
    Monomial m = t.first;
    std::uint32_t e = m.e[v];
    m.e[v] = 0;
    m.deg -= e;
    by_exp[e].emplace_back(m, t.second);
  }
  Poly r(ctx);
  for (std::uint32_t e = 0; e <= d; ++e) {
    if (by_exp[e].empty()) continue;
    r += from_terms(ctx, std::move(by_exp[e])) * powers[e];
  }
  return r;
}

template <class K>
std::optional<Poly<K>> Poly<K>::divide_exact(const Poly& g) const {
  if (g.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero polynomial");
  Context ctx = merged_ctx(g);
  if (is_zero()) return Poly(ctx);
  if (g.total_degree() > total_degree()) return std::nullopt;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (g.degree_in(static_cast<VarId>(i)) > degree_in(static_cast<VarId>(i))) return std::nullopt;
  }
  std::map<Monomial, K, std::greater<Monomial>> rem;
  for (const auto& t : terms_) rem.emplace(t.first, t.second);
  const Monomial& lg = g.leading_monomial();
  K inv = g.leading_coeff().inverse();
  Poly q(ctx);
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lg.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lg;
    K qc = it->second * inv;
    q.terms_.emplace_back(qm, qc);
    for (const auto& t : g.terms_) {
      Monomial m = t.first * qm;
      K c = t.second * qc;
      auto [jt, inserted] = rem.try_emplace(m, -c);
      if (!inserted) {
        jt->second -= c;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    check_cap<K>(rem.size());
  }
  return q;
}

template <class K>
std::size_t Poly<K>::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ t.first.hash();
    if constexpr (std::is_same_v<K, Fq>) h = h * 31u + t.second.value();
  }
  return h;
}

template <class K>
std::string Poly<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.first.is_one()) {
      s += t.second.to_string();
    } else if (t.second.is_one()) {
      s += t.first.to_string();
    } else {
      s += t.second.to_string() + "*" + t.first.to_string();
    }
  }
  return s;
}

template class Poly<Fq>;
template class Poly<Rational>;

}  // namespace polyana
