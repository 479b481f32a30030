#include "polyana/finlog.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "polyana/bernoulli.hpp"

namespace polyana {

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
}

std::uint32_t reduce_weight(long long n, std::uint32_t p) {
  const long long period = static_cast<long long>(p) - 1;
  return static_cast<std::uint32_t>(((n % period) + period) % period);
}

FieldPtr target_of(const FormalSumFq& s, const std::vector<Fq>& point) {
  for (const auto& x : point) {
    if (x.field()) return x.field();
  }
  return s.ctx;
}

}  // namespace

Fq FinitePolylog::eval(const Fq& x) const {
  FieldPtr f = x.field();
  Fq acc = Fq::zero(f);
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    acc = (acc + coeffs[k].embed(f)) * x;
  }
  return acc;
}

std::shared_ptr<const FinitePolylog> finite_polylog(long long n, std::uint32_t p) {
  require_odd_prime(p);
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const FinitePolylog>> cache;
  const std::uint32_t r = reduce_weight(n, p);
  std::shared_ptr<const FinitePolylog> base;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({r, p});
    if (it != cache.end()) base = it->second;
  }
  if (!base) {
    auto fl = std::make_shared<FinitePolylog>();
    FieldPtr f = prime_field(p);
    fl->n = r;
    fl->n_reduced = r;
    fl->p = p;
    fl->coeffs.assign(p, Fq::zero(f));
    std::vector<PolyFq::Term> terms;
    for (std::uint32_t k = 1; k < p; ++k) {
      fl->coeffs[k] = Fq(f, pow_mod(inverse_mod(k, p), r, p));
      terms.emplace_back(Monomial::var(var_id("T"), k), fl->coeffs[k]);
    }
    fl->poly = PolyFq::from_terms(f, std::move(terms));
    std::lock_guard lock(mu);
    base = cache.emplace(std::make_pair(r, p), std::move(fl)).first->second;
  }
  if (base->n == n) return base;
  auto copy = std::make_shared<FinitePolylog>(*base);
  copy->n = n;
  copy->reduced = true;
  return copy;
}

PolyFq l1_via_witt(std::uint32_t p) {
  require_odd_prime(p);
  FieldPtr f = prime_field(p);
  // Coefficient of T^k in 1 - T^p - (1-T)^p is -(-1)^k C(p,k) for 0 < k < p;
  // the constant and T^p coefficients vanish because p is odd.
  std::vector<PolyFq::Term> terms;
  BigInt binom = 1;
  for (std::uint32_t k = 1; k < p; ++k) {
    binom = binom * (p - k + 1) / k;
    BigInt c = (k % 2 == 0) ? BigInt(-binom) : binom;
    if (c % p != 0) throw Error(ErrorCode::NonIntegral, "binomial not divisible by p");
    BigInt q = c / p;
    Fq v = Fq(f, static_cast<std::uint32_t>(bigint_mod(q, p)));
    if (!v.is_zero()) terms.emplace_back(Monomial::var(var_id("T"), k), v);
  }
  return PolyFq::from_terms(f, std::move(terms));
}

namespace {

// L_m(x) for a non-constant rational function x = N/D, returned as
// N * S(N, D) / D^{p-1} with S = sum_k w_k N^{k-1} D^{p-1-k}.
RatFq lhat_argument(const FinitePolylog& fl, const RatFq& x) {
  FieldPtr f = x.context();
  const std::uint32_t p = fl.p;
  RatFq den_rf = RatFq::constant(f, 1);
  for (const auto& [atom, e] : x.den_factors()) den_rf *= RatFq::from_poly(atom).pow(e);
  const RatFq num_rf = x * den_rf;
  const PolyFq n = x.numerator();
  const PolyFq d = x.denominator();
  std::vector<PolyFq> dpow(p - 1, PolyFq::constant(f, 1));
  if (!d.is_one()) {
    for (std::uint32_t j = 1; j + 1 < p; ++j) dpow[j] = dpow[j - 1] * d;
  }
  PolyFq acc = PolyFq::constant(f, fl.coeffs[p - 1]);
  for (std::uint32_t k = p - 2; k >= 1; --k) {
    acc = acc * n + dpow[p - 1 - k].scale(fl.coeffs[k]);
  }
  RatFq r = num_rf * RatFq::from_poly(acc);
  if (!x.is_polynomial()) r = r / den_rf.pow(p - 1);
  return r;
}

}  // namespace

RatFq lhat_apply(long long m, const FormalSumFq& s) {
  FieldPtr f = s.ctx;
  if (!f) throw Error(ErrorCode::BadParams, "formal sum has no field");
  auto fl = finite_polylog(m, f->p);
  RatFq total = RatFq::constant(f, 0);
  for (const auto& t : s.terms) {
    RatFq cp = t.coeff.frobenius();
    if (t.arg.is_constant()) {
      total += cp.scale(fl->eval(t.arg.unit()));
      continue;
    }
    total += cp * lhat_argument(*fl, t.arg);
  }
  return total;
}

Fq lhat_eval(long long m, const FormalSumFq& s, const std::vector<Fq>& point) {
  FieldPtr target = target_of(s, point);
  auto fl = finite_polylog(m, target->p);
  Fq acc = Fq::zero(target);
  for (const auto& t : s.terms) {
    Fq c = t.coeff.evaluate(point, target);
    Fq x = t.arg.evaluate(point, target);
    acc += c.frobenius() * fl->eval(x);
  }
  return acc;
}

std::vector<SpecialValueRow> special_values(std::uint32_t p) {
  require_odd_prime(p);
  FieldPtr f = prime_field(p);
  const Fq one = Fq::one(f);
  const Fq minus_one = -one;
  std::vector<SpecialValueRow> rows;
  auto push = [&](long long n, const std::string& arg, const std::string& kind, Fq got, Fq want, bool logged) {
    std::string status = logged ? "logged" : (got == want ? "pass" : "fail");
    rows.push_back({p, n, arg, kind, got, want, status});
  };
  for (long long n = 1; n <= static_cast<long long>(p) - 1; ++n) {
    Fq want = (n % (p - 1) == 0) ? minus_one : Fq::zero(f);
    push(n, "1", "L(1)", finite_polylog(n, p)->eval(one), want, false);
  }
  for (long long n = 2; n <= static_cast<long long>(p) - 1; n += 2) {
    push(n, "-1", "L2n(-1)", finite_polylog(n, p)->eval(minus_one), Fq::zero(f), false);
  }
  // Genocchi values: L_{p-m}(-1) = G_m / m. Even m is the proven case, m = 1
  // is recorded without a verdict.
  for (long long mm = 1; mm < static_cast<long long>(p) - 1; ++mm) {
    Fq got = finite_polylog(static_cast<long long>(p) - mm, p)->eval(minus_one);
    BigInt g = genocchi(static_cast<std::uint32_t>(mm));
    Fq want = Fq(f, static_cast<std::uint32_t>(bigint_mod(g, p))) * Fq::from_int(f, mm).inverse();
    push(mm, "-1", "genocchi", got, want, mm == 1);
  }
  return rows;
}

std::string special_values_csv(const std::vector<SpecialValueRow>& rows) {
  std::ostringstream os;
  os << "p,kind,n_or_m,argument,computed,expected,status\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.kind << ',' << r.n_or_m << ',' << r.argument << ',' << r.computed.to_string() << ','
       << r.expected.to_string() << ',' << r.status << '\n';
  }
  return os.str();
}

PolyFq tau(long long i, std::uint32_t p) {
  require_odd_prime(p);
  if (i < 0 || i > static_cast<long long>(p / 3)) {
    throw Error(ErrorCode::IndexOutOfRange, "tau index " + std::to_string(i) + " outside 0.." + std::to_string(p / 3));
  }
  FieldPtr f = prime_field(p);
  const VarId t = var_id("T");
  PolyFq T = PolyFq::variable(f, t);
  PolyFq one = PolyFq::constant(f, 1);
  PolyFq tail = PolyFq::variable(f, t, static_cast<std::uint32_t>(p - 3 * i)) + PolyFq::constant(f, (i % 2 == 0) ? 1 : -1);
  return (T * (one - T)).pow(static_cast<std::uint64_t>(i)) * tail;
}

RecipeParts recipe_decompose(const PolyFq& q, VarId v) {
  FieldPtr f = q.context();
  const std::uint32_t p = f ? f->p : 0;
  std::vector<PolyFq::Term> c0, q1, q2;
  for (const auto& [mono, c] : q.terms()) {
    std::uint32_t e = mono[v];
    if (e == 0) {
      c0.emplace_back(mono, c);
    } else if (e % p != 0) {
      q1.emplace_back(mono, c);
    } else {
      Monomial m = mono;
      m.e[v] = static_cast<std::uint16_t>(e / p);
      m.deg -= e - e / p;
      q2.emplace_back(m, c);
    }
  }
  return {PolyFq::from_terms(f, std::move(c0)), PolyFq::from_terms(f, std::move(q1)), PolyFq::from_terms(f, std::move(q2))};
}

bool recipe_prove_zero(const PolyFq& q, VarId v) {
  if (q.is_zero()) return true;
  RecipeParts parts = recipe_decompose(q, v);
  if (!parts.c0.is_zero()) return false;
  if (!parts.q1.derivative(v).is_zero()) return false;
  return recipe_prove_zero(parts.q2, v);
}

}  // namespace polyana
