#include "polyana/derivmap.hpp"

namespace polyana {

template <class K>
Derivation<K> standard_derivation(typename K::Context ctx, const std::vector<VarId>& vars) {
  Derivation<K> d;
  const auto one = RatFunc<K>::constant(ctx, 1);
  for (VarId v : vars) {
    auto t = RatFunc<K>::variable(ctx, v);
    d.coeffs.emplace(v, t * (one - t));
  }
  return d;
}

template <class K>
RatFunc<K> apply_derivation(const Derivation<K>& d, const RatFunc<K>& f) {
  RatFunc<K> acc = RatFunc<K>::constant(f.context(), 0);
  if (f.is_constant()) return acc;
  const std::uint32_t used = f.variables();
  for (const auto& [v, g] : d.coeffs) {
    if (!(used & (1u << v))) continue;
    acc += g * f.derivative(v);
  }
  return acc;
}

template <class K>
Derived<K> derive(const FormalSum<K>& s, const Derivation<K>& d) {
  Derived<K> out;
  out.sum = s;
  out.sum.terms.clear();
  const auto one = RatFunc<K>::constant(s.ctx, 1);
  for (const auto& t : s.terms) {
    if (t.arg.is_constant()) {
      out.notices.push_back("dropped constant term (" + t.coeff.to_string() + ")[" + t.arg.to_string() + "]");
      continue;
    }
    if (t.arg.is_zero() || t.arg == one) {
      throw Error(ErrorCode::DegenerateArgument, "argument " + t.arg.to_string() + " is identically 0 or 1");
    }
    auto dx = apply_derivation(d, t.arg);
    out.sum.add(t.coeff * dx / (t.arg * (one - t.arg)), t.arg);
  }
  return out;
}

DerivedMatch derived_equals(const FormalSumFq& s1, const FormalSumFq& s2, long long m) {
  DerivedMatch r;
  auto diff = normalize_mod_inversion(s1 - s2, m);
  r.residual_terms = diff.size();
  r.equal = diff.empty();
  if (r.equal) {
    r.up_to_scalar = true;
    r.scalar = RatFq::constant(s1.ctx, 1);
    return r;
  }
  auto n1 = normalize_mod_inversion(s1, m);
  auto n2 = normalize_mod_inversion(s2, m);
  if (n1.empty() || n2.empty()) return r;
  for (const auto& t : n2.terms) {
    if (t.arg == n1.terms[0].arg) {
      RatFq lambda = n1.terms[0].coeff / t.coeff;
      if (normalize_mod_inversion(n1 - n2.scaled(lambda), m).empty()) {
        r.up_to_scalar = true;
        r.scalar = lambda;
      }
      break;
    }
  }
  return r;
}

DerivedVerdict verify_derived(const FormalSumFq& s, long long m, FieldPtr field, const WeakOptions& opt) {
  DerivedVerdict v;
  v.weak = verify_weak(s, m, field, opt);
  try {
    v.strong_holds = verify_strong(s, m).holds;
    v.strong_status = v.strong_holds ? "holds" : "fails";
  } catch (const Error& e) {
    v.strong_status = e.what();
  }
  return v;
}

namespace {

PolyFq reduce_poly(const PolyQ& p, FieldPtr f) {
  std::vector<PolyFq::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    Fq v(f, c.mod_p(f->p));
    if (!v.is_zero()) terms.emplace_back(m, v);
  }
  return PolyFq::from_terms(f, std::move(terms));
}

}  // namespace

RatFq reduce_mod_p(const RatQ& g, FieldPtr f) {
  RatFq r = RatFq::constant(f, Fq(f, g.unit().mod_p(f->p)));
  for (const auto& [atom, e] : g.num_factors()) r *= RatFq::from_poly(reduce_poly(atom, f)).pow(e);
  for (const auto& [atom, e] : g.den_factors()) {
    PolyFq a = reduce_poly(atom, f);
    if (a.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes mod " + std::to_string(f->p));
    r = r / RatFq::from_poly(a).pow(e);
  }
  return r;
}

FormalSumFq reduce_mod_p(const FormalSumQ& s, std::uint32_t p) {
  FieldPtr f = prime_field(p);
  FormalSumFq r(f, s.weight, s.variables);
  r.id = s.id;
  r.reference = s.reference;
  for (const auto& t : s.terms) r.add(reduce_mod_p(t.coeff, f), reduce_mod_p(t.arg, f));
  return r;
}

template Derivation<Fq> standard_derivation<Fq>(FieldPtr, const std::vector<VarId>&);
template Derivation<Rational> standard_derivation<Rational>(RationalField, const std::vector<VarId>&);
template RatFq apply_derivation<Fq>(const Derivation<Fq>&, const RatFq&);
template RatQ apply_derivation<Rational>(const Derivation<Rational>&, const RatQ&);
template Derived<Fq> derive<Fq>(const FormalSumFq&, const Derivation<Fq>&);
template Derived<Rational> derive<Rational>(const FormalSumQ&, const Derivation<Rational>&);

}  // namespace polyana
