#include <algorithm>
#include <random>

#include "polyana/eqcat.hpp"
#include "polyana/finlog.hpp"

namespace polyana {

Verdict verify_strong(const FormalSumFq& s, long long m) {
  if (!s.ctx) throw Error(ErrorCode::BadParams, "formal sum has no field");
  Verdict v;
  v.residual = lhat_apply(m, s);
  v.holds = v.residual->is_zero();
  return v;
}

namespace {

// Variables that the enumeration runs over: the declared ones plus any that
// actually occur.
std::vector<VarId> point_vars(const FormalSumFq& s) {
  std::uint32_t mask = 0;
  for (const auto& t : s.terms) mask |= t.coeff.variables() | t.arg.variables();
  std::vector<VarId> out;
  for (VarId v : s.variables) {
    if (mask & (1u << v)) out.push_back(v);
  }
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if ((mask & (1u << v)) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(static_cast<VarId>(v));
  }
  return out;
}

std::size_t point_size(const std::vector<VarId>& vars) {
  std::size_t n = 0;
  for (VarId v : vars) n = std::max<std::size_t>(n, v + 1u);
  return n;
}

void check_field(const FormalSumFq& s, FieldPtr field) {
  if (!s.ctx || !field || s.ctx->p != field->p || field->e % s.ctx->e != 0) {
    throw Error(ErrorCode::DomainMismatch, "evaluation field does not contain the coefficient field");
  }
}

}  // namespace

bool admissible(const FormalSumFq& s, const std::vector<Fq>& point, FieldPtr field) {
  for (const auto& t : s.terms) {
    if (!t.coeff.admissible(point, field) || !t.arg.admissible(point, field)) return false;
  }
  return true;
}

std::uint64_t admissible_points(const FormalSumFq& s, FieldPtr field,
                                const std::function<bool(const std::vector<Fq>&)>& visit) {
  check_field(s, field);
  const auto vars = point_vars(s);
  std::vector<Fq> point(point_size(vars), Fq::zero(field));
  std::vector<std::uint64_t> idx(vars.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    if (admissible(s, point, field)) {
      ++count;
      if (visit && !visit(point)) return count;
    }
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++idx[i] < field->q) {
        point[vars[i]] = Fq::from_index(field, idx[i]);
        break;
      }
      idx[i] = 0;
      point[vars[i]] = Fq::zero(field);
    }
    if (i == vars.size()) break;
  }
  return count;
}

Verdict verify_weak(const FormalSumFq& s, long long m, FieldPtr field, const WeakOptions& opt) {
  check_field(s, field);
  const auto vars = point_vars(s);
  Verdict v;
  v.holds = true;
  std::uint64_t space = 1;
  bool over = false;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (space > opt.budget / field->q + 1) over = true;
    space *= field->q;
  }
  over = over || space > opt.budget;
  v.space_size = over ? 0 : space;
  auto check = [&](const std::vector<Fq>& pt) {
    if (!admissible(s, pt, field)) {
      ++v.points_skipped;
      return true;
    }
    ++v.points_checked;
    Fq val = lhat_eval(m, s, pt);
    if (!val.is_zero()) {
      v.holds = false;
      v.counterexample = pt;
      v.counter_value = val;
      return false;
    }
    return true;
  };
  if (!over) {
    std::vector<Fq> point(point_size(vars), Fq::zero(field));
    std::vector<std::uint64_t> idx(vars.size(), 0);
    while (check(point)) {
      std::size_t i = 0;
      for (; i < vars.size(); ++i) {
        if (++idx[i] < field->q) {
          point[vars[i]] = Fq::from_index(field, idx[i]);
          break;
        }
        idx[i] = 0;
        point[vars[i]] = Fq::zero(field);
      }
      if (i == vars.size()) break;
    }
    return v;
  }
  if (!opt.allow_sampling) throw Error(ErrorCode::BudgetExceeded, "point space exceeds the enumeration budget");
  v.sampled = true;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, field->q - 1);
  std::vector<Fq> point(point_size(vars), Fq::zero(field));
  for (std::uint64_t k = 0; k < opt.samples; ++k) {
    for (VarId x : vars) point[x] = Fq::from_index(field, pick(rng));
    if (!check(point)) break;
  }
  return v;
}

template <class K>
FormalSum<K> normalize_mod_inversion(const FormalSum<K>& s, long long m) {
  FormalSum<K> r = s;
  r.terms.clear();
  const auto sign = RatFunc<K>::constant(s.ctx, (m % 2 == 0) ? 1 : -1);
  for (const auto& t : s.terms) {
    if (t.arg.is_zero()) {
      r.terms.push_back(t);
      continue;
    }
    RatFunc<K> inv = t.arg.inverse();
    if (RatFunc<K>::compare(inv, t.arg) < 0) {
      r.add(sign * t.coeff * t.arg, inv);
    } else {
      r.terms.push_back(t);
    }
  }
  return r.merged();
}

template FormalSum<Fq> normalize_mod_inversion<Fq>(const FormalSum<Fq>&, long long);
template FormalSum<Rational> normalize_mod_inversion<Rational>(const FormalSum<Rational>&, long long);

}  // namespace polyana
