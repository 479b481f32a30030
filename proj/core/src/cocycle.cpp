#include "polyana/cocycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "polyana/finlog.hpp"

namespace polyana {

namespace {

void check_p(std::uint32_t p) {
  if (p < 3) throw Error(ErrorCode::BadParams, "p must be an odd prime");
  (void)prime_field(p);  // throws NotPrime
}

std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + b) % p; }
std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + p - b) % p; }
std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::vector<std::uint32_t> h_table(std::uint32_t p) {
  check_p(p);
  const FieldPtr f = prime_field(p);
  const auto lp = finite_polylog(1, p);
  std::vector<std::uint32_t> t(p);
  for (std::uint32_t x = 0; x < p; ++x) t[x] = lp->eval(Fq::from_index(f, x)).value();
  return t;
}

}  // namespace

Fq entropy_H(const Fq& x) { return finite_polylog(1, x.field()->p)->eval(x); }

std::uint32_t entropy_H(std::uint32_t x, std::uint32_t p) {
  check_p(p);
  return finite_polylog(1, p)->eval(Fq::from_int(prime_field(p), x)).value();
}

std::uint32_t phi(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
  x %= p;
  y %= p;
  const std::uint32_t s = addm(x, y, p);
  if (s == 0) return 0;
  return mulm(s, entropy_H(mulm(x, inverse_mod(s, p), p), p), p);
}

Cocycle::Cocycle(std::uint32_t p,
                 const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& f)
    : p_(p), table_(static_cast<std::size_t>(p) * p) {
  check_p(p);
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) table_[x * p + y] = f(x, y) % p;
}

Cocycle Cocycle::standard(std::uint32_t p) {
  const auto h = h_table(p);
  return Cocycle(p, [&](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
    const std::uint32_t s = addm(x, y, p);
    if (s == 0) return 0;
    return mulm(s, h[mulm(x, inverse_mod(s, p), p)], p);
  });
}

CocycleVerdict check_cocycle(const Cocycle& c, std::uint64_t budget) {
  const std::uint32_t p = c.p();
  const std::uint64_t space = static_cast<std::uint64_t>(p) * p * p;
  if (space > budget) throw Error(ErrorCode::BudgetExceeded, "p^3 exceeds the cocycle budget");
  CocycleVerdict v;
  v.check = "cocycle";
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y)
      for (std::uint32_t z = 0; z < p; ++z) {
        ++v.checked;
        std::uint32_t r = subm(c(x, y), c(x, addm(y, z, p)), p);
        r = subm(addm(r, c(addm(x, y, p), z), p), c(y, z), p);
        if (r != 0) {
          v.witness = std::vector<std::uint32_t>{x, y, z};
          return v;
        }
      }
  v.holds = true;
  return v;
}

CocycleVerdict check_symmetry(const Cocycle& c) {
  const std::uint32_t p = c.p();
  CocycleVerdict v;
  v.check = "symmetry";
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) {
      ++v.checked;
      if (c(x, y) != c(y, x)) {
        v.witness = std::vector<std::uint32_t>{x, y};
        return v;
      }
    }
  v.holds = true;
  return v;
}

CocycleVerdict check_homogeneity(const Cocycle& c) {
  const std::uint32_t p = c.p();
  CocycleVerdict v;
  v.check = "homogeneity";
  for (std::uint32_t l = 1; l < p; ++l)
    for (std::uint32_t x = 0; x < p; ++x)
      for (std::uint32_t y = 0; y < p; ++y) {
        ++v.checked;
        if (c(mulm(l, x, p), mulm(l, y, p)) != mulm(l, c(x, y), p)) {
          v.witness = std::vector<std::uint32_t>{l, x, y};
          return v;
        }
      }
  v.holds = true;
  return v;
}

CocycleVerdict check_four_term(std::uint32_t p) {
  const auto h = h_table(p);
  CocycleVerdict v;
  v.check = "four_term";
  for (std::uint32_t y = 2; y < p; ++y) {
    const std::uint32_t omy = subm(1, y, p);
    const std::uint32_t inv_omy = inverse_mod(omy, p);
    const std::uint32_t inv_y = inverse_mod(y, p);
    for (std::uint32_t x = 0; x < p; ++x) {
      ++v.checked;
      const std::uint32_t lhs = h[addm(x, y, p)];
      std::uint32_t rhs = addm(h[y], mulm(omy, h[mulm(x, inv_omy, p)], p), p);
      rhs = addm(rhs, mulm(y, h[mulm(subm(0, x, p), inv_y, p)], p), p);
      if (lhs != rhs) {
        v.witness = std::vector<std::uint32_t>{x, y};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

CocycleVerdict check_inversion(std::uint32_t p) {
  const auto h = h_table(p);
  CocycleVerdict v;
  v.check = "inversion";
  for (std::uint32_t x = 1; x < p; ++x) {
    ++v.checked;
    if (mulm(x, h[inverse_mod(x, p)], p) != subm(0, h[x], p)) {
      v.witness = std::vector<std::uint32_t>{x};
      return v;
    }
  }
  v.holds = true;
  return v;
}

namespace {

struct ElimRow {
  std::vector<std::uint32_t> a;  // p coefficients then the right side
  std::map<std::uint32_t, std::uint32_t> combo;
};

void axpy(ElimRow& r, std::uint32_t f, const ElimRow& s, std::uint32_t p) {
  // r -= f * s
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = subm(r.a[i], mulm(f, s.a[i], p), p);
  for (const auto& [row, m] : s.combo) {
    std::uint32_t& slot = r.combo[row];
    slot = subm(slot, mulm(f, m, p), p);
    if (slot == 0) r.combo.erase(row);
  }
}

}  // namespace

CoboundaryResult coboundary_solve(const Cocycle& c) {
  const std::uint32_t p = c.p();
  CoboundaryResult res;
  res.p = p;
  std::vector<ElimRow> pivots;
  std::vector<int> pivot_of(p, -1);
  for (std::uint32_t x = 0; x < p; ++x) {
    for (std::uint32_t y = 0; y < p; ++y) {
      const std::uint32_t idx = x * p + y;
      ++res.rows;
      ElimRow r;
      r.a.assign(p + 1, 0);
      r.a[x] = addm(r.a[x], 1, p);
      r.a[y] = addm(r.a[y], 1, p);
      const std::uint32_t s = addm(x, y, p);
      r.a[s] = subm(r.a[s], 1, p);
      r.a[p] = c(x, y);
      r.combo[idx] = 1;
      int lead = -1;
      for (std::uint32_t col = 0; col < p; ++col) {
        if (r.a[col] == 0) continue;
        if (pivot_of[col] >= 0) {
          axpy(r, r.a[col], pivots[static_cast<std::size_t>(pivot_of[col])], p);
        } else {
          lead = static_cast<int>(col);
          break;
        }
      }
      if (lead < 0) {
        if (r.a[p] != 0) {
          res.consistent = false;
          res.rank = static_cast<std::uint32_t>(pivots.size());
          res.certificate.assign(r.combo.begin(), r.combo.end());
          res.certificate_value = r.a[p];
          return res;
        }
        continue;
      }
      const std::uint32_t inv = inverse_mod(r.a[static_cast<std::size_t>(lead)], p);
      for (auto& v : r.a) v = mulm(v, inv, p);
      for (auto& [row, m] : r.combo) m = mulm(m, inv, p);
      pivot_of[static_cast<std::size_t>(lead)] = static_cast<int>(pivots.size());
      pivots.push_back(std::move(r));
    }
  }
  res.consistent = true;
  res.rank = static_cast<std::uint32_t>(pivots.size());
  res.psi.assign(p, 0);
  for (std::uint32_t col = p; col-- > 0;) {
    if (pivot_of[col] < 0) continue;
    const ElimRow& r = pivots[static_cast<std::size_t>(pivot_of[col])];
    std::uint32_t v = r.a[p];
    for (std::uint32_t j = col + 1; j < p; ++j) v = subm(v, mulm(r.a[j], res.psi[j], p), p);
    res.psi[col] = v;
  }
  return res;
}

bool certificate_valid(const Cocycle& c, const CoboundaryResult& r) {
  const std::uint32_t p = c.p();
  if (r.consistent || r.certificate.empty()) return false;
  std::vector<std::uint32_t> lhs(p, 0);
  std::uint32_t rhs = 0;
  for (const auto& [row, m] : r.certificate) {
    if (row >= p * p) return false;
    const std::uint32_t x = row / p, y = row % p, s = addm(x, y, p);
    lhs[x] = addm(lhs[x], m, p);
    lhs[y] = addm(lhs[y], m, p);
    lhs[s] = subm(lhs[s], m, p);
    rhs = addm(rhs, mulm(m, c(x, y), p), p);
  }
  return std::all_of(lhs.begin(), lhs.end(), [](std::uint32_t v) { return v == 0; }) && rhs != 0 &&
         rhs == r.certificate_value;
}

GroupGElement group_mul(const Cocycle& c, const GroupGElement& g1, const GroupGElement& g2) {
  const std::uint32_t p = c.p();
  const std::uint32_t ab2 = mulm(g1.a, g2.b, p);
  GroupGElement r;
  r.u = addm(addm(g1.u, mulm(g1.a, g2.u, p), p), c(g1.b, ab2), p);
  r.b = addm(g1.b, ab2, p);
  r.a = mulm(g1.a, g2.a, p);
  return r;
}

GroupGElement group_identity() { return {0, 0, 1}; }

GroupGElement group_inverse(const Cocycle& c, const GroupGElement& g) {
  const std::uint32_t p = c.p();
  if (g.a % p == 0) throw Error(ErrorCode::ZeroInverse, "group element with a = 0");
  const std::uint32_t ia = inverse_mod(g.a, p);
  GroupGElement h;
  h.a = ia;
  h.b = subm(0, mulm(ia, g.b, p), p);
  // u + a u' + phi(b, -b) = 0
  h.u = mulm(subm(0, addm(g.u, c(g.b, subm(0, g.b, p)), p), p), ia, p);
  return h;
}

CocycleVerdict group_check(const Cocycle& c, const GroupCheckOptions& opt) {
  const std::uint32_t p = c.p();
  const std::uint64_t order = static_cast<std::uint64_t>(p) * p * (p - 1);
  auto element = [p](std::uint64_t i) {
    GroupGElement g;
    g.u = static_cast<std::uint32_t>(i % p);
    g.b = static_cast<std::uint32_t>(i / p % p);
    g.a = static_cast<std::uint32_t>(i / p / p) + 1;
    return g;
  };
  CocycleVerdict v;
  v.check = "group";
  const GroupGElement e = group_identity();
  for (std::uint64_t i = 0; i < order; ++i) {
    const GroupGElement g = element(i);
    const GroupGElement h = group_inverse(c, g);
    ++v.checked;
    if (!(group_mul(c, g, e) == g) || !(group_mul(c, e, g) == g) || !(group_mul(c, g, h) == e) ||
        !(group_mul(c, h, g) == e)) {
      v.witness = std::vector<std::uint32_t>{g.u, g.b, g.a};
      return v;
    }
  }
  auto assoc = [&](const GroupGElement& a, const GroupGElement& b, const GroupGElement& d) {
    ++v.checked;
    if (group_mul(c, group_mul(c, a, b), d) == group_mul(c, a, group_mul(c, b, d))) return true;
    v.witness = std::vector<std::uint32_t>{a.u, a.b, a.a, b.u, b.b, b.a, d.u, d.b, d.a};
    return false;
  };
  if (p <= opt.exhaustive_max_p) {
    for (std::uint64_t i = 0; i < order; ++i)
      for (std::uint64_t j = 0; j < order; ++j) {
        const GroupGElement gi = element(i), gj = element(j);
        const GroupGElement ij = group_mul(c, gi, gj);
        for (std::uint64_t k = 0; k < order; ++k) {
          const GroupGElement gk = element(k);
          ++v.checked;
          if (!(group_mul(c, ij, gk) == group_mul(c, gi, group_mul(c, gj, gk)))) {
            v.witness = std::vector<std::uint32_t>{gi.u, gi.b, gi.a, gj.u, gj.b, gj.a,
                                                   gk.u, gk.b, gk.a};
            return v;
          }
        }
      }
  } else {
    v.sampled = true;
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t s = 0; s < opt.samples; ++s)
      if (!assoc(element(rng() % order), element(rng() % order), element(rng() % order))) return v;
  }
  v.holds = true;
  return v;
}

void check_distribution(const std::vector<Rational>& probs, std::uint32_t p) {
  check_p(p);
  if (probs.empty()) throw Error(ErrorCode::BadParams, "empty distribution");
  Rational s(0);
  for (const Rational& q : probs) {
    if (q < Rational(0)) throw Error(ErrorCode::BadParams, "negative probability " + q.to_string());
    if (q.denominator() % p == 0)
      throw Error(ErrorCode::BadParams, "denominator of " + q.to_string() + " is divisible by p");
    s += q;
  }
  if (!(s == Rational(1)))
    throw Error(ErrorCode::BadParams, "probabilities sum to " + s.to_string() + ", not 1");
}

std::optional<std::uint32_t> entropy_in_order(const std::vector<Rational>& probs,
                                              const std::vector<std::size_t>& order,
                                              std::uint32_t p) {
  const auto h = h_table(p);
  std::vector<std::uint32_t> q;
  q.reserve(order.size());
  for (std::size_t i : order) q.push_back(probs.at(i).mod_p(p));
  // H(q1..qk) = H(q1) + (1 - q1) H(q2/(1-q1), ..., qk/(1-q1))
  std::uint32_t total = 0, scale = 1;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    total = addm(total, mulm(scale, h[q[i]], p), p);
    if (i + 2 == q.size()) break;
    const std::uint32_t rest = subm(1, q[i], p);
    if (rest == 0) return std::nullopt;
    const std::uint32_t inv = inverse_mod(rest, p);
    for (std::size_t j = i + 1; j < q.size(); ++j) q[j] = mulm(q[j], inv, p);
    scale = mulm(scale, rest, p);
  }
  return total;
}

EntropyResult entropy_mod_p(const std::vector<Rational>& probs, std::uint32_t p,
                            const EntropyOptions& opt) {
  check_distribution(probs, p);
  std::vector<Rational> nz;
  for (const Rational& q : probs)
    if (!q.is_zero()) nz.push_back(q);
  EntropyResult res;
  std::vector<std::size_t> order(nz.size());
  std::iota(order.begin(), order.end(), 0);
  // The given order is the identity permutation, which is also the first
  // lexicographic one, so a single sweep covers both steps of the policy.
  do {
    if (res.orderings_tried >= opt.max_orderings)
      throw Error(ErrorCode::BudgetExceeded, "ordering budget exhausted");
    ++res.orderings_tried;
    if (auto v = entropy_in_order(nz, order, p)) {
      res.value = *v;
      res.ordering = order;
      return res;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  throw Error(ErrorCode::NoAdmissibleOrdering,
              "every ordering divides by a partial sum = 0 mod " + std::to_string(p));
}

MainIdentityResult main_identity_check(const std::vector<Rational>& coarse,
                                       const std::vector<std::vector<Rational>>& refinement,
                                       std::uint32_t p, const EntropyOptions& opt) {
  if (coarse.size() != refinement.size())
    throw Error(ErrorCode::BadParams, "refinement needs one group per coarse value");
  check_distribution(coarse, p);
  std::vector<Rational> fine;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    Rational s(0);
    for (const Rational& q : refinement[i]) {
      s += q;
      fine.push_back(q);
    }
    if (!(s == coarse[i]))
      throw Error(ErrorCode::BadParams, "group " + std::to_string(i) + " does not sum to " +
                                            coarse[i].to_string());
  }
  MainIdentityResult r;
  r.lhs = entropy_mod_p(fine, p, opt).value;
  r.coarse = entropy_mod_p(coarse, p, opt).value;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    if (coarse[i].is_zero()) continue;
    if (coarse[i].mod_p(p) == 0)
      throw Error(ErrorCode::BadParams, "coarse probability " + coarse[i].to_string() +
                                            " is not invertible mod p");
    std::vector<Rational> cond;
    for (const Rational& q : refinement[i]) cond.push_back(q / coarse[i]);
    r.relative = addm(r.relative, mulm(coarse[i].mod_p(p), entropy_mod_p(cond, p, opt).value, p), p);
  }
  r.holds = r.lhs == addm(r.coarse, r.relative, p);
  return r;
}

}  // namespace polyana
