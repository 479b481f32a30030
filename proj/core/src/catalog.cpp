#include "json.hpp"

#include "polyana/eqcat.hpp"

namespace polyana {

namespace {

using Vars = std::vector<std::string>;

std::vector<CatalogInfo> make_catalog() {
  using E = EntryKind;
  std::vector<CatalogInfo> c;
  auto add = [&](std::string id, int w, E kind, Vars vars, std::string ref, std::string anchor, bool tn = false,
                 bool tm = false) {
    c.push_back({std::move(id), w, kind, std::move(vars), std::move(ref), std::move(anchor), tn, tm, ""});
  };
  auto alias = [&](std::string id, const std::string& target, std::string ref) {
    for (const auto& e : c) {
      if (e.id == target) {
        CatalogInfo a = e;
        a.id = std::move(id);
        a.reference = std::move(ref);
        a.alias_of = target;
        c.push_back(a);
        return;
      }
    }
  };
  add("inversion", 2, E::Finite, {"T"}, "inversion formula", "[T] - (-1)^(n-1) T [1/T]", true);
  add("distribution", 2, E::Finite, {"T"}, "distribution formula",
      "[T^m] - m^(n-2) sum_{zeta^m=1} (1-T^m)/(1-zeta T) [zeta T]", true, true);
  add("duplication", 2, E::Finite, {"T"}, "duplication formula", "[T^2] - 2^(n-2) ((1+T)[T] + (1-T)[-T])", true);
  add("two_term", 2, E::Finite, {"T"}, "two-term relation", "[T] - [1-T]");
  add("feit", 2, E::Finite, {"a", "b"}, "four-term relation, Cathelineau's form of the fundamental equation of information theory",
      "[a] - [b] + a[b/a] + (1-a)[(1-b)/(1-a)]");
  add("fundamental_info", 2, E::Finite, {"x", "y"}, "fundamental equation of information theory",
      "(1-y)[x/(1-y)] - [x] - (1-x)[y/(1-x)] + [y]");
  add("feit_generalized", 2, E::Finite, {"x", "y", "s"}, "six-term relation, symmetry of H(x,y,s)",
      "H(x,y,s) - H(y,x,s), H = (1-y)[(x-s)/(1-y)] + y[s/y] + [y]");
  add("five_term_v1", 2, E::Finite, {"x1", "x2", "x3", "x4", "x5"}, "five-term relation in cocycle form",
      "sum_i (-1)^i denom(x^_i) [cr(x^_i)]");
  add("five_term_v2", 2, E::Finite, {"x1", "x2", "x3", "x4", "x5"}, "five-term relation in cocycle form, weighted",
      "sum_i (-1)^i x_i denom(x^_i) [cr(x^_i)]");
  add("five_term_family", 2, E::Finite, {"a", "b", "t"}, "five-term family in two variables",
      "(b+t)[a] - (a+t)[b] + (1+t)a[b/a] + t(1-a)[(1-b)/(1-a)] + b(1-a)[a(1-b)/(b(1-a))]");
  add("four_term_alt", 2, E::Finite, {"a", "b"}, "alternative four-term relation",
      "b[a] - a[b] + a[b/a] + b(1-a)[a(1-b)/(b(1-a))]");
  add("kontsevich_B", 2, E::Finite, {"x", "y"}, "Kontsevich's entropy equation (B)",
      "[x+y] - [y] - (1-y)[x/(1-y)] - y[-x/y]");
  add("three_term", 3, E::Finite, {"x"}, "three-term relation", "[1-x] - [x] + x[1-1/x]");
  add("kummer_spence", 3, E::Finite, {"x", "y"}, "Kummer-Spence analogue KS(x,y)",
      "[xy] + y[x/y] - (1-y)[y(1-x)/(y-1)] + (1-y)[(1-x)/(1-y)] - x(1-y)[y(1-x)/(x(1-y))] + x(1-y)[(x-1)/(x(1-y))] - (1+y)[x] - (1+x)[y]");
  add("kummer_spence_v1", 3, E::Finite, {"a", "b"}, "Kummer-Spence analogue in a, b",
      "(1-b)b/(1-b-a)[(1-a)a/(b(1-b))] + ... - (a-b+1)b/(1-b-a)[(1-a)/b]");
  add("cathelineau_J", 3, E::Finite, {"a", "b", "c"}, "Cathelineau's 22-term expression J(a,b,c)",
      "[[a,c]] - [[b,c]] + a[[b/a,c]] + (1-a)[[(1-b)/(1-a),c]]");
  add("cathelineau_J_c_a", 3, E::Finite, {"a", "b"}, "J(a,b,c) specialized at c = a", "J(a,b,a)");
  add("cathelineau_J_c_b", 3, E::Finite, {"a", "b"}, "J(a,b,c) specialized at c = b", "J(a,b,b)");
  add("cathelineau_J_c_a_over_b", 3, E::Finite, {"a", "b"}, "J(a,b,c) specialized at c = a/b", "J(a,b,a/b)");
  add("cathelineau_J_c_ratio", 3, E::Finite, {"a", "b"}, "J(a,b,c) specialized at c = (1-a)/(1-b)",
      "J(a,b,(1-a)/(1-b))");
  add("cathelineau_bracket", 3, E::Block, {"a", "b"}, "Cathelineau's bracket [[a,b]]",
      "(b-a)tau(a,b) + (1-b)/(1-a) sigma(a) + (1-a)/(1-b) sigma(b)");
  add("derived_goncharov", 3, E::Finite, {"a", "b", "c"}, "derived Goncharov equation",
      "phi(a,b,c) + phi(b,c,a) + phi(c,a,b) + (a+b+c-3)/(abc-1)[abc]");
  add("inversion_classical", 2, E::Classical, {"a"}, "classical inversion formula", "[1/a] - (-1)^(n-1)[a]", true);
  add("distribution_classical", 2, E::Classical, {"a"}, "classical distribution formula",
      "[a^m] - m^(n-1) sum_{zeta^m=1} [zeta a]", true, true);
  add("two_term_classical", 2, E::Classical, {"x"}, "classical two-term relation of the dilogarithm", "[x] + [1-x]");
  add("five_term_cocycle", 2, E::Classical, {"x1", "x2", "x3", "x4", "x5"}, "five-term relation as a cocycle",
      "sum_i (-1)^i [cr(x^_i)]");
  add("five_term_classical", 2, E::Classical, {"a", "b"}, "five-term relation in Suslin's arguments",
      "[a] - [b] + [b/a] - [(1-b)/(1-a)] + [(1-1/b)/(1-1/a)]");
  add("three_term_classical", 3, E::Classical, {"x"}, "three-term relation of the trilogarithm",
      "[1-x] + [x] + [1-1/x] - [1]");
  add("kummer_spence_classical_v1", 3, E::Classical, {"a", "b"}, "Kummer-Spence equation",
      "[a(1-b)/(b(1-a))] + [(1-a)a/(b(1-b))] + [ab/((1-b)(1-a))] - 2[(1-a)/(1-b)] - 2[b/(b-1)] - 2[a/(a-1)] - 2[b/a] - 2[a/(1-b)] - 2[(1-a)/b] + 2[1]");
  add("kummer_spence_classical", 3, E::Classical, {"x", "y"}, "Kummer-Spence equation, second form",
      "[x(1-y)^2/(y(1-x)^2)] + [xy] + [x/y] - 2[y(1-x)/(y-1)] - 2[(1-x)/(1-y)] - 2[y(1-x)/(x(1-y))] - 2[(x-1)/(x(1-y))] - 2[x] - 2[y] + 2[1]");
  add("goncharov_classical", 3, E::Classical, {"a", "b", "c"}, "Goncharov's 22-term equation",
      "f(a,b,c) + f(b,c,a) + f(c,a,b) + [abc] - 3[1]");
  alias("kontsevich_A", "two_term", "Kontsevich's entropy equation (A)");
  alias("kontsevich_C", "inversion", "Kontsevich's entropy equation (C), inversion at n = 2");
  alias("three_term_polynomial", "three_term", "three-term equation in polynomial form");
  return c;
}

}  // namespace

const std::vector<CatalogInfo>& catalog() {
  static const std::vector<CatalogInfo> c = make_catalog();
  return c;
}

const CatalogInfo& catalog_info(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::UnknownId, "unknown equation id '" + id + "'");
}

std::string catalog_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : catalog()) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["weight"] = e.weight;
    j["kind"] = e.kind == EntryKind::Finite ? "infinitesimal" : (e.kind == EntryKind::Classical ? "classical" : "block");
    j["variables"] = e.variables;
    std::size_t count = 0;
    if (e.kind != EntryKind::Block) {
      try {
        count = build<Rational>(e.id, RationalField{}).size();
      } catch (const Error&) {
        count = build<Fq>(e.id, prime_field(13)).size();
      }
    } else {
      count = 7;
    }
    j["terms"] = count;
    j["reference"] = e.reference;
    j["anchor"] = e.anchor;
    if (!e.alias_of.empty()) j["alias_of"] = e.alias_of;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::vector<Fq> roots_of_unity(FieldPtr f, long long m) {
  const long long am = m < 0 ? -m : m;
  if (am == 0) throw Error(ErrorCode::BadParams, "distribution order must be nonzero");
  const std::uint64_t order = f->q - 1;
  if (order % static_cast<std::uint64_t>(am) != 0) {
    throw Error(ErrorCode::BadParams, "F_" + std::to_string(f->q) + " has no primitive " + std::to_string(am) + "-th root of unity");
  }
  // Find a generator of the multiplicative group, then take its power.
  std::vector<std::uint64_t> primes;
  std::uint64_t r = order;
  for (std::uint64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      primes.push_back(d);
      while (r % d == 0) r /= d;
    }
  }
  if (r > 1) primes.push_back(r);
  for (std::uint64_t i = 1; i < f->q; ++i) {
    Fq g = Fq::from_index(f, i);
    bool gen = true;
    for (auto pr : primes) gen = gen && !g.pow(static_cast<long long>(order / pr)).is_one();
    if (!gen) continue;
    Fq z = g.pow(static_cast<long long>(order / am));
    std::vector<Fq> out;
    Fq acc = Fq::one(f);
    for (long long j = 0; j < am; ++j) {
      out.push_back(acc);
      acc *= z;
    }
    return out;
  }
  throw Error(ErrorCode::BadParams, "no generator found");
}

namespace {

template <class K>
struct Builder {
  using R = RatFunc<K>;
  using Ctx = typename K::Context;
  Ctx ctx;
  int n;

  R v(const char* name) const { return R::variable(ctx, name); }
  R k(long long c) const { return R::constant(ctx, c); }
  FormalSum<K> sum(int w, const Vars& vars) const {
    std::vector<VarId> ids;
    for (const auto& s : vars) ids.push_back(var_id(s));
    return FormalSum<K>(ctx, w, std::move(ids));
  }

  std::vector<K> roots(long long m) const {
    const long long am = m < 0 ? -m : m;
    if constexpr (std::is_same_v<K, Fq>) {
      if (am <= 2 && am > 0) {
        std::vector<K> out{K::one(ctx)};
        if (am == 2) out.push_back(-K::one(ctx));
        return out;
      }
      return roots_of_unity(ctx, m);
    } else {
      if (am == 1) return {K::one(ctx)};
      if (am == 2) return {K::one(ctx), -K::one(ctx)};
      throw Error(ErrorCode::BadParams, "roots of unity of order " + std::to_string(am) + " are not rational");
    }
  }

  K mpow(long long m, int e) const {
    if (m == 0) throw Error(ErrorCode::BadParams, "distribution order must be nonzero");
    return K::from_int(ctx, m).pow(e);
  }

  R tpow(const R& t, long long m) const { return t.pow(m); }

  // cr(a,b,c,d) and denom(a,b,c,d).
  R cr(const R& a, const R& b, const R& c, const R& d) const { return ((a - c) * (b - d)) / ((a - d) * (b - c)); }
  R denom(const R& a, const R& b, const R& c, const R& d) const { return (a - d) * (b - c); }

  FormalSum<K> five_term(int mode) const {
    auto s = sum(2, {"x1", "x2", "x3", "x4", "x5"});
    std::vector<R> x{v("x1"), v("x2"), v("x3"), v("x4"), v("x5")};
    for (int i = 0; i < 5; ++i) {
      std::vector<R> r;
      for (int j = 0; j < 5; ++j) {
        if (j != i) r.push_back(x[j]);
      }
      R sign = k((i + 1) % 2 == 0 ? 1 : -1);
      R coeff = sign;
      if (mode >= 1) coeff *= denom(r[0], r[1], r[2], r[3]);
      if (mode == 2) coeff *= x[i];
      s.add(coeff, cr(r[0], r[1], r[2], r[3]));
    }
    return s;
  }

  FormalSum<K> feit(const R& a, const R& b) const {
    auto s = sum(2, {"a", "b"});
    R one = k(1);
    s.add(one, a).add(-one, b).add(a, b / a).add(one - a, (one - b) / (one - a));
    return s;
  }

  FormalSum<K> J(const R& a, const R& b, const R& c) const {
    auto s = sum(3, {"a", "b", "c"});
    R one = k(1);
    s.add(c, a).add(-c, b).add(a - b + one, c);
    s.add(one - c, one - a).add(-(one - c), one - b).add(b - a, one - c);
    s.add(-a, c / a).add(b, c / b).add(c * a, b / a);
    s.add(-(one - a), (one - c) / (one - a)).add(one - b, (one - c) / (one - b)).add(c * (one - a), (one - b) / (one - a));
    s.add(c * (one - a), a * (one - c) / (c * (one - a))).add(-(c * (one - b)), b * (one - c) / (c * (one - b)));
    s.add(-b, c * a / b).add(-(one - b), c * (one - a) / (one - b));
    s.add((one - c) * a, (a - b) / a).add((one - c) * (one - a), (b - a) / (one - a));
    s.add(-(a - b), (one - c) * a / (a - b)).add(-(b - a), (one - c) * (one - a) / (b - a));
    s.add(c * (a - b), (one - c) * b / (c * (a - b))).add(c * (b - a), (one - c) * (one - b) / (c * (b - a)));
    return s;
  }

  FormalSum<K> goncharov_f(const R& a, const R& b, const R& c) const {
    auto s = sum(3, {"a", "b", "c"});
    R one = k(1);
    R abc = a * b * c;
    s.add(one, a).add(one, b * (one - a) / (b - one)).add(one, a * (one - b) / (a - one));
    s.add(one, (one - a) / (one - abc)).add(one, c * b * (one - a) / (one - abc));
    s.add(-one, a * b).add(-one, -(a * (one - b) * (one - c)) / ((one - a) * (one - abc)));
    return s;
  }

  FormalSum<K> phi(const R& a, const R& b, const R& c) const {
    auto s = sum(3, {"a", "b", "c"});
    R one = k(1);
    R abc = a * b * c;
    R c1 = (b - one) * (a - one) / (a * b - one);
    s.add(one, a);
    s.add(-c1, -(b * (a - one)) / (b - one)).add(-c1, -(a * (b - one)) / (a - one));
    s.add((c * c * b + c * b * b - k(3) * c * b + one) / (c * b - one), (a - one) / (abc - one));
    s.add(-((abc - a - b - c + k(2)) / (c * b - one)), c * b * (a - one) / (abc - one));
    s.add(-((a + b - k(2)) / (a * b - one)), a * b);
    s.add(-((a * a * b * c - k(2) * abc + b + c - one) * (a - one) / ((a * c - one) * (a * b - one))),
          -(a * (c - one) * (b - one)) / ((a - one) * (abc - one)));
    return s;
  }

  FormalSum<K> ks_classical_v1() const {
    auto s = sum(3, {"a", "b"});
    R a = v("a"), b = v("b"), one = k(1), two = k(2);
    s.add(one, a * (one - b) / (b * (one - a))).add(one, (one - a) * a / (b * (one - b))).add(one, a * b / ((one - b) * (one - a)));
    s.add(-two, (one - a) / (one - b)).add(-two, b / (b - one)).add(-two, a / (a - one));
    s.add(-two, b / a).add(-two, a / (one - b)).add(-two, (one - a) / b).add(two, one);
    return s;
  }

  FormalSum<K> ks_classical() const {
    auto s = sum(3, {"x", "y"});
    R x = v("x"), y = v("y"), one = k(1), two = k(2);
    s.add(one, x * (one - y).pow(2) / (y * (one - x).pow(2))).add(one, x * y).add(one, x / y);
    s.add(-two, y * (one - x) / (y - one)).add(-two, (one - x) / (one - y)).add(-two, y * (one - x) / (x * (one - y)));
    s.add(-two, (x - one) / (x * (one - y))).add(-two, x).add(-two, y).add(two, one);
    return s;
  }

  FormalSum<K> ks(const R& x, const R& y) const {
    auto s = sum(3, {"x", "y"});
    R one = k(1);
    s.add(one, x * y).add(y, x / y).add(-(one - y), y * (one - x) / (y - one));
    s.add(one - y, (one - x) / (one - y)).add(-(x * (one - y)), y * (one - x) / (x * (one - y)));
    s.add(x * (one - y), (x - one) / (x * (one - y))).add(-(one + y), x).add(-(one + x), y);
    return s;
  }

  FormalSum<K> ks_v1() const {
    auto s = sum(3, {"a", "b"});
    R a = v("a"), b = v("b"), one = k(1);
    R q = one - b - a;
    s.add((one - b) * b / q, (one - a) * a / (b * (one - b)));
    s.add((one - b) * (one - a) / q, a * b / ((one - b) * (one - a)));
    s.add(one - b, (one - a) / (one - b)).add(-(one - b), b / (b - one)).add(-(one - a), a / (a - one));
    s.add(-a, b / a);
    s.add((a - b - one) * (one - b) / q, a / (one - b));
    s.add(-((a - b + one) * b / q), (one - a) / b);
    return s;
  }

  FormalSum<K> build(const std::string& id, long long m) const {
    R one = k(1);
    if (id == "inversion") {
      auto s = sum(n, {"T"});
      R T = v("T");
      return s.add(one, T).add(T * k(n % 2 == 0 ? 1 : -1), one / T);
    }
    if (id == "distribution" || id == "duplication") {
      if (id == "duplication") m = 2;
      auto s = sum(n, {"T"});
      R T = v("T");
      R Tm = tpow(T, m);
      s.add(one, Tm);
      R scale = R::constant(ctx, -mpow(m, n - 2));
      for (const K& z : roots(m)) {
        R zr = R::constant(ctx, z);
        s.add(scale * (one - Tm) / (one - zr * T), zr * T);
      }
      return s;
    }
    if (id == "two_term") {
      auto s = sum(2, {"T"});
      R T = v("T");
      return s.add(one, T).add(-one, one - T);
    }
    if (id == "feit") return feit(v("a"), v("b"));
    if (id == "fundamental_info") {
      auto s = sum(2, {"x", "y"});
      R x = v("x"), y = v("y");
      return s.add(one - y, x / (one - y)).add(-one, x).add(-(one - x), y / (one - x)).add(one, y);
    }
    if (id == "feit_generalized") {
      auto s = sum(2, {"x", "y", "s"});
      R x = v("x"), y = v("y"), t = v("s");
      s.add(one - y, (x - t) / (one - y)).add(y, t / y).add(one, y);
      s.add(-(one - x), (y - t) / (one - x)).add(-x, t / x).add(-one, x);
      return s;
    }
    if (id == "five_term_v1") return five_term(1);
    if (id == "five_term_v2") return five_term(2);
    if (id == "five_term_cocycle") return five_term(0);
    if (id == "five_term_family") {
      auto s = sum(2, {"a", "b", "t"});
      R a = v("a"), b = v("b"), t = v("t");
      s.add(b + t, a).add(-(a + t), b).add((one + t) * a, b / a).add(t * (one - a), (one - b) / (one - a));
      s.add(b * (one - a), a * (one - b) / (b * (one - a)));
      return s;
    }
    if (id == "four_term_alt") {
      auto s = sum(2, {"a", "b"});
      R a = v("a"), b = v("b");
      s.add(b, a).add(-a, b).add(a, b / a).add(b * (one - a), a * (one - b) / (b * (one - a)));
      return s;
    }
    if (id == "kontsevich_B") {
      auto s = sum(2, {"x", "y"});
      R x = v("x"), y = v("y");
      return s.add(one, x + y).add(-one, y).add(-(one - y), x / (one - y)).add(-y, -x / y);
    }
    if (id == "three_term") {
      auto s = sum(3, {"x"});
      R x = v("x");
      return s.add(one, one - x).add(-one, x).add(x, one - one / x);
    }
    if (id == "kummer_spence") return ks(v("x"), v("y"));
    if (id == "kummer_spence_v1") return ks_v1();
    if (id == "cathelineau_J") return J(v("a"), v("b"), v("c"));
    if (id.rfind("cathelineau_J_c_", 0) == 0) {
      R a = v("a"), b = v("b");
      R c;
      if (id == "cathelineau_J_c_a") c = a;
      else if (id == "cathelineau_J_c_b") c = b;
      else if (id == "cathelineau_J_c_a_over_b") c = a / b;
      else c = (one - a) / (one - b);
      auto s = J(a, b, c);
      s.variables = {var_id("a"), var_id("b")};
      return s;
    }
    if (id == "cathelineau_bracket") return cathelineau_bracket<K>(v("a"), v("b"));
    if (id == "derived_goncharov") {
      R a = v("a"), b = v("b"), c = v("c");
      auto s = phi(a, b, c) + phi(b, c, a) + phi(c, a, b);
      // Sign of the [abc] term as produced by deriving the classical equation.
      s.add((a + b + c - k(3)) / (a * b * c - one), a * b * c);
      return s;
    }
    if (id == "inversion_classical") {
      auto s = sum(n, {"a"});
      R a = v("a");
      return s.add(one, one / a).add(k(n % 2 == 0 ? 1 : -1), a);
    }
    if (id == "distribution_classical") {
      auto s = sum(n, {"a"});
      R a = v("a");
      s.add(one, tpow(a, m));
      R scale = R::constant(ctx, -mpow(m, n - 1));
      for (const K& z : roots(m)) s.add(scale, R::constant(ctx, z) * a);
      return s;
    }
    if (id == "two_term_classical") {
      auto s = sum(2, {"x"});
      R x = v("x");
      return s.add(one, x).add(one, one - x);
    }
    if (id == "five_term_classical") {
      auto s = sum(2, {"a", "b"});
      R a = v("a"), b = v("b");
      s.add(one, a).add(-one, b).add(one, b / a).add(-one, (one - b) / (one - a));
      s.add(one, (one - one / b) / (one - one / a));
      return s;
    }
    if (id == "three_term_classical") {
      auto s = sum(3, {"x"});
      R x = v("x");
      return s.add(one, one - x).add(one, x).add(one, one - one / x).add(-one, one);
    }
    if (id == "kummer_spence_classical_v1") return ks_classical_v1();
    if (id == "kummer_spence_classical") return ks_classical();
    if (id == "goncharov_classical") {
      R a = v("a"), b = v("b"), c = v("c");
      auto s = goncharov_f(a, b, c) + goncharov_f(b, c, a) + goncharov_f(c, a, b);
      s.add(one, a * b * c).add(k(-3), one);
      return s;
    }
    throw Error(ErrorCode::UnknownId, "unknown equation id '" + id + "'");
  }
};

}  // namespace

template <class K>
FormalSum<K> cathelineau_bracket(const RatFunc<K>& a, const RatFunc<K>& b, int weight) {
  using R = RatFunc<K>;
  auto ctx = a.context();
  FormalSum<K> s(ctx, weight, {var_id("a"), var_id("b")});
  R one = R::constant(ctx, 1);
  // (b-a) tau(a,b)
  R w = b - a;
  s.add(w / (one - a), a).add(-(w / (one - b)), b);
  s.add(w * a / (a - b), b / a).add(-(w * (one - a) / (b - a)), (one - b) / (one - a));
  s.add(w * b * (one - a) / (b - a), a * (one - b) / (b * (one - a)));
  // sigma terms
  R ka = (one - b) / (one - a), kb = (one - a) / (one - b);
  s.add(ka * a, a).add(ka * (one - a), one - a);
  s.add(kb * b, b).add(kb * (one - b), one - b);
  return s;
}

template <class K>
FormalSum<K> build(const std::string& id, typename K::Context ctx, const BuildParams& params) {
  const CatalogInfo& info = catalog_info(id);
  const std::string& real = info.alias_of.empty() ? info.id : info.alias_of;
  int n = params.n != 0 ? params.n : info.weight;
  if (!info.takes_n && params.n != 0 && params.n != info.weight) {
    throw Error(ErrorCode::BadParams, id + " has fixed weight " + std::to_string(info.weight));
  }
  if (id == "kontsevich_C") n = 2;
  Builder<K> b{ctx, n};
  FormalSum<K> s = b.build(real, params.m);
  s.id = id;
  s.reference = info.reference;
  return s;
}

template FormalSum<Fq> build<Fq>(const std::string&, FieldPtr, const BuildParams&);
template FormalSum<Rational> build<Rational>(const std::string&, RationalField, const BuildParams&);
template FormalSum<Fq> cathelineau_bracket<Fq>(const RatFq&, const RatFq&, int);
template FormalSum<Rational> cathelineau_bracket<Rational>(const RatQ&, const RatQ&, int);

}  // namespace polyana
