#include "polyana/padic_sym.hpp"

#include <sstream>

namespace polyana {

namespace {

RatQ rq(long long c) { return RatQ::constant({}, c); }
RatQ rq(const Rational& c) { return RatQ::constant({}, c); }

VarId z_var() {
  static const VarId id = var_id("z");
  return id;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

void check_depth(int n, int depth) {
  if (n > depth)
    throw Error(ErrorCode::DepthExceeded,
                "level " + std::to_string(n) + " exceeds depth " + std::to_string(depth));
}

}  // namespace

DiffRingElement::DiffRingElement(int depth) : depth_(depth) {
  if (depth < 1) throw Error(ErrorCode::BadParams, "depth must be at least 1");
}

DiffRingElement DiffRingElement::constant(const RatQ& c, int depth) {
  DiffRingElement e(depth);
  e.add_term(DiffMonomial(depth + 1, 0), c);
  return e;
}

DiffRingElement DiffRingElement::log_gen(int depth) {
  DiffRingElement e(depth);
  DiffMonomial m(depth + 1, 0);
  m[0] = 1;
  e.add_term(m, rq(1));
  return e;
}

DiffRingElement DiffRingElement::li_gen(int k, int depth) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "P_k needs k >= 1");
  check_depth(k, depth);
  DiffRingElement e(depth);
  DiffMonomial m(depth + 1, 0);
  m[static_cast<std::size_t>(k)] = 1;
  e.add_term(m, rq(1));
  return e;
}

RatQ DiffRingElement::coefficient(const DiffMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? rq(0) : it->second;
}

void DiffRingElement::add_term(const DiffMonomial& m, const RatQ& c) {
  if (m.size() != static_cast<std::size_t>(depth_) + 1)
    throw Error(ErrorCode::DomainMismatch, "monomial length does not match depth");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffRingElement::check_same_depth(const DiffRingElement& o) const {
  if (depth_ != o.depth_) throw Error(ErrorCode::DomainMismatch, "differential ring depths differ");
}

DiffRingElement DiffRingElement::operator+(const DiffRingElement& o) const {
  check_same_depth(o);
  DiffRingElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

DiffRingElement DiffRingElement::operator-() const {
  DiffRingElement r(depth_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

DiffRingElement DiffRingElement::operator-(const DiffRingElement& o) const { return *this + (-o); }

DiffRingElement DiffRingElement::operator*(const DiffRingElement& o) const {
  check_same_depth(o);
  DiffRingElement r(depth_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      DiffMonomial m(m1.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m1[i] + m2[i]);
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

DiffRingElement DiffRingElement::scaled(const RatQ& c) const {
  DiffRingElement r(depth_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

DiffRingElement DiffRingElement::scaled(const Rational& c) const { return scaled(rq(c)); }

std::string DiffRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (m[0] > 0) os << "*L" << (m[0] > 1 ? "^" + std::to_string(m[0]) : "");
    for (std::size_t k = 1; k < m.size(); ++k)
      if (m[k] > 0) os << "*P" << k << (m[k] > 1 ? "^" + std::to_string(m[k]) : "");
  }
  return os.str();
}

RatQ z_coordinate() { return RatQ::variable({}, z_var()); }

DiffRingElement d_dz(const DiffRingElement& e) {
  const int depth = e.depth();
  const RatQ z = z_coordinate();
  const RatQ inv_z = z.inverse();
  const RatQ inv_1mz = (rq(1) - z).inverse();
  DiffRingElement r(depth);
  for (const auto& [m, c] : e.terms()) {
    r.add_term(m, c.derivative(z_var()));
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (m[g] == 0) continue;
      DiffMonomial mm = m;
      --mm[g];
      RatQ factor = c * rq(static_cast<long long>(m[g]));
      if (g == 0) {
        r.add_term(mm, factor * inv_z);
      } else if (g == 1) {
        r.add_term(mm, factor * inv_1mz);
      } else {
        ++mm[g - 1];
        r.add_term(mm, factor * inv_z);
      }
    }
  }
  return r;
}

DiffRingElement big_D(const DiffRingElement& e) {
  const RatQ z = z_coordinate();
  return d_dz(e).scaled(z * (rq(1) - z));
}

std::vector<Rational> besser_coefficients(int n) {
  if (n < 2) throw Error(ErrorCode::BadParams, "besser_coefficients needs n >= 2");
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Rational v = Rational(k - n) / factorial(k);
    a.push_back(k % 2 == 0 ? v : -v);
  }
  return a;
}

bool clean_check(const std::vector<Rational>& coeffs, int n) {
  if (static_cast<int>(coeffs.size()) != n)
    throw Error(ErrorCode::BadParams, "clean_check needs exactly n coefficients");
  Rational s(0);
  for (int k = 0; k < n; ++k) s += coeffs[static_cast<std::size_t>(k)] / factorial(n - k);
  return s.is_zero();
}

DiffRingElement build_Fn(const std::vector<Rational>& coeffs, int n, int depth) {
  if (n < 1) throw Error(ErrorCode::BadParams, "build_Fn needs n >= 1");
  check_depth(n, depth);
  if (static_cast<int>(coeffs.size()) != n)
    throw Error(ErrorCode::BadParams, "build_Fn needs exactly n coefficients");
  DiffRingElement f(depth);
  for (int k = 0; k < n; ++k) {
    DiffMonomial m(static_cast<std::size_t>(depth) + 1, 0);
    m[0] = static_cast<std::uint16_t>(k);
    m[static_cast<std::size_t>(n - k)] = 1;
    f.add_term(m, rq(coeffs[static_cast<std::size_t>(k)]));
  }
  return f;
}

bool verify_linkage(const std::vector<Rational>& an, const std::vector<Rational>& an1, int n,
                    const Rational& lambda, const Rational& mu, int depth) {
  if (n < 3) throw Error(ErrorCode::BadParams, "the recursion starts at n = 3");
  const DiffRingElement fn = build_Fn(an, n, depth);
  const DiffRingElement fn1 = build_Fn(an1, n - 1, depth);
  const DiffRingElement L = DiffRingElement::log_gen(depth);
  const RatQ one_minus_z = rq(1) - z_coordinate();
  const DiffRingElement lhs = big_D(fn);
  const DiffRingElement rhs = fn1.scaled(one_minus_z * rq(lambda)) + (L * big_D(fn1)).scaled(mu);
  return lhs == rhs;
}

bool verify_recursion(const std::vector<Rational>& an, const std::vector<Rational>& an1, int n,
                      int depth) {
  // (n-1) D F_n = (1-z) F_{n-1} - L D F_{n-1}, i.e. lambda = -mu = 1/(n-1).
  const Rational l = Rational(1) / Rational(n - 1);
  return verify_linkage(an, an1, n, l, -l, depth);
}

bool verify_recursion(int n, int depth) {
  if (n < 3) throw Error(ErrorCode::BadParams, "the recursion starts at n = 3");
  check_depth(n, depth);
  return verify_recursion(besser_coefficients(n), besser_coefficients(n - 1), n, depth);
}

bool verify_phi_recursion(int n, int depth) {
  if (n < 3) throw Error(ErrorCode::BadParams, "the recursion starts at n = 3");
  check_depth(n, depth);
  const DiffRingElement phi_n = build_Fn(besser_coefficients(n), n, depth).scaled(factorial(n - 1));
  const DiffRingElement phi_n1 =
      build_Fn(besser_coefficients(n - 1), n - 1, depth).scaled(factorial(n - 2));
  const DiffRingElement L = DiffRingElement::log_gen(depth);
  const DiffRingElement rhs = big_D(L) * phi_n1 - L * big_D(phi_n1);
  return big_D(phi_n) == rhs;
}

namespace {

// Coefficients of level n as affine functions of (lambda, mu): value = c + l*lambda + m*mu.
struct Affine {
  Rational c, l, m;
};

std::string constraint_text(int n, const Rational& alpha, const Rational& beta,
                            const Rational& gamma) {
  // alpha + beta*lambda + gamma*mu = 0
  const std::string ln = "lambda" + std::to_string(n);
  const std::string mn = "mu" + std::to_string(n);
  std::ostringstream os;
  if (beta.is_zero()) {
    if (gamma.is_zero()) return alpha.is_zero() ? "none" : "inconsistent";
    os << mn << " = " << (-alpha / gamma).to_string();
    return os.str();
  }
  const Rational g = gamma / beta;
  os << ln;
  if (!g.is_zero()) {
    if (g == Rational(1)) os << " + " << mn;
    else if (g == Rational(-1)) os << " - " << mn;
    else if (g > Rational(0)) os << " + " << g.to_string() << "*" << mn;
    else os << " - " << (-g).to_string() << "*" << mn;
  }
  os << " = " << (-alpha / beta).to_string();
  return os.str();
}

}  // namespace

CleanFamily construct_family(int n_max, const std::map<int, Rational>& lambdas, int depth) {
  if (n_max < 2) throw Error(ErrorCode::BadParams, "construct_family needs n_max >= 2");
  check_depth(n_max, depth);
  for (const auto& [n, v] : lambdas)
    if (n < 3 || n > n_max)
      throw Error(ErrorCode::BadParams, "lambda" + std::to_string(n) + " is outside 3.." +
                                            std::to_string(n_max));

  CleanFamily fam;
  FamilyLevel base;
  base.n = 2;
  base.coeffs = {Rational(-2), Rational(1)};
  base.constraint = "none";
  base.clean = clean_check(base.coeffs, 2);
  base.linked = true;
  fam.levels.push_back(base);

  for (int n = 3; n <= n_max; ++n) {
    const std::vector<Rational>& prev = fam.levels.back().coeffs;
    // Matching D P_n against lambda (1-z) P_{n-1} + mu L D P_{n-1} term by term on
    // (1-z) L^j P_{n-1-j} gives (j+1) a_{j+1} + a_j = b_j with
    // b_j = lambda a'_j + mu (j a'_j + a'_{j-1}).
    std::vector<Affine> a(static_cast<std::size_t>(n));
    a[0] = {Rational(-n), Rational(0), Rational(0)};
    for (int j = 0; j + 1 < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      Rational bl = prev[ju];
      Rational bm = Rational(j) * prev[ju];
      if (j > 0) bm += prev[ju - 1];
      const Rational den(j + 1);
      a[ju + 1] = {-a[ju].c / den, (bl - a[ju].l) / den, (bm - a[ju].m) / den};
    }
    Rational alpha(0), beta(0), gamma(0);
    for (int k = 0; k < n; ++k) {
      const Rational f = factorial(n - k);
      const auto ku = static_cast<std::size_t>(k);
      alpha += a[ku].c / f;
      beta += a[ku].l / f;
      gamma += a[ku].m / f;
    }

    FamilyLevel lvl;
    lvl.n = n;
    lvl.constraint = constraint_text(n, alpha, beta, gamma);
    auto it = lambdas.find(n);
    const Rational lambda = it != lambdas.end() ? it->second : Rational(1) / Rational(n - 1);
    if (lambda.is_zero())
      throw Error(ErrorCode::SingularChoice, "lambda" + std::to_string(n) + " must be nonzero");
    if (gamma.is_zero())
      throw Error(ErrorCode::SingularChoice, "level " + std::to_string(n) +
                                                 ": cleanness does not determine mu (" +
                                                 lvl.constraint + ")");
    const Rational mu = -(alpha + beta * lambda) / gamma;
    if (mu.is_zero())
      throw Error(ErrorCode::SingularChoice,
                  "level " + std::to_string(n) + ": forced mu" + std::to_string(n) + " = 0");
    lvl.lambda = lambda;
    lvl.mu = mu;
    for (const Affine& x : a) lvl.coeffs.push_back(x.c + x.l * lambda + x.m * mu);
    // Reverse check against the defining conditions rather than the construction.
    lvl.clean = clean_check(lvl.coeffs, n);
    lvl.linked = verify_linkage(lvl.coeffs, prev, n, lambda, mu, depth);
    if (!lvl.clean || !lvl.linked)
      throw Error(ErrorCode::SingularChoice,
                  "level " + std::to_string(n) + " fails its reverse check");
    fam.levels.push_back(std::move(lvl));
  }
  return fam;
}

}  // namespace polyana
