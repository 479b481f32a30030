#include "polyana/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace polyana {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, acc = 1 % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(p));
  while (nr) {
    std::int64_t qq = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
  }
  if (r != 1) throw Error(ErrorCode::ZeroInverse, std::to_string(a) + " is not invertible mod " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of a by the monic polynomial m over F_p; both low degree first.
Coeffs poly_rem(Coeffs a, const Coeffs& m, std::uint32_t p) {
  std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead) {
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool divides(const Coeffs& d, const Coeffs& f, std::uint32_t p) {
  for (std::uint32_t c : poly_rem(f, d, p)) {
    if (c) return false;
  }
  return true;
}

// Monic polynomial of degree deg whose lower coefficients spell idx in base p.
Coeffs monic_from_index(std::uint64_t idx, std::uint32_t deg, std::uint32_t p) {
  Coeffs c(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    c[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  c[deg] = 1;
  return c;
}

bool irreducible(const Coeffs& f, std::uint32_t p) {
  std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (divides(monic_from_index(idx, d, p), f, p)) return false;
    }
  }
  return true;
}

Coeffs unpack(std::uint64_t v, std::uint32_t e, std::uint32_t p) {
  Coeffs c(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return c;
}

std::uint32_t pack(const Coeffs& c, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return static_cast<std::uint32_t>(v);
}

Coeffs slow_mul(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  Coeffs r = poly_rem(prod, m, p);
  r.resize(m.size() - 1, 0);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void build_tables(FieldDescriptor& f) {
  const std::uint64_t order = f.q - 1;
  auto factors = prime_factors(order);
  auto slow_pow = [&](Coeffs base, std::uint64_t e) {
    Coeffs acc(f.e, 0);
    acc[0] = 1;
    while (e) {
      if (e & 1) acc = slow_mul(acc, base, f.modulus, f.p);
      base = slow_mul(base, base, f.modulus, f.p);
      e >>= 1;
    }
    return acc;
  };
  Coeffs one(f.e, 0);
  one[0] = 1;
  for (std::uint64_t cand = 2; cand < f.q; ++cand) {
    Coeffs g = unpack(cand, f.e, f.p);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (slow_pow(g, order / r) == one) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    f.log_of.assign(f.q, 0);
    f.exp_of.assign(order, 0);
    Coeffs cur = one;
    for (std::uint64_t k = 0; k < order; ++k) {
      std::uint32_t packed = pack(cur, f.p);
      f.exp_of[k] = packed;
      f.log_of[packed] = static_cast<std::uint32_t>(k);
      cur = slow_mul(cur, g, f.modulus, f.p);
    }
    return;
  }
  throw Error(ErrorCode::SizeExceeded, "no primitive element found for " + f.name());
}

}  // namespace

std::string FieldDescriptor::name() const {
  return e == 1 ? "F_" + std::to_string(p) : "F_" + std::to_string(p) + "^" + std::to_string(e);
}

FieldPtr build_extension(std::uint32_t p, std::uint32_t e) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldDescriptor>> registry;

  if (p == 2) throw Error(ErrorCode::NotPrime, "characteristic must be an odd prime, got 2");
  if (p > kMaxPrime || !is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
  if (e == 0) throw Error(ErrorCode::BadParams, "extension degree must be at least 1");

  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  if (auto it = registry.find(key); it != registry.end()) return it->second.get();

  auto f = std::make_unique<FieldDescriptor>();
  f->p = p;
  f->e = e;
  std::uint64_t q = 1;
  f->pow_p.push_back(1);
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (e > 1 && q > kMaxExtensionSize) {
      throw Error(ErrorCode::SizeExceeded, "F_" + std::to_string(p) + "^" + std::to_string(e) + " exceeds the size bound");
    }
    f->pow_p.push_back(static_cast<std::uint32_t>(q));
  }
  f->q = q;
  if (e == 1) {
    f->modulus = {0, 1};
  } else {
    std::uint64_t count = q;  // p^e candidates for the lower coefficients
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs cand = monic_from_index(idx, e, p);
      if (cand[0] != 0 && irreducible(cand, p)) {
        f->modulus = std::move(cand);
        break;
      }
    }
    build_tables(*f);
  }
  FieldPtr out = f.get();
  registry.emplace(key, std::move(f));
  return out;
}

Fq Fq::from_int(Context f, long long n) {
  long long r = n % static_cast<long long>(f->p);
  if (r < 0) r += f->p;
  return Fq(f, static_cast<std::uint32_t>(r));
}

Fq Fq::from_coords(Context f, const std::vector<std::uint32_t>& coords) {
  if (coords.size() != f->e) throw Error(ErrorCode::BadParams, "coordinate vector has wrong length for " + f->name());
  for (std::uint32_t c : coords) {
    if (c >= f->p) throw Error(ErrorCode::BadParams, "coordinate out of range for " + f->name());
  }
  return Fq(f, pack(coords, f->p));
}

std::vector<std::uint32_t> Fq::coords() const { return unpack(v_, f_->e, f_->p); }

void Fq::check_same(const Fq& o) const {
  if (f_ != o.f_) throw Error(ErrorCode::DomainMismatch, "field elements from different fields");
}

Fq& Fq::operator+=(const Fq& o) {
  check_same(o);
  const std::uint32_t p = f_->p;
  if (f_->e == 1) {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p ? s - p : s);
    return *this;
  }
  std::uint32_t a = v_, b = o.v_, out = 0;
  for (std::uint32_t i = 0; i < f_->e; ++i) {
    std::uint32_t d = a % p + b % p;
    if (d >= p) d -= p;
    out += d * f_->pow_p[i];
    a /= p;
    b /= p;
  }
  v_ = out;
  return *this;
}

Fq Fq::operator-() const {
  const std::uint32_t p = f_->p;
  if (f_->e == 1) return Fq(f_, v_ ? p - v_ : 0);
  std::uint32_t a = v_, out = 0;
  for (std::uint32_t i = 0; i < f_->e; ++i) {
    std::uint32_t d = a % p;
    out += (d ? p - d : 0) * f_->pow_p[i];
    a /= p;
  }
  return Fq(f_, out);
}

Fq& Fq::operator-=(const Fq& o) {
  check_same(o);
  return *this += -o;
}

Fq& Fq::operator*=(const Fq& o) {
  check_same(o);
  if (f_->e == 1) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % f_->p);
    return *this;
  }
  if (v_ == 0 || o.v_ == 0) {
    v_ = 0;
    return *this;
  }
  std::uint64_t k = std::uint64_t{f_->log_of[v_]} + f_->log_of[o.v_];
  v_ = f_->exp_of[k % (f_->q - 1)];
  return *this;
}

Fq Fq::inverse() const {
  if (v_ == 0) throw Error(ErrorCode::ZeroInverse, "inverse of 0 in " + f_->name());
  if (f_->e == 1) return Fq(f_, inverse_mod(v_, f_->p));
  std::uint64_t order = f_->q - 1;
  return Fq(f_, f_->exp_of[(order - f_->log_of[v_]) % order]);
}

Fq Fq::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  if (v_ == 0) return e == 0 ? one(f_) : zero(f_);
  std::uint64_t order = f_->q - 1;
  if (f_->e == 1) return Fq(f_, pow_mod(v_, static_cast<std::uint64_t>(e) % order, f_->p));
  std::uint64_t k = (std::uint64_t{f_->log_of[v_]} * (static_cast<std::uint64_t>(e) % order)) % order;
  return Fq(f_, f_->exp_of[k]);
}

Fq Fq::frobenius() const { return f_->e == 1 ? *this : pow(f_->p); }

Fq Fq::embed(FieldPtr target) const {
  if (target == f_) return *this;
  if (target->p != f_->p || !in_prime_field()) {
    throw Error(ErrorCode::DomainMismatch, "cannot embed element of " + f_->name() + " into " + target->name());
  }
  return Fq(target, v_);
}

std::string Fq::to_string() const {
  if (f_->e == 1) return std::to_string(v_);
  auto c = coords();
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

Fq fq_inverse(const Fq& a) { return a.inverse(); }

}  // namespace polyana
