#include "polyana/variables.hpp"

#include <mutex>
#include <vector>

#include "polyana/error.hpp"

namespace polyana {

namespace {

struct Registry {
  std::mutex mu;
  std::vector<std::string> names;

  Registry() {
    for (const char* n : {"T", "a", "b", "c", "x", "y", "s", "t", "z", "x1", "x2", "x3", "x4", "x5"}) {
      names.emplace_back(n);
    }
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

VarId var_id(std::string_view name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return static_cast<VarId>(i);
  }
  if (r.names.size() >= kMaxVars) {
    throw Error(ErrorCode::BudgetExceeded, "too many variables (limit " + std::to_string(kMaxVars) + ")");
  }
  r.names.emplace_back(name);
  return static_cast<VarId>(r.names.size() - 1);
}

std::optional<VarId> find_var(std::string_view name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == name) return static_cast<VarId>(i);
  }
  return std::nullopt;
}

const std::string& var_name(VarId id) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  if (id >= r.names.size()) throw Error(ErrorCode::IndexOutOfRange, "unknown variable id");
  return r.names[id];
}

std::size_t var_count() {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.size();
}

Monomial Monomial::var(VarId v, std::uint32_t exp) {
  if (exp > 0xffff) throw Error(ErrorCode::BudgetExceeded, "exponent overflow");
  Monomial m;
  m.e[v] = static_cast<std::uint16_t>(exp);
  m.deg = exp;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = std::uint32_t{e[i]} + o.e[i];
    if (s > 0xffff) throw Error(ErrorCode::BudgetExceeded, "exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::scaled(std::uint32_t k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t s = std::uint64_t{e[i]} * k;
    if (s > 0xffff) throw Error(ErrorCode::BudgetExceeded, "exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = deg * k;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] > o.e[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
  r.deg = deg - o.deg;
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint16_t x : e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += '*';
    s += var_name(static_cast<VarId>(i));
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace polyana
