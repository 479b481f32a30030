#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace polyana {

using VarId = std::uint8_t;
inline constexpr std::size_t kMaxVars = 24;

// Process-wide variable registry. The registration order fixes the graded-lex
// tie-break: earlier variables are larger. Common names are pre-registered so
// output does not depend on which module touched a variable first.
VarId var_id(std::string_view name);
std::optional<VarId> find_var(std::string_view name);
const std::string& var_name(VarId id);
std::size_t var_count();

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial var(VarId v, std::uint32_t exp = 1);

  bool is_one() const { return deg == 0; }
  std::uint32_t operator[](VarId v) const { return e[v]; }

  Monomial operator*(const Monomial& o) const;
  // Componentwise exponent scaling (used by Frobenius).
  Monomial scaled(std::uint32_t k) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.e == b.e; }
  // Graded lexicographic order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg <=> b.deg;
    return a.e <=> b.e;
  }

  std::size_t hash() const;
  std::string to_string() const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace polyana
