#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polyana/error.hpp"

namespace polyana {

// Largest cardinality accepted for a proper extension (e > 1); elements of those
// fields are multiplied through log tables.
inline constexpr std::uint64_t kMaxExtensionSize = std::uint64_t{1} << 20;
// Largest prime accepted for a prime field.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

// Describes F_q with q = p^e. Instances are interned and live for the whole
// process, so elements refer to them by raw pointer.
struct FieldDescriptor {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::uint64_t q = 0;
  // Monic modulus, low degree first; length e + 1. For e = 1 it is x.
  std::vector<std::uint32_t> modulus;

  // Only filled when e > 1: packed index <-> discrete log with respect to a
  // fixed primitive element. log_of[0] is unused.
  std::vector<std::uint32_t> log_of;
  std::vector<std::uint32_t> exp_of;
  std::vector<std::uint32_t> pow_p;  // p^i for i <= e

  bool is_prime_field() const { return e == 1; }
  std::string name() const;
};

using FieldPtr = const FieldDescriptor*;

// Returns the interned descriptor of F_{p^e} with the lexicographically smallest
// monic irreducible modulus. Throws NotPrime or SizeExceeded.
FieldPtr build_extension(std::uint32_t p, std::uint32_t e);
inline FieldPtr prime_field(std::uint32_t p) { return build_extension(p, 1); }

// Element of a finite field. For extensions the value packs the coordinates in
// base p, coordinate 0 least significant.
class Fq {
 public:
  using Context = FieldPtr;

  Fq() = default;
  Fq(FieldPtr f, std::uint32_t packed) : f_(f), v_(packed) {}

  static Fq zero(Context f) { return Fq(f, 0); }
  static Fq one(Context f) { return Fq(f, 1); }
  static Fq from_int(Context f, long long n);
  static Fq from_coords(Context f, const std::vector<std::uint32_t>& coords);
  // Element number i in the fixed enumeration 0..q-1 (the packed order).
  static Fq from_index(Context f, std::uint64_t i) { return Fq(f, static_cast<std::uint32_t>(i)); }

  Context context() const { return f_; }
  FieldPtr field() const { return f_; }
  std::uint32_t value() const { return v_; }
  std::vector<std::uint32_t> coords() const;

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  // True when the element lies in the prime subfield.
  bool in_prime_field() const { return v_ < f_->p; }

  Fq inverse() const;
  Fq pow(long long e) const;
  Fq frobenius() const;  // a -> a^p

  Fq& operator+=(const Fq& o);
  Fq& operator-=(const Fq& o);
  Fq& operator*=(const Fq& o);
  Fq& operator/=(const Fq& o) { return *this *= o.inverse(); }

  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator/(Fq a, const Fq& b) { return a /= b; }
  Fq operator-() const;

  friend bool operator==(const Fq& a, const Fq& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator<(const Fq& a, const Fq& b) { return a.v_ < b.v_; }

  // Reinterprets a prime-field element inside the extension `target` of the same characteristic.
  Fq embed(FieldPtr target) const;

  std::string to_string() const;

 private:
  void check_same(const Fq& o) const;

  FieldPtr f_ = nullptr;
  std::uint32_t v_ = 0;
};

Fq fq_inverse(const Fq& a);

}  // namespace polyana

template <>
struct std::hash<polyana::Fq> {
  std::size_t operator()(const polyana::Fq& a) const noexcept { return a.value(); }
};
