#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyana/ratfunc.hpp"

namespace polyana {

inline constexpr int kDefaultDepth = 12;

// Exponent vector over the generators: slot 0 is L (log z), slot k is P_k (Li_k).
using DiffMonomial = std::vector<std::uint16_t>;

// Polynomial in the formal generators L, P_1..P_N with coefficients in Q(z).
// Generators are algebraically independent. Zero coefficients are never stored.
class DiffRingElement {
 public:
  explicit DiffRingElement(int depth = kDefaultDepth);

  static DiffRingElement constant(const RatQ& c, int depth = kDefaultDepth);
  static DiffRingElement log_gen(int depth = kDefaultDepth);
  static DiffRingElement li_gen(int k, int depth = kDefaultDepth);

  int depth() const { return depth_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<DiffMonomial, RatQ>& terms() const { return terms_; }
  // Coefficient of L^l * prod P_k^e_k; zero when absent.
  RatQ coefficient(const DiffMonomial& m) const;

  void add_term(const DiffMonomial& m, const RatQ& c);

  DiffRingElement operator+(const DiffRingElement& o) const;
  DiffRingElement operator-(const DiffRingElement& o) const;
  DiffRingElement operator-() const;
  DiffRingElement operator*(const DiffRingElement& o) const;
  DiffRingElement scaled(const RatQ& c) const;
  DiffRingElement scaled(const Rational& c) const;

  bool equals(const DiffRingElement& o) const { return (*this - o).is_zero(); }
  friend bool operator==(const DiffRingElement& a, const DiffRingElement& b) { return a.equals(b); }

  std::string to_string() const;

 private:
  void check_same_depth(const DiffRingElement& o) const;

  int depth_;
  std::map<DiffMonomial, RatQ> terms_;
};

// The coordinate z of Q(z).
RatQ z_coordinate();

DiffRingElement d_dz(const DiffRingElement& e);
// D = z(1-z) d/dz.
DiffRingElement big_D(const DiffRingElement& e);

// a_{k,n} = (-1)^k (k - n) / k!, k = 0..n-1.
std::vector<Rational> besser_coefficients(int n);

// Sum_{k<n} a_k/(n-k)! == 0.
bool clean_check(const std::vector<Rational>& coeffs, int n);

// F_n = sum_k a_k L^k P_{n-k}. Throws DepthExceeded if n > depth.
DiffRingElement build_Fn(const std::vector<Rational>& coeffs, int n, int depth = kDefaultDepth);

// (n-1) D F_n == (1-z) F_{n-1} - L D F_{n-1} with Besser coefficients.
bool verify_recursion(int n, int depth = kDefaultDepth);
// Same check for arbitrary coefficient vectors at levels n and n-1.
bool verify_recursion(const std::vector<Rational>& an, const std::vector<Rational>& an1, int n,
                      int depth = kDefaultDepth);
// D P_n == lambda (1-z) P_{n-1} + mu L D P_{n-1}.
bool verify_linkage(const std::vector<Rational>& an, const std::vector<Rational>& an1, int n,
                    const Rational& lambda, const Rational& mu, int depth = kDefaultDepth);
// Phi_n = (n-1)! F_n: D Phi_n == D(L) Phi_{n-1} - L D Phi_{n-1}.
bool verify_phi_recursion(int n, int depth = kDefaultDepth);

struct FamilyLevel {
  int n = 0;
  std::vector<Rational> coeffs;
  // Linkage to level n-1; absent at n = 2.
  std::optional<Rational> lambda;
  std::optional<Rational> mu;
  // Linear constraint on (lambda_n, mu_n) forced by cleanness, as text.
  std::string constraint;
  bool clean = false;
  bool linked = false;
};

struct CleanFamily {
  std::vector<FamilyLevel> levels;  // levels[i].n == i + 2
};

// Inductive family normalised by a_{0,n} = -n. lambda_n is taken from `lambdas`
// (default 1/(n-1)); mu_n is then forced. Throws SingularChoice when the
// constraint does not determine a nonzero mu_n.
CleanFamily construct_family(int n_max, const std::map<int, Rational>& lambdas,
                             int depth = kDefaultDepth);

}  // namespace polyana
