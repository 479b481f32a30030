#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyana/field.hpp"
#include "polyana/rational.hpp"

namespace polyana {

// H_p(x) = sum_{k=1}^{p-1} x^k/k, i.e. the finite 1-logarithm.
Fq entropy_H(const Fq& x);
std::uint32_t entropy_H(std::uint32_t x, std::uint32_t p);

// phi(x, y) = (x+y) H(x/(x+y)), and 0 when x + y = 0.
std::uint32_t phi(std::uint32_t x, std::uint32_t y, std::uint32_t p);

// A function F_p x F_p -> F_p stored as a table; row-major in x.
class Cocycle {
 public:
  Cocycle(std::uint32_t p, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& f);
  static Cocycle standard(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t operator()(std::uint32_t x, std::uint32_t y) const { return table_[x * p_ + y]; }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> table_;
};

struct CocycleVerdict {
  bool holds = false;
  std::string check;  // which identity
  std::uint64_t checked = 0;
  std::optional<std::vector<std::uint32_t>> witness;
  bool sampled = false;
};

// Cocycle identity over all of F_p^3. Throws BudgetExceeded when p^3 > budget.
CocycleVerdict check_cocycle(const Cocycle& c, std::uint64_t budget = 10'000'000);
CocycleVerdict check_symmetry(const Cocycle& c);
// phi(l x, l y) = l phi(x, y) for l != 0.
CocycleVerdict check_homogeneity(const Cocycle& c);
// H(x+y) = H(y) + (1-y) H(x/(1-y)) + y H(-x/y) for y not in {0, 1}.
CocycleVerdict check_four_term(std::uint32_t p);
// x H(1/x) = -H(x) for x != 0.
CocycleVerdict check_inversion(std::uint32_t p);

// Row r of the coboundary system is the pair (x, y) = (r / p, r % p):
// psi(x) + psi(y) - psi(x+y) = phi(x, y).
struct CoboundaryResult {
  std::uint32_t p = 0;
  bool consistent = false;
  std::vector<std::uint32_t> psi;  // a solution when consistent
  // Rows and multipliers whose combination has zero left side and nonzero right side.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> certificate;
  std::uint32_t certificate_value = 0;  // the resulting right side
  std::uint64_t rows = 0;
  std::uint32_t rank = 0;
};

CoboundaryResult coboundary_solve(const Cocycle& c);
// Recomputes the combination from scratch.
bool certificate_valid(const Cocycle& c, const CoboundaryResult& r);

// Extension of Aff(1, F_p) by F_p: (u, b, a) with a != 0.
struct GroupGElement {
  std::uint32_t u = 0, b = 0, a = 1;
  friend bool operator==(const GroupGElement&, const GroupGElement&) = default;
};

GroupGElement group_mul(const Cocycle& c, const GroupGElement& g1, const GroupGElement& g2);
GroupGElement group_identity();
GroupGElement group_inverse(const Cocycle& c, const GroupGElement& g);

struct GroupCheckOptions {
  std::uint32_t exhaustive_max_p = 7;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
};

// Identity, inverses and associativity; associativity is exhaustive up to
// exhaustive_max_p and sampled above.
CocycleVerdict group_check(const Cocycle& c, const GroupCheckOptions& opt = {});

struct EntropyOptions {
  std::uint64_t max_orderings = 40'320;
};

struct EntropyResult {
  std::uint32_t value = 0;
  std::vector<std::size_t> ordering;  // indices into the nonzero probabilities
  std::uint64_t orderings_tried = 0;
};

// Validates: every denominator is a p-unit and the sum is exactly 1.
void check_distribution(const std::vector<Rational>& probs, std::uint32_t p);

// Entropy of one fixed ordering; nullopt if some split divides by 0 mod p.
std::optional<std::uint32_t> entropy_in_order(const std::vector<Rational>& probs,
                                              const std::vector<std::size_t>& order,
                                              std::uint32_t p);

// Tries the given order, then lexicographic permutations. Zero probabilities
// are dropped first. Throws NoAdmissibleOrdering or BudgetExceeded.
EntropyResult entropy_mod_p(const std::vector<Rational>& probs, std::uint32_t p,
                            const EntropyOptions& opt = {});

struct MainIdentityResult {
  bool holds = false;
  std::uint32_t lhs = 0;       // H(refinement)
  std::uint32_t coarse = 0;    // H(coarse)
  std::uint32_t relative = 0;  // sum p_i H(p_{i,*}/p_i)
};

// refinement[i] lists the probabilities that sum to coarse[i].
MainIdentityResult main_identity_check(const std::vector<Rational>& coarse,
                                       const std::vector<std::vector<Rational>>& refinement,
                                       std::uint32_t p, const EntropyOptions& opt = {});

}  // namespace polyana
