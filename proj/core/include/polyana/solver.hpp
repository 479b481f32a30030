#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyana/formal_sum.hpp"

namespace polyana {

// Equation sum c_j [x_j] with the polylogarithm replaced by an unknown
// P = sum_{i<=degree} a_i T^i, read as sum c_j^p P(x_j) = 0. With
// index_weighted the unknown is h = T P' instead, i.e. a_i becomes i a_i.
struct UnknownTemplate {
  FormalSumFq base;
  std::uint32_t degree = 0;
  bool index_weighted = false;
  std::string label;
};

UnknownTemplate make_template(const FormalSumFq& base, std::uint32_t degree, bool index_weighted = false);

using Row = std::vector<std::uint32_t>;

// Dense rows over F_p; the columns are a_0..a_degree.
struct LinearSystem {
  std::uint32_t p = 0;
  std::uint32_t cols = 0;
  std::vector<Row> rows;
};

// Incremental row reduction with deterministic pivoting: each row is reduced
// against the current echelon rows and its lowest nonzero column becomes a pivot.
class Eliminator {
 public:
  Eliminator(std::uint32_t p, std::uint32_t cols);
  void add_row(Row row);
  std::uint32_t cols() const { return cols_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }
  std::uint64_t rows_seen() const { return seen_; }
  // Basis of the null space: one vector per free column, with that column set to 1.
  std::vector<Row> kernel() const;
  bool in_kernel(const Row& v) const;

 private:
  std::uint32_t p_;
  std::uint32_t cols_;
  std::vector<Row> rows_;  // fully reduced, pivot coefficient 1
  std::vector<std::uint32_t> pivots_;
  std::uint64_t seen_ = 0;
};

// Column i is the polynomial sum_j W_j N_j^i D_j^{d-i}, where x_j = N_j/D_j and
// W_j clears the common denominator of c_j^p / D_j^d.
std::vector<PolyFq> template_columns(const UnknownTemplate& t);

// Throws BudgetExceeded when the number of monomial rows exceeds `budget`.
LinearSystem linear_system(const UnknownTemplate& t, std::uint64_t budget = 10'000'000);
void feed(Eliminator& e, const UnknownTemplate& t, std::uint64_t budget = 10'000'000);

struct KernelReport {
  std::uint32_t p = 0;
  std::string preset;
  std::uint64_t rows = 0;
  std::uint32_t cols = 0;
  std::uint32_t rank = 0;
  std::uint32_t dim = 0;
  std::vector<Row> basis;
  long long compare_weight = 0;  // finite weight of the expected polylog
  bool polylog_in_span = false;
  bool basis_proportional = false;  // dim 1 and basis is a multiple of L
  bool a0_forced = false;           // every kernel vector has a_0 = 0
  bool self_check = false;          // basis substituted back vanishes
  // THREE_TERM only.
  std::vector<bool> tau_in_kernel;
  std::uint32_t tau_rank = 0;
};

// Reduced basis of the intersection of the kernels.
KernelReport kernel_basis(const std::vector<LinearSystem>& systems);

const std::vector<std::string>& preset_ids();
std::vector<UnknownTemplate> preset_templates(const std::string& preset, std::uint32_t p);
KernelReport characterize(const std::string& preset, std::uint32_t p, std::uint64_t budget = 10'000'000);
std::string report_json(const KernelReport& r);

// Sum c_j^p P(x_j) for a concrete coefficient vector, by substitution.
RatFq apply_template(const UnknownTemplate& t, const Row& coeffs);
PolyFq row_to_poly(const Row& coeffs, std::uint32_t p);

struct LemmaStep {
  std::uint32_t k = 0;
  std::string rule;
  Fq value;
};

struct LemmaRun {
  std::uint32_t p = 0;
  std::vector<Fq> a;  // a[k] for 1 <= k <= p-1; a[0] unused
  std::vector<LemmaStep> steps;
  bool matches = false;  // a_k = a_1 / k for all k
};

// Runs the descending schedule of the L_1 characterization lemma: the reflection
// rule a_{p-k} = -a_k, the odd rule a_k = -1/2 sum_{i>k} a_i C(i,k), and the even
// rule a_k = a_{k/2}/2.
LemmaRun l1_lemma_sequence(std::uint32_t p, const Fq& a1);

}  // namespace polyana
