#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyana/formal_sum.hpp"

namespace polyana {

enum class EntryKind {
  Finite,     // infinitesimal equation, verified through L-hat
  Classical,  // classical equation, input to the derivation map
  Block       // building block, not an equation by itself
};

struct CatalogInfo {
  std::string id;
  int weight = 2;  // infinitesimal (or classical) weight n at default params
  EntryKind kind = EntryKind::Finite;
  std::vector<std::string> variables;
  std::string reference;
  std::string anchor;
  bool takes_n = false;  // weight is a parameter
  bool takes_m = false;  // distribution order is a parameter
  std::string alias_of;  // non-empty for alias ids
};

struct BuildParams {
  int n = 0;        // 0 selects the entry default
  long long m = 2;  // distribution order
};

const std::vector<CatalogInfo>& catalog();
// Resolves aliases; throws UnknownId.
const CatalogInfo& catalog_info(const std::string& id);
std::string catalog_json();

// Throws UnknownId or BadParams.
template <class K>
FormalSum<K> build(const std::string& id, typename K::Context ctx, const BuildParams& params = {});

// Cathelineau's seven-term bracket [[A, B]] for arbitrary rational arguments.
template <class K>
FormalSum<K> cathelineau_bracket(const RatFunc<K>& a, const RatFunc<K>& b, int weight = 3);

// Elements of F_q of order dividing m, or BadParams when F_q has no primitive
// m-th root of unity. For Q only m in {1, 2} is available.
std::vector<Fq> roots_of_unity(FieldPtr f, long long m);

struct Verdict {
  bool holds = false;
  std::optional<RatFq> residual;         // strong mode
  std::optional<std::vector<Fq>> counterexample;  // weak mode, indexed by VarId
  Fq counter_value;
  std::uint64_t points_checked = 0;
  std::uint64_t points_skipped = 0;  // inadmissible points met
  std::uint64_t space_size = 0;
  bool sampled = false;
};

Verdict verify_strong(const FormalSumFq& s, long long m);

struct WeakOptions {
  std::uint64_t budget = 10'000'000;  // exhaustive limit on q^r
  std::uint64_t samples = 200'000;    // sampled points when over budget
  bool allow_sampling = true;
  std::uint64_t seed = 1;
};

// Checks L-hat_m at every admissible point of F_q^r, with `field` an extension
// of (or equal to) the coefficient field of the sum. Throws BudgetExceeded when over budget and sampling is off.
Verdict verify_weak(const FormalSumFq& s, long long m, FieldPtr field, const WeakOptions& opt = {});

bool admissible(const FormalSumFq& s, const std::vector<Fq>& point, FieldPtr field);
// Visits admissible points in enumeration order; the visitor returns false to stop.
std::uint64_t admissible_points(const FormalSumFq& s, FieldPtr field,
                                const std::function<bool(const std::vector<Fq>&)>& visit = {});

// Rewrites c[y] with y the non-canonical member of {x, 1/x} as
// (-1)^m (c y)[1/y], then merges like terms. m is the finite weight.
template <class K>
FormalSum<K> normalize_mod_inversion(const FormalSum<K>& s, long long m);

extern template FormalSum<Fq> build<Fq>(const std::string&, FieldPtr, const BuildParams&);
extern template FormalSum<Rational> build<Rational>(const std::string&, RationalField, const BuildParams&);
extern template FormalSum<Fq> normalize_mod_inversion<Fq>(const FormalSum<Fq>&, long long);
extern template FormalSum<Rational> normalize_mod_inversion<Rational>(const FormalSum<Rational>&, long long);

}  // namespace polyana
