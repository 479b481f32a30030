#include <doctest.h>

#include "gen.hpp"
#include "polyana/eqcat.hpp"
#include "polyana/finlog.hpp"
#include "polyana/solver.hpp"

using namespace polyana;

namespace {

Row polylog_row(long long n, std::uint32_t p, std::uint32_t cols) {
  Row r(cols, 0);
  auto fl = finite_polylog(n, p);
  for (std::uint32_t k = 1; k < p; ++k) r[k] = fl->coeffs[k].value();
  return r;
}

bool satisfies(const LinearSystem& s, const Row& v) {
  for (const auto& r : s.rows) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < r.size(); ++k) acc = (acc + static_cast<std::uint64_t>(r[k]) * v[k]) % s.p;
    if (acc) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("linear_system examples") {
  FieldPtr f5 = prime_field(5);
  auto two = make_template(build<Fq>("two_term", f5), 4);
  auto sys = linear_system(two);
  CHECK(sys.cols == 5);
  CHECK(satisfies(sys, polylog_row(1, 5, 5)));

  LinearSystem empty{5, 5, {}};
  CHECK(kernel_basis({empty}).dim == 5);

  auto inv = linear_system(make_template(build<Fq>("inversion", f5, {2}), 4));
  CHECK(satisfies(inv, polylog_row(1, 5, 5)));
  Row t2(5, 0);
  t2[2] = 1;
  CHECK_FALSE(satisfies(inv, t2));
  // T^5 (1/T)^2 + T^2 = T^3 + T^2 is not zero.
  CHECK_FALSE(apply_template(make_template(build<Fq>("inversion", f5, {2}), 4), t2).is_zero());

  LinearSystem id{5, 5, {}};
  for (std::uint32_t i = 0; i < 5; ++i) {
    Row r(5, 0);
    r[i] = 1;
    id.rows.push_back(r);
  }
  CHECK(kernel_basis({id}).dim == 0);
  LinearSystem zero{5, 5, {Row(5, 0), Row(5, 0)}};
  CHECK(kernel_basis({zero}).dim == 5);
  CHECK(kernel_basis({linear_system(make_template(build<Fq>("fundamental_info", prime_field(7)), 6))}).dim == 1);
}

TEST_CASE("kernel agrees with brute-force enumeration") {
  // All P with P(0) = 0 over F_5 against the substitution path.
  FieldPtr f5 = prime_field(5);
  auto feit = make_template(build<Fq>("fundamental_info", f5), 4);
  std::uint32_t solutions = 0;
  for (std::uint32_t code = 0; code < 625; ++code) {
    Row v(5, 0);
    std::uint32_t c = code;
    for (std::uint32_t k = 1; k < 5; ++k, c /= 5) v[k] = c % 5;
    if (apply_template(feit, v).is_zero()) ++solutions;
  }
  auto rep = characterize("FEIT", 5);
  std::uint32_t expect = 1;
  for (std::uint32_t i = 0; i < rep.dim; ++i) expect *= 5;
  CHECK(solutions == expect);
}

TEST_CASE("characterize examples") {
  auto feit = characterize("FEIT", 11);
  CHECK(feit.dim == 1);
  CHECK(feit.basis_proportional);
  auto three = characterize("THREE_TERM", 7);
  CHECK(three.dim >= 3);
  CHECK(three.dim == 3);
  auto pair = characterize("L2_PAIR", 5);
  CHECK(pair.dim == 1);
  CHECK(pair.basis_proportional);
  CHECK_THROWS_AS(characterize("NOPE", 7), Error);
  CHECK_THROWS_AS(characterize("FEIT", 3), Error);
}

TEST_CASE("preset soundness and pinned dimensions") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    for (const auto& id : preset_ids()) {
      if ((id == "J" || id == "KS") && p > 13) continue;
      auto r = characterize(id, p);
      CHECK_MESSAGE(r.self_check, id << " p=" << p);
      CHECK_MESSAGE(r.polylog_in_span, id << " p=" << p);
      if (id == "THREE_TERM") {
        CHECK(r.dim >= (p - 1) / 3 + 1);
        CHECK(r.tau_rank == (p - 1) / 3 + 1);
        for (bool b : r.tau_in_kernel) CHECK(b);
      } else if (!((id == "J" || id == "KS") && p == 5)) {
        CHECK_MESSAGE(r.dim == 1, id << " p=" << p);
        CHECK_MESSAGE(r.basis_proportional, id << " p=" << p);
      }
    }
  }
}

TEST_CASE("adding constraints never increases the kernel") {
  gen::Rng rng(5);
  const std::vector<std::pair<std::string, int>> pool{{"two_term", 0},     {"inversion", 2},  {"inversion", 3},
                                                      {"duplication", 2},  {"duplication", 3}, {"three_term", 0},
                                                      {"fundamental_info", 0}, {"kummer_spence", 0}};
  for (int it = 0; it < 20; ++it) {
    std::uint32_t p = std::vector<std::uint32_t>{5, 7, 11}[gen::below(rng, 3)];
    FieldPtr f = prime_field(p);
    const auto& [ia, na] = pool[gen::below(rng, pool.size())];
    const auto& [ib, nb] = pool[gen::below(rng, pool.size())];
    auto sa = linear_system(make_template(build<Fq>(ia, f, {na}), p - 1));
    auto sb = linear_system(make_template(build<Fq>(ib, f, {nb}), p - 1));
    auto ka = kernel_basis({sa}).dim;
    auto kab = kernel_basis({sa, sb}).dim;
    CHECK(kab <= ka);
    CHECK(kab <= kernel_basis({sb}).dim);
  }
}

TEST_CASE("KS and J kernels coincide") {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    FieldPtr f = prime_field(p);
    auto ks = characterize("KS", p);
    auto j = characterize("J", p);
    REQUIRE(ks.dim == j.dim);
    auto ks_sys = linear_system(make_template(build<Fq>("kummer_spence", f), p - 1));
    auto j_sys = linear_system(make_template(build<Fq>("cathelineau_J", f), p - 1));
    for (const auto& b : ks.basis) CHECK(satisfies(j_sys, b));
    for (const auto& b : j.basis) CHECK(satisfies(ks_sys, b));
  }
}

TEST_CASE("L_1 lemma schedule") {
  auto run = l1_lemma_sequence(5, Fq::one(prime_field(5)));
  std::vector<std::uint32_t> want{1, 3, 2, 4};
  for (std::uint32_t k = 1; k < 5; ++k) CHECK(run.a[k].value() == want[k - 1]);
  CHECK(run.matches);
  auto zero = l1_lemma_sequence(7, Fq::zero(prime_field(7)));
  for (std::uint32_t k = 1; k < 7; ++k) CHECK(zero.a[k].is_zero());
  FieldPtr f7 = prime_field(7);
  auto two = l1_lemma_sequence(7, Fq::from_int(f7, 2));
  for (std::uint32_t k = 1; k < 7; ++k) CHECK(two.a[k] == Fq::from_int(f7, 2) * Fq::from_int(f7, k).inverse());
  for (std::uint32_t p = 3; p < 102; p += 2) {
    if (!is_prime(p)) continue;
    auto r = l1_lemma_sequence(p, Fq::one(prime_field(p)));
    CHECK_MESSAGE(r.matches, "p=" << p);
    CHECK(r.steps.size() == p - 2);
  }
}
