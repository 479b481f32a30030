#include <doctest.h>

#include <set>

#include "json.hpp"
#include "polyana/eqcat.hpp"
#include "polyana/finlog.hpp"

using namespace polyana;

namespace {

RatFq V(FieldPtr f, const char* n) { return RatFq::variable(f, n); }
RatFq C(FieldPtr f, long long c) { return RatFq::constant(f, c); }

bool same_terms(const FormalSumFq& a, const FormalSumFq& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.terms[i].coeff == b.terms[i].coeff) || !(a.terms[i].arg == b.terms[i].arg)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("catalog build examples") {
  FieldPtr f = prime_field(7);
  auto feit = build<Fq>("feit", f);
  REQUIRE(feit.size() == 4);
  auto a = V(f, "a");
  auto one = C(f, 1);
  CHECK(feit.terms[0].coeff == one);
  CHECK(feit.terms[1].coeff == -one);
  CHECK(feit.terms[2].coeff == a);
  CHECK(feit.terms[3].coeff == one - a);
  CHECK(feit.weight == 2);

  auto J = build<Fq>("cathelineau_J", f);
  CHECK(J.size() == 22);
  CHECK(J.merged().size() == 22);
  // Bracket definition of J against the written-out list.
  auto b = V(f, "b"), c = V(f, "c");
  auto viaBracket = cathelineau_bracket<Fq>(a, c) - cathelineau_bracket<Fq>(b, c) +
                    cathelineau_bracket<Fq>(b / a, c).scaled(a) +
                    cathelineau_bracket<Fq>((one - b) / (one - a), c).scaled(one - a);
  CHECK(viaBracket.merged().size() == 22);
  CHECK((viaBracket - J).merged().empty());

  auto T = V(f, "T");
  FormalSumFq want(f, 2, {var_id("T")});
  want.add(one, T * T).add(-(one + T), T).add(-(one - T), -T);
  CHECK(same_terms(build<Fq>("distribution", f, {2, 2}), want));
  CHECK(same_terms(build<Fq>("duplication", f, {2}), want));

  CHECK_THROWS_AS(build<Fq>("no_such_equation", f), Error);
  try {
    build<Fq>("distribution", prime_field(5), {2, 3});
    FAIL("expected BadParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadParams);
  }
  CHECK(build<Fq>("distribution", prime_field(7), {2, 3}).size() == 4);
  CHECK(build<Rational>("feit", RationalField{}).size() == 4);
  CHECK_THROWS_AS(build<Rational>("distribution", RationalField{}, {2, 3}), Error);
}

TEST_CASE("catalog completeness") {
  const std::vector<std::string> ids{
      "inversion", "distribution", "duplication", "two_term", "feit", "fundamental_info", "feit_generalized",
      "five_term_v1", "five_term_v2", "five_term_family", "four_term_alt", "kontsevich_A", "kontsevich_B",
      "kontsevich_C", "three_term", "three_term_polynomial", "kummer_spence", "kummer_spence_v1", "cathelineau_J",
      "cathelineau_J_c_a", "cathelineau_J_c_b", "cathelineau_J_c_a_over_b", "cathelineau_J_c_ratio",
      "cathelineau_bracket", "derived_goncharov", "inversion_classical", "distribution_classical",
      "two_term_classical", "five_term_cocycle", "five_term_classical", "three_term_classical",
      "kummer_spence_classical_v1", "kummer_spence_classical", "goncharov_classical"};
  std::set<std::string> have;
  for (const auto& e : catalog()) have.insert(e.id);
  for (const auto& id : ids) CHECK_MESSAGE(have.count(id) == 1, id);
  CHECK(catalog_info("kontsevich_A").alias_of == "two_term");
  CHECK(catalog_info("kontsevich_C").alias_of == "inversion");
  FieldPtr f = prime_field(5);
  CHECK(same_terms(build<Fq>("kontsevich_C", f), build<Fq>("inversion", f, {2})));

  auto j = nlohmann::json::parse(catalog_json());
  REQUIRE(j.is_array());
  CHECK(j.size() == catalog().size());
  for (const auto& e : j) {
    CHECK(e.contains("id"));
    CHECK(e.contains("anchor"));
    CHECK(e["terms"].get<int>() > 0);
  }
}

TEST_CASE("verify_strong examples and negative control") {
  FieldPtr f = prime_field(7);
  CHECK(verify_strong(build<Fq>("feit", f), 1).holds);
  CHECK(verify_strong(build<Fq>("cathelineau_J", f), 2).holds);
  auto bad = build<Fq>("feit", f);
  bad.terms[2].coeff = V(f, "a") + C(f, 1);
  auto v = verify_strong(bad, 1);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.residual->is_zero());
}

TEST_CASE("strong verification across the finite catalog") {
  for (std::uint32_t p : {5u, 7u}) {
    FieldPtr f = prime_field(p);
    for (const auto& e : catalog()) {
      if (e.kind != EntryKind::Finite) continue;
      auto s = build<Fq>(e.id, f);
      CHECK_MESSAGE(verify_strong(s, e.weight - 1).holds, e.id << " p=" << p);
    }
    for (int n = 1; n <= 4; ++n) {
      CHECK(verify_strong(build<Fq>("inversion", f, {n}), n - 1).holds);
      CHECK(verify_strong(build<Fq>("distribution", f, {n, 2}), n - 1).holds);
      CHECK(verify_strong(build<Fq>("distribution", f, {n, static_cast<long long>(p) - 1}), n - 1).holds);
    }
  }
}

TEST_CASE("verify_weak examples") {
  FieldPtr f7 = prime_field(7);
  auto v = verify_weak(build<Fq>("derived_goncharov", f7), 2, f7);
  CHECK(v.holds);
  CHECK(v.points_checked > 0);
  CHECK_FALSE(v.sampled);

  FieldPtr f3 = prime_field(3);
  CHECK(verify_weak(build<Fq>("two_term", f3), 1, build_extension(3, 2)).holds);

  FieldPtr f5 = prime_field(5);
  FormalSumFq single(f5, 2, {var_id("T")});
  single.add(1, V(f5, "T"));
  auto w = verify_weak(single, 1, f5);
  CHECK_FALSE(w.holds);
  REQUIRE(w.counterexample.has_value());
  CHECK((*w.counterexample)[var_id("T")] == Fq::from_int(f5, 2));
  CHECK(w.counter_value == Fq::from_int(f5, 4));

  // The [abc] coefficient with the opposite sign is not an equation.
  auto printed = build<Fq>("derived_goncharov", f7);
  printed.terms.back().coeff = -printed.terms.back().coeff;
  CHECK_FALSE(verify_weak(printed, 2, f7).holds);

  WeakOptions tight;
  tight.budget = 10;
  tight.allow_sampling = false;
  CHECK_THROWS_AS(verify_weak(build<Fq>("feit", f7), 1, f7, tight), Error);
  tight.allow_sampling = true;
  tight.samples = 500;
  auto s = verify_weak(build<Fq>("feit", f7), 1, f7, tight);
  CHECK(s.sampled);
  CHECK(s.holds);
}

TEST_CASE("strong implies weak over F_p and F_p^2") {
  WeakOptions opt;
  opt.budget = 200'000;
  opt.samples = 3'000;
  for (std::uint32_t p : {5u, 7u}) {
    FieldPtr f = prime_field(p);
    FieldPtr f2 = build_extension(p, 2);
    for (const auto& e : catalog()) {
      if (e.kind != EntryKind::Finite) continue;
      auto s = build<Fq>(e.id, f);
      if (!verify_strong(s, e.weight - 1).holds) continue;
      CHECK_MESSAGE(verify_weak(s, e.weight - 1, f, opt).holds, e.id);
      CHECK_MESSAGE(verify_weak(s, e.weight - 1, f2, opt).holds, e.id);
    }
  }
}

TEST_CASE("kontsevich_B holds pointwise") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    FieldPtr f = prime_field(p);
    auto v = verify_weak(build<Fq>("kontsevich_B", f), 1, f);
    CHECK(v.holds);
    CHECK_FALSE(v.counterexample.has_value());
  }
}

TEST_CASE("admissible points") {
  FieldPtr f5 = prime_field(5);
  auto feit = build<Fq>("feit", f5);
  std::uint64_t oracle = 0;
  for (std::uint32_t a = 0; a < 5; ++a) {
    for (std::uint32_t b = 0; b < 5; ++b) oracle += (a != 0 && a != 1) ? 1 : 0;
  }
  CHECK(admissible_points(feit, f5) == oracle);
  std::uint64_t seen = 0;
  admissible_points(feit, f5, [&](const std::vector<Fq>& pt) {
    CHECK_FALSE(pt[var_id("a")].is_zero());
    ++seen;
    return true;
  });
  CHECK(seen == oracle);

  FormalSumFq poly(f5, 2, {var_id("x"), var_id("y")});
  poly.add(V(f5, "x") * V(f5, "y"), V(f5, "x") + C(f5, 1)).add(1, V(f5, "y"));
  CHECK(admissible_points(poly, f5) == 25);
  FieldPtr f7 = prime_field(7);
  CHECK(admissible_points(build<Fq>("three_term", f7), f7) == 6);
}

TEST_CASE("normalize_mod_inversion") {
  FieldPtr f = prime_field(7);
  auto T = V(f, "T"), one = C(f, 1);
  FormalSumFq s(f, 3, {var_id("T")});
  s.add(one, T).add(-T, one / T);
  CHECK(normalize_mod_inversion(s, 2).empty());
  FormalSumFq canon(f, 3, {var_id("T")});
  canon.add(one, T).add(C(f, 2), T + one);
  auto n = normalize_mod_inversion(canon, 2);
  CHECK(n.size() == 2);
  CHECK(same_terms(normalize_mod_inversion(n, 2), n));

  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    FieldPtr g = prime_field(p);
    for (int k = 1; k <= 4; ++k) {
      auto dist = normalize_mod_inversion(build<Fq>("distribution", g, {k, -1}), k - 1);
      auto inv = normalize_mod_inversion(build<Fq>("inversion", g, {k}), k - 1);
      CHECK(same_terms(dist, inv));
      CHECK(normalize_mod_inversion(build<Fq>("distribution", g, {k, -1}) - build<Fq>("inversion", g, {k}).scaled(RatFq::constant(g, 1) / RatFq::variable(g, "T")).scaled(RatFq::constant(g, k % 2 == 0 ? 1 : -1)), k - 1).empty());
    }
    // Three-term plus its reflection is x times inversion at y = (x-1)/x.
    auto x = V(g, "x"), o = C(g, 1);
    auto three = build<Fq>("three_term", g);
    auto refl = three.substituted({{var_id("x"), o - x}});
    auto inv = build<Fq>("inversion", g, {3}).substituted({{var_id("T"), (x - o) / x}}).scaled(x);
    CHECK((three + refl - inv).merged().empty());
    CHECK(normalize_mod_inversion(three + refl, 2).empty());
  }
}
