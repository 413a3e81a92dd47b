#include <doctest.h>

#include "sylow/errors.hpp"
#include "sylow/perm_oracle.hpp"
#include "test_groups.hpp"

using namespace sylow;
using namespace sylow::perm;
using testing_groups::build;

namespace {

bool all_elements_have_order_dividing(const PermGroup& g, const Subgroup& h, std::size_t n) {
  for (auto x : h.elements()) {
    if (n % g.element_order(x) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumerate") {
  CHECK(build("(1 2 3 4 5);(1 2 3)").order() == 60);
  CHECK(PermGroup::enumerate({}, 1).order() == 1);
  CHECK(build("(1 2);(1 2 3 4)").order() == 24);
  const auto s8 = parse_generators("(1 2);(1 2 3 4 5 6 7 8)");
  CHECK_THROWS_AS(PermGroup::enumerate(s8.generators, s8.degree, 1000), Refusal);
  CHECK_THROWS_AS(PermGroup::enumerate({}, 17), Refusal);
}

TEST_CASE("enumerated elements form a group") {
  for (const auto& [name, gens] : testing_groups::corpus()) {
    CAPTURE(name);
    const auto g = build(gens);
    CHECK(g.elements()[0].is_identity());
    for (std::size_t a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, g.inv(a)) == 0);
      for (auto s : g.generating_set(g.whole())) CHECK(g.find(g.elements()[a] * g.elements()[s]).has_value());
    }
    std::size_t factorial = 1;
    for (unsigned i = 2; i <= g.degree(); ++i) factorial *= i;
    CHECK(factorial % g.order() == 0);
  }
}

TEST_CASE("cycle notation") {
  auto [p, n] = parse_cycles("(1 2 3)(4 5)");
  CHECK(n == 5);
  CHECK(p.cycles() == "(1 2 3)(4 5)");
  CHECK(parse_cycles("()").first.is_identity());
  CHECK(parse_cycles("(1 2)").first.inverse() == parse_cycles("(1 2)").first);
  // Right-to-left composition: (1 2)(2 3) sends 3 -> 2 -> 1 and 1 -> 2.
  CHECK(parse_cycles("(1 2)(2 3)").first.cycles() == "(1 2 3)");
  CHECK_THROWS_AS(parse_cycles("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 17)"), ParseError);
  CHECK_THROWS_AS(parse_generators("(1 2);"), ParseError);
}

TEST_CASE("sylow_subgroup") {
  const auto a5 = build("(1 2 3 4 5);(1 2 3)");
  const auto p2 = sylow_subgroup(a5, 2);
  CHECK(p2.order() == 4);
  CHECK(all_elements_have_order_dividing(a5, p2, 2));  // Klein four group
  const auto p5 = sylow_subgroup(a5, 5);
  CHECK(p5.order() == 5);
  CHECK(sylow_subgroup(a5, 3).order() == 3);
  CHECK_THROWS_AS(sylow_subgroup(a5, 7), InvalidArgument);

  const auto s4 = build("(1 2);(1 2 3 4)");
  const auto d8 = sylow_subgroup(s4, 2);
  CHECK(d8.order() == 8);
  CHECK(s4.is_subgroup(d8));
  CHECK(all_elements_have_order_dividing(s4, d8, 8));
  CHECK(d8.order() == testing_groups::p_part(s4.order(), 2));
}

TEST_CASE("normalizer") {
  const auto a5 = build("(1 2 3 4 5);(1 2 3)");
  CHECK(normalizer(a5, sylow_subgroup(a5, 2)).order() == 12);
  CHECK(normalizer(a5, sylow_subgroup(a5, 3)).order() == 6);
  CHECK(normalizer(a5, sylow_subgroup(a5, 5)).order() == 10);
  CHECK(normalizer(a5, a5.whole()) == a5.whole());
  CHECK_THROWS_AS(normalizer(a5, Subgroup({0, 1})), InvalidArgument);
}

TEST_CASE("sylow_profile_bruteforce") {
  const auto a5 = sylow_profile_bruteforce(build("(1 2 3 4 5);(1 2 3)"));
  CHECK(a5.size() == 3);
  CHECK(a5.at(2) == SylowDatum{2, 5, 4});
  CHECK(a5.at(3) == SylowDatum{3, 10, 3});
  CHECK(a5.at(5) == SylowDatum{5, 6, 5});

  const auto c7 = sylow_profile_bruteforce(build("(1 2 3 4 5 6 7)"));
  CHECK(c7.size() == 1);
  CHECK(c7.at(7) == SylowDatum{7, 1, 7});

  const auto a5c2 = sylow_profile_bruteforce(build("(1 2 3 4 5);(1 2 3);(6 7)"));
  CHECK(a5c2.at(2) == SylowDatum{2, 5, 8});
  CHECK(a5c2.at(3) == SylowDatum{3, 10, 3});
  CHECK(a5c2.at(5) == SylowDatum{5, 6, 5});
}

TEST_CASE("Sylow counts match the pair-closure oracle") {
  for (const auto& [name, gens] : testing_groups::corpus()) {
    CAPTURE(name);
    const auto g = build(gens);
    for (const auto& r : sylow_reports(g)) {
      CAPTURE(r.prime);
      CHECK(r.nu_by_index == testing_groups::count_sylow_by_pairs(g, r.prime));
    }
  }
}

TEST_CASE("corpus invariants") {
  auto names = testing_groups::corpus();
  names.push_back({"A5xC2", "(1 2 3 4 5);(1 2 3);(6 7)"});
  names.push_back({"A5xC2xC7", "(1 2 3 4 5);(1 2 3);(6 7);(8 9 10 11 12 13 14)"});
  for (const auto& [name, gens] : names) {
    CAPTURE(name);
    const auto g = build(gens);
    for (const auto& r : sylow_reports(g)) {
      CAPTURE(r.prime);
      CHECK(r.nu_by_index == r.nu_by_conjugates);
      CHECK(r.sigma == testing_groups::p_part(g.order(), r.prime));
      CHECK(r.nu_by_index % r.prime == 1 % r.prime);
      CHECK((g.order() / r.sigma) % r.nu_by_index == 0);
      const auto p = sylow_subgroup(g, r.prime);
      for (std::size_t x = 0; x < g.order(); x += 7) CHECK(conjugate(g, x, p).order() == p.order());
    }
  }
}

TEST_CASE("center and solvability") {
  const auto a5 = build("(1 2 3 4 5);(1 2 3)");
  CHECK(center(a5).order() == 1);
  CHECK_FALSE(is_solvable(a5));
  const auto a5c2 = build("(1 2 3 4 5);(1 2 3);(6 7)");
  CHECK(center(a5c2).order() == 2);
  CHECK_FALSE(is_solvable(a5c2));
  CHECK(derived_series_orders(a5c2) == std::vector<std::size_t>{120, 60});
  const auto c7 = build("(1 2 3 4 5 6 7)");
  CHECK(center(c7) == c7.whole());
  CHECK(is_solvable(c7));
  const auto s4 = build("(1 2);(1 2 3 4)");
  CHECK(derived_series_orders(s4) == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(center(build("(1 2 3 4);(1 3)")).order() == 2);
}

TEST_CASE("center and solvability of direct products") {
  const auto& c = testing_groups::corpus();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i; j < c.size(); ++j) {
      const auto a = parse_generators(c[i].gens), b = parse_generators(c[j].gens);
      if (a.degree + b.degree > kMaxDegree) continue;
      CAPTURE(c[i].name);
      CAPTURE(c[j].name);
      const auto ga = PermGroup::enumerate(a.generators, a.degree);
      const auto gb = PermGroup::enumerate(b.generators, b.degree);
      const auto prod = direct_product(a, b);
      const auto gp = PermGroup::enumerate(prod.generators, prod.degree);
      CHECK(gp.order() == ga.order() * gb.order());
      CHECK(center(gp).order() == center(ga).order() * center(gb).order());
      CHECK(is_solvable(gp) == (is_solvable(ga) && is_solvable(gb)));
    }
  }
}
