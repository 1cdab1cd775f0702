#include "doctest.h"

#include "capgeom/error.hpp"
#include "capgeom/singer.hpp"
#include "oracles.hpp"

using namespace capgeom;

TEST_SUITE("singer") {

TEST_CASE("cycle is regular on points") {
  for (auto [q, r] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {3, 4}, {4, 2}, {4, 5}, {5, 2}}) {
    ProjectiveSpace space(Field::of_order(q), r);
    auto c = build_singer(space);
    CHECK(c.n == space.size());
    // one cycle through every point
    PointId x = 0;
    std::size_t steps = 0;
    do {
      x = c.perm[x];
      ++steps;
    } while (x != 0 && steps <= space.size());
    CHECK(steps == space.size());
    for (std::uint64_t k = 0; k < c.n; ++k) CHECK(c.log[c.point_at[k]] == k);
    // the polynomial is primitive: the matrix has order exactly q^(r+1)-1 as a linear map
    CHECK(c.polynomial.size() == space.coords() + 1);
  }
  ProjectiveSpace pg54(Field::of_order(4), 5);
  CHECK(build_singer(pg54).n == 1365);
}

TEST_CASE("divisors") {
  CHECK(divisors(1365) == std::vector<std::uint64_t>{1, 3, 5, 7, 13, 15, 21, 35, 39, 65, 91, 105, 195, 273, 455, 1365});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("subgroup orbits") {
  ProjectiveSpace pg43(Field::of_order(3), 4);
  auto c = build_singer(pg43);
  auto part = subgroup_orbits(c, 11);
  CHECK(part.size() == 11);
  for (const auto& o : part.orbits) CHECK(o.size() == 11);
  for (const auto& v : orbit_cap_filter(pg43, part)) CHECK(v.is_cap);
  // the cycle permutes the orbits among themselves
  for (const auto& o : part.orbits) {
    const auto target = part.orbit_of[c.perm[o[0]]];
    for (PointId x : o) CHECK(part.orbit_of[c.perm[x]] == target);
  }
  CHECK(subgroup_orbits(c, 1).size() == 1);
  CHECK(subgroup_orbits(c, 121).size() == 121);
  CHECK_THROWS_AS(subgroup_orbits(c, 7), Error);

  ProjectiveSpace fano(Field::of_order(2), 2);
  auto f = build_singer(fano);
  for (const auto& v : orbit_cap_filter(fano, subgroup_orbits(f, 7))) CHECK(v.is_cap);

  ProjectiveSpace pg24(Field::of_order(4), 2);
  auto g = build_singer(pg24);
  auto p3 = subgroup_orbits(g, 3);
  auto verdicts = orbit_cap_filter(pg24, p3);
  for (std::size_t i = 0; i < p3.size(); ++i) CHECK(verdicts[i].is_cap == oracle::is_cap_by_definition(pg24, p3.orbits[i]));
}

TEST_CASE("orbit union search") {
  ProjectiveSpace pg43(Field::of_order(3), 4);
  auto c = build_singer(pg43);
  auto part = subgroup_orbits(c, 11);
  auto res = orbit_union_cap_search(pg43, part, 11);
  CHECK(res.caps.size() == 11);
  CHECK(orbit_union_cap_search(pg43, part, 22).caps.empty());
  CHECK_THROWS_AS(orbit_union_cap_search(pg43, part, 12), Error);
  // the whole space is never a cap
  CHECK(orbit_union_cap_search(pg43, subgroup_orbits(c, 1), 121).caps.empty());
}

TEST_CASE("Singer orbit unions of size 78 in PG(5,4)") {
  // Unions of two 39-point orbits of <sigma^35> that are caps; checked triple by triple.
  ProjectiveSpace space(Field::of_order(4), 5);
  auto c = build_singer(space);
  auto res = orbit_union_cap_search(space, subgroup_orbits(c, 35), 78);
  CHECK(res.caps.size() == 70);
  REQUIRE_FALSE(res.caps.empty());
  auto& cap = res.caps.front();
  bool ok = true;
  for (std::size_t i = 0; i < cap.size() && ok; ++i)
    for (std::size_t j = i + 1; j < cap.size() && ok; ++j)
      for (std::size_t k = j + 1; k < cap.size() && ok; ++k)
        ok = rank(space.field(), std::vector<Vec>{space.point(cap[i]), space.point(cap[j]), space.point(cap[k])}) == 3;
  CHECK(ok);
  CHECK_THROWS_AS(orbit_union_cap_search(space, subgroup_orbits(c, 1365), 78, 1000), Error);
}

TEST_CASE("frobenius normalizes the cycle") {
  ProjectiveSpace space(Field::of_order(4), 2);
  auto c = build_singer(space);
  auto phi = frobenius_collineation(c);
  auto perm = as_permutation(space, phi);
  // phi sigma phi^-1 is a power of sigma: log differences scale by p
  for (std::uint64_t k = 0; k < c.n; ++k) {
    const auto a = c.log[perm[c.point_at[k]]];
    const auto b = c.log[perm[c.point_at[(k + 1) % c.n]]];
    CHECK((b + c.n - a) % c.n == 2);
  }
}

TEST_CASE("transitive, co-transitive search") {
  ProjectiveSpace pg54(Field::of_order(4), 5);
  auto res = singer_transitive_cap_search(build_singer(pg54), 78);
  CHECK(res.n == 1365);
  CHECK(res.frobenius_order == 12);
  CHECK_FALSE(res.found());
  CHECK(res.transitive_caps() == 140);

  // the 11-cap of PG(4,3) is a transitive orbit; its complement is not one orbit
  ProjectiveSpace pg43(Field::of_order(3), 4);
  auto r43 = singer_transitive_cap_search(build_singer(pg43), 11);
  CHECK(r43.transitive_caps() > 0);

  // the Fano plane: 4-point caps are hyperplane complements but not unions of Singer subgroup orbits
  ProjectiveSpace fano(Field::of_order(2), 2);
  CHECK_FALSE(singer_transitive_cap_search(build_singer(fano), 4).found());
}

TEST_CASE("Foulser-Kallaher lengths") {
  auto len = fk_orbit_lengths({2, 6, 1, 1, 3, 1});
  CHECK(len.len1 == 21);
  CHECK(len.len2 == 42);
  for (const auto& c : fk_conditions({2, 6, 1, 1, 3, 1})) CHECK_MESSAGE(c.holds, c.name);
  auto l2 = fk_orbit_lengths({2, 12, 1, 3, 5, 1});
  CHECK(l2.len1 + l2.len2 == 4095);
  CHECK(l2.len2 == 4 * l2.len1);
  CHECK(l2.len1 % 2 == 1);
  CHECK_THROWS_AS(fk_orbit_lengths({2, 5, 1, 1, 3, 1}), Error);
  auto bad = fk_conditions({2, 6, 2, 1, 3, 1});
  CHECK(std::any_of(bad.begin(), bad.end(), [](const FKCondition& c) { return !c.holds; }));
}

TEST_CASE("parity shortcut") {
  CHECK(a1_parity_refutation(2, 12, 4, 78) == ParityVerdict::Incompatible);
  CHECK(a1_parity_refutation(2, 14, 4, 430) == ParityVerdict::Incompatible);
  CHECK(a1_parity_refutation(2, 6, 2, 21) == ParityVerdict::NotRefutedByParity);
  CHECK_THROWS_AS(a1_parity_refutation(3, 6, 3, 10), Error);
}

}
