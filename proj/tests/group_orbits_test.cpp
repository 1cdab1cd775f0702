#include "doctest.h"

#include <random>

#include "capgeom/error.hpp"
#include "capgeom/group_orbits.hpp"
#include "capgeom/known_caps.hpp"
#include "capgeom/singer.hpp"
#include "oracles.hpp"

using namespace capgeom;

TEST_SUITE("group_orbits") {

TEST_CASE("apply") {
  ProjectiveSpace s(Field::of_order(5), 2);
  auto id = Collineation::identity(3);
  Collineation scalar{Matrix::identity(3), 0};
  for (std::size_t i = 0; i < 3; ++i) scalar.matrix(i, i) = 3;
  for (PointId x = 0; x < s.size(); ++x) {
    CHECK(apply(s, id, x) == x);
    CHECK(apply(s, scalar, x) == x);
  }
  ProjectiveSpace s3(Field::of_order(5), 3);
  CHECK_THROWS_AS(apply(s3, id, 0), Error);

  ProjectiveSpace fano(Field::of_order(2), 2);
  auto c = build_singer(fano);
  Collineation g{c.matrix, 0};
  auto perm = as_permutation(fano, g);
  PointId x = 0;
  for (int i = 0; i < 7; ++i) {
    x = perm[x];
    if (i < 6) CHECK(x != 0);
  }
  CHECK(x == 0);
}

TEST_CASE("compose matches sequential application") {
  auto f = Field::of_order(4);
  ProjectiveSpace s(f, 2);
  Collineation a{Matrix::from_rows({{1, 2, 0}, {0, 1, 0}, {3, 0, 1}}), 1};
  Collineation b{Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}}), 0};
  auto ab = compose(f, a, b);
  for (PointId x = 0; x < s.size(); ++x) CHECK(apply(s, ab, x) == apply(s, a, apply(s, b, x)));
  Collineation sing{Matrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), 0};
  CHECK_THROWS_AS(as_permutation(s, sing), Error);
}

TEST_CASE("orbits") {
  ProjectiveSpace pg43(Field::of_order(3), 4);
  auto c = build_singer(pg43);
  Collineation g{power(pg43.field(), c.matrix, 11), 0};
  std::vector<Collineation> gens{g};
  auto res = point_orbits(gens, pg43);
  CHECK(res.partition.size() == 11);
  for (const auto& o : res.partition.orbits) CHECK(o.size() == 11);
  CHECK(res.group_order == Int(11));
  CHECK(res.partition.orbits == subgroup_orbits(c, 11).orbits);

  auto none = point_orbits(std::vector<Collineation>{}, pg43);
  CHECK(none.partition.size() == 121);

  // independent of generator order
  Collineation h{c.matrix, 0};
  auto o1 = point_orbits(std::vector<Collineation>{g, h}, pg43);
  auto o2 = point_orbits(std::vector<Collineation>{h, g}, pg43);
  CHECK(o1.partition.orbits == o2.partition.orbits);
  CHECK(o1.partition.size() == 1);
}

TEST_CASE("orbits of the extraspecial group on PG(3,3)") {
  auto f = Field::of_order(3);
  ProjectiveSpace s(f, 3);
  const Matrix i2 = Matrix::identity(2);
  std::vector<Collineation> gens{{kronecker(f, Matrix::from_rows({{0, 1}, {1, 0}}), i2), 0},
                                 {kronecker(f, Matrix::from_rows({{1, 0}, {0, 2}}), i2), 0},
                                 {kronecker(f, i2, Matrix::from_rows({{0, 2}, {1, 0}})), 0},
                                 {kronecker(f, i2, Matrix::from_rows({{1, 1}, {1, 2}})), 0}};
  auto res = point_orbits(gens, s);
  CHECK(res.partition.size() == 5);
  for (const auto& o : res.partition.orbits) CHECK(o.size() == 8);
  CHECK(res.group_order == Int(16));  // R modulo its centre {1, -1}
}

TEST_CASE("pgl orders") {
  CHECK(pgl_order(3, 4) == 60480);
  CHECK(pgl_order(4, 2) == 20160);
  CHECK(pgl_order(2, 2) == 6);
  CHECK(pgl_order(4, 3) == 12130560);
}

TEST_CASE("stabilizers") {
  auto h = hyperoval_pg24();
  auto cert = setwise_stabilizer_bruteforce(h.set());
  CHECK(cert.transitive_on_set);
  CHECK(cert.transitive_on_complement);
  CHECK(cert.order == 720);  // S6 inside PGammaL(3,4)

  for (int r : {2, 3}) {
    auto c = hyperplane_complement(r);
    auto s = setwise_stabilizer_bruteforce(c.set());
    CHECK(s.transitive_on_set);
    CHECK(s.transitive_on_complement);
    // the stabilizer of a hyperplane in PGL(r+1,2): |AGL(r,2)|
    CHECK(s.order == (r == 2 ? 24 : 1344));
  }

  // the full space: the whole group
  ProjectiveSpace pg24(Field::of_order(4), 2);
  std::vector<PointId> all(pg24.size());
  for (PointId i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(setwise_stabilizer_bruteforce(PointSet(pg24, all)).order == pgl_order(3, 4) * 2);

  // worker count does not change the certificate
  auto w1 = setwise_stabilizer_bruteforce(h.set(), kDefaultBruteForceLimit, 1);
  auto w3 = setwise_stabilizer_bruteforce(h.set(), kDefaultBruteForceLimit, 3);
  CHECK(w1.order == w3.order);
  CHECK(w1.orbits.orbits == w3.orbits.orbits);

  CHECK_THROWS_AS(setwise_stabilizer_bruteforce(h.set(), 1000), Error);
}

TEST_CASE("elliptic quadric in PG(3,3)") {
  auto e = elliptic_quadric(3);
  auto cert = setwise_stabilizer_bruteforce(e.set());
  CHECK(cert.transitive_on_complement);
  CHECK(cert.transitive_on_set);
  CHECK(cert.order == 1440);
  CHECK(cotransitivity_necessary(e.set()).pass);
}

TEST_CASE("co-transitive implies the necessary condition") {
  for (auto c : {hyperoval_pg24(), hyperplane_complement(2), hyperplane_complement(3)}) {
    auto cert = setwise_stabilizer_bruteforce(c.set());
    if (cert.transitive_on_complement) CHECK(cotransitivity_necessary(c.set()).pass);
  }
  auto v = cotransitivity_necessary(cap11_pg43().set());
  CHECK(v.pass);
  CHECK(v.min == 1);
  CHECK(cotransitivity_necessary(tits_ovoid(8).set()).expected == Rational(28));

  ProjectiveSpace s(Field::of_order(3), 3);
  PointSet four(s, {s.id_of(Vec{1, 0, 0, 0}), s.id_of(Vec{0, 1, 0, 0}), s.id_of(Vec{0, 0, 1, 0}),
                    s.id_of(Vec{0, 0, 0, 1})});
  CHECK_FALSE(cotransitivity_necessary(four).pass);
  CHECK_THROWS_AS(cotransitivity_necessary(PointSet(s, s.line_points(0, 1))), Error);
}

TEST_CASE("collineations preserve caps and chord multisets") {
  std::mt19937 rng(5);
  auto f = Field::of_order(4);
  ProjectiveSpace s(f, 3);
  std::uniform_int_distribution<Elem> pick(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m(4, 4);
    do {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = pick(rng);
    } while (rank(f, m) < 4);
    Collineation g{m, static_cast<unsigned>(trial % 2)};
    auto cap = oracle::random_cap(s, rng, 10);
    std::vector<PointId> image;
    for (PointId x : cap) image.push_back(apply(s, g, x));
    PointSet a(s, cap), b(s, image);
    CHECK(is_cap(b).is_cap);
    auto pa = chord_profile(a).counts, pb = chord_profile(b).counts;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    CHECK(pa == pb);
    // a non-cap stays a non-cap
    auto line = s.line_points(cap[0], cap[1]);
    std::vector<PointId> li;
    for (PointId x : line) li.push_back(apply(s, g, x));
    CHECK_FALSE(is_cap(PointSet(s, li)).is_cap);
  }
}

}
