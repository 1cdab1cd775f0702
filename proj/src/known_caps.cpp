#include "capgeom/known_caps.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "capgeom/error.hpp"
#include "capgeom/singer.hpp"

namespace capgeom {

namespace {

Construction make(std::shared_ptr<const ProjectiveSpace> space, std::vector<PointId> points,
                  ConstructionDescriptor d) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return {std::move(space), std::move(points), std::move(d)};
}

std::shared_ptr<const ProjectiveSpace> space_of(std::uint32_t q, int r) {
  return std::make_shared<const ProjectiveSpace>(Field::of_order(q), r);
}

// All nonzero vectors of V(dim, f), as base-q digit vectors in lexicographic order.
std::vector<Vec> nonzero_vectors(const Field& f, std::size_t dim) {
  std::vector<Vec> out;
  Vec v(dim, 0);
  while (true) {
    std::size_t i = dim;
    while (i > 0 && v[i - 1] + 1 == f.q()) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
    out.push_back(v);
  }
  return out;
}

}  // namespace

Construction elliptic_quadric(std::uint32_t q) {
  auto space = space_of(q, 3);
  auto pts = singular_points(QuadraticForm::elliptic(space->field()), *space);
  return make(space, std::move(pts),
              {"elliptic-quadric", q > 2 ? "q > 2" : "q = 2 (below the q > 2 range of the bound)",
               Int(q) * q + 1, true, "case 1: elliptic quadric in PG(3,q)"});
}

Construction hyperbolic_quadric(std::uint32_t q) {
  auto space = space_of(q, 3);
  auto pts = singular_points(QuadraticForm::hyperbolic(space->field(), 4), *space);
  return make(space, std::move(pts),
              {"hyperbolic-quadric", "any q", (Int(q) + 1) * (Int(q) + 1), false,
               "class A7: singular points of a hyperbolic form contain lines"});
}

Construction hyperbolic_quadric_dim(std::uint32_t q, int dim) {
  if (dim < 4 || dim % 2) throw Error(ErrorCode::BadDimension, "hyperbolic form needs even dimension >= 4");
  auto space = space_of(q, dim - 1);
  auto pts = singular_points(QuadraticForm::hyperbolic(space->field(), static_cast<std::size_t>(dim)), *space);
  const unsigned m = static_cast<unsigned>(dim / 2);
  // (q^m - 1)(q^{m-1} + 1)/(q - 1)
  Int size = (ipow(q, m) - 1) * (ipow(q, m - 1) + 1) / (Int(q) - 1);
  return make(space, std::move(pts),
              {"hyperbolic-quadric-" + std::to_string(dim), "even dimension", size, false,
               "classes A7/A9: singular vectors of a hyperbolic form"});
}

Construction tits_ovoid(std::uint32_t q) {
  unsigned h = 0;
  for (std::uint32_t v = q; v > 1; v >>= 1) {
    if (v & 1) throw Error(ErrorCode::BadParameter, std::to_string(q) + " is not a power of 2");
    ++h;
  }
  if (h < 3 || h % 2 == 0)
    throw Error(ErrorCode::BadParameter, "Tits ovoid needs q = 2^h with h odd and >= 3");
  auto space = space_of(q, 3);
  const Field& f = space->field();
  const unsigned half = (h + 1) / 2;  // x^sigma = frobenius^half
  std::vector<PointId> pts{space->id_of(Vec{0, 0, 0, 1})};
  for (Elem s = 0; s < q; ++s)
    for (Elem t = 0; t < q; ++t) {
      Elem s_sigma = f.frobenius(s, half);
      Elem z = f.add(f.add(f.mul(s, t), f.mul(s_sigma, f.mul(s, s))), f.frobenius(t, half));
      pts.push_back(space->id_of(Vec{1, s, t, z}));
    }
  return make(space, std::move(pts),
              {"tits-ovoid", "q = 2^h, h odd >= 3", Int(q) * q + 1, true, "case 2: Suzuki-Tits ovoid in PG(3,q)"});
}

Construction hyperoval_pg24() {
  auto space = space_of(4, 2);
  const Field& f = space->field();
  std::vector<PointId> pts{space->id_of(Vec{0, 0, 1}), space->id_of(Vec{0, 1, 0})};
  for (Elem t = 0; t < 4; ++t) pts.push_back(space->id_of(Vec{1, t, f.mul(t, t)}));
  return make(space, std::move(pts), {"hyperoval-pg24", "none", 6, true, "case 3: hyperoval in PG(2,4)"});
}

Construction hyperplane_complement(int r) {
  if (r < 2) throw Error(ErrorCode::BadDimension, "hyperplane complement needs r >= 2");
  auto space = space_of(2, r);
  std::vector<PointId> pts;
  for (PointId id = 0; id < space->size(); ++id)
    if (space->point(id)[0] != 0) pts.push_back(id);
  return make(space, std::move(pts),
              {"hyperplane-complement", "q = 2, r >= 2", ipow(2, static_cast<unsigned>(r)), true,
               "case 5: complement of a hyperplane in PG(r,2)"});
}

Construction cap11_pg43() {
  auto space = space_of(3, 4);
  auto cycle = build_singer(*space);
  auto partition = subgroup_orbits(cycle, 11);
  auto orbit = partition.orbits[partition.orbit_of[0]];
  return make(space, std::move(orbit),
              {"cap11-pg43", "none", 11, true, "case 4: 11-cap in PG(4,3), a Singer suborbit"});
}

Construction direct_sum_k1(std::uint32_t q, int t) {
  if (t < 2) throw Error(ErrorCode::BadDimension, "direct sum witness needs t >= 2");
  auto space = space_of(q, 2 * t - 1);
  std::vector<PointId> pts;
  for (PointId id = 0; id < space->size(); ++id) {
    Vec v = space->point(id);
    bool first = std::all_of(v.begin() + t, v.end(), [](Elem e) { return e == 0; });
    bool second = std::all_of(v.begin(), v.begin() + t, [](Elem e) { return e == 0; });
    if (first || second) pts.push_back(id);
  }
  Int size = 2 * (ipow(q, static_cast<unsigned>(t)) - 1) / (Int(q) - 1);
  return make(space, std::move(pts),
              {"direct-sum", "r + 1 = 2t, t >= 2", size, false, "class A2: (V1 u V2) - {0}"});
}

Construction tensor_k1(std::uint32_t q, int b) {
  if (b < 2) throw Error(ErrorCode::BadDimension, "tensor witness needs b >= 2");
  auto space = space_of(q, 2 * b - 1);
  const Field& f = space->field();
  std::vector<PointId> pts;
  const auto v1s = nonzero_vectors(f, 2);
  const auto v2s = nonzero_vectors(f, static_cast<std::size_t>(b));
  Vec w(2 * static_cast<std::size_t>(b));
  for (const auto& u : v1s)
    for (const auto& v : v2s) {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < v.size(); ++j) w[i * v.size() + j] = f.mul(u[i], v[j]);
      pts.push_back(space->id_of(w));
    }
  Int size = (Int(q) + 1) * (ipow(q, static_cast<unsigned>(b)) - 1) / (Int(q) - 1);
  return make(space, std::move(pts),
              {"tensor", "dim V1 = 2, dim V2 = b >= 2", size, false, "class A3: pure tensors v1 (x) v2"});
}

Construction subgeometry(std::uint32_t s, int a) {
  if (a < 3) throw Error(ErrorCode::BadDimension, "subgeometry witness needs a >= 3");
  Field small = Field::of_order(s);
  if (std::uint64_t(s) * s > kMaxFieldOrder) throw Error(ErrorCode::FieldTooLarge, "s^2 too large");
  const std::uint32_t q = s * s;
  auto space = space_of(q, a - 1);
  auto embed = subfield_embed(small, space->field());
  std::vector<char> in_sub(q, 0);
  for (Elem x : embed.image_set()) in_sub[x] = 1;
  std::vector<PointId> pts;
  for (PointId id = 0; id < space->size(); ++id) {
    Vec v = space->point(id);
    if (std::all_of(v.begin(), v.end(), [&](Elem e) { return in_sub[e] != 0; })) pts.push_back(id);
  }
  Int size = (ipow(s, static_cast<unsigned>(a)) - 1) / (Int(s) - 1);
  return make(space, std::move(pts),
              {"subgeometry", "q = s^2, a >= 3", size, false, "class A4: subgeometry PG(a-1,s) in PG(a-1,q)"});
}

Construction hermitian_variety(std::uint32_t q, int dim) {
  auto space = space_of(q, dim - 1);
  auto pts = isotropic_points(HermitianForm::standard(space->field(), static_cast<std::size_t>(dim)), *space);
  // isotropic points of a non-degenerate hermitian form on V(n, q'^2):
  // (q'^n - (-1)^n)(q'^{n-1} - (-1)^{n-1}) / (q - 1)
  Int qq = Int(1);
  for (Int x = 1; x * x <= Int(q); ++x)
    if (x * x == Int(q)) qq = x;
  const unsigned n = static_cast<unsigned>(dim);
  Int sign_n = n % 2 ? -1 : 1;
  Int size = (ipow(qq, n) - sign_n) * (ipow(qq, n - 1) + sign_n) / (Int(q) - 1);
  return make(space, std::move(pts),
              {"hermitian", "q square", size, false, "class A6: isotropic points of a hermitian form"});
}

std::vector<std::string> construction_names() {
  return {"elliptic-quadric", "hyperbolic-quadric", "tits-ovoid", "hyperoval-pg24",
          "hyperplane-complement", "cap11-pg43", "direct-sum", "tensor", "subgeometry", "hermitian"};
}

Construction construct_by_name(const std::string& name, const ConstructionParams& p) {
  if (name == "elliptic-quadric") return elliptic_quadric(p.q);
  if (name == "hyperbolic-quadric") return hyperbolic_quadric(p.q);
  if (name == "tits-ovoid") return tits_ovoid(p.q);
  if (name == "hyperoval-pg24") return hyperoval_pg24();
  if (name == "hyperplane-complement") return hyperplane_complement(p.r);
  if (name == "cap11-pg43") return cap11_pg43();
  if (name == "direct-sum") return direct_sum_k1(p.q, p.b);
  if (name == "tensor") return tensor_k1(p.q, p.b);
  if (name == "subgeometry") return subgeometry(p.s, p.a);
  if (name == "hermitian") return hermitian_variety(p.q, p.a);
  throw Error(ErrorCode::BadParameter, "unknown construction '" + name + "'");
}

std::optional<std::vector<PointId>> find_line_meeting(const PointSet& set, std::size_t meet) {
  const auto& space = set.space();
  for (PointId a = 0; a < space.size(); ++a)
    for (PointId b = a + 1; b < space.size(); ++b) {
      auto line = space.line_points(a, b);
      if (line[0] != a || line[1] != b) continue;  // visit each line once
      auto hits = std::count_if(line.begin(), line.end(), [&](PointId x) { return set.contains(x); });
      if (static_cast<std::size_t>(hits) == meet) return line;
    }
  return std::nullopt;
}

SubgeometryWitnesses subgeometry_witnesses(std::uint32_t s, int a) {
  SubgeometryWitnesses w;
  w.k1 = subgeometry(s, a);
  const auto& space = *w.k1.space;
  const Field& f = space.field();
  auto k1 = w.k1.set();
  w.k1_triple = is_cap(k1).witness;

  auto embed = subfield_embed(Field::of_order(s), f);
  auto image = embed.image_set();
  for (Elem x = 0; x < f.q(); ++x)
    if (!std::binary_search(image.begin(), image.end(), x)) {
      w.sigma = x;
      break;
    }
  Vec u(space.coords(), 0), v(space.coords(), 0), sum(space.coords(), 0);
  u[0] = 1;
  u[1] = w.sigma;
  v[1] = 1;
  v[2] = w.sigma;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = f.add(u[i], v[i]);
  w.k2_triple = {space.id_of(u), space.id_of(v), space.id_of(sum)};
  w.k2_collinear = space.collinear(u, v, sum);
  w.k2_inside_complement = std::none_of(w.k2_triple.begin(), w.k2_triple.end(),
                                        [&](PointId x) { return k1.contains(x); });
  return w;
}

ExtraspecialOrbits extraspecial_orbits() {
  const Field f = Field::make(3, 1);
  const Elem m1 = 2;  // -1 in GF(3)
  const Matrix i2 = Matrix::identity(2);
  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix diag = Matrix::from_rows({{1, 0}, {0, m1}});
  const Matrix qi = Matrix::from_rows({{0, m1}, {1, 0}});
  const Matrix qj = Matrix::from_rows({{1, 1}, {1, m1}});
  const std::vector<Matrix> gens{kronecker(f, swap, i2), kronecker(f, diag, i2), kronecker(f, i2, qi),
                                 kronecker(f, i2, qj)};

  std::set<Matrix> group{Matrix::identity(4)};
  std::vector<Matrix> frontier{Matrix::identity(4)};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& g : frontier)
      for (const auto& x : gens) {
        Matrix h = multiply(f, x, g);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }

  ExtraspecialOrbits out;
  out.group_order = group.size();
  out.space = std::make_shared<const ProjectiveSpace>(f, 3);
  std::map<Vec, bool> seen;
  for (const auto& v : nonzero_vectors(f, 4)) {
    if (seen.count(v)) continue;
    std::set<Vec> orbit;
    for (const auto& g : group) orbit.insert(multiply(f, g, v));
    for (const auto& x : orbit) seen[x] = true;
    out.vector_orbits.emplace_back(orbit.begin(), orbit.end());
  }
  for (const auto& orbit : out.vector_orbits) {
    std::vector<PointId> pts;
    for (const auto& x : orbit) pts.push_back(out.space->id_of(x));
    PointSet set(*out.space, pts);
    out.projective_images.emplace_back(set.members().begin(), set.members().end());
    out.cap_checks.push_back(is_cap(set));
  }
  return out;
}

CollinearWitness psu42_triple() {
  ProjectiveSpace space(Field::make(7, 1), 3);
  const Field& f = space.field();
  CollinearWitness w;
  w.a = {1, 0, 0, 0};
  w.b = {1, 0, 1, 6};
  w.c = {2, 0, 1, 6};
  w.collinear = space.collinear(w.a, w.b, w.c);
  w.c_is_sum = true;
  for (std::size_t i = 0; i < 4; ++i) w.c_is_sum = w.c_is_sum && f.add(w.a[i], w.b[i]) == w.c[i];
  w.c_normalized = space.normalize(w.c);
  return w;
}

}  // namespace capgeom
