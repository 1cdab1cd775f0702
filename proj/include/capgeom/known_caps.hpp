#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "capgeom/caps.hpp"
#include "capgeom/group_orbits.hpp"
#include "capgeom/projective.hpp"
#include "capgeom/rational.hpp"

namespace capgeom {

struct ConstructionDescriptor {
  std::string name;
  std::string constraints;
  Int expected_size;
  bool expected_cap = false;
  std::string claim;  // which case of the classification, or which refutation
};

/// A named point set together with the space that owns its PointIds.
struct Construction {
  std::shared_ptr<const ProjectiveSpace> space;
  std::vector<PointId> points;  // ascending
  ConstructionDescriptor descriptor;

  PointSet set() const { return PointSet(*space, points); }
};

/// Zeros of the fixed elliptic form in PG(3,q); q^2+1 points.
Construction elliptic_quadric(std::uint32_t q);
/// Zeros of x0x1 + x2x3 in PG(3,q); (q+1)^2 points.
Construction hyperbolic_quadric(std::uint32_t q);
/// {(1, s, t, st + s^(sigma+2) + t^sigma)} + (0,0,0,1), sigma = 2^((h+1)/2),
/// for q = 2^h with h odd >= 3. Throws BadParameter.
Construction tits_ovoid(std::uint32_t q);
/// Conic {(1,t,t^2)} + (0,0,1) + nucleus (0,1,0) in PG(2,4).
Construction hyperoval_pg24();
/// The 2^r points of PG(r,2) off the hyperplane x0 = 0. Throws BadDimension.
Construction hyperplane_complement(int r);
/// Orbit of point 0 under the order-11 subgroup of the Singer cycle of PG(4,3).
Construction cap11_pg43();
/// Points of two complementary t-dimensional coordinate subspaces in
/// PG(2t-1,q). Throws BadDimension (t < 2).
Construction direct_sum_k1(std::uint32_t q, int t);
/// Pure tensors v1 (x) v2 with dim V1 = 2, dim V2 = b, in PG(2b-1,q).
/// Throws BadDimension (b < 2).
Construction tensor_k1(std::uint32_t q, int b);
/// Points of PG(a-1,q) whose canonical coordinates lie in GF(s), q = s^2.
/// Throws NotASquare / BadDimension (a < 3).
Construction subgeometry(std::uint32_t s, int a);
/// Zeros of sum x_i^(q'+1) in PG(dim-1,q), q = q'^2.
Construction hermitian_variety(std::uint32_t q, int dim);
/// Zeros of x0x1 + x2x3 + ... in PG(dim-1,q).
Construction hyperbolic_quadric_dim(std::uint32_t q, int dim);

struct ConstructionParams {
  std::uint32_t q = 0;
  int r = 0;
  int b = 0;  // t for direct-sum, b for tensor
  std::uint32_t s = 0;
  int a = 0;  // vector dimension for subgeometry / hermitian
};

/// Looks up a construction by CLI name ("elliptic-quadric", "tits-ovoid", ...);
/// parameters not used by the construction are ignored. Throws BadParameter.
Construction construct_by_name(const std::string& name, const ConstructionParams& params);
std::vector<std::string> construction_names();

/// Lexicographically first line (as its ascending point list) meeting `set` in
/// exactly `meet` points.
std::optional<std::vector<PointId>> find_line_meeting(const PointSet& set, std::size_t meet);

struct SubgeometryWitnesses {
  Construction k1;
  std::optional<Triple> k1_triple;   // collinear triple inside the subgeometry
  Elem sigma = 0;                    // first element of GF(q) outside GF(s)
  Triple k2_triple{};                // u = e1 + sigma e2, v = e2 + sigma e3, u + v
  bool k2_collinear = false;
  bool k2_inside_complement = false;
};
SubgeometryWitnesses subgeometry_witnesses(std::uint32_t s, int a);

struct ExtraspecialOrbits {
  std::size_t group_order = 0;                 // |R| as a matrix group
  std::vector<std::vector<Vec>> vector_orbits; // orbits on nonzero vectors of V(4,3)
  std::shared_ptr<const ProjectiveSpace> space;
  std::vector<std::vector<PointId>> projective_images;
  std::vector<CapCheck> cap_checks;
};
/// R = D8 o Q8 inside GL(4,3), generated by Kronecker products of 2x2
/// generators, and its orbits on the 80 nonzero vectors.
ExtraspecialOrbits extraspecial_orbits();

struct CollinearWitness {
  Vec a, b, c;
  bool collinear = false;
  bool c_is_sum = false;
  Vec c_normalized;
};
/// (1;0,0,0), (1;0,1,6), (2;0,1,6) over GF(7).
CollinearWitness psu42_triple();

}  // namespace capgeom
