#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "capgeom/caps.hpp"
#include "capgeom/projective.hpp"
#include "capgeom/rational.hpp"

namespace capgeom {

/// x -> matrix * frobenius^f(x): an element of PGammaL(r+1,q) acting on points.
struct Collineation {
  Matrix matrix;
  unsigned frobenius_power = 0;

  static Collineation identity(std::size_t n) { return {Matrix::identity(n), 0}; }
};

/// Raw image vector (not normalized).
Vec apply(const Field& f, const Collineation& g, std::span<const Elem> x);
/// Throws DimensionMismatch.
PointId apply(const ProjectiveSpace& space, const Collineation& g, PointId x);
/// Throws BadParameter when the matrix is singular.
Collineation compose(const Field& f, const Collineation& outer, const Collineation& inner);

/// perm[x] is the image of point x.
using Permutation = std::vector<PointId>;
Permutation as_permutation(const ProjectiveSpace& space, const Collineation& g);

/// Disjoint orbits, each ascending, ordered by smallest member.
struct OrbitPartition {
  std::vector<std::vector<PointId>> orbits;
  std::vector<std::uint32_t> orbit_of;

  std::size_t size() const { return orbits.size(); }
  /// Canonicalizes from an arbitrary labelling (label[x] equal iff same orbit).
  static OrbitPartition from_labels(std::span<const std::uint32_t> label);
};

/// Orbits of the group generated by permutations of {0..n-1}.
OrbitPartition permutation_orbits(std::size_t n, std::span<const Permutation> gens);

struct OrbitResult {
  OrbitPartition partition;
  std::size_t generators = 0;
  /// Order of the induced permutation group, when small enough to enumerate.
  std::optional<Int> group_order;
};

/// Orbit closure under the generators; throws BadParameter for a singular matrix.
OrbitResult point_orbits(std::span<const Collineation> gens, const ProjectiveSpace& space,
                         std::size_t enumerate_limit = 100000);

/// |PGL(n,q)| = prod_{i<n}(q^n - q^i) / (q - 1).
Int pgl_order(unsigned n, Int q);

inline constexpr std::uint64_t kDefaultBruteForceLimit = 20'000'000;

struct StabilizerCertificate {
  Int order;                       // number of collineations preserving the set
  bool transitive_on_set = false;
  bool transitive_on_complement = false;
  OrbitPartition orbits;           // stabilizer orbits on all points
};

/// Enumerates every semilinear collineation of the space and keeps those that
/// preserve `s` setwise. Columns of the matrix are chosen one at a time (first
/// column canonical, the rest independent of the earlier ones) and a branch is
/// cut as soon as a member supported on the chosen columns leaves the set.
/// Throws GroupTooLarge when |PGL|*h exceeds `limit`.
StabilizerCertificate setwise_stabilizer_bruteforce(const PointSet& s,
                                                    std::uint64_t limit = kDefaultBruteForceLimit,
                                                    unsigned workers = 1);

struct CotransitivityVerdict {
  bool constant = false;
  std::uint64_t min = 0, max = 0;
  Rational expected;
  bool pass = false;
};

/// Constant chord profile equal to the integer k(k-1)(q-1)/2m: necessary for
/// co-transitivity. Throws NotACap.
CotransitivityVerdict cotransitivity_necessary(const PointSet& s);

}  // namespace capgeom
