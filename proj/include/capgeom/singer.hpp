#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capgeom/caps.hpp"
#include "capgeom/group_orbits.hpp"
#include "capgeom/projective.hpp"
#include "capgeom/rational.hpp"

namespace capgeom {

/// A cyclic collineation group acting regularly on the points of PG(r,q),
/// generated by the companion matrix of a primitive polynomial of degree r+1.
struct SingerCycle {
  const ProjectiveSpace* space = nullptr;
  /// Monic primitive polynomial over GF(q), constant term first.
  std::vector<Elem> polynomial;
  Matrix matrix;
  std::uint64_t n = 0;
  /// Image of each point under the companion matrix.
  Permutation perm;
  /// point_at[k] = sigma^k(point 0); log is its inverse.
  std::vector<PointId> point_at;
  std::vector<std::uint32_t> log;
};

/// Companion matrix of the lexicographically least primitive polynomial of
/// degree r+1 over GF(q). Throws SpaceTooLarge.
SingerCycle build_singer(const ProjectiveSpace& space);

/// Divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Orbits of <sigma^N>: N orbits of size n/N. Throws NotADivisor.
OrbitPartition subgroup_orbits(const SingerCycle& cycle, std::uint64_t N);

/// is_cap on every orbit.
std::vector<CapCheck> orbit_cap_filter(const ProjectiveSpace& space, const OrbitPartition& partition);

struct UnionSearchResult {
  /// Cap unions of total size `target`, each ascending, in discovery order.
  std::vector<std::vector<PointId>> caps;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultUnionNodeLimit = 50'000'000;

/// Every union of whole orbits with `target` points that is a cap. Orbits
/// that are not caps themselves are never used, and a branch stops as soon as
/// the union stops being a cap. Throws TargetInfeasible when no sub-multiset of
/// orbit sizes sums to `target`, SearchTooLarge past `node_limit`.
UnionSearchResult orbit_union_cap_search(const ProjectiveSpace& space, const OrbitPartition& partition,
                                         std::size_t target,
                                         std::uint64_t node_limit = kDefaultUnionNodeLimit);

/// The map X -> X^p of GF(q^{r+1}) in the polynomial basis of the Singer
/// cycle, as a semilinear collineation of PG(r,q). Its order is h(r+1).
Collineation frobenius_collineation(const SingerCycle& cycle);

/// Records for one divisor N of n in the search for a transitive cap inside
/// the semilinear Singer normalizer.
struct DivisorRecord {
  std::uint64_t N = 0;
  std::uint64_t orbit_size = 0;      // n/N
  bool feasible = false;             // orbit_size divides the target
  std::uint64_t groups = 0;          // (e, s) pairs examined
  std::uint64_t candidates = 0;      // distinct orbits of the target size
  std::vector<std::vector<PointId>> caps;              // G transitive on the cap
  std::vector<std::vector<PointId>> cotransitive_caps; // ... and on its complement
};

struct TransitiveOrbitSearch {
  std::uint64_t n = 0;
  unsigned frobenius_order = 0;      // d = h(r+1)
  std::vector<DivisorRecord> divisors;
  /// A cap with a group transitive on it and on its complement.
  bool found() const;
  std::size_t transitive_caps() const;
};

/// For every divisor N of n and every group G = <sigma^N, sigma^e phi^s>
/// (0 <= e < N, 1 <= s <= d, phi the p-th power map), collects the G-orbits of
/// exactly `target` points and tests each for the cap property. A cap counts
/// as co-transitive when the same G has the complement as its only other
/// orbit. A transitive cap whose group lies in the semilinear Singer
/// normalizer is one of these.
TransitiveOrbitSearch singer_transitive_cap_search(const SingerCycle& cycle, std::uint64_t target);

struct FKParams {
  std::uint64_t p = 0, d = 0, s = 0, m1 = 0, v = 0, e = 0;
  std::uint64_t N() const { return v * m1; }
};

struct FKLengths {
  Int len1, len2;
};

/// m1(p^d-1)/N and (v-1)m1(p^d-1)/N. Throws DivisibilityViolation.
FKLengths fk_orbit_lengths(const FKParams& params);

struct FKCondition {
  std::string name;
  bool holds = false;
};
/// The arithmetic side conditions on (p, d, s, m1, v, e), each evaluated.
std::vector<FKCondition> fk_conditions(const FKParams& params);

enum class ParityVerdict { Incompatible, NotRefutedByParity };
const char* to_string(ParityVerdict v);

/// For p = 2 the smaller vector orbit m1(2^d-1)/N is odd; a point orbit of
/// size k corresponds to k(q-1) vectors. Throws BadParameter unless p = 2.
ParityVerdict a1_parity_refutation(std::uint64_t p, std::uint64_t d, std::uint64_t q,
                                   std::uint64_t point_size);

}  // namespace capgeom
