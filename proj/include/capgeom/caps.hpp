#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "capgeom/projective.hpp"
#include "capgeom/rational.hpp"

namespace capgeom {

/// Sorted, duplicate-free set of points of one projective space, with a
/// bitmask for O(1) membership. Holds a reference to the space, which must
/// outlive it.
class PointSet {
 public:
  PointSet(const ProjectiveSpace& space, std::vector<PointId> members);

  const ProjectiveSpace& space() const { return *space_; }
  std::span<const PointId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(PointId id) const {
    return id < space_->size() && (bits_[id >> 6] >> (id & 63)) & 1u;
  }
  /// Points of the space not in the set, ascending.
  std::vector<PointId> complement() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.members_ == b.members_;
  }

 private:
  const ProjectiveSpace* space_;
  std::vector<PointId> members_;
  std::vector<std::uint64_t> bits_;
};

using Triple = std::array<PointId, 3>;

struct CapCheck {
  bool is_cap = true;
  /// Ascending collinear triple inside the set, present iff !is_cap.
  std::optional<Triple> witness;
};

/// Scans member pairs in lexicographic order; the first pair whose line holds
/// another member yields the witness (smallest such third member).
CapCheck is_cap(const PointSet& s);
/// Throws NotACap.
bool is_complete(const PointSet& s);

/// Number of unordered member pairs whose line passes through x.
/// Throws PointInSet.
std::uint64_t chord_number(const PointSet& s, PointId x);

struct ChordProfile {
  std::vector<PointId> external;       // ascending
  std::vector<std::uint64_t> counts;   // counts[i] is the chord number of external[i]
  std::uint64_t min = 0, max = 0;
  bool is_constant() const { return min == max; }
  /// Sum of all counts.
  Int total() const;
};

/// Chord numbers of every external point. Throws NotACap.
ChordProfile chord_profile(const PointSet& s);

/// k(k-1)(q-1) / (2m), reduced.
Rational expected_chord_number(Int k, Int m, Int q);
inline bool chord_integrality(const Rational& c) { return c.is_integer(); }

struct OrbitSizes {
  Int k;  // smaller point orbit
  Int m;  // larger point orbit
};
/// Point-orbit sizes of the SL(5,q) skew-square action on PG(9,q).
OrbitSizes a8_orbit_sizes(Int q);
/// Point-orbit sizes of the D5(q) spin-module action on PG(15,q).
OrbitSizes a10_orbit_sizes(Int q);
/// (q^2+1)(q^3+q+1) / 2q.
Rational chord_formula_a8(Int q);
/// (q^3+1)(q^5+q^2+1) / 2q^2.
Rational chord_formula_a10(Int q);

struct CapBound {
  Int value;
  bool exact = false;
};
/// Known value or upper bound for the largest cap in PG(r,q); r >= 2, q >= 2.
CapBound cap_size_bound(int r, Int q);

enum class MajorityVerdict { Smaller, HyperplaneComplement, Violation };
const char* to_string(MajorityVerdict v);

/// Either the cap is smaller than half the space, or q = 2 and its complement
/// is a hyperplane. Throws NotACap.
MajorityVerdict complement_majority_check(const PointSet& s);

inline constexpr std::size_t kDefaultSearchLimit = 121;

struct SearchResult {
  std::size_t max_size = 0;
  std::vector<PointId> example;  // first maximum cap in lexicographic DFS order
  std::uint64_t nodes = 0;
};

/// Exhaustive depth-first search for the largest cap. Candidates are added in
/// increasing PointId order and must avoid every chord of the current cap.
/// Throws SpaceTooLargeForSearch.
SearchResult complete_cap_search(const ProjectiveSpace& space, std::size_t limit = kDefaultSearchLimit);

}  // namespace capgeom
