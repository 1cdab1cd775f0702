#include "capgeom/caps.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "capgeom/error.hpp"

namespace capgeom {

PointSet::PointSet(const ProjectiveSpace& space, std::vector<PointId> members)
    : space_(&space), members_(std::move(members)), bits_((space.size() + 63) / 64, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (PointId id : members_) {
    if (id >= space.size()) throw Error(ErrorCode::BadParameter, "PointId out of range");
    bits_[id >> 6] |= std::uint64_t(1) << (id & 63);
  }
}

std::vector<PointId> PointSet::complement() const {
  std::vector<PointId> out;
  out.reserve(space_->size() - members_.size());
  for (PointId id = 0; id < space_->size(); ++id)
    if (!contains(id)) out.push_back(id);
  return out;
}

CapCheck is_cap(const PointSet& s) {
  const auto& space = s.space();
  auto m = s.members();
  std::vector<PointId> interior;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      interior.clear();
      space.line_interior(m[i], m[j], interior);
      std::optional<PointId> third;
      for (PointId x : interior)
        if (s.contains(x) && (!third || x < *third)) third = x;
      if (third) {
        Triple t{m[i], m[j], *third};
        std::sort(t.begin(), t.end());
        return {false, t};
      }
    }
  return {true, std::nullopt};
}

namespace {
// Marks every point on a chord of s (members included).
std::vector<char> chord_cover(const PointSet& s) {
  const auto& space = s.space();
  auto m = s.members();
  std::vector<char> covered(space.size(), 0);
  std::vector<PointId> interior;
  for (PointId x : m) covered[x] = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      interior.clear();
      space.line_interior(m[i], m[j], interior);
      for (PointId x : interior) covered[x] = 1;
    }
  return covered;
}

void require_cap(const PointSet& s) {
  if (!is_cap(s).is_cap) throw Error(ErrorCode::NotACap, "point set is not a cap");
}
}  // namespace

bool is_complete(const PointSet& s) {
  require_cap(s);
  auto covered = chord_cover(s);
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::uint64_t chord_number(const PointSet& s, PointId x) {
  if (s.contains(x)) throw Error(ErrorCode::PointInSet, "chord number is defined for external points");
  // Each line through x with t members is seen t times, contributing C(t,2).
  const auto& space = s.space();
  std::vector<PointId> interior;
  std::uint64_t twice = 0;
  for (PointId a : s.members()) {
    interior.clear();
    space.line_interior(x, a, interior);
    for (PointId y : interior)
      if (y != a && s.contains(y)) ++twice;
  }
  return twice / 2;
}

Int ChordProfile::total() const {
  Int sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

ChordProfile chord_profile(const PointSet& s) {
  require_cap(s);
  const auto& space = s.space();
  std::vector<std::uint64_t> per_point(space.size(), 0);
  auto m = s.members();
  std::vector<PointId> interior;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      interior.clear();
      space.line_interior(m[i], m[j], interior);
      for (PointId x : interior) ++per_point[x];
    }
  ChordProfile out;
  out.external = s.complement();
  out.counts.reserve(out.external.size());
  for (PointId x : out.external) out.counts.push_back(per_point[x]);
  if (!out.counts.empty()) {
    auto [lo, hi] = std::minmax_element(out.counts.begin(), out.counts.end());
    out.min = *lo;
    out.max = *hi;
  }
  return out;
}

Rational expected_chord_number(Int k, Int m, Int q) {
  if (m < 1 || q < 2 || k < 0) throw Error(ErrorCode::BadParameter, "chord number needs m >= 1, q >= 2");
  return Rational(k * (k - 1) * (q - 1), 2 * m);
}

OrbitSizes a8_orbit_sizes(Int q) {
  return {(ipow(q, 5) - 1) * (q * q + 1) / (q - 1),
          q * q * (ipow(q, 5) - 1) * (ipow(q, 3) - 1) / (q - 1)};
}

OrbitSizes a10_orbit_sizes(Int q) {
  return {(ipow(q, 8) - 1) * (ipow(q, 3) + 1) / (q - 1),
          ipow(q, 3) * (ipow(q, 8) - 1) * (ipow(q, 5) - 1) / (q - 1)};
}

Rational chord_formula_a8(Int q) { return Rational((q * q + 1) * (ipow(q, 3) + q + 1), 2 * q); }

Rational chord_formula_a10(Int q) {
  return Rational((ipow(q, 3) + 1) * (ipow(q, 5) + q * q + 1), 2 * q * q);
}

CapBound cap_size_bound(int r, Int q) {
  if (r < 2 || q < 2) throw Error(ErrorCode::BadParameter, "cap bound needs r >= 2 and q >= 2");
  if (q == 2) return {ipow(2, static_cast<unsigned>(r)), true};
  if (r == 2) return {q % 2 == 1 ? q + 1 : q + 2, true};
  if (r == 3) return {q * q + 1, true};
  return {ipow(q, static_cast<unsigned>(r - 1)), false};
}

const char* to_string(MajorityVerdict v) {
  switch (v) {
    case MajorityVerdict::Smaller: return "smaller";
    case MajorityVerdict::HyperplaneComplement: return "hyperplane-complement";
    case MajorityVerdict::Violation: return "violation";
  }
  return "?";
}

MajorityVerdict complement_majority_check(const PointSet& s) {
  require_cap(s);
  const auto& space = s.space();
  const std::uint64_t q = space.q();
  // |s| < (q^{r+1}-1) / (2(q-1))  <=>  2|s| < |PG(r,q)|
  if (2 * s.size() < space.size()) return MajorityVerdict::Smaller;
  if (q != 2) return MajorityVerdict::Violation;
  const auto complement = s.complement();
  for (PointId c = 0; c < space.size(); ++c)
    if (space.hyperplane_points(space.point(c)) == complement) return MajorityVerdict::HyperplaneComplement;
  return MajorityVerdict::Violation;
}

namespace {

class CapSearch {
 public:
  explicit CapSearch(const ProjectiveSpace& space)
      : n_(space.size()), words_((n_ + 63) / 64), lines_(n_ * n_ * words_, 0) {
    std::vector<PointId> interior;
    for (PointId a = 0; a < n_; ++a)
      for (PointId b = a + 1; b < n_; ++b) {
        interior.clear();
        space.line_interior(a, b, interior);
        for (PointId x : interior) {
          set(line(a, b), x);
          set(line(b, a), x);
        }
      }
  }

  SearchResult run() {
    std::vector<std::uint64_t> blocked(words_, 0);
    recurse(blocked, 0);
    result_.max_size = result_.example.size();
    return result_;
  }

 private:
  std::uint64_t* line(PointId a, PointId b) { return &lines_[(std::size_t(a) * n_ + b) * words_]; }
  static void set(std::uint64_t* bits, PointId x) { bits[x >> 6] |= std::uint64_t(1) << (x & 63); }
  static bool test(const std::uint64_t* bits, PointId x) { return (bits[x >> 6] >> (x & 63)) & 1u; }

  // Free points with id >= from.
  std::size_t count_free(const std::vector<std::uint64_t>& blocked, PointId from) const {
    std::size_t c = 0;
    for (std::size_t w = from >> 6; w < words_; ++w) {
      std::uint64_t free = ~blocked[w];
      if (w == (from >> 6)) free &= ~std::uint64_t(0) << (from & 63);
      if (w == words_ - 1 && (n_ & 63)) free &= (std::uint64_t(1) << (n_ & 63)) - 1;
      c += std::popcount(free);
    }
    return c;
  }

  void recurse(std::vector<std::uint64_t>& blocked, PointId from) {
    ++result_.nodes;
    if (current_.size() > result_.example.size()) result_.example = current_;
    if (current_.size() + count_free(blocked, from) <= result_.example.size()) return;
    for (PointId x = from; x < n_; ++x) {
      if (test(blocked.data(), x)) continue;
      if (current_.size() + count_free(blocked, x) <= result_.example.size()) return;
      std::vector<std::uint64_t> next(blocked);
      set(next.data(), x);
      for (PointId c : current_) {
        const std::uint64_t* l = line(x, c);
        for (std::size_t w = 0; w < words_; ++w) next[w] |= l[w];
      }
      current_.push_back(x);
      recurse(next, x + 1);
      current_.pop_back();
    }
  }

  std::size_t n_, words_;
  std::vector<std::uint64_t> lines_;
  std::vector<PointId> current_;
  SearchResult result_;
};

}  // namespace

SearchResult complete_cap_search(const ProjectiveSpace& space, std::size_t limit) {
  if (space.size() > limit)
    throw Error(ErrorCode::SpaceTooLargeForSearch,
                space.name() + " has " + std::to_string(space.size()) + " points (limit " +
                    std::to_string(limit) + ")");
  return CapSearch(space).run();
}

}  // namespace capgeom
