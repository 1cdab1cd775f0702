#include "capgeom/singer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "capgeom/error.hpp"

namespace capgeom {

namespace {

// y = beta * x in the basis 1, beta, ..., beta^{a-1}, beta a root of `poly`.
void times_beta(const Field& f, std::span<const Elem> poly, std::span<const Elem> x, std::span<Elem> y) {
  const std::size_t a = x.size();
  const Elem top = x[a - 1];
  for (std::size_t i = 0; i < a; ++i) {
    Elem shifted = i == 0 ? 0 : x[i - 1];
    y[i] = f.sub(shifted, f.mul(top, poly[i]));
  }
}

bool is_primitive_over(const Field& f, const std::vector<Elem>& poly, std::uint64_t order) {
  if (poly[0] == 0) return false;
  const std::size_t a = poly.size() - 1;
  Vec x(a, 0), y(a, 0);
  x[0] = 1;
  for (std::uint64_t i = 1; i <= order; ++i) {
    times_beta(f, poly, x, y);
    std::swap(x, y);
    bool is_one = x[0] == 1 && std::all_of(x.begin() + 1, x.end(), [](Elem e) { return e == 0; });
    if (is_one) return i == order;
  }
  return false;
}

}  // namespace

SingerCycle build_singer(const ProjectiveSpace& space) {
  const Field& f = space.field();
  const std::size_t a = space.coords();
  const std::uint64_t q = f.q();
  std::uint64_t qa = 1;
  for (std::size_t i = 0; i < a; ++i) qa *= q;

  SingerCycle cycle;
  cycle.space = &space;
  cycle.n = space.size();

  std::vector<Elem> poly(a + 1, 0);
  poly[a] = 1;
  bool found = false;
  for (std::uint64_t idx = 0; idx < qa && !found; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = a; i-- > 0;) {
      poly[i] = static_cast<Elem>(t % q);
      t /= q;
    }
    found = is_primitive_over(f, poly, qa - 1);
  }
  if (!found) throw Error(ErrorCode::BadParameter, "no primitive polynomial for " + space.name());
  cycle.polynomial = poly;

  cycle.matrix = Matrix(a, a);
  for (std::size_t i = 1; i < a; ++i) cycle.matrix(i, i - 1) = 1;
  for (std::size_t i = 0; i < a; ++i) cycle.matrix(i, a - 1) = f.neg(poly[i]);

  cycle.perm.resize(space.size());
  Vec y(a);
  for (PointId x = 0; x < space.size(); ++x) {
    Vec v = space.point(x);
    times_beta(f, poly, v, y);
    cycle.perm[x] = space.id_of(y);
  }

  cycle.point_at.reserve(space.size());
  cycle.log.assign(space.size(), 0);
  PointId x = 0;
  do {
    cycle.log[x] = static_cast<std::uint32_t>(cycle.point_at.size());
    cycle.point_at.push_back(x);
    x = cycle.perm[x];
  } while (x != 0 && cycle.point_at.size() <= space.size());
  if (cycle.point_at.size() != space.size())
    throw Error(ErrorCode::BadParameter, "companion matrix is not regular on " + space.name());
  return cycle;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

OrbitPartition subgroup_orbits(const SingerCycle& cycle, std::uint64_t N) {
  if (N == 0 || cycle.n % N != 0)
    throw Error(ErrorCode::NotADivisor, std::to_string(N) + " does not divide " + std::to_string(cycle.n));
  std::vector<std::uint32_t> label(cycle.n);
  for (std::uint64_t k = 0; k < cycle.n; ++k) label[cycle.point_at[k]] = static_cast<std::uint32_t>(k % N);
  return OrbitPartition::from_labels(label);
}

std::vector<CapCheck> orbit_cap_filter(const ProjectiveSpace& space, const OrbitPartition& partition) {
  std::vector<CapCheck> out;
  out.reserve(partition.size());
  for (const auto& orbit : partition.orbits) out.push_back(is_cap(PointSet(space, orbit)));
  return out;
}

namespace {

class UnionSearch {
 public:
  UnionSearch(const ProjectiveSpace& space, const OrbitPartition& partition, std::size_t target,
              std::uint64_t node_limit)
      : space_(space), target_(target), node_limit_(node_limit) {
    for (std::size_t i = 0; i < partition.size(); ++i)
      if (partition.orbits[i].size() <= target && is_cap(PointSet(space, partition.orbits[i])).is_cap)
        usable_.push_back(&partition.orbits[i]);
    // suffix sums bound the reachable size
    suffix_.assign(usable_.size() + 1, 0);
    for (std::size_t i = usable_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + usable_[i]->size();
  }

  UnionSearchResult run() {
    std::vector<char> blocked(space_.size(), 0);
    recurse(0, blocked);
    return std::move(result_);
  }

 private:
  // blocked: members of the current union and every point on one of its chords.
  void recurse(std::size_t from, const std::vector<char>& blocked) {
    if (++result_.nodes > node_limit_)
      throw Error(ErrorCode::SearchTooLarge, "orbit union search exceeded its node limit");
    if (current_.size() == target_) {
      auto sorted = current_;
      std::sort(sorted.begin(), sorted.end());
      result_.caps.push_back(std::move(sorted));
      return;
    }
    if (current_.size() + suffix_[from] < target_) return;
    for (std::size_t i = from; i < usable_.size(); ++i) {
      const auto& orbit = *usable_[i];
      if (current_.size() + orbit.size() > target_) continue;
      if (std::any_of(orbit.begin(), orbit.end(), [&](PointId x) { return blocked[x] != 0; })) continue;
      std::vector<char> member(space_.size(), 0);
      for (PointId c : current_) member[c] = 1;
      for (PointId x : orbit) member[x] = 1;
      std::vector<char> next(blocked);
      if (!add_chords(orbit, member, next)) continue;
      const std::size_t before = current_.size();
      current_.insert(current_.end(), orbit.begin(), orbit.end());
      recurse(i + 1, next);
      current_.resize(before);
    }
  }

  // Marks the chords that the orbit adds; false when a chord between the orbit
  // and the current union meets a third member.
  bool add_chords(const std::vector<PointId>& orbit, const std::vector<char>& member,
                  std::vector<char>& next) {
    interior_.clear();
    for (PointId x : orbit) {
      next[x] = 1;
      for (PointId c : current_) {
        const std::size_t from = interior_.size();
        space_.line_interior(x, c, interior_);
        for (std::size_t k = from; k < interior_.size(); ++k)
          if (member[interior_[k]]) return false;
      }
    }
    for (std::size_t a = 0; a < orbit.size(); ++a)
      for (std::size_t b = a + 1; b < orbit.size(); ++b) space_.line_interior(orbit[a], orbit[b], interior_);
    for (PointId y : interior_) next[y] = 1;
    return true;
  }

  const ProjectiveSpace& space_;
  std::size_t target_;
  std::uint64_t node_limit_;
  std::vector<const std::vector<PointId>*> usable_;
  std::vector<std::size_t> suffix_;
  std::vector<PointId> current_;
  std::vector<PointId> interior_;
  UnionSearchResult result_;
};

bool subset_sum_reachable(const OrbitPartition& partition, std::size_t target) {
  std::vector<char> reach(target + 1, 0);
  reach[0] = 1;
  for (const auto& o : partition.orbits)
    for (std::size_t t = target; t >= o.size() && t > 0; --t)
      if (reach[t - o.size()]) reach[t] = 1;
  return reach[target] != 0;
}

}  // namespace

UnionSearchResult orbit_union_cap_search(const ProjectiveSpace& space, const OrbitPartition& partition,
                                         std::size_t target, std::uint64_t node_limit) {
  if (target == 0 || !subset_sum_reachable(partition, target))
    throw Error(ErrorCode::TargetInfeasible, "no union of orbits has " + std::to_string(target) + " points");
  return UnionSearch(space, partition, target, node_limit).run();
}

Collineation frobenius_collineation(const SingerCycle& cycle) {
  const ProjectiveSpace& space = *cycle.space;
  const Field& f = space.field();
  const std::size_t a = space.coords();
  // Column i holds beta^{p i}.
  Collineation phi;
  phi.matrix = Matrix(a, a);
  phi.frobenius_power = 1 % f.h();
  Vec x(a, 0), y(a, 0);
  x[0] = 1;
  std::uint64_t power = 0;
  for (std::size_t i = 0; i < a; ++i) {
    const std::uint64_t want = static_cast<std::uint64_t>(f.p()) * i;
    while (power < want) {
      times_beta(f, cycle.polynomial, x, y);
      std::swap(x, y);
      ++power;
    }
    for (std::size_t r = 0; r < a; ++r) phi.matrix(r, i) = x[r];
  }
  return phi;
}

bool TransitiveOrbitSearch::found() const {
  return std::any_of(divisors.begin(), divisors.end(),
                     [](const DivisorRecord& r) { return !r.cotransitive_caps.empty(); });
}

std::size_t TransitiveOrbitSearch::transitive_caps() const {
  std::size_t total = 0;
  for (const auto& r : divisors) total += r.caps.size();
  return total;
}

TransitiveOrbitSearch singer_transitive_cap_search(const SingerCycle& cycle, std::uint64_t target) {
  const ProjectiveSpace& space = *cycle.space;
  const Field& f = space.field();
  const std::uint64_t n = cycle.n;

  TransitiveOrbitSearch out;
  out.n = n;
  out.frobenius_order = f.h() * static_cast<unsigned>(space.coords());

  // phi^s(P_k) = P_{p^s k + c_s}: read c_s off the computed permutation and
  // confirm the affine form on every point.
  const Permutation phi = as_permutation(space, frobenius_collineation(cycle));
  std::vector<std::uint64_t> mult(out.frobenius_order + 1), shift(out.frobenius_order + 1);
  {
    Permutation phi_s(space.size());
    std::iota(phi_s.begin(), phi_s.end(), 0u);
    std::uint64_t m = 1;
    for (unsigned s = 1; s <= out.frobenius_order; ++s) {
      for (auto& x : phi_s) x = phi[x];
      m = (m * f.p()) % n;
      mult[s] = m;
      shift[s] = cycle.log[phi_s[cycle.point_at[0]]];
      for (std::uint64_t k = 0; k < n; ++k)
        if (cycle.log[phi_s[cycle.point_at[k]]] != (m * k + shift[s]) % n)
          throw Error(ErrorCode::BadParameter, "Frobenius does not normalize the Singer cycle");
    }
  }

  for (std::uint64_t N : divisors(n)) {
    DivisorRecord rec;
    rec.N = N;
    rec.orbit_size = n / N;
    rec.feasible = target % rec.orbit_size == 0;
    if (rec.feasible) {
      const std::uint64_t cycle_len = target / rec.orbit_size;
      // residue classes mod N -> some group also has the complement as one orbit
      std::map<std::vector<std::uint32_t>, bool> seen;
      std::vector<char> visited(N);
      for (unsigned s = 1; s <= out.frobenius_order; ++s)
        for (std::uint64_t e = 0; e < N; ++e) {
          ++rec.groups;
          const std::uint64_t u = mult[s] % N, b = (shift[s] + e) % N;
          std::fill(visited.begin(), visited.end(), 0);
          std::vector<std::vector<std::uint32_t>> hits;
          std::uint64_t cycles = 0;
          for (std::uint64_t start = 0; start < N; ++start) {
            if (visited[start]) continue;
            std::vector<std::uint32_t> classes;
            std::uint64_t k = start;
            while (!visited[k]) {
              visited[k] = 1;
              classes.push_back(static_cast<std::uint32_t>(k));
              k = (u * k + b) % N;
            }
            ++cycles;
            if (classes.size() != cycle_len) continue;
            std::sort(classes.begin(), classes.end());
            hits.push_back(std::move(classes));
          }
          const bool two_orbits = cycles == 2;
          for (auto& classes : hits) seen[std::move(classes)] |= two_orbits;
        }
      rec.candidates = seen.size();
      for (const auto& [classes, cotransitive] : seen) {
        std::vector<PointId> pts;
        pts.reserve(target);
        for (std::uint32_t c : classes)
          for (std::uint64_t k = c; k < n; k += N) pts.push_back(cycle.point_at[k]);
        PointSet set(space, pts);
        if (!is_cap(set).is_cap) continue;
        rec.caps.emplace_back(set.members().begin(), set.members().end());
        if (cotransitive) rec.cotransitive_caps.push_back(rec.caps.back());
      }
    }
    out.divisors.push_back(std::move(rec));
  }
  return out;
}

FKLengths fk_orbit_lengths(const FKParams& params) {
  if (params.v == 0 || params.m1 == 0) throw Error(ErrorCode::BadParameter, "v and m1 must be positive");
  const Int total = ipow(Int(params.p), static_cast<unsigned>(params.d)) - 1;
  const Int N = Int(params.N());
  if (total % N != 0)
    throw Error(ErrorCode::DivisibilityViolation, "N = " + N.str() + " does not divide p^d - 1 = " + total.str());
  const Int len1 = Int(params.m1) * total / N;
  return {len1, Int(params.v - 1) * len1};
}

namespace {
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m <= 1 || std::gcd(a % m, m) != 1) return 0;
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = x * (a % m) % m;
    ++k;
  }
  return k;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * a % m);
    a = static_cast<std::uint64_t>((unsigned __int128)a * a % m);
    e >>= 1;
  }
  return r;
}
}  // namespace

std::vector<FKCondition> fk_conditions(const FKParams& P) {
  std::vector<FKCondition> out;
  out.push_back({"v is an odd prime", P.v != 2 && is_prime(P.v)});
  bool primes_ok = P.s > 0;
  {
    std::uint64_t m = P.m1;
    const Int ps1 = ipow(Int(P.p), static_cast<unsigned>(P.s)) - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        if (ps1 % Int(d) != 0) primes_ok = false;
        while (m % d == 0) m /= d;
      }
    if (m > 1 && ps1 % Int(m) != 0) primes_ok = false;
  }
  out.push_back({"every prime of m1 divides p^s - 1", primes_ok});
  bool ord_ok = P.v > 2 && is_prime(P.v) &&
                multiplicative_order(pow_mod(P.p, P.s * P.m1, P.v), P.v) == P.v - 1;
  out.push_back({"ord_v(p^(s m1)) = v - 1", ord_ok});
  out.push_back({"gcd(e, m1) = 1", std::gcd(P.e, P.m1) == 1});
  const std::uint64_t step = P.m1 * P.s * (P.v > 0 ? P.v - 1 : 0);
  out.push_back({"m1 s (v-1) divides d", step != 0 && P.d % step == 0});
  const Int total = ipow(Int(P.p), static_cast<unsigned>(P.d)) - 1;
  out.push_back({"N = v m1 divides p^d - 1", P.N() != 0 && total % Int(P.N()) == 0});
  return out;
}

const char* to_string(ParityVerdict v) {
  return v == ParityVerdict::Incompatible ? "incompatible" : "not-refuted-by-parity";
}

ParityVerdict a1_parity_refutation(std::uint64_t p, std::uint64_t d, std::uint64_t q,
                                   std::uint64_t point_size) {
  if (p != 2) throw Error(ErrorCode::BadParameter, "the parity argument needs p = 2");
  (void)d;  // 2^d - 1 is odd for every d, so every divisor quotient is odd.
  const Int vectors = Int(point_size) * Int(q - 1);
  return vectors % 2 == 0 ? ParityVerdict::Incompatible : ParityVerdict::NotRefutedByParity;
}

}  // namespace capgeom
