#include "capgeom/group_orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "capgeom/error.hpp"

namespace capgeom {

Vec apply(const Field& f, const Collineation& g, std::span<const Elem> x) {
  if (g.matrix.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "collineation dimension");
  if (g.frobenius_power == 0) return multiply(f, g.matrix, x);
  Vec y(x.begin(), x.end());
  for (auto& e : y) e = f.frobenius(e, g.frobenius_power);
  return multiply(f, g.matrix, y);
}

PointId apply(const ProjectiveSpace& space, const Collineation& g, PointId x) {
  return space.id_of(apply(space.field(), g, space.point(x)));
}

Collineation compose(const Field& f, const Collineation& outer, const Collineation& inner) {
  // outer(inner(x)) = A phi^a (B phi^b x) = A phi^a(B) phi^{a+b} x
  Matrix b = inner.matrix;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = f.frobenius(b(i, j), outer.frobenius_power);
  Collineation out{multiply(f, outer.matrix, b), (outer.frobenius_power + inner.frobenius_power) % f.h()};
  if (rank(f, out.matrix) != out.matrix.rows()) throw Error(ErrorCode::BadParameter, "singular matrix");
  return out;
}

Permutation as_permutation(const ProjectiveSpace& space, const Collineation& g) {
  if (g.matrix.rows() != space.coords() || g.matrix.cols() != space.coords())
    throw Error(ErrorCode::DimensionMismatch, "collineation does not match " + space.name());
  if (rank(space.field(), g.matrix) != space.coords())
    throw Error(ErrorCode::BadParameter, "collineation matrix is singular");
  Permutation perm(space.size());
  for (PointId x = 0; x < space.size(); ++x) perm[x] = apply(space, g, x);
  return perm;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> labels() {
    std::vector<std::uint32_t> out(parent.size());
    for (std::uint32_t x = 0; x < parent.size(); ++x) out[x] = find(x);
    return out;
  }
  std::vector<std::uint32_t> parent;
};

}  // namespace

OrbitPartition OrbitPartition::from_labels(std::span<const std::uint32_t> label) {
  OrbitPartition out;
  out.orbit_of.assign(label.size(), 0);
  std::map<std::uint32_t, std::uint32_t> index;
  for (std::uint32_t x = 0; x < label.size(); ++x) {
    auto [it, inserted] = index.emplace(label[x], static_cast<std::uint32_t>(out.orbits.size()));
    if (inserted) out.orbits.emplace_back();
    out.orbits[it->second].push_back(x);
    out.orbit_of[x] = it->second;
  }
  return out;
}

OrbitPartition permutation_orbits(std::size_t n, std::span<const Permutation> gens) {
  UnionFind uf(n);
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "permutation length");
    for (std::uint32_t x = 0; x < n; ++x) uf.unite(x, g[x]);
  }
  auto labels = uf.labels();
  return OrbitPartition::from_labels(labels);
}

OrbitResult point_orbits(std::span<const Collineation> gens, const ProjectiveSpace& space,
                         std::size_t enumerate_limit) {
  std::vector<Permutation> perms;
  perms.reserve(gens.size());
  for (const auto& g : gens) perms.push_back(as_permutation(space, g));

  OrbitResult out;
  out.partition = permutation_orbits(space.size(), perms);
  out.generators = gens.size();

  // Closure of the induced permutation group, abandoned past the limit.
  Permutation id(space.size());
  std::iota(id.begin(), id.end(), 0u);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  bool complete = true;
  while (!frontier.empty() && complete) {
    std::vector<Permutation> next;
    for (const auto& a : frontier)
      for (const auto& g : perms) {
        Permutation c(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) c[x] = g[a[x]];
        if (seen.insert(c).second) {
          if (seen.size() > enumerate_limit) {
            complete = false;
            break;
          }
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  if (complete) out.group_order = Int(seen.size());
  return out;
}

Int pgl_order(unsigned n, Int q) {
  if (n < 1 || q < 2) throw Error(ErrorCode::BadParameter, "pgl_order needs n >= 1, q >= 2");
  Int qn = ipow(q, n);
  Int prod = 1;
  for (unsigned i = 0; i < n; ++i) prod *= qn - ipow(q, i);
  return prod / (q - 1);
}

namespace {

class StabilizerSearch {
 public:
  StabilizerSearch(const PointSet& s, unsigned frob)
      : s_(s), space_(s.space()), f_(space_.field()), n_(space_.coords()), frob_(frob) {
    const std::uint64_t q = f_.q();
    codes_ = 1;
    for (std::size_t i = 0; i < n_; ++i) codes_ *= q;
    vec_of_code_.resize(codes_);
    point_of_code_.assign(codes_, 0);
    for (std::uint64_t c = 0; c < codes_; ++c) {
      Vec v(n_);
      std::uint64_t t = c;
      for (std::size_t i = n_; i-- > 0;) {
        v[i] = static_cast<Elem>(t % q);
        t /= q;
      }
      if (c != 0) point_of_code_[c] = space_.id_of(v);
      vec_of_code_[c] = std::move(v);
    }
    by_top_.resize(n_);
    for (PointId x : s.members()) {
      Vec v = space_.point(x);
      for (auto& e : v) e = f_.frobenius(e, frob_);
      std::size_t top = n_ - 1;
      while (v[top] == 0) --top;
      by_top_[top].push_back(std::move(v));
    }
    all_points_.reserve(space_.size());
    for (PointId x = 0; x < space_.size(); ++x) {
      Vec v = space_.point(x);
      for (auto& e : v) e = f_.frobenius(e, frob_);
      all_points_.push_back(std::move(v));
    }
  }

  // Runs every first column whose canonical index is congruent to `worker`
  // modulo `workers`.
  void run(unsigned worker, unsigned workers, Int& count, UnionFind& uf) {
    count_ = &count;
    uf_ = &uf;
    columns_.assign(n_, Vec(n_, 0));
    for (PointId c0 = worker; c0 < space_.size(); c0 += workers) {
      columns_[0] = space_.point(c0);
      if (!members_ok(0)) continue;
      std::vector<char> span(codes_, 0);
      span[0] = 1;
      extend_span(span, 0);
      recurse(1, span);
    }
  }

 private:
  std::uint64_t code(std::span<const Elem> v) const {
    std::uint64_t c = 0;
    for (Elem e : v) c = c * f_.q() + e;
    return c;
  }

  Vec image(std::span<const Elem> x, std::size_t upto) const {
    Vec y(n_, 0);
    for (std::size_t i = 0; i <= upto; ++i) {
      if (x[i] == 0) continue;
      const Vec& col = columns_[i];
      for (std::size_t r = 0; r < n_; ++r) y[r] = f_.add(y[r], f_.mul(x[i], col[r]));
    }
    return y;
  }

  bool members_ok(std::size_t j) const {
    for (const Vec& x : by_top_[j]) {
      auto c = code(image(x, j));
      if (c == 0 || !s_.contains(point_of_code_[c])) return false;
    }
    return true;
  }

  void extend_span(std::vector<char>& span, std::size_t j) const {
    std::vector<std::uint64_t> current;
    for (std::uint64_t c = 0; c < codes_; ++c)
      if (span[c]) current.push_back(c);
    Vec w(n_);
    for (std::uint64_t c : current) {
      const Vec& u = vec_of_code_[c];
      for (Elem lambda = 1; lambda < f_.q(); ++lambda) {
        for (std::size_t r = 0; r < n_; ++r) w[r] = f_.add(u[r], f_.mul(lambda, columns_[j][r]));
        span[code(w)] = 1;
      }
    }
  }

  void recurse(std::size_t j, const std::vector<char>& span) {
    if (j == n_) {
      record();
      return;
    }
    for (std::uint64_t c = 1; c < codes_; ++c) {
      if (span[c]) continue;
      columns_[j] = vec_of_code_[c];
      if (!members_ok(j)) continue;
      if (j + 1 == n_) {
        record();
        continue;
      }
      std::vector<char> next(span);
      extend_span(next, j);
      recurse(j + 1, next);
    }
  }

  void record() {
    *count_ += 1;
    for (PointId x = 0; x < all_points_.size(); ++x)
      uf_->unite(x, point_of_code_[code(image(all_points_[x], n_ - 1))]);
  }

  const PointSet& s_;
  const ProjectiveSpace& space_;
  const Field& f_;
  std::size_t n_;
  unsigned frob_;
  std::uint64_t codes_ = 0;
  std::vector<Vec> vec_of_code_;
  std::vector<PointId> point_of_code_;
  std::vector<std::vector<Vec>> by_top_;
  std::vector<Vec> all_points_;
  std::vector<Vec> columns_;
  Int* count_ = nullptr;
  UnionFind* uf_ = nullptr;
};

}  // namespace

StabilizerCertificate setwise_stabilizer_bruteforce(const PointSet& s, std::uint64_t limit,
                                                    unsigned workers) {
  const auto& space = s.space();
  const Field& f = space.field();
  const Int group = pgl_order(static_cast<unsigned>(space.coords()), f.q()) * f.h();
  if (group > limit)
    throw Error(ErrorCode::GroupTooLarge, "|PGammaL| of " + space.name() + " is " + group.str() +
                                              ", above the brute-force limit " + std::to_string(limit));
  workers = std::max(1u, workers);

  struct Slot {
    Int count = 0;
    UnionFind uf;
  };
  std::vector<Slot> slots;
  for (unsigned w = 0; w < workers * f.h(); ++w) slots.push_back({0, UnionFind(space.size())});

  auto job = [&](unsigned frob, unsigned w) {
    StabilizerSearch search(s, frob);
    auto& slot = slots[frob * workers + w];
    search.run(w, workers, slot.count, slot.uf);
  };
  if (workers == 1) {
    for (unsigned frob = 0; frob < f.h(); ++frob) job(frob, 0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned frob = 0; frob < f.h(); ++frob)
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(job, frob, w);
    for (auto& t : threads) t.join();
  }

  StabilizerCertificate cert;
  cert.order = 0;
  UnionFind merged(space.size());
  for (auto& slot : slots) {
    cert.order += slot.count;
    for (std::uint32_t x = 0; x < space.size(); ++x) merged.unite(x, slot.uf.find(x));
  }
  auto labels = merged.labels();
  cert.orbits = OrbitPartition::from_labels(labels);

  auto members = s.members();
  auto complement = s.complement();
  auto single_orbit = [&](std::span<const PointId> pts) {
    return std::all_of(pts.begin(), pts.end(),
                       [&](PointId x) { return cert.orbits.orbit_of[x] == cert.orbits.orbit_of[pts[0]]; });
  };
  cert.transitive_on_set = members.empty() || single_orbit(members);
  cert.transitive_on_complement = complement.empty() || single_orbit(complement);
  return cert;
}

CotransitivityVerdict cotransitivity_necessary(const PointSet& s) {
  auto profile = chord_profile(s);
  CotransitivityVerdict v;
  v.min = profile.min;
  v.max = profile.max;
  v.constant = profile.is_constant();
  const auto& space = s.space();
  const Int m = static_cast<std::uint64_t>(space.size() - s.size());
  if (m == 0) {
    v.expected = Rational(0);
    v.pass = true;
    return v;
  }
  v.expected = expected_chord_number(static_cast<std::uint64_t>(s.size()), m, space.q());
  v.pass = v.constant && v.expected.is_integer() && v.expected.num() == Int(profile.min);
  return v;
}

}  // namespace capgeom
