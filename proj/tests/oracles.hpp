#pragma once

// Slow, independent reference computations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "capgeom/projective.hpp"

namespace oracle {

using capgeom::Elem;
using capgeom::PointId;
using capgeom::ProjectiveSpace;
using capgeom::Vec;

// Base-p digits of an encoded element, constant term first.
inline std::vector<std::uint32_t> digits(Elem a, std::uint32_t p, std::uint32_t h) {
  std::vector<std::uint32_t> d(h);
  for (auto& x : d) {
    x = a % p;
    a /= p;
  }
  return d;
}

inline Elem encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  Elem out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * p + d[i];
  return out;
}

// Schoolbook product of two residues modulo a monic `modulus` (constant term first).
inline Elem poly_mulmod(Elem a, Elem b, std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  const std::uint32_t h = static_cast<std::uint32_t>(modulus.size() - 1);
  auto x = digits(a, p, h), y = digits(b, p, h);
  std::vector<std::uint64_t> prod(2 * h, 0);
  for (std::uint32_t i = 0; i < h; ++i)
    for (std::uint32_t j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (std::size_t deg = prod.size(); deg-- > h;) {
    const std::uint64_t c = prod[deg];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= h; ++i) prod[deg - h + i] = (prod[deg - h + i] + (p - c) * modulus[i]) % p;
  }
  std::vector<std::uint32_t> out(h);
  for (std::uint32_t i = 0; i < h; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return encode(out, p);
}

inline Elem poly_add(Elem a, Elem b, std::uint32_t p, std::uint32_t h) {
  auto x = digits(a, p, h), y = digits(b, p, h);
  for (std::uint32_t i = 0; i < h; ++i) x[i] = (x[i] + y[i]) % p;
  return encode(x, p);
}

// Order of t modulo `modulus`, or 0 if t is not invertible / the order exceeds p^h.
inline std::uint64_t order_of_t(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  const std::uint32_t h = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) q *= p;
  const Elem t = h == 1 ? (p - modulus[0] % p) % p : p;  // the residue class of t
  if (t == 0) return 0;
  Elem x = t;
  for (std::uint64_t k = 1; k <= q; ++k) {
    if (x == 1) return k;
    x = poly_mulmod(x, t, p, modulus);
  }
  return 0;
}

// z lies on the line xy (all distinct) iff z = lambda*x + y up to scale.
inline bool collinear_by_definition(const ProjectiveSpace& space, PointId x, PointId y, PointId z) {
  const auto& f = space.field();
  Vec a = space.point(x), b = space.point(y), c = space.point(z);
  for (Elem lam = 0; lam < f.q(); ++lam) {
    Vec v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(f.mul(lam, a[i]), b[i]);
    if (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; })) continue;
    if (space.normalize(v) == c) return true;
  }
  return false;
}

inline bool is_cap_by_definition(const ProjectiveSpace& space, const std::vector<PointId>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (collinear_by_definition(space, pts[i], pts[j], pts[k])) return false;
  return true;
}

inline std::uint64_t chord_by_definition(const ProjectiveSpace& space, const std::vector<PointId>& pts, PointId x) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) n += collinear_by_definition(space, pts[i], pts[j], x);
  return n;
}

// Greedy random cap: points in shuffled order, each kept when no member pair
// spans a line through it.
template <class Rng>
std::vector<PointId> random_cap(const ProjectiveSpace& space, Rng& rng, std::size_t max_size) {
  std::vector<PointId> order(space.size());
  for (PointId i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<PointId> cap;
  for (PointId x : order) {
    if (cap.size() == max_size) break;
    bool ok = true;
    for (std::size_t i = 0; i < cap.size() && ok; ++i)
      for (std::size_t j = i + 1; j < cap.size() && ok; ++j) ok = !space.collinear(cap[i], cap[j], x);
    if (ok) cap.push_back(x);
  }
  std::sort(cap.begin(), cap.end());
  return cap;
}

}  // namespace oracle
