#include "capgeom/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "capgeom/error.hpp"

namespace capgeom {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldNotSquareOrder: return "FieldNotSquareOrder";
    case ErrorCode::PointInSet: return "PointInSet";
    case ErrorCode::NotACap: return "NotACap";
    case ErrorCode::SpaceTooLargeForSearch: return "SpaceTooLargeForSearch";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::TargetInfeasible: return "TargetInfeasible";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Multiplies the polynomial encoded by `a` by t and reduces modulo the monic
// `modulus`. Digits are base-p coefficients, constant term least significant.
std::uint32_t times_t(std::uint32_t a, std::uint32_t p, std::uint32_t h,
                      const std::vector<std::uint32_t>& modulus,
                      const std::vector<std::uint32_t>& place) {
  std::uint32_t top = a / place[h - 1];
  std::uint32_t rest = a % place[h - 1];
  std::uint32_t out = 0;
  // rest * t, then subtract top * (modulus - t^h)
  for (std::uint32_t i = 0; i < h; ++i) {
    std::uint32_t c = i == 0 ? 0 : (rest / place[i - 1]) % p;
    c = (c + (p - (top * modulus[i]) % p)) % p;
    out += c * place[i];
  }
  return out;
}

// Returns true and fills exp/log when t generates the multiplicative group
// modulo `modulus`.
bool try_primitive(std::uint32_t p, std::uint32_t h, const std::vector<std::uint32_t>& modulus,
                   std::vector<std::uint32_t>& exp, std::vector<std::uint32_t>& log) {
  const std::uint32_t q = [&] {
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < h; ++i) v *= p;
    return v;
  }();
  std::vector<std::uint32_t> place(h);
  place[0] = 1;
  for (std::uint32_t i = 1; i < h; ++i) place[i] = place[i - 1] * p;

  std::uint32_t root;
  if (h == 1) {
    root = (p - modulus[0] % p) % p;
    if (root == 0) return false;
  } else {
    if (modulus[0] == 0) return false;
    root = p;  // the residue class of t
  }

  exp.assign(2 * (q - 1), 0);
  log.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    if (x == 0 || (i > 0 && x == 1)) return false;
    exp[i] = x;
    log[x] = i;
    x = h == 1 ? (x * root) % p : times_t(x, p, h, modulus, place);
  }
  if (x != 1) return false;
  for (std::uint32_t i = 0; i < q - 1; ++i) exp[i + q - 1] = exp[i];
  return true;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t h) {
  if (h == 0) throw Error(ErrorCode::BadParameter, "extension degree must be >= 1");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorCode::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(h) + " exceeds 2^20");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->h = h;
  t->q = static_cast<std::uint32_t>(q);

  // Lexicographic order over (c_0, ..., c_{h-1}) with c_0 most significant.
  std::vector<std::uint32_t> coeffs(h, 0);
  bool found = false;
  for (std::uint64_t n = 0; n < q && !found; ++n) {
    std::uint64_t v = n;
    for (std::uint32_t i = h; i-- > 0;) {
      coeffs[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    std::vector<std::uint32_t> modulus(coeffs);
    modulus.push_back(1);
    if (try_primitive(p, h, modulus, t->exp, t->log)) {
      t->modulus = std::move(modulus);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::BadParameter, "no primitive polynomial found");

  t->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t out = 0, place = 1, v = a;
    for (std::uint32_t i = 0; i < h; ++i) {
      out += ((p - v % p) % p) * place;
      v /= p;
      place *= p;
    }
    t->neg[a] = out;
  }

  Field f(t);
  if (p != 2 && h > 1 && q <= 729) {
    auto tt = std::make_shared<Tables>(*t);
    tt->add_table.resize(q * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) tt->add_table[a * q + b] = f.add_digits(a, b);
    return Field(std::move(tt));
  }
  return f;
}

Field Field::of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t h = 0, v = q;
    while (v % p == 0) {
      v /= p;
      ++h;
    }
    if (v != 1 || !is_prime(p))
      throw Error(ErrorCode::BadParameter, std::to_string(q) + " is not a prime power");
    return make(p, h);
  }
  throw Error(ErrorCode::BadParameter, std::to_string(q) + " is not a prime power");
}

Elem Field::add_digits(Elem a, Elem b) const {
  const std::uint32_t p = t_->p;
  Elem out = 0, place = 1;
  for (std::uint32_t i = 0; i < t_->h; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

void Field::check(Elem a) const {
  if (a >= q())
    throw Error(ErrorCode::FieldMismatch,
                std::to_string(a) + " is not an element of GF(" + std::to_string(q()) + ")");
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  std::uint32_t l = t_->log[a];
  return t_->exp[l == 0 ? 0 : (q() - 1) - l];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t m = q() - 1;
  std::int64_t k = (static_cast<std::int64_t>(t_->log[a]) * (((e % m) + m) % m)) % m;
  return t_->exp[k];
}

Elem Field::frobenius(Elem a, std::int64_t k) const {
  if (a == 0) return 0;
  const std::int64_t m = q() - 1;
  // p^k mod (q-1); p^h = q = 1 mod (q-1), so k only matters mod h.
  std::int64_t kk = ((k % h()) + h()) % h();
  std::int64_t pk = 1;
  for (std::int64_t i = 0; i < kk; ++i) pk = (pk * p()) % m;
  return t_->exp[(static_cast<std::int64_t>(t_->log[a]) * pk) % m];
}

Elem Field::exp(std::int64_t i) const {
  const std::int64_t m = q() - 1;
  return t_->exp[((i % m) + m) % m];
}

std::uint32_t Field::log(Elem a) const {
  check(a);
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
  return t_->log[a];
}

std::uint32_t Field::order(Elem a) const {
  std::uint32_t m = q() - 1;
  return m / std::gcd(m, log(a));
}

std::vector<Elem> SubfieldEmbedding::image_set() const {
  std::vector<Elem> out(image_);
  std::sort(out.begin(), out.end());
  return out;
}

bool SubfieldEmbedding::preimage(Elem b, Elem& a) const {
  if (b >= back_.size() || back_[b] < 0) return false;
  a = static_cast<Elem>(back_[b]);
  return true;
}

SubfieldEmbedding subfield_embed(const Field& small, const Field& big) {
  const std::uint64_t s = small.q(), q = big.q();
  bool power = small.p() == big.p() && big.h() % small.h() == 0;
  if (!power)
    throw Error(ErrorCode::NotASubfield, "GF(" + std::to_string(s) + ") is not a subfield of GF(" +
                                             std::to_string(q) + ")");
  const std::uint64_t step = (q - 1) / (s - 1);
  auto modulus = small.modulus();

  // Evaluate the small modulus (coefficients in GF(p), shared by both fields)
  // at a candidate image of the small primitive element.
  auto is_root = [&](Elem x) {
    Elem acc = 0;
    for (std::size_t i = modulus.size(); i-- > 0;) acc = big.add(big.mul(acc, x), modulus[i]);
    return acc == 0;
  };

  for (std::uint64_t k = 1; k < s || k == 1; ++k) {
    if (std::gcd<std::uint64_t>(k, s - 1) != 1) continue;
    Elem image_omega = big.exp(static_cast<std::int64_t>(k * step));
    if (!is_root(image_omega)) continue;
    SubfieldEmbedding e;
    e.image_.assign(s, 0);
    e.back_.assign(q, -1);
    for (std::uint64_t i = 0; i + 1 < s; ++i)
      e.image_[small.exp(static_cast<std::int64_t>(i))] =
          big.exp(static_cast<std::int64_t>((k * step * i) % (q - 1)));
    e.image_[0] = 0;
    for (std::uint64_t a = 0; a < s; ++a) e.back_[e.image_[a]] = static_cast<std::int64_t>(a);
    return e;
  }
  throw Error(ErrorCode::NotASubfield, "no root of the subfield modulus found");
}

}  // namespace capgeom
