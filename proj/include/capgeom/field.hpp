#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace capgeom {

/// A field element in polynomial-basis encoding: the element
/// c_0 + c_1 t + ... + c_{h-1} t^{h-1} is stored as sum c_i p^i.
/// 0 and 1 are the additive and multiplicative identities, and elements of the
/// prime field are their residues.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

bool is_prime(std::uint64_t n);

/// GF(p^h) with exp/log tables for the lexicographically least primitive
/// modulus. Immutable and cheap to copy (tables are shared).
class Field {
 public:
  /// Throws NotPrime, FieldTooLarge or BadParameter (h == 0).
  static Field make(std::uint32_t p, std::uint32_t h);
  /// GF(q) for a prime power q; throws BadParameter otherwise.
  static Field of_order(std::uint32_t q);

  std::uint32_t p() const { return t_->p; }
  std::uint32_t h() const { return t_->h; }
  std::uint32_t q() const { return t_->q; }
  /// Monic modulus coefficients, constant term first, length h + 1.
  std::span<const std::uint32_t> modulus() const { return t_->modulus; }
  Elem primitive() const { return t_->exp[1]; }

  bool contains(Elem a) const { return a < q(); }
  /// Throws FieldMismatch when `a` is not an element of this field.
  void check(Elem a) const;

  Elem add(Elem a, Elem b) const {
    if (t_->p == 2) return a ^ b;
    if (t_->h == 1) return (a + b) % t_->p;
    if (!t_->add_table.empty()) return t_->add_table[std::size_t(a) * t_->q + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return t_->p == 2 ? a : t_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  /// Throws DivisionByZero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^e; negative exponents require a != 0.
  Elem pow(Elem a, std::int64_t e) const;
  /// a^(p^k).
  Elem frobenius(Elem a, std::int64_t k) const;

  /// omega^i for any integer i.
  Elem exp(std::int64_t i) const;
  /// Discrete log base omega; throws DivisionByZero for 0.
  std::uint32_t log(Elem a) const;
  /// Multiplicative order of a != 0.
  std::uint32_t order(Elem a) const;

  bool operator==(const Field& o) const { return t_ == o.t_ || (p() == o.p() && h() == o.h()); }

 private:
  struct Tables {
    std::uint32_t p = 0, h = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> exp;          // length 2(q-1), exp[i] = omega^i
    std::vector<std::uint32_t> log; // log[0] unused
    std::vector<Elem> neg;
    std::vector<Elem> add_table;    // only for small non-prime odd-characteristic fields
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  Elem add_digits(Elem a, Elem b) const;

  std::shared_ptr<const Tables> t_;
};

/// Injective field homomorphism GF(s) -> GF(q), stored as a lookup table.
class SubfieldEmbedding {
 public:
  Elem operator()(Elem a) const { return image_.at(a); }
  /// Sorted image set.
  std::vector<Elem> image_set() const;
  /// Inverse lookup; returns false when `b` is not in the image.
  bool preimage(Elem b, Elem& a) const;
  std::size_t small_order() const { return image_.size(); }

 private:
  friend SubfieldEmbedding subfield_embed(const Field&, const Field&);
  std::vector<Elem> image_;
  std::vector<std::int64_t> back_;
};

/// Maps the small field's primitive element to the first power
/// omega^(k(q-1)/(s-1)) (k ascending, gcd(k, s-1) = 1) that is a root of the
/// small field's modulus, which makes the map additive as well as multiplicative.
/// Throws NotASubfield.
SubfieldEmbedding subfield_embed(const Field& small, const Field& big);

}  // namespace capgeom
