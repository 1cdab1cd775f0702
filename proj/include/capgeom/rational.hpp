#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace capgeom {

/// Signed 128-bit integer that throws std::overflow_error instead of wrapping.
using Int = boost::multiprecision::checked_int128_t;

/// Base^exp in Int arithmetic.
Int ipow(Int base, unsigned exp);

/// Exact reduced fraction; the denominator is always positive.
class Rational {
 public:
  Rational() = default;
  Rational(Int num) : num_(std::move(num)) {}  // NOLINT: implicit from integer
  Rational(Int num, Int den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// "n" or "n/d".
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace capgeom
