#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "capgeom/field.hpp"

namespace capgeom {

/// Dense index of a point of PG(r,q); PointIds follow the lexicographic order
/// of canonical coordinates.
using PointId = std::uint32_t;
using Vec = std::vector<Elem>;

inline constexpr std::size_t kDefaultMaxPoints = std::size_t(1) << 21;

/// Square or rectangular matrix over a runtime field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) { return a.a_ <=> b.a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Vec multiply(const Field& f, const Matrix& a, std::span<const Elem> x);
/// Kronecker product a (x) b.
Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b);
/// Matrix power by repeated squaring; e >= 0.
Matrix power(const Field& f, const Matrix& a, std::uint64_t e);
/// Rank by exact Gaussian elimination.
std::size_t rank(const Field& f, std::vector<Vec> rows);
std::size_t rank(const Field& f, const Matrix& m);

/// PG(r,q): canonical coordinates have first nonzero entry 1.
class ProjectiveSpace {
 public:
  /// Throws BadDimension (r < 1) or SpaceTooLarge.
  ProjectiveSpace(Field field, int r, std::size_t max_points = kDefaultMaxPoints);

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  int dim() const { return r_; }
  std::size_t coords() const { return static_cast<std::size_t>(r_) + 1; }
  std::size_t size() const { return size_; }

  /// Canonical coordinates of a point.
  Vec point(PointId id) const;
  /// PointId of the point spanned by v; throws ZeroVector.
  PointId id_of(std::span<const Elem> v) const;
  /// Like id_of for a vector already in canonical form (unchecked).
  PointId id_of_canonical(std::span<const Elem> v) const;
  /// Scales v so its first nonzero coordinate is 1; throws ZeroVector.
  Vec normalize(std::span<const Elem> v) const;

  /// True when the three points span at most a line. Throws DuplicatePoints.
  bool collinear(PointId a, PointId b, PointId c) const;
  bool collinear(std::span<const Elem> a, std::span<const Elem> b, std::span<const Elem> c) const;
  /// The q+1 points of the line ab, ascending. Throws DuplicatePoints.
  std::vector<PointId> line_points(PointId a, PointId b) const;
  /// The q-1 points of line ab other than a and b, in order of lambda's log
  /// (normalize(lambda a + b)). Appends to `out`.
  void line_interior(PointId a, PointId b, std::vector<PointId>& out) const;
  /// Points x with coeffs . x = 0, ascending. Throws ZeroVector / DimensionMismatch.
  std::vector<PointId> hyperplane_points(std::span<const Elem> coeffs) const;

  std::string name() const;

 private:
  void check_len(std::span<const Elem> v) const;

  Field field_;
  int r_;
  std::size_t size_;
  std::vector<std::uint64_t> qpow_;  // q^i
};

/// Quadratic form Q(x) = sum_{i<=j} c_ij x_i x_j (upper-triangular coefficients).
struct QuadraticForm {
  enum class Kind { Elliptic, Hyperbolic, Parabolic, Custom };
  Kind kind = Kind::Custom;
  std::size_t dim = 0;
  Matrix coeffs;

  /// x0x1 + x2^2 + a x2x3 + b x3^2 with (a,b) the lexicographically least pair
  /// making t^2 + a t + b irreducible.
  static QuadraticForm elliptic(const Field& f);
  /// x0x1 + x2x3 + ... on an even dimension.
  static QuadraticForm hyperbolic(const Field& f, std::size_t dim);
  /// x0^2 + x1x2 + x3x4 + ... on an odd dimension.
  static QuadraticForm parabolic(const Field& f, std::size_t dim);
};

Elem eval_quadratic(const Field& f, const QuadraticForm& form, std::span<const Elem> x);
/// Projective zeros of the form, ascending. Throws DimensionMismatch.
std::vector<PointId> singular_points(const QuadraticForm& form, const ProjectiveSpace& space);

/// Hermitian form h(x) = sum_ij x_i g_ij x_j^{q'} over GF(q'^2).
struct HermitianForm {
  std::size_t dim = 0;
  Matrix gram;

  /// Gram = identity, i.e. sum x_i^{q'+1}. Throws FieldNotSquareOrder.
  static HermitianForm standard(const Field& f, std::size_t dim);
  bool is_hermitian(const Field& f) const;
};

Elem eval_hermitian(const Field& f, const HermitianForm& form, std::span<const Elem> x);
/// Throws FieldNotSquareOrder / DimensionMismatch.
std::vector<PointId> isotropic_points(const HermitianForm& form, const ProjectiveSpace& space);

}  // namespace capgeom
