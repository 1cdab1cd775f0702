#include "capgeom/projective.hpp"

#include <algorithm>
#include <string>

#include "capgeom/error.hpp"

namespace capgeom {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

Vec multiply(const Field& f, const Matrix& a, std::span<const Elem> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vec y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
  return c;
}

Matrix power(const Field& f, const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = multiply(f, result, base);
    e >>= 1;
    if (e) base = multiply(f, base, base);
  }
  return result;
}

std::size_t rank(const Field& f, std::vector<Vec> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Elem inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Elem factor = f.neg(rows[i][c]);
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.add(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Field& f, const Matrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
  return rank(f, std::move(rows));
}

ProjectiveSpace::ProjectiveSpace(Field field, int r, std::size_t max_points)
    : field_(std::move(field)), r_(r) {
  if (r < 1) throw Error(ErrorCode::BadDimension, "projective dimension must be >= 1");
  const std::uint64_t q = field_.q();
  qpow_.assign(static_cast<std::size_t>(r) + 2, 1);
  for (std::size_t i = 1; i < qpow_.size(); ++i) {
    if (qpow_[i - 1] > (std::uint64_t(1) << 40)) {
      throw Error(ErrorCode::SpaceTooLarge, "PG(" + std::to_string(r) + "," + std::to_string(q) + ")");
    }
    qpow_[i] = qpow_[i - 1] * q;
  }
  std::uint64_t n = (qpow_[r + 1] - 1) / (q - 1);
  if (n > max_points)
    throw Error(ErrorCode::SpaceTooLarge, "PG(" + std::to_string(r) + "," + std::to_string(q) +
                                              ") has " + std::to_string(n) + " points");
  size_ = static_cast<std::size_t>(n);
}

std::string ProjectiveSpace::name() const {
  return "PG(" + std::to_string(r_) + "," + std::to_string(q()) + ")";
}

void ProjectiveSpace::check_len(std::span<const Elem> v) const {
  if (v.size() != coords())
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(coords()) + " coordinates, got " + std::to_string(v.size()));
}

Vec ProjectiveSpace::point(PointId id) const {
  if (id >= size_) throw Error(ErrorCode::BadParameter, "PointId out of range");
  const std::uint64_t q = field_.q();
  // Points whose leading 1 sits at position r-k occupy ids [S_k, S_{k+1}),
  // S_k = (q^k - 1)/(q - 1).
  std::size_t k = 0;
  while (k + 1 <= static_cast<std::size_t>(r_) && (qpow_[k + 1] - 1) / (q - 1) <= id) ++k;
  std::uint64_t tail = id - (qpow_[k] - 1) / (q - 1);
  Vec v(coords(), 0);
  const std::size_t lead = static_cast<std::size_t>(r_) - k;
  v[lead] = 1;
  for (std::size_t i = coords(); i-- > lead + 1;) {
    v[i] = static_cast<Elem>(tail % q);
    tail /= q;
  }
  return v;
}

PointId ProjectiveSpace::id_of_canonical(std::span<const Elem> v) const {
  std::size_t lead = 0;
  while (v[lead] == 0) ++lead;
  const std::size_t k = static_cast<std::size_t>(r_) - lead;
  std::uint64_t id = (qpow_[k] - 1) / (field_.q() - 1);
  std::uint64_t tail = 0;
  for (std::size_t i = lead + 1; i < coords(); ++i) tail = tail * field_.q() + v[i];
  return static_cast<PointId>(id + tail);
}

Vec ProjectiveSpace::normalize(std::span<const Elem> v) const {
  check_len(v);
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) throw Error(ErrorCode::ZeroVector, "zero vector has no projective point");
  Vec out(v.begin(), v.end());
  for (Elem x : out) field_.check(x);
  Elem inv = field_.inv(v[lead]);
  if (inv != 1)
    for (std::size_t i = lead; i < out.size(); ++i) out[i] = field_.mul(out[i], inv);
  return out;
}

PointId ProjectiveSpace::id_of(std::span<const Elem> v) const {
  check_len(v);
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) throw Error(ErrorCode::ZeroVector, "zero vector has no projective point");
  if (v[lead] == 1) return id_of_canonical(v);
  return id_of_canonical(normalize(v));
}

bool ProjectiveSpace::collinear(std::span<const Elem> a, std::span<const Elem> b,
                                std::span<const Elem> c) const {
  check_len(a);
  check_len(b);
  check_len(c);
  PointId ia = id_of(a), ib = id_of(b), ic = id_of(c);
  if (ia == ib || ia == ic || ib == ic) throw Error(ErrorCode::DuplicatePoints, "collinearity needs three distinct points");
  return rank(field_, std::vector<Vec>{Vec(a.begin(), a.end()), Vec(b.begin(), b.end()),
                                       Vec(c.begin(), c.end())}) <= 2;
}

bool ProjectiveSpace::collinear(PointId a, PointId b, PointId c) const {
  return collinear(point(a), point(b), point(c));
}

void ProjectiveSpace::line_interior(PointId a, PointId b, std::vector<PointId>& out) const {
  if (a == b) throw Error(ErrorCode::DuplicatePoints, "a line needs two distinct points");
  const Vec va = point(a), vb = point(b);
  Vec w(coords());
  const std::uint32_t q = field_.q();
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    Elem lambda = field_.exp(i);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = field_.add(field_.mul(lambda, va[j]), vb[j]);
    out.push_back(id_of(w));
  }
}

std::vector<PointId> ProjectiveSpace::line_points(PointId a, PointId b) const {
  std::vector<PointId> out{a, b};
  line_interior(a, b, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointId> ProjectiveSpace::hyperplane_points(std::span<const Elem> coeffs) const {
  check_len(coeffs);
  if (std::all_of(coeffs.begin(), coeffs.end(), [](Elem x) { return x == 0; }))
    throw Error(ErrorCode::ZeroVector, "hyperplane covector is zero");
  std::vector<PointId> out;
  for (PointId id = 0; id < size_; ++id) {
    Vec x = point(id);
    Elem acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = field_.add(acc, field_.mul(coeffs[i], x[i]));
    if (acc == 0) out.push_back(id);
  }
  return out;
}

QuadraticForm QuadraticForm::elliptic(const Field& f) {
  QuadraticForm form;
  form.kind = Kind::Elliptic;
  form.dim = 4;
  form.coeffs = Matrix(4, 4);
  form.coeffs(0, 1) = 1;
  form.coeffs(2, 2) = 1;
  for (Elem a = 0; a < f.q(); ++a)
    for (Elem b = 0; b < f.q(); ++b) {
      bool has_root = false;
      for (Elem t = 0; t < f.q() && !has_root; ++t)
        has_root = f.add(f.add(f.mul(t, t), f.mul(a, t)), b) == 0;
      if (!has_root) {
        form.coeffs(2, 3) = a;
        form.coeffs(3, 3) = b;
        return form;
      }
    }
  throw Error(ErrorCode::BadParameter, "no irreducible quadratic found");
}

QuadraticForm QuadraticForm::hyperbolic(const Field&, std::size_t dim) {
  if (dim < 2 || dim % 2 != 0) throw Error(ErrorCode::BadDimension, "hyperbolic form needs even dimension");
  QuadraticForm form;
  form.kind = Kind::Hyperbolic;
  form.dim = dim;
  form.coeffs = Matrix(dim, dim);
  for (std::size_t i = 0; i < dim; i += 2) form.coeffs(i, i + 1) = 1;
  return form;
}

QuadraticForm QuadraticForm::parabolic(const Field&, std::size_t dim) {
  if (dim < 3 || dim % 2 == 0) throw Error(ErrorCode::BadDimension, "parabolic form needs odd dimension");
  QuadraticForm form;
  form.kind = Kind::Parabolic;
  form.dim = dim;
  form.coeffs = Matrix(dim, dim);
  form.coeffs(0, 0) = 1;
  for (std::size_t i = 1; i < dim; i += 2) form.coeffs(i, i + 1) = 1;
  return form;
}

Elem eval_quadratic(const Field& f, const QuadraticForm& form, std::span<const Elem> x) {
  if (x.size() != form.dim) throw Error(ErrorCode::DimensionMismatch, "quadratic form dimension");
  Elem acc = 0;
  for (std::size_t i = 0; i < form.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = i; j < form.dim; ++j) {
      Elem c = form.coeffs(i, j);
      if (c != 0 && x[j] != 0) acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
    }
  }
  return acc;
}

std::vector<PointId> singular_points(const QuadraticForm& form, const ProjectiveSpace& space) {
  if (form.dim != space.coords()) throw Error(ErrorCode::DimensionMismatch, "form does not match space");
  std::vector<PointId> out;
  for (PointId id = 0; id < space.size(); ++id)
    if (eval_quadratic(space.field(), form, space.point(id)) == 0) out.push_back(id);
  return out;
}

namespace {
std::int64_t sqrt_order_exponent(const Field& f) {
  if (f.h() % 2 != 0)
    throw Error(ErrorCode::FieldNotSquareOrder, "GF(" + std::to_string(f.q()) + ") has non-square order");
  return f.h() / 2;  // x^{q'} is frobenius by h/2
}
}  // namespace

HermitianForm HermitianForm::standard(const Field& f, std::size_t dim) {
  sqrt_order_exponent(f);
  HermitianForm form;
  form.dim = dim;
  form.gram = Matrix::identity(dim);
  return form;
}

bool HermitianForm::is_hermitian(const Field& f) const {
  const std::int64_t k = sqrt_order_exponent(f);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (gram(j, i) != f.frobenius(gram(i, j), k)) return false;
  return true;
}

Elem eval_hermitian(const Field& f, const HermitianForm& form, std::span<const Elem> x) {
  const std::int64_t k = sqrt_order_exponent(f);
  if (x.size() != form.dim) throw Error(ErrorCode::DimensionMismatch, "hermitian form dimension");
  Elem acc = 0;
  for (std::size_t i = 0; i < form.dim; ++i)
    for (std::size_t j = 0; j < form.dim; ++j) {
      Elem g = form.gram(i, j);
      if (g == 0) continue;
      acc = f.add(acc, f.mul(f.mul(x[i], g), f.frobenius(x[j], k)));
    }
  return acc;
}

std::vector<PointId> isotropic_points(const HermitianForm& form, const ProjectiveSpace& space) {
  if (form.dim != space.coords()) throw Error(ErrorCode::DimensionMismatch, "form does not match space");
  std::vector<PointId> out;
  for (PointId id = 0; id < space.size(); ++id)
    if (eval_hermitian(space.field(), form, space.point(id)) == 0) out.push_back(id);
  return out;
}

}  // namespace capgeom
