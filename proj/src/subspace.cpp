#include "coquiver/subspace.hpp"

#include <algorithm>

namespace coquiver {

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  RrefResult red = rref(rows);
  s.basis_ = std::move(red.reduced);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return span(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::coordinate(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vector> rows;
  for (auto i : idx) rows.push_back(unit_vector(n, i));
  return span(rows, n);
}

Vector Subspace::coordinates_unchecked(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  Vector c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vector Subspace::combine(const Vector& coords) const {
  if (coords.size() != dim()) throw DimensionError("coordinate count mismatch");
  Vector v(ambient_);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (coords[r].is_zero()) continue;
    auto row = basis_.row(r);
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!row[j].is_zero()) v[j] += coords[r] * row[j];
  }
  return v;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c = coordinates_unchecked(v);
  if (combine(c) != v) throw PreconditionError("vector is not in the subspace");
  return c;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  return combine(coordinates_unchecked(v)) == v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace ambient mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.vector(r))) return false;
  return true;
}

Matrix Subspace::quotient_projection() const {
  std::vector<std::size_t> free;
  for (std::size_t j = 0, p = 0; j < ambient_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j)
      ++p;
    else
      free.push_back(j);
  }
  // class of v = v[free] - sum_r v[pivot_r] * b_r[free]
  Matrix proj(free.size(), ambient_);
  for (std::size_t k = 0; k < free.size(); ++k) proj(k, free[k]) = 1;
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t k = 0; k < free.size(); ++k) {
      const Scalar& b = basis_(r, free[k]);
      if (!b.is_zero()) proj(k, pivots_[r]) = -b;
    }
  return proj;
}

Subspace Subspace::image_under(const Matrix& map) const {
  if (map.cols() != ambient_) throw DimensionError("map domain does not match subspace");
  return span((map * basis_.transpose()).transpose());
}

Subspace kernel(const Matrix& m) {
  RrefResult red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) {
      const Scalar& x = red.reduced(r, f);
      if (!x.is_zero()) v[red.pivots[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace preimage(const Matrix& map, const Subspace& w) {
  if (map.rows() != w.ambient_dim()) throw DimensionError("preimage: codomain mismatch");
  return kernel(w.quotient_projection() * map);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("sum: ambient dimension mismatch");
  return Subspace::span(Matrix::vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  // x*A = y*B  <=>  (x, -y) in ker of [A; B]^T
  Matrix stacked = Matrix::vstack(a.basis(), b.basis().scaled(-1));
  Subspace rel = kernel(stacked.transpose());
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    Vector full = rel.vector(r);
    Vector x(full.begin(), full.begin() + static_cast<long>(a.dim()));
    vs.push_back(a.combine(x));
  }
  return Subspace::span(vs, n);
}

Matrix complete_basis(const Matrix& independent_rows) {
  const std::size_t n = independent_rows.cols();
  Subspace current = Subspace::span(independent_rows);
  if (current.dim() != independent_rows.rows())
    throw PreconditionError("complete_basis: rows are dependent");
  Matrix out = independent_rows;
  for (std::size_t j = 0; j < n && current.dim() < n; ++j) {
    Vector e = unit_vector(n, j);
    if (current.contains(e)) continue;
    Matrix row = Matrix::from_rows({e}, n);
    out = Matrix::vstack(out, row);
    current = sum(current, Subspace::span(row));
  }
  if (out.rows() == 0) out = Matrix(0, n);
  return out;
}

QuotientBasis quotient_basis(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("quotient_basis: ambient dimension mismatch");
  if (!a.contains(b)) throw PreconditionError("quotient_basis: b is not contained in a");
  const std::size_t n = a.ambient_dim();
  std::vector<Vector> comp;
  Subspace current = b;
  for (std::size_t r = 0; r < a.dim() && current.dim() < a.dim(); ++r) {
    Vector v = a.vector(r);
    if (current.contains(v)) continue;
    comp.push_back(v);
    current = sum(current, Subspace::span({v}, n));
  }
  QuotientBasis q;
  q.complement = Matrix::from_rows(comp, n);
  // Full basis [b; comp; extension]; quotient coordinates are the comp slots.
  Matrix full = complete_basis(Matrix::vstack(b.basis(), q.complement));
  Matrix inv = inverse(full);  // v = x * full  =>  x = v * inv
  q.projection = Matrix(comp.size(), n);
  for (std::size_t r = 0; r < comp.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) q.projection(r, j) = inv(j, b.dim() + r);
  return q;
}

Subspace tensor(const Subspace& a, const Subspace& b) {
  return Subspace::span(tensor(a.basis(), b.basis()));
}

}  // namespace coquiver
