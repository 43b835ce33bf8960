#include "coquiver/algebra.hpp"

namespace coquiver {

Algebra::Algebra(std::size_t dim, std::vector<SparseVector> table, Vector unit)
    : dim_(dim), table_(std::move(table)), unit_(std::move(unit)) {
  if (table_.size() != dim_ * dim_) throw DimensionError("algebra table must have dim^2 entries");
  if (unit_.size() != dim_) throw DimensionError("algebra unit has the wrong length");
  for (const auto& entry : table_)
    for (const auto& [k, q] : entry)
      if (k >= dim_) throw DimensionError("algebra table index out of range");
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionError("algebra product length mismatch");
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const auto& entry = table_[i * dim_ + j];
      if (entry.empty()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, q] : entry) r[k] += ab * q;
    }
  }
  return r;
}

Matrix Algebra::left_mult(const Vector& a) const {
  if (a.size() != dim_) throw DimensionError("left_mult length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, q] : table_[i * dim_ + j]) m(k, j) += a[i] * q;
  }
  return m;
}

Matrix Algebra::right_mult(const Vector& a) const {
  if (a.size() != dim_) throw DimensionError("right_mult length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& [k, q] : table_[i * dim_ + j]) m(k, i) += a[j] * q;
  }
  return m;
}

bool Algebra::is_associative(std::size_t* witness) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    Vector ei = unit_vector(dim_, i);
    for (std::size_t j = 0; j < dim_; ++j) {
      Vector eij = multiply(ei, unit_vector(dim_, j));
      for (std::size_t k = 0; k < dim_; ++k) {
        Vector ek = unit_vector(dim_, k);
        if (multiply(eij, ek) != multiply(ei, multiply(unit_vector(dim_, j), ek))) {
          if (witness) *witness = i;
          return false;
        }
      }
    }
  }
  return true;
}

bool Algebra::is_unital() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    Vector ei = unit_vector(dim_, i);
    if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei) return false;
  }
  return true;
}

Subspace Algebra::center() const {
  // x central iff e_k x - x e_k = 0 for all k
  Matrix m(dim_ * dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [t, q] : table_[k * dim_ + j]) m(k * dim_ + t, j) += q;
      for (const auto& [t, q] : table_[j * dim_ + k]) m(k * dim_ + t, j) -= q;
    }
  return kernel(m);
}

Subspace Algebra::products(const Subspace& a, const Subspace& b) const {
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Vector x = a.vector(r);
    for (std::size_t s = 0; s < b.dim(); ++s) {
      Vector p = multiply(x, b.vector(s));
      if (!is_zero(p)) vs.push_back(std::move(p));
    }
  }
  return Subspace::span(vs, dim_);
}

Subspace Algebra::corner(const Vector& e, const Vector& f) const {
  std::vector<Vector> vs;
  Matrix rf = right_mult(f);
  for (std::size_t i = 0; i < dim_; ++i) vs.push_back(multiply(e, rf.column(i)));
  return Subspace::span(vs, dim_);
}

Vector Algebra::basis_traces() const {
  Vector t(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t m = 0; m < dim_; ++m)
      for (const auto& [i, q] : table_[k * dim_ + m])
        if (i == m) t[k] += q;
  return t;
}

namespace {

mpq_class as_rational(const Scalar& s) { return s.rational(); }

}  // namespace

Poly Algebra::min_poly(const Vector& a, const Vector& one) const {
  std::vector<Vector> powers{one};
  while (true) {
    Vector next = multiply(a, powers.back());
    Matrix cols = Matrix::from_columns(powers, dim_);
    auto sol = solve(cols, next);
    if (sol) {
      std::vector<mpq_class> c(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) c[i] = -as_rational((*sol)[i]);
      c[powers.size()] = 1;
      return Poly(std::move(c));
    }
    powers.push_back(std::move(next));
    if (powers.size() > dim_ + 1) throw InvariantError("min_poly: powers never became dependent");
  }
}

Vector Algebra::evaluate(const Poly& p, const Vector& a, const Vector& one) const {
  Vector r(dim_);
  for (int i = p.degree(); i >= 0; --i) {
    r = multiply(r, a);
    r = add(r, scale(one, Scalar(p.coeff(i))));
  }
  return r;
}

Algebra Algebra::restrict(const Subspace& s, const Vector& one) const {
  if (s.ambient_dim() != dim_) throw DimensionError("restrict: ambient mismatch");
  const std::size_t m = s.dim();
  std::vector<SparseVector> table(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    Vector vr = s.vector(r);
    for (std::size_t t = 0; t < m; ++t) {
      Vector c = s.coordinates(multiply(vr, s.vector(t)));
      for (std::size_t k = 0; k < m; ++k)
        if (!c[k].is_zero()) table[r * m + t].emplace_back(k, c[k]);
    }
  }
  return Algebra(m, std::move(table), s.coordinates(one));
}

QuotientAlgebra quotient(const Algebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  QuotientBasis qb = quotient_basis(Subspace::full(n), ideal);
  const std::size_t m = qb.complement.rows();
  std::vector<SparseVector> table(m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t t = 0; t < m; ++t) {
      Vector c = qb.projection * a.multiply(qb.complement.row_vector(r), qb.complement.row_vector(t));
      for (std::size_t k = 0; k < m; ++k)
        if (!c[k].is_zero()) table[r * m + t].emplace_back(k, c[k]);
    }
  QuotientAlgebra out;
  out.algebra = Algebra(m, std::move(table), qb.projection * a.unit());
  out.projection = qb.projection;
  out.lift = qb.complement.transpose();
  return out;
}

Vector lift_idempotent(const Algebra& a, const Vector& x, int max_steps) {
  Vector e = x;
  for (int step = 0; step < max_steps; ++step) {
    Vector e2 = a.multiply(e, e);
    if (e2 == e) return e;
    Vector e3 = a.multiply(e2, e);
    e = subtract(scale(e2, 3), scale(e3, 2));
  }
  throw InvariantError("idempotent lifting did not converge");
}

}  // namespace coquiver
