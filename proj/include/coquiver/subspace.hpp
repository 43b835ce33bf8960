#ifndef COQUIVER_SUBSPACE_HPP
#define COQUIVER_SUBSPACE_HPP

#include <vector>

#include "coquiver/matrix.hpp"

namespace coquiver {

/// A subspace of K^n held by its reduced row echelon basis. Two subspaces are
/// equal exactly when their canonical bases agree entrywise.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Row span of m.
  static Subspace span(const Matrix& rows);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return span(Matrix::identity(n)); }
  /// Span of the coordinate vectors e_i for i in idx.
  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& idx);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  Vector vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis. Throws if v is not in the span.
  Vector coordinates(const Vector& v) const;
  /// Coordinates without the membership check (read at pivot columns).
  Vector coordinates_unchecked(const Vector& v) const;
  /// The vector with the given coordinates.
  Vector combine(const Vector& coords) const;

  /// Matrix (ambient/this) x ambient sending v to its class in the quotient,
  /// using the non-pivot coordinate vectors as complement basis.
  Matrix quotient_projection() const;

  /// Image of the subspace under a linear map given as an m x n matrix.
  Subspace image_under(const Matrix& map) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// ker(m) as a subspace of K^cols.
Subspace kernel(const Matrix& m);
/// Column space of m as a subspace of K^rows.
Subspace image(const Matrix& m);
/// {v : map * v in w}.
Subspace preimage(const Matrix& map, const Subspace& w);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// A complement of b inside a together with coordinates on a/b.
struct QuotientBasis {
  Matrix complement;   // rows: vectors of a spanning a complement of b
  Matrix projection;   // dim(a/b) x ambient: kills b, sends complement row r to e_r
};

/// Requires b to be contained in a. The complement is chosen greedily from the
/// canonical basis of a, so the result is deterministic.
QuotientBasis quotient_basis(const Subspace& a, const Subspace& b);

/// V (x) W inside K^(n*m).
Subspace tensor(const Subspace& a, const Subspace& b);

/// A basis of the ambient space starting with the rows of the given
/// independent family, completed greedily by coordinate vectors.
Matrix complete_basis(const Matrix& independent_rows);

}  // namespace coquiver

#endif
