#ifndef COQUIVER_ALGEBRA_HPP
#define COQUIVER_ALGEBRA_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "coquiver/matrix.hpp"
#include "coquiver/poly.hpp"
#include "coquiver/subspace.hpp"

namespace coquiver {

/// Sparse structure constant entry: coefficient q on basis element k.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// A finite-dimensional associative algebra given by structure constants.
/// table[i * dim + j] lists the expansion of the product e_i e_j.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::size_t dim, std::vector<SparseVector> table, Vector unit);

  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  const SparseVector& product_of_basis(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }

  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of x -> a x.
  Matrix left_mult(const Vector& a) const;
  /// Matrix of x -> x a.
  Matrix right_mult(const Vector& a) const;

  /// Index i with (e_i e_j) e_k != e_i (e_j e_k) for some j, k, if any.
  bool is_associative(std::size_t* witness = nullptr) const;
  bool is_unital() const;
  bool is_idempotent(const Vector& e) const { return multiply(e, e) == e; }

  Subspace center() const;
  /// span{ x y : x in a, y in b }.
  Subspace products(const Subspace& a, const Subspace& b) const;
  /// e A f.
  Subspace corner(const Vector& e, const Vector& f) const;
  /// Trace of left multiplication by each basis element.
  Vector basis_traces() const;

  /// Minimal polynomial of a inside the algebra with identity `one` (an
  /// idempotent with one * a = a * one = a). Rational field only.
  Poly min_poly(const Vector& a, const Vector& one) const;
  Vector evaluate(const Poly& p, const Vector& a, const Vector& one) const;

  /// The algebra structure on a subspace closed under multiplication, in the
  /// canonical basis of s, with the given identity element.
  Algebra restrict(const Subspace& s, const Vector& one) const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVector> table_;
  Vector unit_;
};

struct QuotientAlgebra {
  Algebra algebra;
  Matrix projection;  // dim(A/I) x dim A
  Matrix lift;        // dim A x dim(A/I), columns are the complement basis
};

/// A / I for a two-sided ideal I.
QuotientAlgebra quotient(const Algebra& a, const Subspace& ideal);

/// Newton iteration x <- 3x^2 - 2x^3 until idempotent. Converges whenever x is
/// idempotent modulo a nilpotent ideal; throws InvariantError otherwise.
Vector lift_idempotent(const Algebra& a, const Vector& x, int max_steps = 64);

}  // namespace coquiver

#endif
