#ifndef COQUIVER_COALGEBRA_HPP
#define COQUIVER_COALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "coquiver/algebra.hpp"
#include "coquiver/matrix.hpp"
#include "coquiver/subspace.hpp"

namespace coquiver {

/// q * c_i (x) c_j inside Delta(c_k).
struct Term {
  std::size_t i = 0, j = 0;
  Scalar q;
};

struct AxiomViolation {
  std::string identity;  // "coassociativity", "left counit", "right counit"
  std::size_t witness;   // basis index where the identity fails
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string(const std::vector<std::string>& labels) const;
};

/// A finite-dimensional coalgebra over Q or F_p given by structure constants.
/// The basis order is the order of `labels` and is never changed.
class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(std::string name, std::vector<std::string> labels, std::vector<std::vector<Term>> delta,
            Vector counit, Field field = {});

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t dim() const { return labels_.size(); }
  Field field() const { return field_; }

  /// The terms of Delta(c_k), merged and without zero coefficients.
  const std::vector<Term>& delta(std::size_t k) const { return delta_[k]; }
  const Vector& counit() const { return counit_; }

  /// Delta as a dim^2 x dim matrix.
  Matrix delta_matrix() const;
  /// Delta(v) in flattened C (x) C coordinates.
  Vector apply_delta(const Vector& v) const;
  /// (P (x) Q) Delta as a (rows P * rows Q) x dim matrix.
  Matrix delta_through(const Matrix& p, const Matrix& q) const;

  AxiomReport check_axioms() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> delta_;
  Vector counit_;
  Field field_;
};

/// C* with (f g)(c) = sum f(c_1) g(c_2) and unit the counit, in the dual basis.
Algebra dual_algebra(const Coalgebra& c);

/// f -> c = sum c_1 f(c_2).
Vector hit_left(const Coalgebra& c, const Vector& f, const Vector& v);
/// c <- f = sum f(c_1) c_2.
Vector hit_right(const Coalgebra& c, const Vector& v, const Vector& f);
/// Matrices of v -> f -> v and v -> v <- f.
Matrix hit_left_matrix(const Coalgebra& c, const Vector& f);
Matrix hit_right_matrix(const Coalgebra& c, const Vector& f);

/// Delta_n : C -> C^(n+1) as a dim^(n+1) x dim matrix; Delta_0 = Id.
Matrix iterated_delta(const Coalgebra& c, std::size_t n);

/// Smallest subcoalgebra containing v.
Subspace subcoalgebra_generated(const Coalgebra& c, const Vector& v);
/// Delta(s) in s (x) s.
bool is_subcoalgebra(const Coalgebra& c, const Subspace& s);

Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b);
/// C (x) D with Delta(c (x) d) = sum (c_1 (x) d_1) (x) (c_2 (x) d_2).
Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b);

/// The coalgebra on a subcoalgebra s, in the canonical basis of s.
Coalgebra restrict(const Coalgebra& c, const Subspace& s, const std::string& name);
/// New basis b_k = sum_i p(i, k) c_i for an invertible p.
Coalgebra change_basis(const Coalgebra& c, const Matrix& p);
/// The dual coalgebra of a finite-dimensional algebra: Delta(e_k*) = sum
/// coefficient of e_k in e_i e_j times e_i* (x) e_j*.
Coalgebra coalgebra_from_algebra(const Algebra& a, std::string name, std::vector<std::string> labels);

/// f intertwines Delta and the counits.
bool is_coalgebra_map(const Coalgebra& source, const Coalgebra& target, const Matrix& f);

}  // namespace coquiver

#endif
