#ifndef COQUIVER_FROBENIUS_HPP
#define COQUIVER_FROBENIUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "coquiver/quiver.hpp"

namespace coquiver {

/// Central primitive idempotents of C*, found by splitting Z(C*) modulo its
/// radical and lifting. Ordered by their lowest nonzero coordinate.
std::vector<Vector> central_idempotents(const Structure& s);

bool is_indecomposable(const Structure& s);
bool is_indecomposable(const Coalgebra& c);

struct CoalgebraComponent {
  Vector idempotent;  // central idempotent z of C*
  Subspace subspace;  // C <- z
  Coalgebra coalgebra;
  std::vector<std::size_t> blocks;  // indices of the simple blocks of C inside it
};

/// The indecomposable components C <- z.
std::vector<CoalgebraComponent> components(const Structure& s);

struct QFReport {
  // multiplicity[i][j] = number of copies of S_j in soc(A f_i) (left) or
  // soc(f_i A) (right), for a lifted primitive idempotent f_i of block i
  std::vector<std::vector<std::size_t>> left_socle, right_socle;
  std::vector<std::optional<std::size_t>> left_nakayama, right_nakayama;
  bool left_ok = false, right_ok = false;
  bool is_qf = false;
};

/// The Nakayama criterion on both sides: every soc(A f_i) and soc(f_i A) is
/// simple and i -> socle class is a permutation.
QFReport is_quasi_frobenius_dual(const Structure& s);

struct ComponentVerdict {
  std::vector<std::size_t> blocks;
  bool qf = false;
  bool simple = false;
  std::vector<std::size_t> sources, sinks;  // in the component's own quiver
  std::string verdict;  // "holds", "violated", "simple", "not-qf"
};

struct QFTheoremReport {
  QFReport qf;
  std::vector<ComponentVerdict> components;
  bool ok() const;  // no component is "violated"
};

/// Per indecomposable component: a quasi-coFrobenius non-simple component must
/// have a Gabriel quiver without sources and sinks.
QFTheoremReport qf_quiver_theorem(const Structure& s);

}  // namespace coquiver

#endif
