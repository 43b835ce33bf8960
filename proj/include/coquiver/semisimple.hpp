#ifndef COQUIVER_SEMISIMPLE_HPP
#define COQUIVER_SEMISIMPLE_HPP

#include <cstdint>
#include <vector>

#include "coquiver/algebra.hpp"

// Wedderburn data of semisimple algebras over Q: central primitive
// idempotents, primitive idempotents of the simple components, matrix units.

namespace coquiver {

/// Central primitive idempotents of a semisimple algebra over Q, found by
/// splitting its commutative center with minimal polynomials. Returned in
/// the order of their lowest nonzero coordinate.
std::vector<Vector> central_primitive_idempotents(const Algebra& b, std::uint64_t seed = 0x636f71);

struct PrimitiveSearch {
  Vector e;
  std::size_t corner_dim = 0;  // dim e B e
  /// False when e B e is a noncommutative algebra in which the bounded search
  /// found no zero divisor; e is then primitive only with high confidence.
  bool certified = true;
};

/// A primitive idempotent of the simple algebra unit * B * unit, where `unit`
/// is an idempotent of B whose corner is simple.
PrimitiveSearch primitive_idempotent(const Algebra& b, const Vector& unit,
                                     std::uint64_t seed = 0x707269);

/// A complete set of orthogonal primitive idempotents summing to `unit`.
std::vector<Vector> orthogonal_primitives(const Algebra& b, const Vector& unit, bool* certified = nullptr);

/// Matrix units E[p][q] of a split simple block from its orthogonal
/// primitives (E[p][p] = prims[p]). Requires dim e B e = 1.
std::vector<std::vector<Vector>> matrix_units(const Algebra& b, const std::vector<Vector>& prims);

}  // namespace coquiver

#endif
