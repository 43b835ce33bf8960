#ifndef COQUIVER_CORADICAL_HPP
#define COQUIVER_CORADICAL_HPP

#include <vector>

#include "coquiver/coalgebra.hpp"
#include "coquiver/semisimple.hpp"

namespace coquiver {

/// rad(A) by the trace form criterion (characteristic 0). The result is
/// verified to be a nilpotent two-sided ideal with semisimple quotient.
Subspace jacobson_radical(const Algebra& a);

/// J, J^2, ..., ending with the zero subspace.
std::vector<Subspace> radical_powers(const Algebra& a, const Subspace& j);

/// C_0 = rad(C*)^perp.
Subspace coradical(const Coalgebra& c);

/// V ^ W = Delta^{-1}(V (x) C + C (x) W).
Subspace wedge(const Coalgebra& c, const Subspace& v, const Subspace& w);

/// C_0, C_1, ..., C_N = C with C_n = C_0 ^ C_{n-1}.
std::vector<Subspace> coradical_filtration(const Coalgebra& c, const Subspace& c0);
std::vector<Subspace> coradical_filtration(const Coalgebra& c);
/// Delta(C_n) lies in sum_i C_i (x) C_{n-i} for every step.
bool filtration_is_coalgebra_filtration(const Coalgebra& c, const std::vector<Subspace>& steps);

struct SimpleBlock {
  std::size_t index = 0;
  Subspace subspace;        // D^i inside C
  Subspace local;           // D^i inside C_0, in the canonical basis of C_0
  std::size_t n = 0, d = 0; // (D^i)* = M_n(division algebra of dimension d)
  Vector central;           // central idempotent of (C_0)* cutting out D^i
  Vector e;                 // primitive idempotent of (C_0)* inside the block
  std::vector<Vector> primitives;  // complete orthogonal set in the block, e first
  bool certified = true;    // primitivity certified (see PrimitiveSearch)
  Subspace simple;          // S_i = D^i <- e, a right subcomodule of C
};

/// Blocks of a cosemisimple coalgebra given with its dual algebra. Blocks are
/// ordered by the lowest pivot of D^i in the basis of `c`.
std::vector<SimpleBlock> simple_blocks(const Coalgebra& c);

/// Everything derived from the coradical of one coalgebra, computed once.
struct Structure {
  Coalgebra coalgebra;
  Algebra dual;                     // A = C*
  Subspace radical;                 // J
  std::vector<Subspace> powers;     // J, J^2, ..., 0
  Subspace c0;                      // inside C
  Coalgebra c0_coalgebra;           // C_0 in the canonical basis of c0
  Algebra c0_dual;                  // (C_0)*, identified with A/J
  std::vector<Subspace> filtration; // C_0 ... C_N
  std::vector<SimpleBlock> blocks;

  std::size_t block_count() const { return blocks.size(); }
  const Subspace& c1() const { return filtration.size() > 1 ? filtration[1] : filtration[0]; }
  /// A functional on C restricting to the given functional on C_0 (zero on
  /// the non-pivot coordinates).
  Vector extend_from_c0(const Vector& g) const;
  /// Restriction of a functional on C to C_0 coordinates.
  Vector restrict_to_c0(const Vector& f) const;
};

Structure analyze(const Coalgebra& c);

}  // namespace coquiver

#endif
