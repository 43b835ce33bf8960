#ifndef COQUIVER_EMBEDDING_HPP
#define COQUIVER_EMBEDDING_HPP

#include <optional>
#include <vector>

#include "coquiver/cotensor.hpp"

namespace coquiver {

/// A coideal complement C = C_0 + I and the maps built from it. Maps into C_0
/// use the canonical basis of s.c0; maps into M = C_1/C_0 use the basis of
/// c1_over_c0(s).
struct SplittingData {
  std::vector<std::vector<std::vector<Vector>>> units;  // lifted matrix units of C*, per block
  Subspace complement;   // S in C*, spanned by the lifted units
  Subspace coideal;      // I = S^perp
  Matrix f0;             // C -> C_0, identity on C_0, zero on I
  Subspace c1_complement;  // C_1 cap I
  Matrix theta;          // C_1 cap I -> M, in the canonical basis of c1_complement
  Matrix f1;             // C -> M, a C_0-bicomodule map killing C_0
};

/// Requires every block to be split (d_i = 1); throws UnsupportedError
/// otherwise. All invariants are verified exactly.
SplittingData wedderburn_malcev_splitting(const Structure& s, const QuotientBicomodule& m);

/// F = f0 + sum_k f1^(x k) Delta_(k-1) into the truncated cotensor coalgebra
/// `target` over C_0. f1 must kill C_0; the terms beyond the truncation must
/// vanish (checked).
Matrix universal_map(const Structure& s, const CotensorCoalgebra& target, const Matrix& f0, const Matrix& f1);

struct EmbeddingResult {
  SplittingData splitting;
  CotensorCoalgebra target;
  Matrix map;                  // C -> target.assembled
  bool coalgebra_map = false;
  std::size_t rank = 0;
  bool injective = false;      // rank = dim C
  std::size_t rank_on_c1 = 0;
  bool injective_on_c1 = false;
  Subspace image_of_c1;
  bool c1_to_degree1 = false;  // F(C_1) = degrees <= 1
  std::size_t image_top_degree = 0;
  bool ok() const { return coalgebra_map && injective && injective_on_c1 && c1_to_degree1; }
};

/// The embedding C -> Cot_{C_0}(C_1/C_0) truncated at `truncate` (default:
/// the coradical filtration length of C).
EmbeddingResult dual_gabriel_embedding(const Structure& s, std::optional<std::size_t> truncate = {});

}  // namespace coquiver

#endif
