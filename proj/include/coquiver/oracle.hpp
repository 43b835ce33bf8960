#ifndef COQUIVER_ORACLE_HPP
#define COQUIVER_ORACLE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coquiver/quiver.hpp"

namespace coquiver {

/// Random instances with a known Gabriel quiver.
enum class OracleFamily { rad_square_zero, truncated_path, nakayama_cycle };

struct OracleInstance {
  OracleFamily family = OracleFamily::rad_square_zero;
  Quiver quiver;          // the expected quiver
  std::size_t length = 1; // truncation for path families
  Matrix basis_change;    // columns: the new basis in the original one
  Coalgebra coalgebra;    // after the basis change
  std::string description() const;
};

class OracleGenerator {
 public:
  explicit OracleGenerator(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive
  Quiver random_quiver(std::size_t max_vertices = 5, std::size_t max_arrows = 6);
  /// A scaled permutation followed by `shears` elementary column operations.
  Matrix random_basis_change(std::size_t n, std::size_t shears);

  /// Alternates rad-square-zero duals and truncated path coalgebras; path
  /// lengths in 1..3, lowered until the dimension is at most `max_dim`.
  OracleInstance next(std::size_t max_dim = 40);
  OracleInstance rad_square_zero(const Quiver& q);
  OracleInstance truncated_path(const Quiver& q, std::size_t length);
  /// pathcoalg(cycle_k, l): self-injective duals of Nakayama algebras.
  OracleInstance nakayama_cycle(std::size_t max_vertices = 4, std::size_t max_length = 3);

 private:
  std::mt19937_64 rng_;
  std::size_t count_ = 0;
};

struct OracleOutcome {
  CountMatrix expected, gabriel, ext, link;
  bool agree = false;      // all three constructions equal
  bool matches = false;    // and equal to the expected quiver
};

/// Runs the three constructions and matches blocks to the vertices of the
/// expected quiver through their group-like elements.
OracleOutcome run_oracle(const OracleInstance& inst);

}  // namespace coquiver

#endif
