#ifndef COQUIVER_COTENSOR_HPP
#define COQUIVER_COTENSOR_HPP

#include <string>
#include <vector>

#include "coquiver/quiver.hpp"

namespace coquiver {

/// M box_C N = ker(rho (x) Id - Id (x) delta) inside M (x) N.
Subspace cotensor_product(const Comodule& m, const Comodule& n);

/// The truncation of Cot_C(M) to degrees 0..max_degree. Degree k is held as
/// the subspace M^(box k) of M^(x k); the assembled basis lists the basis of C,
/// then the canonical basis of each M^(box k) in turn.
struct CotensorCoalgebra {
  Coalgebra base;
  Bicomodule m;
  std::size_t max_degree = 0;
  std::vector<Subspace> components;  // components[0] = all of C, components[k] in M^(x k)
  std::vector<std::size_t> offsets;  // first assembled index of each degree, plus the total
  Coalgebra assembled;

  std::size_t degree_dim(std::size_t k) const { return offsets[k + 1] - offsets[k]; }
  /// Assembled indices of degrees <= k.
  Subspace degrees_up_to(std::size_t k) const;
};

/// Builds the truncated cotensor coalgebra with
///   Delta(m^1 ... m^n) = (m^1)_-1 (x) (m^1)_0 ... m^n
///                      + sum_i (m^1 ... m^i) (x) (m^i+1 ... m^n)
///                      + m^1 ... (m^n)_0 (x) (m^n)_1.
/// The base must be cosemisimple (checked over Q).
CotensorCoalgebra cotensor_coalgebra(const Coalgebra& base, const Bicomodule& m, std::size_t max_degree,
                                     const std::vector<std::string>& m_labels = {});

/// Paths written right to left: arrows[0] is traversed first.
struct Path {
  std::size_t vertex = 0;            // for length 0
  std::vector<std::size_t> arrows;
};

struct PathCoalgebra {
  Quiver quiver;
  std::size_t max_length = 0;
  std::vector<Path> paths;            // basis order: vertices, arrows, then longer paths
  std::vector<std::size_t> lengths;
  Coalgebra coalgebra;
};

/// The subcoalgebra of KQ^c spanned by paths of length <= l, with
///   Delta(a_l ... a_1) = p (x) s(a_1) + sum_i (a_l ... a_i+1) (x) (a_i ... a_1) + t(a_l) (x) p.
PathCoalgebra path_coalgebra(const Quiver& q, std::size_t l);

/// The bicomodule KQ_1 over the group-like coalgebra KQ_0 with
/// rho_l(a) = t(a) (x) a and rho_r(a) = a (x) s(a).
Bicomodule arrow_bicomodule(const Quiver& q, const Coalgebra& vertices);

struct PathCotensorIso {
  PathCoalgebra path;
  CotensorCoalgebra cot;
  Matrix map;  // path basis -> assembled cotensor basis
  std::vector<std::size_t> path_dims, cot_dims;
  bool coalgebra_map = false;
  bool bijective = false;  // degree by degree
  bool ok() const { return coalgebra_map && bijective && path_dims == cot_dims; }
};

/// Sends a_l ... a_1 to the word a_l (x) ... (x) a_1 and checks the result.
PathCotensorIso path_vs_cotensor_iso(const Quiver& q, std::size_t l);

/// d ^ d ^ ... ^ d (n factors); d must be a subcoalgebra.
Subspace wedge_power(const Coalgebra& amb, const Subspace& d, std::size_t n);

}  // namespace coquiver

#endif
