#ifndef COQUIVER_QUIVER_HPP
#define COQUIVER_QUIVER_HPP

#include <string>
#include <vector>

#include "coquiver/comodule.hpp"

namespace coquiver {

using CountMatrix = std::vector<std::vector<std::size_t>>;

struct Arrow {
  std::string name;
  std::size_t source = 0, target = 0;
};

/// A finite quiver. counts()[i][j] is the number of arrows i -> j.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows);
  /// Arrows are named a<i>_<j> (with a suffix when there are several).
  static Quiver from_counts(std::string name, std::vector<std::string> vertices, const CountMatrix& counts);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  CountMatrix counts() const;
  std::vector<std::size_t> sources() const;
  std::vector<std::size_t> sinks() const;
  bool is_connected() const;
  /// Connected components of the underlying undirected graph, each sorted.
  std::vector<std::vector<std::size_t>> components() const;

  std::string to_dot() const;

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Vertex names for the simple blocks: the basis label when D^i is spanned by
/// a basis vector, D<i> otherwise (1-based).
std::vector<std::string> block_names(const Structure& s);

// All three constructions use one orientation: the number of arrows i -> j
// equals dim Ext^1(S_i, S_j), so that for Sweedler's coalgebra the
// (1, g)-primitive x gives the arrow 1 -> g.

/// t_ij = dim e_i . ^jM^i . e_j with M = C_1 / C_0, where f . m = sum m_0 f(m_1)
/// and m . g = sum g(m_-1) m_0.
Quiver gabriel_quiver(const Structure& s);
/// Count for i -> j: dim f_j J f_i - dim f_j J^2 f_i over A = C*, with f_i a
/// lift of the primitive idempotent of block i.
Quiver ext_quiver(const Structure& s);
/// l_ij = dim((D^j ^ D^i) / (D^i + D^j)) / (n_i n_j); throws InvariantError
/// when the division is not exact.
Quiver link_quiver(const Structure& s);

struct TaftWilsonPair {
  std::size_t i = 0, j = 0;
  std::size_t wedge_dim = 0;     // dim D^i ^ D^j
  std::size_t overlap_dim = 0;   // dim (D^i ^ D^j) cap C_0
  std::size_t sum_dim = 0;       // dim D^i + D^j
  std::size_t quotient_dim = 0;  // wedge_dim - overlap_dim
  std::size_t block_dim = 0;     // dim ^i(C_1/C_0)^j
  bool overlap_ok = false;       // (D^i ^ D^j) cap C_0 = D^i + D^j
};

struct PointedReport {
  bool applicable = false;           // every block one-dimensional
  std::vector<Vector> grouplikes;    // g_i spanning D^i with epsilon(g_i) = 1
  CountMatrix primitive_dims;        // dim P_{g_i, g_j}
  bool decomposition_ok = false;     // C_1 = KG + sum P'_{g,h}, direct
};

struct TaftWilsonReport {
  std::vector<TaftWilsonPair> pairs;
  std::size_t c0_dim = 0, c1_dim = 0, wedge_sum_dim = 0;
  bool sum_is_c1 = false;         // sum of all D^i ^ D^j equals C_1
  bool quotients_ok = false;      // sum of quotient dims = dim C_1/C_0
  bool blocks_ok = false;         // quotient dims match ^i(C_1/C_0)^j
  PointedReport pointed;
  bool ok() const;
};

TaftWilsonReport taft_wilson(const Structure& s);

/// P_{g,h} = { c : Delta(c) = c (x) g + h (x) c }.
Subspace primitives(const Coalgebra& c, const Vector& g, const Vector& h);

}  // namespace coquiver

#endif
