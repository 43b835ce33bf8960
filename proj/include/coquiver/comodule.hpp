#ifndef COQUIVER_COMODULE_HPP
#define COQUIVER_COMODULE_HPP

#include <vector>

#include "coquiver/coradical.hpp"

namespace coquiver {

enum class Side { left, right };

/// A comodule over `over`. For a right comodule rho : M -> M (x) C has row
/// index a * dim C + k; for a left comodule rho : M -> C (x) M has row index
/// k * dim M + a.
struct Comodule {
  Coalgebra over;
  Side side = Side::right;
  std::size_t dim = 0;
  Matrix rho;
};

/// rho_l : M -> L (x) M and rho_r : M -> M (x) R, indexed as above.
struct Bicomodule {
  Coalgebra left_over, right_over;
  std::size_t dim = 0;
  Matrix rho_l, rho_r;

  Comodule left() const { return {left_over, Side::left, dim, rho_l}; }
  Comodule right() const { return {right_over, Side::right, dim, rho_r}; }
};

bool is_comodule(const Comodule& m);
bool is_bicomodule(const Bicomodule& m);

Comodule regular_comodule(const Coalgebra& c, Side side = Side::right);
bool is_subcomodule(const Comodule& m, const Subspace& s);
/// The coaction restricted to a subcomodule, in the canonical basis of s.
Comodule subcomodule(const Comodule& m, const Subspace& s);
/// M / s with the induced coaction, in the basis given by quotient_basis.
Comodule quotient_comodule(const Comodule& m, const Subspace& s);

/// rho^{-1}(M (x) C_0) (mirrored for left comodules), for C_0 given inside `over`.
Subspace socle(const Comodule& m, const Subspace& c0);
Subspace socle(const Comodule& m);

/// Basis of Hom(a, b) as dim b x dim a matrices.
std::vector<Matrix> hom_space(const Comodule& a, const Comodule& b);

/// The C_0-bicomodule C_1 / C_0, over the coalgebra C_0 in its canonical basis.
/// The coactions are the maps induced by (P (x) Id) Delta and (Id (x) P) Delta
/// where P : C_1 -> C_1 / C_0.
struct QuotientBicomodule {
  Bicomodule m;
  QuotientBasis basis;  // complement of C_0 in C_1 and the projection
};
QuotientBicomodule c1_over_c0(const Structure& s);

/// ^iM^j = { m : rho_l(m) in D^i (x) M, rho_r(m) in M (x) D^j } for every pair,
/// with the D^i given in the basis of the base coalgebra (SimpleBlock::local).
/// Throws InvariantError unless M is the direct sum of the parts.
std::vector<std::vector<Subspace>> block_decompose(const Bicomodule& m, const std::vector<SimpleBlock>& blocks);

struct InjectiveSummand {
  Subspace summand;  // C <- f for a primitive idempotent f of C*
  Subspace socle;    // its simple socle
  std::size_t block; // index of the simple block the socle belongs to
};

/// C = sum over a complete set of orthogonal primitive idempotents f of C* of
/// the indecomposable injective right comodules C <- f.
std::vector<InjectiveSummand> injective_decomposition(const Structure& s);

/// Lifts of a complete orthogonal set of primitive idempotents of C* / J to
/// C*, listed block by block in the order of SimpleBlock::primitives.
std::vector<std::vector<Vector>> lifted_primitives(const Structure& s);

/// E(D^i) = C <- F_i where F_i lifts the central idempotent of block i.
Subspace injective_hull_of_block(const Structure& s, std::size_t i);

/// dim soc(E(D^i) / D^i) for the right comodule E(D^i).
std::size_t hull_quotient_socle_dim(const Structure& s, std::size_t i);

}  // namespace coquiver

#endif
