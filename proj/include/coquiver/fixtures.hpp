#ifndef COQUIVER_FIXTURES_HPP
#define COQUIVER_FIXTURES_HPP

#include <string>
#include <vector>

#include "coquiver/cotensor.hpp"

namespace coquiver {

/// n group-likes 1, g, g2, ...
Coalgebra grouplike(std::size_t n);
/// c0 ... c(n-1) with Delta c_m = sum_{i+j=m} c_i (x) c_j.
Coalgebra divided(std::size_t n);
/// Basis 1, g, x, gx; x is (1, g)-primitive.
Coalgebra sweedler4();
/// M^c(n): Delta e_pq = sum_k e_pk (x) e_kq.
Coalgebra matrix_coalgebra(std::size_t n);
/// The dual of the 3 x 3 matrices supported on {11, 12, 13, 22, 23, 32, 33}:
/// C_0 = K e11 + M^c(2) on {2, 3}, one arrow between the two blocks.
Coalgebra tri_block();
/// The dual coalgebra of the group algebra of Z/n1 x ... x Z/nk, basis the
/// point functions d<g>. Cosemisimple; non-split over Q as soon as some n > 2.
Coalgebra group_dual(const std::vector<std::size_t>& orders);
/// The dual of KQ_0 + KQ_1 with e_t a = a = a e_s and zero radical square.
Coalgebra rad_square_zero_dual(const Quiver& q);

/// Quivers by name: loop, kronecker, a_N (linear), cycle_N, loops_N (one
/// vertex), empty_N.
Quiver quiver_fixture(const std::string& name);

/// Coalgebras by name: grouplike_N, divided_N, sweedler4, matrix_N, tri_block,
/// groupdual_N, groupdual_AxB, pathcoalg(Q,L), rad_square_zero_dual(Q),
/// sum(A,B), tensor(A,B). Throws PreconditionError for unknown names.
Coalgebra fixture(const std::string& name);
bool is_quiver_fixture(const std::string& name);

/// The named corpus used by the acceptance checks.
std::vector<std::string> builtin_fixture_names();

}  // namespace coquiver

#endif
