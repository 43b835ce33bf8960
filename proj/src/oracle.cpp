#include "coquiver/oracle.hpp"

#include "coquiver/fixtures.hpp"

namespace coquiver {

namespace {

// dense changes of basis make Delta dense and every check O(n^5); a handful of
// shears keeps the instances honest without that cost
std::size_t shear_count(std::size_t n) { return n <= 12 ? 2 * n : 8; }

}  // namespace

std::string OracleInstance::description() const {
  std::string q = quiver.name() + "[" + std::to_string(quiver.vertex_count()) + "v," +
                  std::to_string(quiver.arrow_count()) + "a]";
  switch (family) {
    case OracleFamily::rad_square_zero:
      return "rad_square_zero_dual(" + q + ")";
    case OracleFamily::truncated_path:
      return "pathcoalg(" + q + "," + std::to_string(length) + ")";
    case OracleFamily::nakayama_cycle:
      return "nakayama(" + q + "," + std::to_string(length) + ")";
  }
  return q;
}

std::size_t OracleGenerator::uniform(std::size_t lo, std::size_t hi) {
  // plain modulo keeps the stream identical across standard libraries
  return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
}

Quiver OracleGenerator::random_quiver(std::size_t max_vertices, std::size_t max_arrows) {
  const std::size_t nv = uniform(1, max_vertices), na = uniform(0, max_arrows);
  std::vector<std::string> vs;
  for (std::size_t i = 1; i <= nv; ++i) vs.push_back("e" + std::to_string(i));
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < na; ++a) {
    std::size_t s = uniform(0, nv - 1), t = uniform(0, nv - 1);
    arrows.push_back({"a" + std::to_string(a + 1), s, t});
  }
  return Quiver("rq" + std::to_string(++count_), vs, arrows);
}

Matrix OracleGenerator::random_basis_change(std::size_t n, std::size_t shears) {
  // signed permutation with scales, then column shears b_i += lambda b_j
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform(0, i - 1)]);
  static const long scales[] = {1, -1, 2, -2, 3};
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = Scalar(scales[uniform(0, 4)]);
  if (n < 2) return p;
  for (std::size_t k = 0; k < shears; ++k) {
    std::size_t i = uniform(0, n - 1), j = uniform(0, n - 2);
    if (j >= i) ++j;
    Scalar lambda(uniform(0, 1) ? 1 : -1);
    for (std::size_t r = 0; r < n; ++r)
      if (!p(r, j).is_zero()) p(r, i) += lambda * p(r, j);
  }
  return p;
}

OracleInstance OracleGenerator::rad_square_zero(const Quiver& q) {
  OracleInstance inst;
  inst.family = OracleFamily::rad_square_zero;
  inst.quiver = q;
  Coalgebra c = rad_square_zero_dual(q);
  inst.basis_change = random_basis_change(c.dim(), shear_count(c.dim()));
  inst.coalgebra = change_basis(c, inst.basis_change);
  inst.coalgebra.set_name(inst.description());
  return inst;
}

OracleInstance OracleGenerator::truncated_path(const Quiver& q, std::size_t length) {
  OracleInstance inst;
  inst.family = OracleFamily::truncated_path;
  inst.quiver = q;
  inst.length = length;
  Coalgebra c = path_coalgebra(q, length).coalgebra;
  inst.basis_change = random_basis_change(c.dim(), shear_count(c.dim()));
  inst.coalgebra = change_basis(c, inst.basis_change);
  inst.coalgebra.set_name(inst.description());
  return inst;
}

OracleInstance OracleGenerator::next(std::size_t max_dim) {
  Quiver q = random_quiver();
  bool path = uniform(0, 1) == 1;
  if (!path) return rad_square_zero(q);
  std::size_t l = uniform(1, 3);
  while (l > 1 && path_coalgebra(q, l).coalgebra.dim() > max_dim) --l;
  return truncated_path(q, l);
}

OracleInstance OracleGenerator::nakayama_cycle(std::size_t max_vertices, std::size_t max_length) {
  const std::size_t k = uniform(1, max_vertices), l = uniform(1, max_length);
  Quiver q = quiver_fixture("cycle_" + std::to_string(k));
  OracleInstance inst = truncated_path(q, l);
  inst.family = OracleFamily::nakayama_cycle;
  inst.coalgebra.set_name(inst.description());
  return inst;
}

OracleOutcome run_oracle(const OracleInstance& inst) {
  Structure s = analyze(inst.coalgebra);
  OracleOutcome out;
  out.gabriel = gabriel_quiver(s).counts();
  out.ext = ext_quiver(s).counts();
  out.link = link_quiver(s).counts();
  out.agree = out.gabriel == out.ext && out.gabriel == out.link;
  // block i is spanned by a group-like; in the original basis it is a vertex
  const std::size_t nb = s.blocks.size(), nv = inst.quiver.vertex_count();
  std::vector<std::size_t> vertex(nb, nv);
  bool mapped = nb == nv;
  for (std::size_t i = 0; i < nb && mapped; ++i) {
    if (s.blocks[i].subspace.dim() != 1) {
      mapped = false;
      break;
    }
    Vector orig = inst.basis_change * s.blocks[i].subspace.vector(0);
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < orig.size(); ++k)
      if (!orig[k].is_zero()) {
        ++nonzero;
        vertex[i] = k;
      }
    if (nonzero != 1 || vertex[i] >= nv) mapped = false;
  }
  CountMatrix q = inst.quiver.counts();
  out.expected.assign(nb, std::vector<std::size_t>(nb, 0));
  if (mapped)
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) out.expected[i][j] = q[vertex[i]][vertex[j]];
  out.matches = mapped && out.agree && out.gabriel == out.expected;
  return out;
}

}  // namespace coquiver
