#include "coquiver/embedding.hpp"

#include "coquiver/semisimple.hpp"

namespace coquiver {

namespace {

// f -> m and m <- f on the bicomodule M, for f a functional on C restricted to C_0.
Matrix m_hit_left(const Bicomodule& m, const Vector& f0coords) {
  const std::size_t d = m.dim, k0 = m.right_over.dim();
  Matrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < k0; ++k)
        if (!f0coords[k].is_zero()) out(b, a) += m.rho_r(b * k0 + k, a) * f0coords[k];
  return out;
}

Matrix m_hit_right(const Bicomodule& m, const Vector& f0coords) {
  const std::size_t d = m.dim, k0 = m.left_over.dim();
  Matrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < k0; ++k)
        if (!f0coords[k].is_zero()) out(b, a) += m.rho_l(k * d + b, a) * f0coords[k];
  return out;
}

// Inverse of f + j inside the corner f A f, for j in f J f.
Vector corner_inverse(const Algebra& a, const Vector& f, const Vector& x) {
  Vector j = subtract(x, f);
  Vector term = f, w = f;
  for (std::size_t k = 0; k <= a.dim(); ++k) {
    term = scale(a.multiply(term, j), Scalar(-1));
    if (is_zero(term)) return w;
    w = add(w, term);
  }
  throw InvariantError("corner element is not unipotent");
}

}  // namespace

SplittingData wedderburn_malcev_splitting(const Structure& s, const QuotientBicomodule& qb) {
  const Coalgebra& c = s.coalgebra;
  const Algebra& a = s.dual;
  const std::size_t n = c.dim(), k0 = s.c0.dim();
  for (const auto& b : s.blocks)
    if (b.d != 1)
      throw UnsupportedError("coradical block " + std::to_string(b.index + 1) + " is not split (d = " +
                             std::to_string(b.d) + "); the splitting needs a separable split coradical");
  SplittingData out;
  auto lifts = lifted_primitives(s);
  std::vector<Vector> span_vectors;
  for (std::size_t bi = 0; bi < s.blocks.size(); ++bi) {
    const auto& prims = s.blocks[bi].primitives;
    const auto& f = lifts[bi];
    const std::size_t nb = prims.size();
    auto base = matrix_units(s.c0_dual, prims);
    std::vector<Vector> u(nb), v(nb);
    u[0] = v[0] = f[0];
    for (std::size_t p = 1; p < nb; ++p) {
      u[p] = a.multiply(a.multiply(f[0], s.extend_from_c0(base[0][p])), f[p]);
      Vector vp = a.multiply(a.multiply(f[p], s.extend_from_c0(base[p][0])), f[0]);
      v[p] = a.multiply(vp, corner_inverse(a, f[0], a.multiply(u[p], vp)));
    }
    std::vector<std::vector<Vector>> units(nb, std::vector<Vector>(nb));
    for (std::size_t p = 0; p < nb; ++p)
      for (std::size_t q = 0; q < nb; ++q) {
        units[p][q] = p == q ? f[p] : a.multiply(v[p], u[q]);
        if (s.restrict_to_c0(units[p][q]) != base[p][q]) throw InvariantError("lifted unit does not reduce correctly");
        span_vectors.push_back(units[p][q]);
      }
    for (std::size_t p = 0; p < nb; ++p)
      for (std::size_t q = 0; q < nb; ++q)
        for (std::size_t r = 0; r < nb; ++r)
          for (std::size_t t = 0; t < nb; ++t) {
            Vector prod = a.multiply(units[p][q], units[r][t]);
            if (q == r ? prod != units[p][t] : !is_zero(prod)) throw InvariantError("lifted matrix units fail the relations");
          }
    out.units.push_back(std::move(units));
  }
  out.complement = Subspace::span(span_vectors, n);
  if (out.complement.dim() != k0 || !intersect(out.complement, s.radical).is_zero())
    throw InvariantError("lifted units do not span a complement of the radical");

  out.coideal = kernel(out.complement.basis());
  if (!wedge(c, out.coideal, out.coideal).contains(out.coideal)) throw InvariantError("I is not a coideal");
  for (std::size_t r = 0; r < out.coideal.dim(); ++r)
    if (!dot(c.counit(), out.coideal.vector(r)).is_zero()) throw InvariantError("counit does not vanish on I");

  // f0: coordinates along C_0 in C = C_0 + I
  std::vector<Vector> cols;
  for (std::size_t r = 0; r < k0; ++r) cols.push_back(s.c0.vector(r));
  for (std::size_t r = 0; r < out.coideal.dim(); ++r) cols.push_back(out.coideal.vector(r));
  Matrix inv = inverse(Matrix::from_columns(cols, n));
  out.f0 = inv.row_block(0, k0);
  if (!is_coalgebra_map(c, s.c0_coalgebra, out.f0)) throw InvariantError("f0 is not a coalgebra map");

  out.c1_complement = intersect(s.c1(), out.coideal);
  const Matrix& p = qb.basis.projection;
  out.theta = p * out.c1_complement.basis().transpose();
  if (rank(out.theta) != qb.m.dim || out.c1_complement.dim() != qb.m.dim)
    throw InvariantError("C_1 cap I does not map isomorphically onto C_1/C_0");

  // average the linear extension p of C_1 -> C_1/C_0 over the separability
  // element sum_p E_p1 (x) E_1p on both sides
  Matrix g1(qb.m.dim, n);
  std::vector<std::pair<Vector, Vector>> sigma;
  for (const auto& units : out.units)
    for (std::size_t q = 0; q < units.size(); ++q) sigma.push_back({units[q][0], units[0][q]});
  for (const auto& [x, y] : sigma)
    g1 = g1 + m_hit_left(qb.m, s.restrict_to_c0(x)) * p * hit_left_matrix(c, y);
  Matrix g2(qb.m.dim, n);
  for (const auto& [x, y] : sigma)
    g2 = g2 + m_hit_right(qb.m, s.restrict_to_c0(y)) * g1 * hit_right_matrix(c, x);
  out.f1 = g2;

  Matrix c0cols = s.c0.basis().transpose(), c1cols = s.c1().basis().transpose();
  if (!(out.f1 * c0cols).is_zero()) throw InvariantError("f1 does not vanish on C_0");
  if (out.f1 * c1cols != p * c1cols) throw InvariantError("f1 does not restrict to the quotient map on C_1");
  for (const auto& v : span_vectors) {
    Vector r = s.restrict_to_c0(v);
    if (m_hit_left(qb.m, r) * out.f1 != out.f1 * hit_left_matrix(c, v) ||
        m_hit_right(qb.m, r) * out.f1 != out.f1 * hit_right_matrix(c, v))
      throw InvariantError("f1 is not a bicomodule map");
  }
  return out;
}

Matrix universal_map(const Structure& s, const CotensorCoalgebra& target, const Matrix& f0, const Matrix& f1) {
  const Coalgebra& c = s.coalgebra;
  const std::size_t n = c.dim(), d = target.m.dim;
  if (f0.rows() != target.base.dim() || f0.cols() != n || f1.rows() != d || f1.cols() != n)
    throw DimensionError("universal_map: shapes do not match the target");
  if (!(f1 * s.c0.basis().transpose()).is_zero()) throw PreconditionError("universal_map: f1 must vanish on C_0");
  Matrix out(target.offsets.back(), n);
  for (std::size_t r = 0; r < f0.rows(); ++r)
    for (std::size_t t = 0; t < n; ++t) out(r, t) = f0(r, t);
  Matrix g = f1;  // f1^(x k) Delta_(k-1), d^k x n
  for (std::size_t k = 1;; ++k) {
    if (k > target.max_degree) {
      if (!g.is_zero()) throw PreconditionError("universal_map: truncation is below the filtration length");
      break;
    }
    const Subspace& comp = target.components[k];
    for (std::size_t t = 0; t < n; ++t) {
      Vector col = g.column(t);
      if (is_zero(col)) continue;
      Vector co = comp.coordinates(col);
      for (std::size_t r = 0; r < co.size(); ++r) out(target.offsets[k] + r, t) = co[r];
    }
    Matrix next(g.rows() * d, n);
    for (std::size_t t = 0; t < n; ++t)
      for (const Term& term : c.delta(t))
        for (std::size_t a = 0; a < g.rows(); ++a) {
          const Scalar& x = g(a, term.i);
          if (x.is_zero()) continue;
          for (std::size_t b = 0; b < d; ++b) {
            const Scalar& y = f1(b, term.j);
            if (!y.is_zero()) next(a * d + b, t) += term.q * x * y;
          }
        }
    g = std::move(next);
    if (g.rows() == 0) break;
  }
  return out;
}

EmbeddingResult dual_gabriel_embedding(const Structure& s, std::optional<std::size_t> truncate) {
  const std::size_t length = s.filtration.size() - 1;
  const std::size_t level = truncate.value_or(length);
  if (level < length)
    throw PreconditionError("embed: truncation " + std::to_string(level) + " is below the filtration length " +
                            std::to_string(length));
  QuotientBicomodule qb = c1_over_c0(s);
  EmbeddingResult out;
  out.splitting = wedderburn_malcev_splitting(s, qb);
  out.target = cotensor_coalgebra(s.c0_coalgebra, qb.m, level);
  out.map = universal_map(s, out.target, out.splitting.f0, out.splitting.f1);
  out.coalgebra_map = is_coalgebra_map(s.coalgebra, out.target.assembled, out.map);
  out.rank = rank(out.map);
  out.injective = out.rank == s.coalgebra.dim();
  Matrix on_c1 = out.map * s.c1().basis().transpose();
  out.rank_on_c1 = rank(on_c1);
  out.injective_on_c1 = out.rank_on_c1 == s.c1().dim();
  out.image_of_c1 = image(on_c1);
  out.c1_to_degree1 = out.image_of_c1 == out.target.degrees_up_to(1);
  Subspace img = image(out.map);
  for (std::size_t k = 0; k <= level; ++k)
    if (out.target.degrees_up_to(k).contains(img)) {
      out.image_top_degree = k;
      break;
    }
  return out;
}

}  // namespace coquiver
