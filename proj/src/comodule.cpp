#include "coquiver/comodule.hpp"

#include <map>

namespace coquiver {

namespace {

using SparseTensor = std::map<std::size_t, Scalar>;

void accumulate(SparseTensor& t, std::size_t idx, const Scalar& q) {
  auto [it, fresh] = t.try_emplace(idx, q);
  if (!fresh) {
    it->second += q;
    if (it->second.is_zero()) t.erase(it);
  }
}

void drop_zeros(SparseTensor& t) {
  for (auto it = t.begin(); it != t.end();)
    it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

bool comodule_laws(const Comodule& m) {
  const std::size_t n = m.over.dim(), d = m.dim;
  if (m.rho.rows() != d * n || m.rho.cols() != d) return false;
  const Matrix& r = m.rho;
  const Vector& eps = m.over.counit();
  for (std::size_t a = 0; a < d; ++a) {
    SparseTensor lhs, rhs;
    Vector co(d);
    for (std::size_t row = 0; row < d * n; ++row) {
      const Scalar& x = r(row, a);
      if (x.is_zero()) continue;
      if (m.side == Side::right) {
        std::size_t b = row / n, k = row % n;
        co[b] += x * eps[k];
        for (std::size_t row2 = 0; row2 < d * n; ++row2)
          if (!r(row2, b).is_zero()) accumulate(lhs, row2 * n + k, x * r(row2, b));
        for (const auto& t : m.over.delta(k)) accumulate(rhs, (b * n + t.i) * n + t.j, x * t.q);
      } else {
        std::size_t k = row / d, b = row % d;
        co[b] += x * eps[k];
        for (std::size_t row2 = 0; row2 < d * n; ++row2)
          if (!r(row2, b).is_zero()) accumulate(lhs, k * n * d + row2, x * r(row2, b));
        for (const auto& t : m.over.delta(k)) accumulate(rhs, (t.i * n + t.j) * d + b, x * t.q);
      }
    }
    drop_zeros(lhs);
    drop_zeros(rhs);
    if (lhs != rhs || co != unit_vector(d, a)) return false;
  }
  return true;
}

Matrix coaction_with_projection(const Comodule& m, const Matrix& proj_m) {
  const std::size_t n = m.over.dim();
  Matrix id = Matrix::identity(n);
  return m.side == Side::right ? tensor(proj_m, id) * m.rho : tensor(id, proj_m) * m.rho;
}

}  // namespace

bool is_comodule(const Comodule& m) { return comodule_laws(m); }

bool is_bicomodule(const Bicomodule& m) {
  if (!is_comodule(m.left()) || !is_comodule(m.right())) return false;
  const std::size_t d = m.dim, nl = m.left_over.dim(), nr = m.right_over.dim();
  for (std::size_t a = 0; a < d; ++a) {
    SparseTensor x, y;
    for (std::size_t row = 0; row < nl * d; ++row) {
      const Scalar& l = m.rho_l(row, a);
      if (l.is_zero()) continue;
      std::size_t k = row / d, b = row % d;
      for (std::size_t row2 = 0; row2 < d * nr; ++row2)
        if (!m.rho_r(row2, b).is_zero()) accumulate(x, k * d * nr + row2, l * m.rho_r(row2, b));
    }
    for (std::size_t row = 0; row < d * nr; ++row) {
      const Scalar& r = m.rho_r(row, a);
      if (r.is_zero()) continue;
      std::size_t b = row / nr, l = row % nr;
      for (std::size_t row2 = 0; row2 < nl * d; ++row2)
        if (!m.rho_l(row2, b).is_zero()) accumulate(y, row2 * nr + l, r * m.rho_l(row2, b));
    }
    drop_zeros(x);
    drop_zeros(y);
    if (x != y) return false;
  }
  return true;
}

Comodule regular_comodule(const Coalgebra& c, Side side) {
  return Comodule{c, side, c.dim(), c.delta_matrix()};
}

bool is_subcomodule(const Comodule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim) throw DimensionError("is_subcomodule: ambient mismatch");
  Matrix q = coaction_with_projection(m, s.quotient_projection());
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (!is_zero(q * s.vector(r))) return false;
  return true;
}

Comodule subcomodule(const Comodule& m, const Subspace& s) {
  if (!is_subcomodule(m, s)) throw PreconditionError("subcomodule: subspace is not stable");
  const std::size_t k = s.dim();
  // coordinates in s of the M-factor: read at the pivots
  Matrix sel(k, m.dim);
  for (std::size_t r = 0; r < k; ++r) sel(r, s.pivots()[r]) = 1;
  Matrix basis_cols = s.basis().transpose();
  Matrix rho = coaction_with_projection(m, sel) * basis_cols;
  Comodule out{m.over, m.side, k, rho};
  return out;
}

Comodule quotient_comodule(const Comodule& m, const Subspace& s) {
  if (!is_subcomodule(m, s)) throw PreconditionError("quotient_comodule: subspace is not stable");
  QuotientBasis qb = quotient_basis(Subspace::full(m.dim), s);
  Matrix rho = coaction_with_projection(m, qb.projection) * qb.complement.transpose();
  return Comodule{m.over, m.side, qb.complement.rows(), rho};
}

Subspace socle(const Comodule& m, const Subspace& c0) {
  if (c0.ambient_dim() != m.over.dim()) throw DimensionError("socle: coradical does not live in the base");
  const std::size_t d = m.dim;
  Matrix p = c0.quotient_projection();
  if (p.rows() == 0) return Subspace::full(d);
  Matrix id = Matrix::identity(d);
  Matrix q = m.side == Side::right ? tensor(id, p) * m.rho : tensor(p, id) * m.rho;
  return kernel(q);
}

Subspace socle(const Comodule& m) { return socle(m, coradical(m.over)); }

std::vector<Matrix> hom_space(const Comodule& a, const Comodule& b) {
  if (a.side != b.side || a.over.dim() != b.over.dim()) throw PreconditionError("hom_space: comodules differ in kind");
  const std::size_t n = a.over.dim(), da = a.dim, db = b.dim;
  auto var = [&](std::size_t x, std::size_t y) { return x * da + y; };
  Matrix sys(da * db * n, db * da);
  for (std::size_t a0 = 0; a0 < da; ++a0)
    for (std::size_t x2 = 0; x2 < db; ++x2)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = (a0 * db + x2) * n + k;
        if (a.side == Side::right) {
          for (std::size_t x = 0; x < db; ++x) sys(row, var(x, a0)) += b.rho(x2 * n + k, x);
          for (std::size_t y = 0; y < da; ++y) sys(row, var(x2, y)) -= a.rho(y * n + k, a0);
        } else {
          for (std::size_t x = 0; x < db; ++x) sys(row, var(x, a0)) += b.rho(k * db + x2, x);
          for (std::size_t y = 0; y < da; ++y) sys(row, var(x2, y)) -= a.rho(k * da + y, a0);
        }
      }
  Subspace sol = kernel(sys);
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < sol.dim(); ++r) {
    Vector v = sol.vector(r);
    Matrix phi(db, da);
    for (std::size_t x = 0; x < db; ++x)
      for (std::size_t y = 0; y < da; ++y) phi(x, y) = v[var(x, y)];
    out.push_back(std::move(phi));
  }
  return out;
}

QuotientBicomodule c1_over_c0(const Structure& s) {
  const Coalgebra& c = s.coalgebra;
  const std::size_t n = c.dim(), k0 = s.c0.dim();
  QuotientBicomodule out;
  out.basis = quotient_basis(s.c1(), s.c0);
  const Matrix& p = out.basis.projection;
  const std::size_t m = p.rows();
  Matrix id = Matrix::identity(n);
  Matrix right = c.delta_through(p, id), left = c.delta_through(id, p);
  Matrix rho_r(m * k0, m), rho_l(k0 * m, m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector u = out.basis.complement.row_vector(a);
    Vector r = right * u, l = left * u;
    for (std::size_t b = 0; b < m; ++b) {
      Vector tail(r.begin() + static_cast<long>(b * n), r.begin() + static_cast<long>((b + 1) * n));
      Vector coords = s.c0.coordinates(tail);
      for (std::size_t k = 0; k < k0; ++k) rho_r(b * k0 + k, a) = coords[k];
    }
    for (std::size_t b = 0; b < m; ++b) {
      Vector head(n);
      for (std::size_t i = 0; i < n; ++i) head[i] = l[i * m + b];
      Vector coords = s.c0.coordinates(head);
      for (std::size_t k = 0; k < k0; ++k) rho_l(k * m + b, a) = coords[k];
    }
  }
  out.m = Bicomodule{s.c0_coalgebra, s.c0_coalgebra, m, rho_l, rho_r};
  return out;
}

std::vector<std::vector<Subspace>> block_decompose(const Bicomodule& m, const std::vector<SimpleBlock>& blocks) {
  const std::size_t d = m.dim, nb = blocks.size();
  for (const auto& b : blocks)
    if (b.local.ambient_dim() != m.left_over.dim() || b.local.ambient_dim() != m.right_over.dim())
      throw PreconditionError("block_decompose: blocks must live in the base coalgebra");
  Matrix id = Matrix::identity(d);
  std::vector<Subspace> left_part, right_part;
  for (const auto& b : blocks) {
    Matrix p = b.local.quotient_projection();
    left_part.push_back(p.rows() ? kernel(tensor(p, id) * m.rho_l) : Subspace::full(d));
    right_part.push_back(p.rows() ? kernel(tensor(id, p) * m.rho_r) : Subspace::full(d));
  }
  std::vector<std::vector<Subspace>> grid(nb, std::vector<Subspace>(nb));
  Subspace total(d);
  std::size_t dims = 0;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      grid[i][j] = intersect(left_part[i], right_part[j]);
      dims += grid[i][j].dim();
      total = sum(total, grid[i][j]);
    }
  if (dims != d || !total.is_full()) throw InvariantError("bicomodule is not the direct sum of its blocks");
  return grid;
}

std::vector<std::vector<Vector>> lifted_primitives(const Structure& s) {
  const Algebra& a = s.dual;
  const std::size_t n = a.dim();
  std::vector<std::vector<Vector>> out;
  Vector taken(n);
  for (const auto& b : s.blocks) {
    std::vector<Vector> lifts;
    for (const auto& p : b.primitives) {
      Vector g = subtract(a.unit(), taken);
      Vector y = a.multiply(a.multiply(g, s.extend_from_c0(p)), g);
      Vector f = lift_idempotent(a, y);
      if (s.restrict_to_c0(f) != p) throw InvariantError("lifted idempotent does not reduce to the primitive");
      if (!is_zero(a.multiply(f, taken)) || !is_zero(a.multiply(taken, f)))
        throw InvariantError("lifted idempotents are not orthogonal");
      taken = add(taken, f);
      lifts.push_back(std::move(f));
    }
    out.push_back(std::move(lifts));
  }
  if (taken != a.unit()) throw InvariantError("lifted idempotents do not sum to the unit");
  return out;
}

std::vector<InjectiveSummand> injective_decomposition(const Structure& s) {
  const Coalgebra& c = s.coalgebra;
  std::vector<InjectiveSummand> out;
  Subspace total(c.dim());
  std::size_t dims = 0;
  auto lifts = lifted_primitives(s);
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (const auto& f : lifts[i]) {
      InjectiveSummand part;
      part.summand = image(hit_right_matrix(c, f));
      part.socle = intersect(part.summand, s.c0);
      part.block = i;
      if (!s.blocks[i].subspace.contains(part.socle))
        throw InvariantError("injective summand socle lies outside its block");
      dims += part.summand.dim();
      total = sum(total, part.summand);
      out.push_back(std::move(part));
    }
  if (dims != c.dim() || !total.is_full()) throw InvariantError("injective summands do not decompose C");
  return out;
}

Subspace injective_hull_of_block(const Structure& s, std::size_t i) {
  if (i >= s.blocks.size()) throw PreconditionError("injective_hull_of_block: no such block");
  Vector f = lift_idempotent(s.dual, s.extend_from_c0(s.blocks[i].central));
  return image(hit_right_matrix(s.coalgebra, f));
}

std::size_t hull_quotient_socle_dim(const Structure& s, std::size_t i) {
  Subspace e = injective_hull_of_block(s, i);
  Comodule hull = subcomodule(regular_comodule(s.coalgebra), e);
  std::vector<Vector> local;
  const Subspace& d = s.blocks[i].subspace;
  for (std::size_t r = 0; r < d.dim(); ++r) local.push_back(e.coordinates(d.vector(r)));
  Comodule q = quotient_comodule(hull, Subspace::span(local, e.dim()));
  return socle(q, s.c0).dim();
}

}  // namespace coquiver
