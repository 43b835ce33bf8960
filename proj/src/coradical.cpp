#include "coquiver/coradical.hpp"

#include <algorithm>

namespace coquiver {

namespace {

// T_ij = Tr(L_{e_i e_j}).
Matrix trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  Vector tau = a.basis_traces();
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, q] : a.product_of_basis(i, j))
        if (!tau[k].is_zero()) t(i, j) += q * tau[k];
  return t;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& j) {
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < j.dim(); ++r) {
    Vector x = j.vector(r);
    for (std::size_t k = 0; k < n; ++k) {
      Vector ek = unit_vector(n, k);
      if (!j.contains(a.multiply(ek, x)) || !j.contains(a.multiply(x, ek))) return false;
    }
  }
  return true;
}

}  // namespace

Subspace jacobson_radical(const Algebra& a) {
  for (const auto& x : a.unit())
    if (!x.field().is_rational())
      throw UnsupportedError("jacobson_radical needs characteristic 0; prime field mode does not support it");
  Subspace j = kernel(trace_form(a).transpose());
  if (!is_two_sided_ideal(a, j)) throw InvariantError("trace-form radical is not a two-sided ideal");
  radical_powers(a, j);  // throws unless nilpotent
  if (!j.is_zero()) {
    QuotientAlgebra q = quotient(a, j);
    if (rank(trace_form(q.algebra)) != q.algebra.dim())
      throw InvariantError("A / rad(A) has a degenerate trace form");
  } else if (rank(trace_form(a)) != a.dim()) {
    throw InvariantError("trace form degenerate on a semisimple algebra");
  }
  return j;
}

std::vector<Subspace> radical_powers(const Algebra& a, const Subspace& j) {
  std::vector<Subspace> out{j};
  while (!out.back().is_zero()) {
    if (out.size() > a.dim() + 1) throw InvariantError("radical is not nilpotent");
    Subspace next = a.products(out.back(), j);
    if (next == out.back()) throw InvariantError("radical is not nilpotent");
    out.push_back(std::move(next));
  }
  return out;
}

Subspace coradical(const Coalgebra& c) {
  Subspace j = jacobson_radical(dual_algebra(c));
  if (j.is_zero()) return Subspace::full(c.dim());
  return kernel(j.basis());
}

Subspace wedge(const Coalgebra& c, const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != c.dim() || w.ambient_dim() != c.dim())
    throw DimensionError("wedge: subspaces must live in C");
  Matrix pv = v.quotient_projection(), pw = w.quotient_projection();
  if (pv.rows() == 0 || pw.rows() == 0) return Subspace::full(c.dim());
  return kernel(c.delta_through(pv, pw));
}

std::vector<Subspace> coradical_filtration(const Coalgebra& c, const Subspace& c0) {
  std::vector<Subspace> steps{c0};
  while (!steps.back().is_full()) {
    Subspace next = wedge(c, c0, steps.back());
    if (next.dim() <= steps.back().dim()) throw InvariantError("coradical filtration stopped growing");
    steps.push_back(std::move(next));
  }
  return steps;
}

std::vector<Subspace> coradical_filtration(const Coalgebra& c) {
  return coradical_filtration(c, coradical(c));
}

bool filtration_is_coalgebra_filtration(const Coalgebra& c, const std::vector<Subspace>& steps) {
  const std::size_t n = c.dim();
  // adapted basis: C_0 basis, then complements of C_{i-1} in C_i
  std::vector<Vector> rows;
  std::vector<std::size_t> degree;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    Matrix comp = s == 0 ? steps[0].basis() : quotient_basis(steps[s], steps[s - 1]).complement;
    for (std::size_t r = 0; r < comp.rows(); ++r) {
      rows.push_back(comp.row_vector(r));
      degree.push_back(s);
    }
  }
  if (rows.size() != n) return false;
  Matrix g = inverse(Matrix::from_rows(rows, n).transpose());  // coordinates in the adapted basis
  for (std::size_t s = 0; s < steps.size(); ++s)
    for (std::size_t r = 0; r < steps[s].dim(); ++r) {
      Vector dx = c.apply_delta(steps[s].vector(r));
      Matrix x(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = dx[i * n + j];
      Matrix y = g * x * g.transpose();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (degree[a] + degree[b] > s && !y(a, b).is_zero()) return false;
    }
  return true;
}

std::vector<SimpleBlock> simple_blocks(const Coalgebra& c) {
  Algebra a = dual_algebra(c);
  std::vector<SimpleBlock> blocks;
  for (const auto& e : central_primitive_idempotents(a)) {
    SimpleBlock b;
    b.central = e;
    b.subspace = image(hit_left_matrix(c, e));
    b.primitives = orthogonal_primitives(a, e, &b.certified);
    b.e = b.primitives.front();
    b.n = b.primitives.size();
    b.d = a.corner(b.e, b.e).dim();
    if (b.n * b.n * b.d != b.subspace.dim()) throw InvariantError("simple block dimension is not n^2 d");
    b.simple = image(hit_right_matrix(c, b.e));
    if (b.simple.dim() != b.n * b.d) throw InvariantError("simple comodule has the wrong dimension");
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), [](const SimpleBlock& x, const SimpleBlock& y) {
    return x.subspace.pivots().front() < y.subspace.pivots().front();
  });
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i].index = i;
  return blocks;
}

Vector Structure::extend_from_c0(const Vector& g) const {
  if (g.size() != c0.dim()) throw DimensionError("extend_from_c0: length mismatch");
  Vector f(coalgebra.dim());
  for (std::size_t r = 0; r < c0.dim(); ++r) f[c0.pivots()[r]] = g[r];
  return f;
}

Vector Structure::restrict_to_c0(const Vector& f) const {
  Vector g(c0.dim());
  for (std::size_t r = 0; r < c0.dim(); ++r) g[r] = dot(f, c0.vector(r));
  return g;
}

Structure analyze(const Coalgebra& c) {
  AxiomReport rep = c.check_axioms();
  if (!rep.ok()) throw AxiomError(c.name() + ": " + rep.to_string(c.labels()));
  Structure s;
  s.coalgebra = c;
  s.dual = dual_algebra(c);
  s.radical = jacobson_radical(s.dual);
  s.powers = radical_powers(s.dual, s.radical);
  s.c0 = s.radical.is_zero() ? Subspace::full(c.dim()) : kernel(s.radical.basis());
  s.c0_coalgebra = restrict(c, s.c0, c.name() + "_0");
  s.c0_dual = dual_algebra(s.c0_coalgebra);
  s.filtration = coradical_filtration(c, s.c0);

  std::vector<SimpleBlock> local = simple_blocks(s.c0_coalgebra);
  auto to_c = [&](const Subspace& sub) {
    std::vector<Vector> vs;
    for (std::size_t r = 0; r < sub.dim(); ++r) vs.push_back(s.c0.combine(sub.vector(r)));
    return Subspace::span(vs, c.dim());
  };
  Subspace total(c.dim());
  for (auto& b : local) {
    b.local = b.subspace;
    b.subspace = to_c(b.local);
    b.simple = to_c(b.simple);
    total = sum(total, b.subspace);
  }
  if (!(total == s.c0)) throw InvariantError("simple blocks do not add up to the coradical");
  std::sort(local.begin(), local.end(), [](const SimpleBlock& x, const SimpleBlock& y) {
    return x.subspace.pivots().front() < y.subspace.pivots().front();
  });
  for (std::size_t i = 0; i < local.size(); ++i) local[i].index = i;
  s.blocks = std::move(local);
  return s;
}

}  // namespace coquiver
