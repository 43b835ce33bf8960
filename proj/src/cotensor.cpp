#include "coquiver/cotensor.hpp"

#include <map>

namespace coquiver {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Coordinates of X = sum Y[r][s] a_r (x) b_s given X as a flattened tensor in
// (ambient of a) (x) (ambient of b); throws unless X lies in a (x) b.
Matrix split_coordinates(const Vector& x, const Subspace& a, const Subspace& b) {
  const std::size_t na = a.ambient_dim(), nb = b.ambient_dim();
  Matrix y(a.dim(), b.dim());
  Vector check(na * nb);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t s = 0; s < b.dim(); ++s) {
      const Scalar& v = x[a.pivots()[r] * nb + b.pivots()[s]];
      if (v.is_zero()) continue;
      y(r, s) = v;
      check = add(check, scale(tensor(a.vector(r), b.vector(s)), v));
    }
  if (check != x) throw InvariantError("cotensor coalgebra: tensor does not split along the components");
  return y;
}

bool is_pure_unit(const Vector& v, std::size_t* where) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      if (!v[i].is_one()) return false;
      *where = i;
      ++count;
    }
  return count == 1;
}

}  // namespace

Subspace cotensor_product(const Comodule& m, const Comodule& n) {
  if (m.side != Side::right || n.side != Side::left) throw PreconditionError("cotensor_product needs right (x) left");
  if (m.over.dim() != n.over.dim()) throw PreconditionError("cotensor_product: base coalgebras differ");
  const std::size_t c = m.over.dim(), dm = m.dim, dn = n.dim;
  Matrix sys(dm * c * dn, dm * dn);
  for (std::size_t a = 0; a < dm; ++a)
    for (std::size_t b = 0; b < dn; ++b) {
      std::size_t col = a * dn + b;
      for (std::size_t a2 = 0; a2 < dm; ++a2)
        for (std::size_t k = 0; k < c; ++k) {
          const Scalar& x = m.rho(a2 * c + k, a);
          if (!x.is_zero()) sys((a2 * c + k) * dn + b, col) += x;
        }
      for (std::size_t k = 0; k < c; ++k)
        for (std::size_t b2 = 0; b2 < dn; ++b2) {
          const Scalar& x = n.rho(k * dn + b2, b);
          if (!x.is_zero()) sys((a * c + k) * dn + b2, col) -= x;
        }
    }
  return kernel(sys);
}

Subspace CotensorCoalgebra::degrees_up_to(std::size_t k) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < offsets[std::min(k + 1, offsets.size() - 1)]; ++i) idx.push_back(i);
  return Subspace::coordinate(offsets.back(), idx);
}

CotensorCoalgebra cotensor_coalgebra(const Coalgebra& base, const Bicomodule& m, std::size_t max_degree,
                                     const std::vector<std::string>& m_labels) {
  if (m.left_over.dim() != base.dim() || m.right_over.dim() != base.dim())
    throw PreconditionError("cotensor_coalgebra: bicomodule is not over the base");
  if (base.field().is_rational() && !coradical(base).is_full())
    throw PreconditionError("cotensor_coalgebra: the base coalgebra must be cosemisimple");
  const std::size_t c = base.dim(), d = m.dim;
  std::vector<std::string> mlab = m_labels;
  if (mlab.empty())
    for (std::size_t a = 0; a < d; ++a) mlab.push_back("m" + std::to_string(a + 1));
  if (mlab.size() != d) throw DimensionError("cotensor_coalgebra: label count mismatch");

  CotensorCoalgebra out;
  out.base = base;
  out.m = m;
  out.max_degree = max_degree;
  out.components.push_back(Subspace::full(c));
  if (max_degree >= 1) out.components.push_back(Subspace::full(d));
  for (std::size_t k = 2; k <= max_degree; ++k) {
    const Subspace& prev = out.components[k - 1];
    const std::size_t amb = ipow(d, k - 1);
    if (prev.is_zero() || d == 0) {
      out.components.push_back(Subspace(amb * d));
      continue;
    }
    // unknowns y[r][b] for prev_r (x) e_b; condition on the last pair of factors
    Matrix sys(amb * c * d, prev.dim() * d);
    for (std::size_t r = 0; r < prev.dim(); ++r) {
      Vector w = prev.vector(r);
      for (std::size_t b = 0; b < d; ++b) {
        std::size_t col = r * d + b;
        for (std::size_t idx = 0; idx < amb; ++idx) {
          if (w[idx].is_zero()) continue;
          std::size_t prefix = idx / d, last = idx % d;
          for (std::size_t b1 = 0; b1 < d; ++b1)
            for (std::size_t kk = 0; kk < c; ++kk) {
              const Scalar& x = m.rho_r(b1 * c + kk, last);
              if (!x.is_zero()) sys(((prefix * d + b1) * c + kk) * d + b, col) += w[idx] * x;
            }
          for (std::size_t kk = 0; kk < c; ++kk)
            for (std::size_t b3 = 0; b3 < d; ++b3) {
              const Scalar& x = m.rho_l(kk * d + b3, b);
              if (!x.is_zero()) sys((idx * c + kk) * d + b3, col) -= w[idx] * x;
            }
        }
      }
    }
    Subspace sol = kernel(sys);
    std::vector<Vector> vs;
    for (std::size_t t = 0; t < sol.dim(); ++t) {
      Vector y = sol.vector(t);
      Vector x(amb * d);
      for (std::size_t r = 0; r < prev.dim(); ++r)
        for (std::size_t b = 0; b < d; ++b)
          if (!y[r * d + b].is_zero()) x = add(x, scale(tensor(prev.vector(r), unit_vector(d, b)), y[r * d + b]));
      vs.push_back(std::move(x));
    }
    out.components.push_back(Subspace::span(vs, amb * d));
  }

  out.offsets.push_back(0);
  for (const auto& comp : out.components) out.offsets.push_back(out.offsets.back() + comp.dim());
  const std::size_t total = out.offsets.back();

  std::vector<std::string> labels = base.labels();
  for (std::size_t k = 1; k <= max_degree; ++k) {
    const Subspace& comp = out.components[k];
    for (std::size_t r = 0; r < comp.dim(); ++r) {
      std::size_t where = 0;
      if (is_pure_unit(comp.vector(r), &where)) {
        std::string word;
        std::size_t rest = where;
        std::vector<std::string> letters(k);
        for (std::size_t f = k; f-- > 0;) {
          letters[f] = mlab[rest % d];
          rest /= d;
        }
        for (std::size_t f = 0; f < k; ++f) word += (f ? "|" : "") + letters[f];
        labels.push_back(word);
      } else {
        labels.push_back("w" + std::to_string(k) + "_" + std::to_string(r + 1));
      }
    }
  }

  std::vector<std::vector<Term>> delta(total);
  Vector counit(total);
  for (std::size_t i = 0; i < c; ++i) {
    delta[i] = base.delta(i);
    counit[i] = base.counit()[i];
  }
  for (std::size_t k = 1; k <= max_degree; ++k) {
    const Subspace& comp = out.components[k];
    const std::size_t amb = ipow(d, k), tail = ipow(d, k - 1);
    for (std::size_t r = 0; r < comp.dim(); ++r) {
      Vector w = comp.vector(r);
      std::vector<Term>& ts = delta[out.offsets[k] + r];
      // left coaction on the first factor
      std::vector<Vector> left(c, Vector(amb)), right(c, Vector(amb));
      for (std::size_t idx = 0; idx < amb; ++idx) {
        if (w[idx].is_zero()) continue;
        std::size_t first = idx / tail, rest = idx % tail;
        for (std::size_t kk = 0; kk < c; ++kk)
          for (std::size_t b = 0; b < d; ++b) {
            const Scalar& x = m.rho_l(kk * d + b, first);
            if (!x.is_zero()) left[kk][b * tail + rest] += w[idx] * x;
          }
        std::size_t prefix = idx / d, last = idx % d;
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t kk = 0; kk < c; ++kk) {
            const Scalar& x = m.rho_r(b * c + kk, last);
            if (!x.is_zero()) right[kk][prefix * d + b] += w[idx] * x;
          }
      }
      for (std::size_t kk = 0; kk < c; ++kk) {
        if (!is_zero(left[kk])) {
          Vector co = comp.coordinates(left[kk]);
          for (std::size_t s = 0; s < co.size(); ++s)
            if (!co[s].is_zero()) ts.push_back({kk, out.offsets[k] + s, co[s]});
        }
        if (!is_zero(right[kk])) {
          Vector co = comp.coordinates(right[kk]);
          for (std::size_t s = 0; s < co.size(); ++s)
            if (!co[s].is_zero()) ts.push_back({out.offsets[k] + s, kk, co[s]});
        }
      }
      for (std::size_t i = 1; i < k; ++i) {
        Matrix y = split_coordinates(w, out.components[i], out.components[k - i]);
        for (std::size_t a = 0; a < y.rows(); ++a)
          for (std::size_t b = 0; b < y.cols(); ++b)
            if (!y(a, b).is_zero()) ts.push_back({out.offsets[i] + a, out.offsets[k - i] + b, y(a, b)});
      }
    }
  }
  out.assembled = Coalgebra("cot(" + base.name() + "," + std::to_string(max_degree) + ")", std::move(labels),
                            std::move(delta), std::move(counit), base.field());
  return out;
}

PathCoalgebra path_coalgebra(const Quiver& q, std::size_t l) {
  PathCoalgebra out;
  out.quiver = q;
  out.max_length = l;
  const auto& arrows = q.arrows();
  std::map<std::vector<std::size_t>, std::size_t> index;  // arrow sequence -> basis index
  std::vector<std::size_t> vertex_index(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    vertex_index[v] = out.paths.size();
    out.paths.push_back({v, {}});
    out.lengths.push_back(0);
  }
  std::vector<std::vector<std::size_t>> frontier;
  if (l >= 1)
    for (std::size_t a = 0; a < arrows.size(); ++a) frontier.push_back({a});
  for (std::size_t len = 1; len <= l && !frontier.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : frontier) {
      index[seq] = out.paths.size();
      out.paths.push_back({arrows[seq.front()].source, seq});
      out.lengths.push_back(len);
      if (len < l)
        for (std::size_t a = 0; a < arrows.size(); ++a)
          if (arrows[a].source == arrows[seq.back()].target) {
            auto ext = seq;
            ext.push_back(a);
            next.push_back(std::move(ext));
          }
    }
    frontier = std::move(next);
  }

  const std::size_t n = out.paths.size();
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> delta(n);
  Vector counit(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Path& p = out.paths[k];
    if (p.arrows.empty()) {
      labels.push_back(q.vertices()[p.vertex]);
      delta[k].push_back({k, k, Scalar(1)});
      counit[k] = 1;
      continue;
    }
    std::string word;
    for (std::size_t i = p.arrows.size(); i-- > 0;) word += arrows[p.arrows[i]].name + (i ? "." : "");
    labels.push_back(word);
    const std::size_t len = p.arrows.size();
    delta[k].push_back({k, vertex_index[arrows[p.arrows.front()].source], Scalar(1)});
    for (std::size_t i = 1; i < len; ++i) {
      std::vector<std::size_t> low(p.arrows.begin(), p.arrows.begin() + static_cast<long>(i));
      std::vector<std::size_t> high(p.arrows.begin() + static_cast<long>(i), p.arrows.end());
      delta[k].push_back({index.at(high), index.at(low), Scalar(1)});
    }
    delta[k].push_back({vertex_index[arrows[p.arrows.back()].target], k, Scalar(1)});
  }
  std::string name = "path(" + (q.name().empty() ? std::string("Q") : q.name()) + "," + std::to_string(l) + ")";
  out.coalgebra = Coalgebra(name, std::move(labels), std::move(delta), std::move(counit));
  return out;
}

Bicomodule arrow_bicomodule(const Quiver& q, const Coalgebra& vertices) {
  const std::size_t c = vertices.dim(), m = q.arrow_count();
  if (c != q.vertex_count()) throw DimensionError("arrow_bicomodule: vertex coalgebra size mismatch");
  Matrix rho_l(c * m, m), rho_r(m * c, m);
  for (std::size_t a = 0; a < m; ++a) {
    rho_l(q.arrows()[a].target * m + a, a) = 1;
    rho_r(a * c + q.arrows()[a].source, a) = 1;
  }
  return Bicomodule{vertices, vertices, m, rho_l, rho_r};
}

PathCotensorIso path_vs_cotensor_iso(const Quiver& q, std::size_t l) {
  PathCotensorIso out;
  out.path = path_coalgebra(q, l);
  Coalgebra vertices = path_coalgebra(q, 0).coalgebra;
  std::vector<std::string> arrow_names;
  for (const auto& a : q.arrows()) arrow_names.push_back(a.name);
  out.cot = cotensor_coalgebra(vertices, arrow_bicomodule(q, vertices), l, arrow_names);

  const std::size_t n = out.path.paths.size(), total = out.cot.offsets.back(), m = q.arrow_count();
  out.map = Matrix(total, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Path& p = out.path.paths[k];
    const std::size_t len = p.arrows.size();
    if (len == 0) {
      out.map(p.vertex, k) = 1;
      continue;
    }
    std::size_t idx = 0;
    for (std::size_t i = len; i-- > 0;) idx = idx * m + p.arrows[i];
    const Subspace& comp = out.cot.components[len];
    Vector co = comp.coordinates(unit_vector(comp.ambient_dim(), idx));
    for (std::size_t s = 0; s < co.size(); ++s) out.map(out.cot.offsets[len] + s, k) = co[s];
  }
  out.coalgebra_map = is_coalgebra_map(out.path.coalgebra, out.cot.assembled, out.map);
  out.bijective = true;
  for (std::size_t len = 0; len <= l; ++len) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (out.path.lengths[k] == len) cols.push_back(k);
    out.path_dims.push_back(cols.size());
    out.cot_dims.push_back(out.cot.degree_dim(len));
    Matrix block = out.map.select_columns(cols);
    std::vector<std::size_t> rows;
    for (std::size_t r = out.cot.offsets[len]; r < out.cot.offsets[len + 1]; ++r) rows.push_back(r);
    if (rank(block) != cols.size() || rank(block.select_rows(rows)) != out.cot.degree_dim(len))
      out.bijective = false;
  }
  return out;
}

Subspace wedge_power(const Coalgebra& amb, const Subspace& d, std::size_t n) {
  if (!is_subcoalgebra(amb, d)) throw PreconditionError("wedge_power: argument is not a subcoalgebra");
  if (n == 0) return Subspace(amb.dim());
  Subspace w = d;
  for (std::size_t k = 1; k < n; ++k) w = wedge(amb, d, w);
  return w;
}

}  // namespace coquiver
