#include "coquiver/coalgebra.hpp"

#include <map>
#include <set>
#include <sstream>

namespace coquiver {

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& terms, std::size_t n, Field f) {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
  for (const auto& t : terms) {
    if (t.i >= n || t.j >= n) throw DimensionError("delta term index out of range");
    auto [it, fresh] = acc.try_emplace({t.i, t.j}, t.q.in(f));
    if (!fresh) it->second += t.q.in(f);
  }
  std::vector<Term> out;
  for (const auto& [ij, q] : acc)
    if (!q.is_zero()) out.push_back({ij.first, ij.second, q});
  return out;
}

std::vector<std::string> uniquify(std::vector<std::string> labels) {
  std::set<std::string> seen;
  for (auto& l : labels) {
    while (seen.count(l)) l += "'";
    seen.insert(l);
  }
  return labels;
}

using SparseTensor = std::map<std::size_t, Scalar>;

void accumulate(SparseTensor& t, std::size_t idx, const Scalar& q) {
  auto [it, fresh] = t.try_emplace(idx, q);
  if (!fresh) {
    it->second += q;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

std::string AxiomReport::to_string(const std::vector<std::string>& labels) const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t v = 0; v < violations.size(); ++v) {
    const auto& x = violations[v];
    os << (v ? "; " : "") << x.identity << " fails at "
       << (x.witness < labels.size() ? labels[x.witness] : std::to_string(x.witness));
  }
  return os.str();
}

Coalgebra::Coalgebra(std::string name, std::vector<std::string> labels,
                     std::vector<std::vector<Term>> delta, Vector counit, Field field)
    : name_(std::move(name)), labels_(std::move(labels)), field_(field) {
  const std::size_t n = labels_.size();
  if (delta.size() != n) throw DimensionError("delta must list one expansion per basis element");
  if (counit.size() != n) throw DimensionError("counit must have one value per basis element");
  delta_.reserve(n);
  for (const auto& d : delta) delta_.push_back(merge_terms(d, n, field_));
  counit_.reserve(n);
  for (const auto& e : counit) counit_.push_back(e.in(field_));
}

Matrix Coalgebra::delta_matrix() const {
  const std::size_t n = dim();
  Matrix m(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : delta_[k]) m(t.i * n + t.j, k) = t.q;
  return m;
}

Vector Coalgebra::apply_delta(const Vector& v) const {
  const std::size_t n = dim();
  if (v.size() != n) throw DimensionError("apply_delta length mismatch");
  Vector r(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& t : delta_[k]) r[t.i * n + t.j] += v[k] * t.q;
  }
  return r;
}

Matrix Coalgebra::delta_through(const Matrix& p, const Matrix& q) const {
  const std::size_t n = dim();
  if (p.cols() != n || q.cols() != n) throw DimensionError("delta_through: maps must start at C");
  const std::size_t rp = p.rows(), rq = q.rows();
  std::vector<Vector> pc(n), qc(n);
  for (std::size_t i = 0; i < n; ++i) {
    pc[i] = p.column(i);
    qc[i] = q.column(i);
  }
  Matrix out(rp * rq, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : delta_[k]) {
      const Vector& a = pc[t.i];
      const Vector& b = qc[t.j];
      for (std::size_t x = 0; x < rp; ++x) {
        if (a[x].is_zero()) continue;
        Scalar aq = a[x] * t.q;
        for (std::size_t y = 0; y < rq; ++y)
          if (!b[y].is_zero()) out(x * rq + y, k) += aq * b[y];
      }
    }
  return out;
}

AxiomReport Coalgebra::check_axioms() const {
  AxiomReport report;
  const std::size_t n = dim();
  for (std::size_t k = 0; k < n; ++k) {
    SparseTensor left, right;
    for (const auto& t : delta_[k]) {
      for (const auto& u : delta_[t.i]) accumulate(left, (u.i * n + u.j) * n + t.j, t.q * u.q);
      for (const auto& u : delta_[t.j]) accumulate(right, (t.i * n + u.i) * n + u.j, t.q * u.q);
    }
    if (left != right) report.violations.push_back({"coassociativity", k});

    Vector lc(n), rc(n);
    for (const auto& t : delta_[k]) {
      lc[t.j] += counit_[t.i] * t.q;
      rc[t.i] += t.q * counit_[t.j];
    }
    Vector ek = unit_vector(n, k);
    if (lc != ek) report.violations.push_back({"left counit", k});
    if (rc != ek) report.violations.push_back({"right counit", k});
  }
  return report;
}

Algebra dual_algebra(const Coalgebra& c) {
  AxiomReport r = c.check_axioms();
  if (!r.ok()) throw AxiomError("dual_algebra: " + r.to_string(c.labels()));
  const std::size_t n = c.dim();
  std::vector<SparseVector> table(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta(k)) table[t.i * n + t.j].emplace_back(k, t.q);
  return Algebra(n, std::move(table), c.counit());
}

Vector hit_left(const Coalgebra& c, const Vector& f, const Vector& v) {
  return hit_left_matrix(c, f) * v;
}

Vector hit_right(const Coalgebra& c, const Vector& v, const Vector& f) {
  return hit_right_matrix(c, f) * v;
}

Matrix hit_left_matrix(const Coalgebra& c, const Vector& f) {
  const std::size_t n = c.dim();
  if (f.size() != n) throw DimensionError("hit: functional length mismatch");
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta(k))
      if (!f[t.j].is_zero()) m(t.i, k) += t.q * f[t.j];
  return m;
}

Matrix hit_right_matrix(const Coalgebra& c, const Vector& f) {
  const std::size_t n = c.dim();
  if (f.size() != n) throw DimensionError("hit: functional length mismatch");
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta(k))
      if (!f[t.i].is_zero()) m(t.j, k) += t.q * f[t.i];
  return m;
}

Matrix iterated_delta(const Coalgebra& c, std::size_t n) {
  const std::size_t d = c.dim();
  Matrix current = Matrix::identity(d);
  std::size_t tail = 1;  // d^n after n steps
  for (std::size_t step = 0; step < n; ++step) {
    // apply Delta to the first tensor factor
    Matrix next(current.rows() * d, d);
    for (std::size_t col = 0; col < d; ++col)
      for (std::size_t row = 0; row < current.rows(); ++row) {
        const Scalar& x = current(row, col);
        if (x.is_zero()) continue;
        std::size_t first = row / tail, rest = row % tail;
        for (const auto& t : c.delta(first))
          next((t.i * d + t.j) * tail + rest, col) += x * t.q;
      }
    current = std::move(next);
    tail *= d;
  }
  return current;
}

Subspace subcoalgebra_generated(const Coalgebra& c, const Vector& v) {
  const std::size_t n = c.dim();
  if (v.size() != n) throw DimensionError("subcoalgebra_generated: vector length mismatch");
  std::map<std::pair<std::size_t, std::size_t>, Vector> middles;
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& t : c.delta(k))
      for (const auto& u : c.delta(t.i)) {
        auto& mid = middles[{u.i, t.j}];
        if (mid.empty()) mid.assign(n, Scalar());
        mid[u.j] += v[k] * t.q * u.q;
      }
  }
  std::vector<Vector> vs;
  for (auto& [key, mid] : middles)
    if (!is_zero(mid)) vs.push_back(std::move(mid));
  return Subspace::span(vs, n);
}

bool is_subcoalgebra(const Coalgebra& c, const Subspace& s) {
  if (s.ambient_dim() != c.dim()) throw DimensionError("is_subcoalgebra: ambient mismatch");
  Matrix q = s.quotient_projection();
  if (q.rows() == 0) return true;
  Matrix id = Matrix::identity(c.dim());
  Matrix left = c.delta_through(q, id), right = c.delta_through(id, q);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vector v = s.vector(r);
    if (!is_zero(left * v) || !is_zero(right * v)) return false;
  }
  return true;
}

Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b) {
  if (!(a.field() == b.field())) throw PreconditionError("direct_sum: fields differ");
  const std::size_t na = a.dim();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<std::vector<Term>> delta;
  Vector counit = a.counit();
  for (std::size_t k = 0; k < na; ++k) delta.push_back(a.delta(k));
  for (std::size_t k = 0; k < b.dim(); ++k) {
    std::vector<Term> ts;
    for (const auto& t : b.delta(k)) ts.push_back({t.i + na, t.j + na, t.q});
    delta.push_back(std::move(ts));
    counit.push_back(b.counit()[k]);
  }
  return Coalgebra("sum(" + a.name() + "," + b.name() + ")", uniquify(std::move(labels)), std::move(delta),
                   std::move(counit), a.field());
}

Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  if (!(a.field() == b.field())) throw PreconditionError("tensor_coalgebra: fields differ");
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> delta;
  Vector counit;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      labels.push_back(a.labels()[x] + "|" + b.labels()[y]);
      std::vector<Term> ts;
      for (const auto& s : a.delta(x))
        for (const auto& t : b.delta(y)) ts.push_back({s.i * nb + t.i, s.j * nb + t.j, s.q * t.q});
      delta.push_back(std::move(ts));
      counit.push_back(a.counit()[x] * b.counit()[y]);
    }
  return Coalgebra("tensor(" + a.name() + "," + b.name() + ")", uniquify(std::move(labels)),
                   std::move(delta), std::move(counit), a.field());
}

Coalgebra restrict(const Coalgebra& c, const Subspace& s, const std::string& name) {
  const std::size_t n = c.dim(), m = s.dim();
  if (s.ambient_dim() != n) throw DimensionError("restrict: ambient mismatch");
  const auto& piv = s.pivots();
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> delta;
  Vector counit;
  for (std::size_t r = 0; r < m; ++r) {
    Vector v = s.vector(r);
    bool unit = true;
    for (std::size_t j = 0; j < n; ++j)
      if (j != piv[r] && !v[j].is_zero()) unit = false;
    labels.push_back(unit ? c.labels()[piv[r]] : c.labels()[piv[r]] + "'");
    Vector dv = c.apply_delta(v);
    std::vector<Term> ts;
    Vector check(n * n);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const Scalar& q = dv[piv[a] * n + piv[b]];
        if (q.is_zero()) continue;
        ts.push_back({a, b, q});
        check = add(check, scale(tensor(s.vector(a), s.vector(b)), q));
      }
    if (check != dv) throw PreconditionError("restrict: subspace is not a subcoalgebra");
    delta.push_back(std::move(ts));
    counit.push_back(dot(c.counit(), v));
  }
  return Coalgebra(name, uniquify(std::move(labels)), std::move(delta), std::move(counit), c.field());
}

Coalgebra change_basis(const Coalgebra& c, const Matrix& p) {
  const std::size_t n = c.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionError("change_basis: matrix must be dim x dim");
  Matrix inv = inverse(p);
  std::vector<Vector> icol(n);
  for (std::size_t i = 0; i < n; ++i) icol[i] = inv.column(i);
  std::vector<std::vector<Term>> delta(n);
  Vector counit(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector acc(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& w = p(i, k);
      if (w.is_zero()) continue;
      counit[k] += w * c.counit()[i];
      for (const auto& t : c.delta(i)) {
        Scalar wq = w * t.q;
        for (std::size_t a = 0; a < n; ++a) {
          if (icol[t.i][a].is_zero()) continue;
          Scalar x = wq * icol[t.i][a];
          for (std::size_t b = 0; b < n; ++b)
            if (!icol[t.j][b].is_zero()) acc[a * n + b] += x * icol[t.j][b];
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!acc[a * n + b].is_zero()) delta[k].push_back({a, b, acc[a * n + b]});
  }
  return Coalgebra(c.name(), c.labels(), std::move(delta), std::move(counit), c.field());
}

Coalgebra coalgebra_from_algebra(const Algebra& a, std::string name, std::vector<std::string> labels) {
  const std::size_t n = a.dim();
  if (labels.size() != n) throw DimensionError("coalgebra_from_algebra: label count mismatch");
  std::vector<std::vector<Term>> delta(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, q] : a.product_of_basis(i, j)) delta[k].push_back({i, j, q});
  Field f = n ? a.unit()[0].field() : Field{};
  return Coalgebra(std::move(name), std::move(labels), std::move(delta), a.unit(), f);
}

bool is_coalgebra_map(const Coalgebra& source, const Coalgebra& target, const Matrix& f) {
  const std::size_t n = source.dim(), m = target.dim();
  if (f.rows() != m || f.cols() != n) throw DimensionError("is_coalgebra_map: matrix shape mismatch");
  std::vector<Vector> fc(n);
  for (std::size_t k = 0; k < n; ++k) fc[k] = f.column(k);
  for (std::size_t k = 0; k < n; ++k) {
    if (dot(target.counit(), fc[k]) != source.counit()[k]) return false;
    Vector rhs(m * m);
    for (const auto& t : source.delta(k)) {
      const Vector& a = fc[t.i];
      const Vector& b = fc[t.j];
      for (std::size_t x = 0; x < m; ++x) {
        if (a[x].is_zero()) continue;
        Scalar aq = a[x] * t.q;
        for (std::size_t y = 0; y < m; ++y)
          if (!b[y].is_zero()) rhs[x * m + y] += aq * b[y];
      }
    }
    if (target.apply_delta(fc[k]) != rhs) return false;
  }
  return true;
}

}  // namespace coquiver
