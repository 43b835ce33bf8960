#include "coquiver/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace coquiver {

Quiver::Quiver(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : name_(std::move(name)), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw PreconditionError("duplicate vertex " + v);
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw PreconditionError("arrow " + a.name + " has an undeclared endpoint");
    if (!names.insert(a.name).second) throw PreconditionError("duplicate arrow " + a.name);
  }
}

Quiver Quiver::from_counts(std::string name, std::vector<std::string> vertices, const CountMatrix& counts) {
  const std::size_t n = vertices.size();
  if (counts.size() != n) throw DimensionError("count matrix size mismatch");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i].size() != n) throw DimensionError("count matrix size mismatch");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < counts[i][j]; ++k) {
        std::string a = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
        if (counts[i][j] > 1) a += "_" + std::to_string(k + 1);
        arrows.push_back({a, i, j});
      }
  }
  return Quiver(std::move(name), std::move(vertices), std::move(arrows));
}

CountMatrix Quiver::counts() const {
  CountMatrix t(vertices_.size(), std::vector<std::size_t>(vertices_.size(), 0));
  for (const auto& a : arrows_) ++t[a.source][a.target];
  return t;
}

std::vector<std::size_t> Quiver::sources() const {
  std::vector<bool> incoming(vertices_.size(), false);
  for (const auto& a : arrows_) incoming[a.target] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (!incoming[v]) out.push_back(v);
  return out;
}

std::vector<std::size_t> Quiver::sinks() const {
  std::vector<bool> outgoing(vertices_.size(), false);
  for (const auto& a : arrows_) outgoing[a.source] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (!outgoing[v]) out.push_back(v);
  return out;
}

std::vector<std::vector<std::size_t>> Quiver::components() const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<long> slot(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[r])].push_back(v);
  }
  return comps;
}

bool Quiver::is_connected() const { return components().size() <= 1; }

std::string Quiver::to_dot() const {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(name_.empty() ? "Q" : name_) << " {\n";
  for (const auto& v : vertices_) os << "  " << quote(v) << ";\n";
  for (const auto& a : arrows_)
    os << "  " << quote(vertices_[a.source]) << " -> " << quote(vertices_[a.target]) << " [label="
       << quote(a.name) << "];\n";
  os << "}\n";
  return os.str();
}

std::vector<std::string> block_names(const Structure& s) {
  std::vector<std::string> names;
  for (const auto& b : s.blocks) {
    bool unit = false;
    if (b.subspace.dim() == 1) {
      Vector v = b.subspace.vector(0);
      unit = std::count_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); }) == 1;
    }
    names.push_back(unit ? s.coalgebra.labels()[b.subspace.pivots()[0]] : "D" + std::to_string(b.index + 1));
  }
  return names;
}

namespace {

// f . m = sum m_0 f(m_1) on M, from the right coaction.
Matrix left_action(const Bicomodule& m, const Vector& f) {
  const std::size_t d = m.dim, k0 = m.right_over.dim();
  Matrix out(d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t k = 0; k < k0; ++k) {
      if (f[k].is_zero()) continue;
      for (std::size_t a = 0; a < d; ++a)
        if (!m.rho_r(b * k0 + k, a).is_zero()) out(b, a) += m.rho_r(b * k0 + k, a) * f[k];
    }
  return out;
}

// m . g = sum g(m_-1) m_0, from the left coaction.
Matrix right_action(const Bicomodule& m, const Vector& g) {
  const std::size_t d = m.dim, k0 = m.left_over.dim();
  Matrix out(d, d);
  for (std::size_t k = 0; k < k0; ++k) {
    if (g[k].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t a = 0; a < d; ++a)
        if (!m.rho_l(k * d + b, a).is_zero()) out(b, a) += m.rho_l(k * d + b, a) * g[k];
  }
  return out;
}

std::string quiver_name(const Structure& s, const char* kind) { return s.coalgebra.name() + ":" + kind; }

}  // namespace

Quiver gabriel_quiver(const Structure& s) {
  const std::size_t nb = s.blocks.size();
  QuotientBicomodule q = c1_over_c0(s);
  auto grid = block_decompose(q.m, s.blocks);
  CountMatrix t(nb, std::vector<std::size_t>(nb, 0));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const Subspace& part = grid[j][i];
      if (part.is_zero()) continue;
      Matrix act = left_action(q.m, s.blocks[i].e) * right_action(q.m, s.blocks[j].e);
      t[i][j] = rank(act * part.basis().transpose());
    }
  return Quiver::from_counts(quiver_name(s, "gabriel"), block_names(s), t);
}

Quiver ext_quiver(const Structure& s) {
  const Algebra& a = s.dual;
  const std::size_t nb = s.blocks.size();
  std::vector<Vector> f;
  for (const auto& b : s.blocks) f.push_back(lift_idempotent(a, s.extend_from_c0(b.e)));
  const Subspace& j1 = s.radical;
  Subspace j2 = s.powers.size() > 1 ? s.powers[1] : Subspace(a.dim());
  auto sandwich_dim = [&](const Vector& left, const Subspace& ideal, const Vector& right) {
    std::vector<Vector> vs;
    for (std::size_t r = 0; r < ideal.dim(); ++r) vs.push_back(a.multiply(a.multiply(left, ideal.vector(r)), right));
    return Subspace::span(vs, a.dim()).dim();
  };
  CountMatrix t(nb, std::vector<std::size_t>(nb, 0));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      std::size_t top = sandwich_dim(f[j], j1, f[i]), low = sandwich_dim(f[j], j2, f[i]);
      if (low > top) throw InvariantError("ext quiver: J^2 corner exceeds J corner");
      t[i][j] = top - low;
    }
  return Quiver::from_counts(quiver_name(s, "ext"), block_names(s), t);
}

Quiver link_quiver(const Structure& s) {
  const std::size_t nb = s.blocks.size();
  CountMatrix t(nb, std::vector<std::size_t>(nb, 0));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const auto& di = s.blocks[i];
      const auto& dj = s.blocks[j];
      std::size_t w = wedge(s.coalgebra, dj.subspace, di.subspace).dim();
      std::size_t base = sum(di.subspace, dj.subspace).dim();
      std::size_t q = w - base, nn = di.n * dj.n;
      if (q % nn != 0)
        throw InvariantError("link quiver: wedge quotient " + std::to_string(q) + " is not divisible by " +
                             std::to_string(nn));
      t[i][j] = q / nn;
    }
  return Quiver::from_counts(quiver_name(s, "link"), block_names(s), t);
}

Subspace primitives(const Coalgebra& c, const Vector& g, const Vector& h) {
  const std::size_t n = c.dim();
  Matrix m = c.delta_matrix();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!g[b].is_zero()) m(a * n + b, a) -= g[b];
      if (!h[a].is_zero()) m(a * n + b, b) -= h[a];
    }
  return kernel(m);
}

bool TaftWilsonReport::ok() const {
  bool pairs_ok = std::all_of(pairs.begin(), pairs.end(), [](const TaftWilsonPair& p) { return p.overlap_ok; });
  return pairs_ok && sum_is_c1 && quotients_ok && blocks_ok && (!pointed.applicable || pointed.decomposition_ok);
}

TaftWilsonReport taft_wilson(const Structure& s) {
  const Coalgebra& c = s.coalgebra;
  const std::size_t nb = s.blocks.size(), n = c.dim();
  TaftWilsonReport r;
  r.c0_dim = s.c0.dim();
  r.c1_dim = s.c1().dim();
  QuotientBicomodule q = c1_over_c0(s);
  auto grid = block_decompose(q.m, s.blocks);
  Subspace total(n);
  std::size_t quotient_total = 0;
  r.blocks_ok = true;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      TaftWilsonPair p;
      p.i = i;
      p.j = j;
      Subspace w = wedge(c, s.blocks[i].subspace, s.blocks[j].subspace);
      Subspace sm = sum(s.blocks[i].subspace, s.blocks[j].subspace);
      Subspace ov = intersect(w, s.c0);
      p.wedge_dim = w.dim();
      p.overlap_dim = ov.dim();
      p.sum_dim = sm.dim();
      p.overlap_ok = ov == sm;
      p.quotient_dim = p.wedge_dim - p.overlap_dim;
      p.block_dim = grid[i][j].dim();
      if (p.quotient_dim != p.block_dim) r.blocks_ok = false;
      quotient_total += p.quotient_dim;
      total = sum(total, w);
      r.pairs.push_back(p);
    }
  r.wedge_sum_dim = total.dim();
  r.sum_is_c1 = total == s.c1();
  r.quotients_ok = quotient_total == r.c1_dim - r.c0_dim;

  PointedReport& pt = r.pointed;
  pt.applicable = std::all_of(s.blocks.begin(), s.blocks.end(), [](const SimpleBlock& b) { return b.subspace.dim() == 1; });
  if (pt.applicable) {
    for (const auto& b : s.blocks) {
      Vector v = b.subspace.vector(0);
      pt.grouplikes.push_back(scale(v, dot(c.counit(), v).inverse()));
    }
    pt.primitive_dims.assign(nb, std::vector<std::size_t>(nb, 0));
    Subspace span = Subspace::span(pt.grouplikes, n);
    std::size_t expected = nb;
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        Subspace p = primitives(c, pt.grouplikes[i], pt.grouplikes[j]);
        pt.primitive_dims[i][j] = p.dim();
        expected += p.dim() - (i != j ? 1 : 0);
        span = sum(span, p);
      }
    pt.decomposition_ok = span == s.c1() && expected == r.c1_dim;
  }
  return r;
}

}  // namespace coquiver
