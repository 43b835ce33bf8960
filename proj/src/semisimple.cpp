#include "coquiver/semisimple.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

namespace coquiver {

namespace {

// Candidate elements of a subspace: basis vectors, pairwise sums, then seeded
// random small-integer combinations.
class Candidates {
 public:
  Candidates(const Subspace& s, std::uint64_t seed, std::size_t random_budget)
      : s_(s), rng_(seed), budget_(random_budget) {}

  std::optional<Vector> next() {
    const std::size_t m = s_.dim();
    if (stage_ == 0) {
      if (i_ < m) return s_.vector(i_++);
      stage_ = 1;
      i_ = 0;
      j_ = 1;
    }
    if (stage_ == 1) {
      while (i_ < m) {
        if (j_ < m) {
          Vector v = add(s_.vector(i_), scale(s_.vector(j_), Scalar(static_cast<long>(j_ - i_ + 1))));
          ++j_;
          return v;
        }
        ++i_;
        j_ = i_ + 1;
      }
      stage_ = 2;
    }
    if (used_ < budget_ && m > 0) {
      ++used_;
      std::uniform_int_distribution<long> coef(-3, 3);
      Vector c(m);
      for (auto& x : c) x = Scalar(coef(rng_));
      return s_.combine(c);
    }
    return std::nullopt;
  }

 private:
  const Subspace& s_;
  std::mt19937_64 rng_;
  std::size_t budget_;
  std::size_t used_ = 0;
  int stage_ = 0;
  std::size_t i_ = 0, j_ = 1;
};

Subspace scaled_subspace(const Algebra& b, const Vector& e, const Subspace& z) {
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < z.dim(); ++r) vs.push_back(b.multiply(e, z.vector(r)));
  return Subspace::span(vs, b.dim());
}

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

// Orthogonal idempotents q_k(z) for the pairwise coprime factors of p.
std::vector<Vector> crt_idempotents(const Algebra& b, const Vector& z, const Vector& one,
                                    const Poly& p, const std::vector<std::pair<Poly, int>>& factors) {
  std::vector<Vector> out;
  for (const auto& [g, mult] : factors) {
    Poly gk = Poly::constant(1);
    for (int i = 0; i < mult; ++i) gk = gk * g;
    Poly h = divmod(p, gk).first;
    ExtendedGcd eg = extended_gcd(h, gk);
    Poly u = divmod(eg.s * h, p).second;
    out.push_back(b.evaluate(u, z, one));
  }
  return out;
}

}  // namespace

std::vector<Vector> central_primitive_idempotents(const Algebra& b, std::uint64_t seed) {
  if (b.dim() == 0) return {};
  Subspace z = b.center();
  std::vector<Vector> pending{b.unit()}, done;
  while (!pending.empty()) {
    Vector e = pending.back();
    pending.pop_back();
    Subspace ez = scaled_subspace(b, e, z);
    const std::size_t m = ez.dim();
    if (m == 1) {
      done.push_back(e);
      continue;
    }
    Candidates cand(ez, seed + done.size() + pending.size(), 128);
    bool resolved = false;
    while (auto x = cand.next()) {
      Poly p = b.min_poly(*x, e);
      auto f = factor(p);
      if (f.size() >= 2) {
        for (auto& part : crt_idempotents(b, *x, e, p, f)) pending.push_back(std::move(part));
        resolved = true;
        break;
      }
      if (f.size() == 1 && f[0].second == 1 && p.degree() == static_cast<int>(m)) {
        done.push_back(e);  // e Z is a field
        resolved = true;
        break;
      }
    }
    if (!resolved) throw InvariantError("center splitting failed: no separating element found");
  }
  std::sort(done.begin(), done.end(),
            [](const Vector& a, const Vector& c) { return first_nonzero(a) < first_nonzero(c); });
  Vector total(b.dim());
  for (const auto& e : done) total = add(total, e);
  if (total != b.unit()) throw InvariantError("central idempotents do not sum to the unit");
  return done;
}

PrimitiveSearch primitive_idempotent(const Algebra& b, const Vector& unit, std::uint64_t seed) {
  Vector e = unit;
  while (true) {
    Subspace s = b.corner(e, e);
    const std::size_t m = s.dim();
    if (m == 0) throw PreconditionError("primitive_idempotent: zero idempotent");
    if (m == 1) return {e, 1, true};
    Candidates cand(s, seed + m, 96);
    std::optional<Vector> divisor;
    bool field = false;
    while (auto x = cand.next()) {
      Poly p = b.min_poly(*x, e);
      auto f = factor(p);
      if (f.size() >= 2 || (f.size() == 1 && f[0].second > 1)) {
        Vector w = b.evaluate(f[0].first, *x, e);
        if (!is_zero(w)) {
          divisor = w;
          break;
        }
      } else if (p.degree() == static_cast<int>(m)) {
        field = true;
        break;
      }
    }
    if (field) return {e, m, true};
    if (!divisor) return {e, m, false};

    // e' with x e' = x on the left ideal L = (eBe) w
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < m; ++r) gens.push_back(b.multiply(s.vector(r), *divisor));
    Subspace l = Subspace::span(gens, b.dim());
    const std::size_t k = l.dim(), n = b.dim();
    Matrix sys(k * n, k);
    Vector rhs(k * n);
    for (std::size_t a = 0; a < k; ++a) {
      Vector la = l.vector(a);
      for (std::size_t c = 0; c < k; ++c) {
        Vector prod = b.multiply(la, l.vector(c));
        for (std::size_t i = 0; i < n; ++i) sys(a * n + i, c) = prod[i];
      }
      for (std::size_t i = 0; i < n; ++i) rhs[a * n + i] = la[i];
    }
    auto sol = solve(sys, rhs);
    if (!sol) throw InvariantError("left ideal has no right identity; algebra is not semisimple");
    Vector next = l.combine(*sol);
    if (!b.is_idempotent(next) || next == e) throw InvariantError("primitive idempotent search stalled");
    e = std::move(next);
  }
}

std::vector<Vector> orthogonal_primitives(const Algebra& b, const Vector& unit, bool* certified) {
  std::vector<Vector> out;
  Vector rest = unit;
  bool all = true;
  while (!is_zero(rest)) {
    PrimitiveSearch r = primitive_idempotent(b, rest);
    all = all && r.certified;
    out.push_back(r.e);
    rest = subtract(rest, r.e);
  }
  if (certified) *certified = all;
  return out;
}

std::vector<std::vector<Vector>> matrix_units(const Algebra& b, const std::vector<Vector>& prims) {
  const std::size_t n = prims.size();
  if (n == 0) return {};
  const Vector& e0 = prims[0];
  if (b.corner(e0, e0).dim() != 1) throw UnsupportedError("matrix units need a split simple block");
  std::vector<Vector> u(n), v(n);
  u[0] = v[0] = e0;
  for (std::size_t p = 1; p < n; ++p) {
    Subspace up = b.corner(e0, prims[p]), vp = b.corner(prims[p], e0);
    if (up.dim() != 1 || vp.dim() != 1) throw InvariantError("matrix units: corner is not one-dimensional");
    u[p] = up.vector(0);
    Vector uv = b.multiply(u[p], vp.vector(0));
    std::size_t i = first_nonzero(e0);
    Scalar lambda = uv[i] / e0[i];
    if (scale(e0, lambda) != uv || lambda.is_zero()) throw InvariantError("matrix units: u v is not a multiple of e");
    v[p] = scale(vp.vector(0), lambda.inverse());
  }
  std::vector<std::vector<Vector>> units(n, std::vector<Vector>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) units[p][q] = (p == 0) ? u[q] : (q == 0 ? v[p] : b.multiply(v[p], u[q]));
  return units;
}

}  // namespace coquiver
