#include "coquiver/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>

#include "coquiver/error.hpp"

namespace coquiver {

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::constant(const mpq_class& c) { return Poly({c}); }
Poly Poly::x() { return Poly({mpq_class(0), mpq_class(1)}); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<mpq_class> c = c_;
  mpq_class lc = c.back();
  for (auto& x : c) x /= lc;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  std::vector<mpq_class> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<long>(i));
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    mpq_class a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << (i == 0 || a != 1 ? "*" : "") << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<mpq_class> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<mpq_class> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    mpq_class f = r[i] / b.leading();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    Poly s = s0 - q * s1;
    s0 = s1;
    s1 = s;
    Poly t = t0 - q * t1;
    t0 = t1;
    t1 = t;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Poly inv = Poly::constant(1 / r0.leading());
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

// ---- polynomials over Z/pZ, coefficients from degree 0, trimmed ----------

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    c[i] = (x + p - y) % p;
  }
  trim(c);
  return c;
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    c[i] = (x + y) % p;
  }
  trim(c);
  return c;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly r = a;
  if (r.size() < b.size()) return {{}, r};
  std::uint64_t inv = inv_mod(b.back(), p);
  ModPoly q(r.size() - b.size() + 1, 0);
  for (std::size_t i = r.size(); i-- >= b.size();) {
    std::uint64_t f = r[i] * inv % p;
    q[i - (b.size() - 1)] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i - (b.size() - 1) + j;
      r[k] = (r[k] + p - f * b[j] % p) % p;
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

ModPoly mp_monic(ModPoly f, std::uint64_t p) {
  if (f.empty()) return f;
  std::uint64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ModPoly r = mp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    r0 = r1;
    r1 = r;
    ModPoly s = mp_sub(s0, mp_mul(q, s1, p), p);
    s0 = s1;
    s1 = s;
    ModPoly t = mp_sub(t0, mp_mul(q, t1, p), p);
    t0 = t1;
    t1 = t;
  }
  if (r0.size() != 1) throw InvariantError("Hensel lifting: factors are not coprime mod p");
  std::uint64_t inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

ModPoly mp_powmod(ModPoly base, const mpz_class& e, const ModPoly& m, std::uint64_t p) {
  ModPoly result = {1};
  base = mp_divmod(base, m, p).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_divmod(mp_mul(result, result, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mp_divmod(mp_mul(result, base, p), m, p).second;
  }
  return result;
}

ModPoly mp_derivative(const ModPoly& f, std::uint64_t p) {
  ModPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (i % p) % p);
  trim(d);
  return d;
}

// Equal-degree splitting of a squarefree monic product of degree-d irreducibles.
void equal_degree_split(const ModPoly& g, int d, std::uint64_t p, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  while (true) {
    ModPoly a(n, 0);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (a.size() < 2) continue;
    ModPoly b = mp_sub(mp_powmod(a, e, g, p), {1}, p);
    ModPoly h = mp_gcd(g, b, p);
    int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0 && dh < n) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(mp_divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a squarefree monic f over F_p (p odd).
std::vector<ModPoly> factor_mod_p(ModPoly f, std::uint64_t p) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eedULL + p);
  ModPoly x = {0, 1};
  ModPoly h = x;
  int d = 0;
  while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
    ++d;
    h = mp_powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    ModPoly g = mp_gcd(f, mp_sub(h, x, p), p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      f = mp_divmod(f, g, p).first;
      h = mp_divmod(h, f, p).second;
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

// ---- integer polynomials -------------------------------------------------

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly reduce(const ZPoly& f, std::uint64_t p) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class t;
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  trim(r);
  return r;
}

ZPoly lift(const ModPoly& f) {
  ZPoly r;
  for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

ZPoly z_symmetric_mod(const ZPoly& f, const mpz_class& m) {
  ZPoly r(f.size());
  mpz_class half = m / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] > half) r[i] -= m;
  }
  trim(r);
  return r;
}

// Exact division of monic polynomials over Z; nullopt-like empty flag on failure.
bool z_divides(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
  ZPoly r = f;
  if (g.empty() || r.size() < g.size()) return false;
  ZPoly q(r.size() - g.size() + 1);
  for (std::size_t i = r.size(); i-- >= g.size();) {
    mpz_class c = r[i];  // g is monic
    q[i - (g.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i - (g.size() - 1) + j] -= c * g[j];
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

// Lift f = g*h (mod p), g and h monic and coprime mod p, to modulus p^k.
void hensel_lift(const ZPoly& f, ZPoly& g, ZPoly& h, std::uint64_t p, int k) {
  auto [s, t] = mp_bezout(reduce(g, p), reduce(h, p), p);
  mpz_class pj = static_cast<unsigned long>(p);
  for (int j = 1; j < k; ++j) {
    ZPoly gh = z_mul(g, h);
    ZPoly e(std::max(f.size(), gh.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      mpz_class a = i < f.size() ? f[i] : mpz_class(0);
      mpz_class b = i < gh.size() ? gh[i] : mpz_class(0);
      e[i] = (a - b) / pj;
    }
    trim(e);
    ModPoly em = reduce(e, p);
    auto [q, r] = mp_divmod(mp_mul(t, em, p), reduce(g, p), p);
    ModPoly dh = mp_add(mp_mul(s, em, p), mp_mul(q, reduce(h, p), p), p);
    ZPoly dg = lift(r), dhz = lift(dh);
    for (std::size_t i = 0; i < dg.size(); ++i) {
      if (i >= g.size()) g.resize(i + 1);
      g[i] += pj * dg[i];
    }
    for (std::size_t i = 0; i < dhz.size(); ++i) {
      if (i >= h.size()) h.resize(i + 1);
      h[i] += pj * dhz[i];
    }
    pj *= static_cast<unsigned long>(p);
    g = z_symmetric_mod(g, pj);
    h = z_symmetric_mod(h, pj);
  }
}

bool is_squarefree_mod(const ZPoly& f, std::uint64_t p) {
  ModPoly fm = reduce(f, p);
  if (fm.size() != f.size()) return false;
  ModPoly g = mp_gcd(fm, mp_derivative(fm, p), p);
  return g.size() == 1;
}

// Irreducible monic factors of a squarefree monic integer polynomial.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  std::uint64_t p = 3;
  for (;; p += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) prime = false;
    if (prime && is_squarefree_mod(f, p)) break;
  }
  std::vector<ModPoly> modular = factor_mod_p(reduce(f, p), p);
  if (modular.size() == 1) return {f};

  mpz_class maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class bound = mpz_class(1) << static_cast<unsigned long>(n + 1);
  bound *= (n + 1);
  bound *= maxc;
  int k = 1;
  mpz_class pk = static_cast<unsigned long>(p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }

  // Peel off one modular factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    ModPoly others = {1};
    for (std::size_t j = i + 1; j < modular.size(); ++j) others = mp_mul(others, modular[j], p);
    ZPoly g = lift(modular[i]), h = lift(others);
    hensel_lift(rest, g, h, p, k);
    lifted.push_back(g);
    rest = h;
  }
  lifted.push_back(rest);

  std::vector<ZPoly> result;
  ZPoly current = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand = {1};
      for (auto i : idx) cand = z_mul(cand, pool[i]);
      cand = z_symmetric_mod(cand, pk);
      ZPoly q;
      if (z_divides(cand, current, q)) {
        result.push_back(cand);
        current = q;
        for (std::size_t i = s; i-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[i]));
        found = true;
        break;
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == pool.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (current.size() > 1) result.push_back(current);
  return result;
}

// Yun's squarefree decomposition of a monic rational polynomial.
std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  Poly a = f.monic();
  Poly b = a.derivative();
  Poly c = gcd(a, b);
  Poly w = divmod(a, c).first;
  Poly y = divmod(b, c).first;
  Poly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.is_zero()) throw Error("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree(f)) {
    // D^n part(y/D) is monic integral when D clears denominators.
    mpz_class D = 1;
    for (const auto& c : part.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
    const int n = part.degree();
    ZPoly g(n + 1);
    mpz_class Dpow = 1;
    for (int i = n; i >= 0; --i) {
      mpq_class v = part.coeff(i) * Dpow;
      if (v.get_den() != 1) throw InvariantError("factor: scaling did not clear denominators");
      g[i] = v.get_num();
      Dpow *= D;
    }
    for (const auto& h : zassenhaus(g)) {
      // back-substitute y = D x and normalize
      std::vector<mpq_class> c(h.size());
      mpq_class Dp = 1;
      for (std::size_t i = 0; i < h.size(); ++i) {
        c[i] = mpq_class(h[i]) * Dp;
        Dp *= D;
      }
      out.emplace_back(Poly(std::move(c)).monic(), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return poly_less(a.first, b.first);
  });
  return out;
}

}  // namespace coquiver
