// Shared helpers for the test binaries: a small deterministic generator and
// random exact objects built from it.
#ifndef COQUIVER_TESTS_SUPPORT_HPP
#define COQUIVER_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include <algorithm>
#include <string>
#include <utility>

#include "coquiver/coalgebra.hpp"
#include "coquiver/matrix.hpp"
#include "coquiver/subspace.hpp"

namespace testsupport {

// splitmix64
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool chance(int percent) { return range(0, 99) < percent; }

 private:
  std::uint64_t s_;
};

inline coquiver::Scalar small_rational(Gen& g) {
  long num = g.range(-4, 4);
  long den = g.range(1, 3);
  return coquiver::Scalar(num, den);
}

// Sparse-ish random matrix with small rational entries.
inline coquiver::Matrix random_matrix(Gen& g, std::size_t rows, std::size_t cols, int density = 50) {
  coquiver::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (g.chance(density)) m(i, j) = small_rational(g);
  return m;
}

inline coquiver::Subspace random_subspace(Gen& g, std::size_t n) {
  std::size_t k = static_cast<std::size_t>(g.range(0, static_cast<long>(n)));
  return coquiver::Subspace::span(random_matrix(g, k, n));
}

inline coquiver::Vector random_vector(Gen& g, std::size_t n, int density = 60) {
  coquiver::Vector v(n);
  for (auto& x : v)
    if (g.chance(density)) x = small_rational(g);
  return v;
}

// Permutation, diagonal of small nonzero integers, then a few shears.
inline coquiver::Matrix random_invertible(Gen& g, std::size_t n, std::size_t shears = 3) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(g.range(0, long(i) - 1))]);
  coquiver::Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    long s = g.range(1, 3) * (g.chance(50) ? 1 : -1);
    p(perm[i], i) = coquiver::Scalar(s);
  }
  for (std::size_t k = 0; n > 1 && k < shears; ++k) {
    std::size_t i = static_cast<std::size_t>(g.range(0, long(n) - 1)), j = static_cast<std::size_t>(g.range(0, long(n) - 2));
    if (j >= i) ++j;
    coquiver::Scalar lambda(g.range(-2, 2));
    for (std::size_t r = 0; r < n; ++r) p(r, i) += lambda * p(r, j);
  }
  return p;
}

inline std::size_t label(const coquiver::Coalgebra& c, const std::string& name) {
  const auto& ls = c.labels();
  return static_cast<std::size_t>(std::find(ls.begin(), ls.end(), name) - ls.begin());
}

// Vector of C from (label, coefficient) pairs.
inline coquiver::Vector vec(const coquiver::Coalgebra& c, std::initializer_list<std::pair<const char*, long>> terms) {
  coquiver::Vector v(c.dim());
  for (const auto& [name, q] : terms) v[label(c, name)] += coquiver::Scalar(q);
  return v;
}

inline coquiver::Subspace span_of(const coquiver::Coalgebra& c, std::initializer_list<const char*> names) {
  std::vector<std::size_t> idx;
  for (const char* n : names) idx.push_back(label(c, n));
  return coquiver::Subspace::coordinate(c.dim(), idx);
}

inline std::vector<std::size_t> dims_of(const std::vector<coquiver::Subspace>& steps) {
  std::vector<std::size_t> out;
  for (const auto& s : steps) out.push_back(s.dim());
  return out;
}

}  // namespace testsupport

#endif
