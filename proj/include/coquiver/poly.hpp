#ifndef COQUIVER_POLY_HPP
#define COQUIVER_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace coquiver {

/// Univariate polynomial over Q, coefficients from degree 0 upward, with no
/// trailing zeros. The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpq_class> coeffs);
  static Poly constant(const mpq_class& c);
  static Poly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : mpq_class(0); }
  const mpq_class& leading() const { return c_.back(); }

  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// Factorization into monic irreducible factors over Q with multiplicities,
/// ordered by (degree, coefficients). The constant factor is dropped.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

}  // namespace coquiver

#endif
