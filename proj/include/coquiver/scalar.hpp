#ifndef COQUIVER_SCALAR_HPP
#define COQUIVER_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "coquiver/error.hpp"

namespace coquiver {

/// The ground field: the rationals, or a prime field F_p with p < 2^31.
struct Field {
  std::uint32_t p = 0;  // 0 means Q

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  std::string to_string() const;
  static Field parse(const std::string& text);
};

/// An exact scalar. Rational values carry an arbitrary-precision fraction in
/// lowest terms; F_p values carry a residue in [0, p). Rational constants are
/// promoted into F_p when combined with a residue, so literals such as 0 and 1
/// work in either field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}
  Scalar(long v) : q_(v) {}
  Scalar(long long v) : q_(static_cast<long>(v)) {}
  explicit Scalar(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }
  Scalar(long num, long den);

  /// Residue of v in F_p.
  static Scalar residue(const mpz_class& v, std::uint32_t p);
  /// Parses "a", "-a", "a/b"; into F_p when field is prime.
  static Scalar parse(const std::string& text, Field field = {});

  Field field() const { return Field{p_}; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  /// The rational value. Throws for F_p values.
  const mpq_class& rational() const;
  std::uint64_t residue_value() const { return r_; }

  /// Same value interpreted in the given field.
  Scalar in(Field f) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "p/q" or an integer; residues print as integers.
  std::string to_string() const;

 private:
  void promote_to(std::uint32_t p);
  std::uint32_t common_modulus(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace coquiver

#endif
