#include "coquiver/scalar.hpp"

#include <cctype>
#include <ostream>

namespace coquiver {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(p));
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw PreconditionError("field characteristic must be a prime below 2^31, got " +
                            std::to_string(p));
  return Field{p};
}

std::string Field::to_string() const {
  return p == 0 ? "Q" : "fp:" + std::to_string(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 3 && (text.rfind("fp:", 0) == 0 || text.rfind("Fp:", 0) == 0)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(text.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == text.size() - 3 && v < (1ul << 31)) return prime(static_cast<std::uint32_t>(v));
  }
  throw PreconditionError("unknown field '" + text + "' (expected q or fp:P)");
}

Scalar::Scalar(long num, long den) : q_(num, den) {
  if (den == 0) throw Error("zero denominator");
  q_.canonicalize();
}

Scalar Scalar::residue(const mpz_class& v, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = reduce(v, p);
  return s;
}

Scalar Scalar::parse(const std::string& text, Field field) {
  mpq_class q;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  bool ok = !t.empty();
  for (std::size_t i = 0; i < t.size() && ok; ++i) {
    char ch = t[i];
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (ch == '-' && i == 0)))
      ok = false;
  }
  if (ok && (t == "-" || t.back() == '/' || t.find('/') == 0 ||
             t.find('/') != t.rfind('/') || t.find("-/") != std::string::npos))
    ok = false;
  if (ok && q.set_str(t, 10) != 0) ok = false;
  if (!ok) throw Error("malformed number '" + text + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
  q.canonicalize();
  Scalar s(q);
  return field.is_rational() ? s : s.in(field);
}

const mpq_class& Scalar::rational() const {
  if (p_) throw UnsupportedError("rational value requested from an F_p scalar");
  return q_;
}

Scalar Scalar::in(Field f) const {
  Scalar s = *this;
  if (f.p == p_) return s;
  if (f.p == 0) throw UnsupportedError("cannot lift an F_p scalar to Q");
  if (p_ != 0) throw Error("field mismatch: F_" + std::to_string(p_) + " vs F_" + std::to_string(f.p));
  s.promote_to(f.p);
  return s;
}

void Scalar::promote_to(std::uint32_t p) {
  if (p_ == p) return;
  if (p_ != 0) throw Error("field mismatch: F_" + std::to_string(p_) + " vs F_" + std::to_string(p));
  std::uint64_t den = reduce(q_.get_den(), p);
  if (den == 0) throw Error("denominator of " + q_.get_str() + " vanishes in F_" + std::to_string(p));
  r_ = reduce(q_.get_num(), p) * inverse_mod(den, p) % p;
  p_ = p;
  q_ = 0;
}

std::uint32_t Scalar::common_modulus(const Scalar& o) const {
  if (p_ == o.p_) return p_;
  if (p_ == 0) return o.p_;
  if (o.p_ == 0) return p_;
  throw Error("field mismatch: F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common_modulus(o);
  if (p == 0) {
    q_ += o.q_;
    return *this;
  }
  promote_to(p);
  Scalar b = o;
  b.promote_to(p);
  r_ = (r_ + b.r_) % p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common_modulus(o);
  if (p == 0) {
    q_ *= o.q_;
    return *this;
  }
  promote_to(p);
  Scalar b = o;
  b.promote_to(p);
  r_ = r_ * b.r_ % p;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar s = *this;
  if (p_)
    s.r_ = inverse_mod(r_, p_);
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    if (sgn(o.q_) == 0) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
  }
  std::uint32_t p = common_modulus(o);
  Scalar b = o;
  b.promote_to(p);
  return *this *= b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
  std::uint32_t p = a.common_modulus(b);
  return a.in(Field{p}).r_ == b.in(Field{p}).r_;
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace coquiver
