#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace contactify {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; the canonical zero is 0/1. Serializes as "p/q", or "p"
/// when q = 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(text)));
    mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Bit size of numerator plus denominator; used for pivot selection.
  size_t complexity() const {
    return mpz_sizeinbase(v_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  /// Residue num * den^{-1} mod p. Throws if den divides p.
  uint64_t mod(uint64_t p) const;

private:
  mpq_class v_;
};

inline Rational half() { return Rational(1, 2); }

namespace detail {
inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}
inline uint64_t invmod_u64(uint64_t a, uint64_t p) {
  if (a == 0) throw std::domain_error("invmod of zero residue");
  return powmod_u64(a % p, p - 2, p);  // p prime
}
inline uint64_t mpz_mod_u64(const mpz_class& z, uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += mpz_class(static_cast<unsigned long>(p));
  return r.get_ui();
}
}  // namespace detail

inline uint64_t Rational::mod(uint64_t p) const {
  uint64_t n = detail::mpz_mod_u64(num(), p);
  uint64_t d = detail::mpz_mod_u64(den(), p);
  if (d == 0) throw std::domain_error("Rational::mod: denominator divisible by p");
  return detail::mulmod_u64(n, detail::invmod_u64(d, p), p);
}

}  // namespace contactify
