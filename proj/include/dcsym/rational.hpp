#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>

namespace dcsym {

/// Exact rational number. Thin wrapper over GMP's mpq_class that keeps the
/// value canonicalized (lowest terms, positive denominator) at all times.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  static std::optional<Rational> parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_positive() const { return v_ > 0; }
  bool is_negative() const { return v_ < 0; }

  /// Integer value; only valid when is_integer() and within long range.
  long to_long() const { return mpz_class(v_.get_num()).get_si(); }

  /// Largest integer <= value.
  Rational floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(q);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const { return Rational(mpq_class(v_ / o.v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; v_.canonicalize(); return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; v_.canonicalize(); return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; v_.canonicalize(); return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; v_.canonicalize(); return *this; }

  Rational inv() const { return Rational(mpq_class(1 / v_)); }

  /// this^k for integer k (k<0 requires nonzero value).
  Rational pow_int(long k) const {
    if (k == 0) return Rational(1);
    mpq_class base = k > 0 ? v_ : mpq_class(1 / v_);
    unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), e);
    mpq_class r(n, d);
    r.canonicalize();
    return Rational(r);
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  int cmp(const Rational& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()); }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace dcsym
