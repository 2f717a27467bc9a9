#pragma once

#include <gmp.h>

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tanaka {

/// Arbitrary-precision rational scalar. Always stored in lowest terms with a
/// positive denominator; every operation is exact.
class Rational {
 public:
  Rational() { mpq_init(q_); }

  Rational(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }

  Rational(int n) : Rational(static_cast<long>(n)) {}

  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
  }

  /// Parses "a" or "a/b".
  explicit Rational(const std::string& s) {
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0) {
      mpq_clear(q_);
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q_)) == 0) {
      mpq_clear(q_);
      throw std::domain_error("Rational: zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q_);
  }

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }

  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }

  ~Rational() { mpq_clear(q_); }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
  }

  /// Serializes as "a/b", with "/b" omitted when the denominator is 1.
  std::string str() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string s(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
  }

  std::string numerator_str() const {
    char* raw = mpz_get_str(nullptr, 10, mpq_numref(q_));
    std::string s(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
  }

  std::string denominator_str() const {
    char* raw = mpz_get_str(nullptr, 10, mpq_denref(q_));
    std::string s(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
  }

  /// True when the value fits a signed long and equals an integer.
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_t q_;
};

/// Exact binomial coefficient; zero when k < 0 or k > n.
inline Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_t b;
  mpz_init(b);
  mpz_bin_uiui(b, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  char* raw = mpz_get_str(nullptr, 10, b);
  std::string s(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, s.size() + 1);
  mpz_clear(b);
  return Rational(s);
}

inline Rational factorial(long n) {
  Rational r(1);
  for (long i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

/// (2s-1)!! with the empty-product conventions (-1)!! = 1!! = 1.
inline Rational double_factorial_odd(long s) {
  Rational r(1);
  for (long i = 2 * s - 1; i >= 2; i -= 2) r *= Rational(i);
  return r;
}

}  // namespace tanaka
