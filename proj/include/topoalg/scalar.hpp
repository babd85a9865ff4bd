// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_SCALAR_HPP
#define TOPOALG_SCALAR_HPP

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace topoalg {

/// Ring operations needed by structure-constant arithmetic (operad
/// evaluation, straightening).  Fields refine this with division.
template <class S>
concept RingScalar = requires(S a, S b, long n) {
  { S(n) };
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <class S>
concept FieldScalar = RingScalar<S> && requires(S a, S b) {
  { a / b } -> std::convertible_to<S>;
  { a.inverse() } -> std::convertible_to<S>;
};

/// Exact rational number.  All window computations default to this scalar;
/// there is deliberately no floating-point mode.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const { return Rational(1) / *this; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// Prime field F_p with a process-wide modulus, set once before use.
class PrimeField {
 public:
  PrimeField() : v_(0) {}
  PrimeField(long n) {  // NOLINT: implicit by design
    const long p = static_cast<long>(modulus());
    long r = n % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t p) {
    if (p < 2 || !probably_prime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
    modulus_slot() = p;
  }
  static std::uint64_t modulus() {
    if (modulus_slot() == 0) throw std::logic_error("PrimeField: modulus not configured");
    return modulus_slot();
  }

  PrimeField operator+(const PrimeField& o) const { return raw(add(v_, o.v_)); }
  PrimeField operator-(const PrimeField& o) const { return raw(sub(v_, o.v_)); }
  PrimeField operator*(const PrimeField& o) const { return raw(mul(v_, o.v_)); }
  PrimeField operator/(const PrimeField& o) const { return *this * o.inverse(); }
  PrimeField operator-() const { return raw(sub(0, v_)); }
  PrimeField& operator+=(const PrimeField& o) { v_ = add(v_, o.v_); return *this; }
  PrimeField& operator-=(const PrimeField& o) { v_ = sub(v_, o.v_); return *this; }
  PrimeField& operator*=(const PrimeField& o) { v_ = mul(v_, o.v_); return *this; }

  PrimeField inverse() const {
    if (v_ == 0) throw std::domain_error("PrimeField: division by zero");
    return raw(power(v_, modulus() - 2));
  }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool operator==(const PrimeField& o) const { return v_ == o.v_; }
  bool operator!=(const PrimeField& o) const { return v_ != o.v_; }
  bool operator<(const PrimeField& o) const { return v_ < o.v_; }

  std::string str() const { return std::to_string(v_); }
  std::uint64_t value() const { return v_; }

 private:
  static PrimeField raw(std::uint64_t v) {
    PrimeField x;
    x.v_ = v;
    return x;
  }
  static std::uint64_t& modulus_slot() {
    static std::uint64_t p = 0;
    return p;
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= modulus() ? s - modulus() : s;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return b > a ? a + modulus() - b : a - b; }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % modulus());
  }
  static std::uint64_t power(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static bool probably_prime(std::uint64_t p) {
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) return false;
    return true;
  }

  std::uint64_t v_;
};

/// Overflow-checked machine integers.  A ring, not a field: used by the
/// exhaustive structure-constant scans where rationals would be wasteful.
class Int64 {
 public:
  Int64() : v_(0) {}
  Int64(long n) : v_(n) {}  // NOLINT: implicit by design

  Int64 operator+(const Int64& o) const {
    long r;
    if (__builtin_add_overflow(v_, o.v_, &r)) throw std::overflow_error("Int64 overflow");
    return Int64(r);
  }
  Int64 operator-(const Int64& o) const {
    long r;
    if (__builtin_sub_overflow(v_, o.v_, &r)) throw std::overflow_error("Int64 overflow");
    return Int64(r);
  }
  Int64 operator*(const Int64& o) const {
    long r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) throw std::overflow_error("Int64 overflow");
    return Int64(r);
  }
  Int64 operator-() const { return Int64(-v_); }
  bool is_zero() const { return v_ == 0; }
  bool operator==(const Int64& o) const { return v_ == o.v_; }
  bool operator!=(const Int64& o) const { return v_ != o.v_; }
  std::string str() const { return std::to_string(v_); }
  long value() const { return v_; }

 private:
  long v_;
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<PrimeField>);
static_assert(RingScalar<Int64>);

}  // namespace topoalg

#endif  // TOPOALG_SCALAR_HPP
