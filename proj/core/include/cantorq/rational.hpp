#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cantorq {

using BigInt = mpz_class;

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Wrapping keeps GMP's expression
/// templates out of user code, so `auto` always yields a Rational.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& value) : q_(value) {}
  explicit Rational(mpq_class q);

  /// Parses "p/q" or "p". Throws InvalidArgument on malformed input or zero
  /// denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  double to_double() const { return q_.get_d(); }
  /// Natural logarithm computed from the big-integer parts, accurate even when
  /// the value underflows a double. Requires a positive value.
  double log() const;

  /// Always "p/q", including integers ("3/1") and zero ("0/1").
  std::string to_string() const;

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
Rational square(const Rational& r);
/// r^e for any integer exponent; a negative exponent requires r != 0.
Rational pow(const Rational& r, long e);
/// base^e as an exact integer.
BigInt ipow(unsigned long base, unsigned long e);
/// 2^e for signed e, as an exact rational.
Rational pow2(long e);

std::string to_string(const BigInt& v);

}  // namespace cantorq
