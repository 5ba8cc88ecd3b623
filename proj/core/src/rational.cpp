#include "cantorq/rational.hpp"

#include "cantorq/errors.hpp"

#include <cmath>
#include <ostream>
#include <utility>

namespace cantorq {

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  return Rational(BigInt(n, 10), BigInt(std::string(den), 10));
}

double Rational::log() const {
  if (sign() <= 0) throw InvalidArgument("log of non-positive rational " + to_string());
  long exp_num = 0;
  long exp_den = 0;
  const double m_num = mpz_get_d_2exp(&exp_num, q_.get_num_mpz_t());
  const double m_den = mpz_get_d_2exp(&exp_den, q_.get_den_mpz_t());
  return std::log(m_num) - std::log(m_den) +
         static_cast<double>(exp_num - exp_den) * std::log(2.0);
}

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational square(const Rational& r) { return r * r; }

Rational pow(const Rational& r, long e) {
  if (e < 0) return Rational(1) / pow(r, -e);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

BigInt ipow(unsigned long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

Rational pow2(long e) {
  if (e >= 0) return Rational(ipow(2, static_cast<unsigned long>(e)));
  return Rational(BigInt(1), ipow(2, static_cast<unsigned long>(-e)));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace cantorq
