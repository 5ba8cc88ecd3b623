#include "cantorq/cantor_measure.hpp"

#include "cantorq/errors.hpp"

#include <stdexcept>

namespace cantorq {

namespace {

void check_level(int k, int level_limit) {
  if (k < 0) throw InvalidArgument("negative level " + std::to_string(k));
  if (k > level_limit)
    throw InvalidArgument("level " + std::to_string(k) + " exceeds enumeration limit " +
                          std::to_string(level_limit));
}

}  // namespace

Word Word::parse(std::string_view letters) {
  for (char c : letters)
    if (c != '1' && c != '2')
      throw InvalidArgument("word '" + std::string(letters) + "' is not over {1,2}");
  Word w;
  w.letters_ = std::string(letters);
  return w;
}

Word Word::child(int letter) const {
  if (letter != 1 && letter != 2) throw InvalidArgument("letter must be 1 or 2");
  Word w = *this;
  w.letters_.push_back(static_cast<char>('0' + letter));
  return w;
}

std::vector<Word> words_of_length(int k, int level_limit) {
  check_level(k, level_limit);
  std::vector<Word> out{Word{}};
  for (int level = 0; level < k; ++level) {
    std::vector<Word> next;
    next.reserve(out.size() * 2);
    for (const auto& w : out) {
      next.push_back(w.child(1));
      next.push_back(w.child(2));
    }
    out = std::move(next);
  }
  return out;
}

Rational rho(const Rational& x, const PlanePoint& p) { return square(x - p.x) + square(p.y); }

Rational mean() { return Rational(1, 2); }
Rational variance() { return Rational(1, 8); }
Rational second_moment() { return Rational(3, 8); }

Rational apply_map(const Word& w, const Rational& x) {
  const Rational third(1, 3);
  const Rational shift(2, 3);
  Rational y = x;
  for (std::size_t i = w.size(); i-- > 0;) {
    y *= third;
    if (w[i] == 2) y += shift;
  }
  return y;
}

BasicInterval basic_interval(const Word& w) {
  return BasicInterval{w, apply_map(w, Rational(0)), apply_map(w, Rational(1))};
}

Rational measure_of(const Word& w) { return pow2(-static_cast<long>(w.size())); }

Rational centroid(const Word& w) { return apply_map(w, mean()); }

std::vector<std::int64_t> centroid_numerators(int k, int level_limit) {
  check_level(k, level_limit);
  std::vector<std::int64_t> c{1};
  std::int64_t shift = 4;  // 4 * 3^{level-1}
  for (int level = 1; level <= k; ++level) {
    const std::size_t half = c.size();
    c.reserve(2 * half);
    for (std::size_t i = 0; i < half; ++i) c.push_back(c[i] + shift);
    shift *= 3;
  }
  return c;
}

BigInt moment_sum_closed_form(int k, int m) {
  if (k < 0) throw InvalidArgument("negative level");
  const auto uk = static_cast<unsigned long>(k);
  if (m == 1) return ipow(6, uk);
  if (m == 2) {
    if (k == 0) return 1;
    return ipow(2, uk - 1) * (3 * ipow(9, uk) - 1);
  }
  throw InvalidArgument("moment order must be 1 or 2, got " + std::to_string(m));
}

BigInt moment_sum(int k, int m, int level_limit) {
  if (m != 1 && m != 2)
    throw InvalidArgument("moment order must be 1 or 2, got " + std::to_string(m));
  if (k > level_limit) return moment_sum_closed_form(k, m);
  BigInt sum = 0;
  for (const std::int64_t c : centroid_numerators(k, level_limit)) {
    const BigInt v(static_cast<long>(c));
    sum += m == 1 ? v : BigInt(v * v);
  }
  if (sum != moment_sum_closed_form(k, m))
    throw std::logic_error("moment sum enumeration disagrees with closed form at k=" +
                           std::to_string(k));
  return sum;
}

Rational self_similar_distortion(const Word& w, const PlanePoint& p) {
  const Rational scale(BigInt(1), ipow(9, w.size()));
  return scale * variance() + rho(centroid(w), p);
}

}  // namespace cantorq
