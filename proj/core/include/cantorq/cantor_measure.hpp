#pragma once

// The classical Cantor distribution P: the self-similar measure of the maps
// T1(x) = x/3 and T2(x) = x/3 + 2/3 with weights 1/2 each.
//
// Word convention: a word is stored most-significant letter first, and
//     T_w = T_{w[0]} o T_{w[1]} o ... o T_{w[k-1]},
// so the LAST letter is applied to the argument first. The first letter picks
// the level-1 interval (1 -> [0,1/3], 2 -> [2/3,1]), the second letter the
// level-2 interval inside it, and so on. Lexicographic order of words of one
// length is therefore the left-to-right order of their basic intervals.

#include "cantorq/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cantorq {

/// Enumeration over {1,2}^k is refused above this level unless the caller
/// raises the limit explicitly.
inline constexpr int kDefaultLevelLimit = 20;

/// Finite word over the alphabet {1, 2}; may be empty.
class Word {
 public:
  Word() = default;

  /// Accepts a string of '1'/'2' characters. Throws InvalidArgument otherwise.
  static Word parse(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Letter at position i, as 1 or 2.
  int operator[](std::size_t i) const { return letters_[i] - '0'; }

  /// The word extended by one letter (1 = left child, 2 = right child).
  Word child(int letter) const;

  const std::string& letters() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    // Shorter first, then lexicographic: total order that matches
    // left-to-right interval order within one level.
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  std::string letters_;
};

/// All 2^k words of length k, in left-to-right interval order.
std::vector<Word> words_of_length(int k, int level_limit = kDefaultLevelLimit);

struct BasicInterval {
  Word word;
  Rational left;
  Rational right;
};

/// A point in the plane with exact coordinates.
struct PlanePoint {
  Rational x;
  Rational y;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Squared distance from (x, 0) to p: (x - p.x)^2 + p.y^2.
Rational rho(const Rational& x, const PlanePoint& p);

Rational mean();           // E(X) = 1/2
Rational variance();       // V(X) = 1/8
Rational second_moment();  // E(X^2) = 3/8

/// T_w(x).
Rational apply_map(const Word& w, const Rational& x);

/// J_w = T_w([0, 1]).
BasicInterval basic_interval(const Word& w);

/// P(J_w) = 2^-|w|.
Rational measure_of(const Word& w);

/// a(w) = E(X | X in J_w) = T_w(1/2).
Rational centroid(const Word& w);

/// Sorted numerators of a(w) * 2 * 3^k over all words of length k, built by
/// c_k = c_{k-1} u (c_{k-1} + 4 * 3^{k-1}) from c_0 = {1}.
std::vector<std::int64_t> centroid_numerators(int k, int level_limit = kDefaultLevelLimit);

/// Sum of x^m over centroid_numerators(k), for m in {1, 2}.
///
/// Up to `level_limit` the sum is enumerated and then checked against the
/// closed form (a mismatch throws std::logic_error); above it the closed form
/// is returned directly.
BigInt moment_sum(int k, int m, int level_limit = kDefaultLevelLimit);

/// 6^k for m = 1, 2^{k-1} (3 * 9^k - 1) for m = 2.
BigInt moment_sum_closed_form(int k, int m);

/// Exact conditional distortion of J_w served by p:
/// (1/P(J_w)) * int_{J_w} rho(x, p) dP = 9^-|w| / 8 + rho(a(w), p).
Rational self_similar_distortion(const Word& w, const PlanePoint& p);

}  // namespace cantorq
