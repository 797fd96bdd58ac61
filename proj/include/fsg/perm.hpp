#pragma once

// Permutations of [n] and their lexicographic ranks in [0, n!).

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg {

/// Largest n for which n! fits in 64 bits.
inline constexpr int kMaxRankOrder = 20;

/// n! for 0 <= n <= 20; throws SizeError beyond that.
std::uint64_t factorial(int n);

/// A bijection from positions (vertices of X) to labels (vertices of Y).
/// Stored 0-based: at(a) is the label sitting on position a.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);

  /// From a 0-based word. Throws RangeError if it is not a bijection.
  static Permutation from_word(std::span<const int> word);

  /// From 1-based one-line notation, e.g. {2,1,3}.
  static Permutation from_one_line(std::span<const int> labels);

  int size() const { return n_; }
  int at(int position) const { return map_[position]; }
  std::span<const std::uint8_t> word() const { return {map_.data(), static_cast<std::size_t>(n_)}; }

  /// 1-based one-line notation.
  std::vector<int> one_line() const;

  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.map_ == b.map_;
  }

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxRankOrder> map_{};
};

struct PermIndex {
  std::uint64_t rank = 0;
  int n = 0;

  friend bool operator==(const PermIndex&, const PermIndex&) = default;
};

/// Lexicographic rank of a 0-based word of length n (hot path).
std::uint64_t rank_word(const std::uint8_t* word, int n);

PermIndex rank(const Permutation& p);

/// Throws RangeError when i.rank >= i.n!.
Permutation unrank(PermIndex i);

/// Exchanges the labels on positions a and b (0-based, a != b).
Permutation swap_positions(const Permutation& p, int a, int b);

void to_json(Json& j, const Permutation& p);
void from_json(const Json& j, Permutation& p);

}  // namespace fsg
