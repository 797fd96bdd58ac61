#include "fsg/perm.hpp"

#include <bit>
#include <string>

#include "fsg/error.hpp"

namespace fsg {

namespace {

constexpr std::array<std::uint64_t, kMaxRankOrder + 1> kFactorials = [] {
  std::array<std::uint64_t, kMaxRankOrder + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kMaxRankOrder; ++i) f[i] = f[i - 1] * static_cast<std::uint64_t>(i);
  return f;
}();

void check_order(int n) {
  if (n < 0 || n > kMaxRankOrder) {
    throw SizeError("permutation size " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxRankOrder) + "]");
  }
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxRankOrder) {
    throw SizeError(std::to_string(n) + "! does not fit in 64 bits");
  }
  return kFactorials[n];
}

Permutation Permutation::identity(int n) {
  check_order(n);
  Permutation p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.map_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_word(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  check_order(n);
  Permutation p;
  p.n_ = n;
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = word[i];
    if (v < 0 || v >= n || ((seen >> v) & 1U)) {
      throw RangeError("not a permutation of [" + std::to_string(n) + "]");
    }
    seen |= 1U << v;
    p.map_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_one_line(std::span<const int> labels) {
  std::vector<int> word(labels.begin(), labels.end());
  for (int& v : word) --v;
  return from_word(word);
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = map_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.map_[map_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

std::uint64_t rank_word(const std::uint8_t* word, int n) {
  std::uint32_t unused = (1U << n) - 1;
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1U << word[i];
    r += static_cast<std::uint64_t>(std::popcount(unused & (bit - 1))) * kFactorials[n - 1 - i];
    unused &= ~bit;
  }
  return r;
}

PermIndex rank(const Permutation& p) {
  return {rank_word(p.word().data(), p.size()), p.size()};
}

Permutation unrank(PermIndex i) {
  check_order(i.n);
  if (i.rank >= kFactorials[i.n]) {
    throw RangeError("rank " + std::to_string(i.rank) + " outside [0, " + std::to_string(i.n) +
                     "!)");
  }
  std::vector<int> word(i.n);
  std::uint32_t unused = (1U << i.n) - 1;
  std::uint64_t r = i.rank;
  for (int pos = 0; pos < i.n; ++pos) {
    const std::uint64_t f = kFactorials[i.n - 1 - pos];
    auto skip = static_cast<int>(r / f);
    r %= f;
    std::uint32_t m = unused;
    for (; skip > 0; --skip) m &= m - 1;
    const int v = std::countr_zero(m);
    word[pos] = v;
    unused &= ~(1U << v);
  }
  return Permutation::from_word(word);
}

Permutation swap_positions(const Permutation& p, int a, int b) {
  const int n = p.size();
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw RangeError("swap position outside [1, " + std::to_string(n) + "]");
  }
  if (a == b) throw RangeError("swap positions must differ");
  std::vector<int> word(p.word().begin(), p.word().end());
  std::swap(word[a], word[b]);
  return Permutation::from_word(word);
}

void to_json(Json& j, const Permutation& p) { j = p.one_line(); }

void from_json(const Json& j, Permutation& p) {
  p = Permutation::from_one_line(j.get<std::vector<int>>());
}

}  // namespace fsg
