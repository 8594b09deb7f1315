#include "dynlo/bitstring.hpp"

#include <algorithm>

#include "dynlo/error.hpp"
#include "dynlo/random.hpp"

namespace dynlo {

namespace {

using kernels::kWordBits;
using Word = kernels::Word;

constexpr Word bit_mask(std::size_t index0) noexcept {
  return Word{1} << (index0 % kWordBits);
}

}  // namespace

BitString::BitString(std::size_t n) : n_(n), words_(word_count(n), 0) {}

BitString::BitString(std::span<const int> bits) : BitString(bits.size()) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw ContractViolation("BitString: element " + std::to_string(i + 1) +
                              " is not 0 or 1");
    }
    if (bits[i] == 1) words_[i / kWordBits] |= bit_mask(i);
  }
}

BitString::BitString(std::initializer_list<int> bits)
    : BitString(std::span<const int>(bits.begin(), bits.size())) {}

BitString BitString::from_string(std::string_view text) {
  std::vector<int> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ContractViolation("BitString: invalid character in '" +
                              std::string(text) + "'");
    }
    bits.push_back(c - '0');
  }
  return BitString(std::span<const int>(bits));
}

bool BitString::operator[](std::size_t pos) const {
  if (pos < 1 || pos > n_) {
    throw ContractViolation("BitString: position " + std::to_string(pos) +
                            " outside [1.." + std::to_string(n_) + "]");
  }
  const std::size_t i = pos - 1;
  return (words_[i / kWordBits] & bit_mask(i)) != 0;
}

std::string BitString::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (words_[i / kWordBits] & bit_mask(i)) out[i] = '1';
  }
  return out;
}

std::size_t hamming(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw ContractViolation("hamming: length mismatch (" +
                            std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()) + ")");
  }
  const auto wx = x.words();
  return kernels::active().hamming(wx.data(), y.words().data(), wx.size());
}

BitString flip_bits(const BitString& x,
                    std::span<const std::size_t> positions) {
  BitString out = x;
  // Flipping through a fresh mask detects duplicates before touching `out`.
  std::vector<Word> mask(out.words_.size(), 0);
  for (std::size_t pos : positions) {
    if (pos < 1 || pos > x.size()) {
      throw ContractViolation("flip_bits: position " + std::to_string(pos) +
                              " outside [1.." + std::to_string(x.size()) + "]");
    }
    const std::size_t i = pos - 1;
    Word& w = mask[i / kWordBits];
    if (w & bit_mask(i)) {
      throw ContractViolation("flip_bits: duplicate position " +
                              std::to_string(pos));
    }
    w |= bit_mask(i);
  }
  for (std::size_t w = 0; w < mask.size(); ++w) out.words_[w] ^= mask[w];
  return out;
}

BitString random_bitstring(std::size_t n, RandomStream& rng) {
  if (n < 1) throw ContractViolation("random_bitstring: n must be >= 1");
  BitString out(n);
  for (Word& w : out.words_) w = rng.next_word();
  const std::size_t tail = n % kWordBits;
  if (tail != 0) out.words_.back() &= (Word{1} << tail) - 1;
  return out;
}

std::vector<std::size_t> random_k_subset(std::size_t n, std::size_t k,
                                         RandomStream& rng) {
  if (k > n) {
    throw ContractViolation("random_k_subset: k=" + std::to_string(k) +
                            " exceeds n=" + std::to_string(n));
  }
  // Floyd's algorithm: k draws, every k-subset equally likely.
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  if (k <= 32) {
    for (std::size_t j = n - k + 1; j <= n; ++j) {
      const std::size_t t = rng.uniform_index(1, j);
      const bool seen = std::find(chosen.begin(), chosen.end(), t) != chosen.end();
      chosen.push_back(seen ? j : t);
    }
  } else {
    std::vector<bool> taken(n + 1, false);
    for (std::size_t j = n - k + 1; j <= n; ++j) {
      const std::size_t t = rng.uniform_index(1, j);
      const std::size_t pick = taken[t] ? j : t;
      taken[pick] = true;
      chosen.push_back(pick);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace dynlo
