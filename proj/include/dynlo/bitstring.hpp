#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynlo/kernels.hpp"

namespace dynlo {

class RandomStream;

/// Fixed-length bit string. Positions are 1-based in every public
/// operation; storage is packed 64-bit words with zeroed padding bits.
/// Values are immutable once constructed.
class BitString {
 public:
  using Word = kernels::Word;

  BitString() = default;

  /// All-zero string of length n.
  explicit BitString(std::size_t n);

  /// From 0/1 values; any other value is a contract violation.
  explicit BitString(std::span<const int> bits);
  BitString(std::initializer_list<int> bits);

  /// From a string of '0'/'1' characters, first character is position 1.
  static BitString from_string(std::string_view text);

  std::size_t size() const noexcept { return n_; }

  /// Bit at 1-based position `pos`.
  bool operator[](std::size_t pos) const;

  std::span<const Word> words() const noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  friend BitString flip_bits(const BitString&, std::span<const std::size_t>);
  friend BitString random_bitstring(std::size_t, RandomStream&);

  static std::size_t word_count(std::size_t n) noexcept {
    return (n + kernels::kWordBits - 1) / kernels::kWordBits;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

/// Number of positions where x and y differ.
std::size_t hamming(const BitString& x, const BitString& y);

/// Copy of x with the given (1-based, pairwise distinct) positions flipped.
BitString flip_bits(const BitString& x, std::span<const std::size_t> positions);

inline BitString flip_bits(const BitString& x,
                           std::initializer_list<std::size_t> positions) {
  return flip_bits(x, std::span<const std::size_t>(positions.begin(),
                                                   positions.size()));
}

/// Uniform random string of length n >= 1.
BitString random_bitstring(std::size_t n, RandomStream& rng);

}  // namespace dynlo
