#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssbc/types.hpp"

namespace ssbc {

/// A k-bit code with entries in {-1, +1}, packed 64 bits per word.
/// Bit j set means entry j is +1. Unused high bits of the last word are zero.
class Codeword {
 public:
  Codeword() = default;
  /// All entries -1.
  explicit Codeword(Index k);

  static Codeword from_signs(std::span<const int> signs);
  /// Entry j is +1 iff values[j] >= 0 (so sign(0) = +1).
  static Codeword from_values(const Eigen::Ref<const RowVector>& values);
  /// Inverse of to_sign_string(); accepts only '+' and '-'.
  static Codeword from_sign_string(std::string_view text);
  /// Inverse of to_hex(); k is needed because the last nibble may be padded.
  static Codeword from_hex(std::string_view text, Index k);

  Index size() const { return k_; }
  int operator[](Index j) const { return bit(j) ? +1 : -1; }
  bool bit(Index j) const { return (words_[word_of(j)] >> offset_of(j)) & 1u; }
  void set(Index j, int sign);

  /// One character per entry, '+' or '-'.
  std::string to_sign_string() const;
  /// Entries 4i..4i+3 form hex digit i, entry 4i in the most significant
  /// position; '+' is 1. The last digit is padded with zero bits.
  std::string to_hex() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  static std::size_t word_of(Index j) { return static_cast<std::size_t>(j) / 64; }
  static unsigned offset_of(Index j) { return static_cast<unsigned>(j % 64); }

  Index k_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Number of differing entries. Throws DimensionError on length mismatch.
int hamming_distance(const Codeword& a, const Codeword& b);

}  // namespace ssbc
