#include "ssbc/codeword.hpp"

#include <bit>

#include "ssbc/error.hpp"

namespace ssbc {

Codeword::Codeword(Index k) : k_(k) {
  if (k < 0) throw ParameterError("Codeword: negative length");
  words_.assign((static_cast<std::size_t>(k) + 63) / 64, 0);
}

void Codeword::set(Index j, int sign) {
  if (sign != 1 && sign != -1) throw ParameterError("Codeword::set: entry must be +1 or -1");
  const std::uint64_t mask = std::uint64_t{1} << offset_of(j);
  if (sign > 0)
    words_[word_of(j)] |= mask;
  else
    words_[word_of(j)] &= ~mask;
}

Codeword Codeword::from_signs(std::span<const int> signs) {
  Codeword c(static_cast<Index>(signs.size()));
  for (std::size_t j = 0; j < signs.size(); ++j) c.set(static_cast<Index>(j), signs[j]);
  return c;
}

Codeword Codeword::from_values(const Eigen::Ref<const RowVector>& values) {
  Codeword c(values.size());
  for (Index j = 0; j < values.size(); ++j)
    if (values(j) >= 0.0) c.words_[word_of(j)] |= std::uint64_t{1} << offset_of(j);
  return c;
}

Codeword Codeword::from_sign_string(std::string_view text) {
  Codeword c(static_cast<Index>(text.size()));
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '+')
      c.set(static_cast<Index>(j), +1);
    else if (text[j] != '-')
      throw DataError("Codeword: invalid character in sign string");
  }
  return c;
}

std::string Codeword::to_sign_string() const {
  std::string out(static_cast<std::size_t>(k_), '-');
  for (Index j = 0; j < k_; ++j)
    if (bit(j)) out[static_cast<std::size_t>(j)] = '+';
  return out;
}

std::string Codeword::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const Index digits = (k_ + 3) / 4;
  std::string out(static_cast<std::size_t>(digits), '0');
  for (Index i = 0; i < digits; ++i) {
    unsigned nibble = 0;
    for (Index b = 0; b < 4; ++b) {
      const Index j = 4 * i + b;
      nibble = (nibble << 1) | ((j < k_ && bit(j)) ? 1u : 0u);
    }
    out[static_cast<std::size_t>(i)] = kDigits[nibble];
  }
  return out;
}

Codeword Codeword::from_hex(std::string_view text, Index k) {
  if (static_cast<Index>(text.size()) != (k + 3) / 4)
    throw DataError("Codeword: hex string has wrong length for k = " + std::to_string(k));
  Codeword c(k);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    unsigned nibble;
    if (ch >= '0' && ch <= '9')
      nibble = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f')
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    else
      throw DataError("Codeword: invalid hex digit");
    for (Index b = 0; b < 4; ++b) {
      const Index j = 4 * static_cast<Index>(i) + b;
      const bool on = (nibble >> (3 - b)) & 1u;
      if (j >= k) {
        if (on) throw DataError("Codeword: nonzero padding bits in hex string");
      } else if (on) {
        c.set(j, +1);
      }
    }
  }
  return c;
}

int hamming_distance(const Codeword& a, const Codeword& b) {
  if (a.size() != b.size()) detail::throw_dimension("hamming_distance", a.size(), b.size());
  int d = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) d += std::popcount(wa[i] ^ wb[i]);
  return d;
}

}  // namespace ssbc
