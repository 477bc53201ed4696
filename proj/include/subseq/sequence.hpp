#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace subseq {

using Symbol = std::uint32_t;

/// A word over the alphabet {0, ..., alphabet_size - 1}.
class Sequence {
 public:
  Sequence() = default;
  /// Throws InputError if any symbol is >= alphabet_size or the alphabet is empty.
  Sequence(std::vector<Symbol> symbols, std::uint32_t alphabet_size);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  /// Copy with `s` appended.
  Sequence appended(Symbol s) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::uint32_t alphabet_size_ = 1;
};

/// Word number `index` in lexicographic order among all a^n words of length n.
Sequence word_from_index(std::uint64_t index, std::size_t n, std::uint32_t alphabet_size);

}  // namespace subseq
