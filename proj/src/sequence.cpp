#include "subseq/sequence.hpp"

#include <string>

#include "subseq/errors.hpp"

namespace subseq {

Sequence::Sequence(std::vector<Symbol> symbols, std::uint32_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ == 0) throw InputError("alphabet size must be positive");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= alphabet_size_) {
      throw InputError("symbol " + std::to_string(symbols_[i]) + " at position " + std::to_string(i) +
                       " is outside the alphabet of size " + std::to_string(alphabet_size_));
    }
  }
}

Sequence Sequence::appended(Symbol s) const {
  std::vector<Symbol> next = symbols_;
  next.push_back(s);
  return Sequence(std::move(next), alphabet_size_);
}

Sequence word_from_index(std::uint64_t index, std::size_t n, std::uint32_t alphabet_size) {
  std::vector<Symbol> symbols(n);
  for (std::size_t i = n; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(index % alphabet_size);
    index /= alphabet_size;
  }
  return Sequence(std::move(symbols), alphabet_size);
}

}  // namespace subseq
