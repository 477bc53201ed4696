#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subseq/sequence.hpp"

namespace subseq::cli {

/// A file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Encoding { chars, tokens };

/// How to read one sequence file.
///
/// chars:  exactly one non-blank line; every non-whitespace byte is a symbol.
///         Bytes get ids in order of first appearance across both files.
/// tokens: whitespace-separated nonnegative integers, used as ids directly.
///
/// Without an explicit alphabet size it is inferred (distinct bytes for
/// chars, max id + 1 for tokens). An explicit size is validated against
/// the data.
struct InputSpec {
  std::string path;
  Encoding encoding = Encoding::chars;
  std::optional<std::uint32_t> alphabet_size;
};

struct LoadedPair {
  Sequence x;
  Sequence y;
  /// chars encoding: the byte behind each id; empty for tokens.
  std::vector<std::string> symbol_map;
};

/// Throws IoError for unreadable files and InputError for malformed content.
LoadedPair load_pair(const InputSpec& x, const InputSpec& y);

}  // namespace subseq::cli
