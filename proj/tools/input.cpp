#include "input.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "subseq/errors.hpp"

namespace subseq::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

std::string single_line(const std::string& text, const std::string& path) {
  std::istringstream lines(text);
  std::string line, found;
  int count = 0;
  while (std::getline(lines, line)) {
    std::string kept;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) kept.push_back(c);
    }
    if (kept.empty()) continue;
    found = kept;
    ++count;
  }
  if (count > 1) throw InputError(path + ": chars encoding expects one sequence per file, found " +
                                  std::to_string(count) + " lines");
  return found;
}

std::vector<Symbol> parse_tokens(const std::string& text, const std::string& path) {
  std::istringstream in(text);
  std::vector<Symbol> out;
  std::string tok;
  while (in >> tok) {
    if (tok.empty() || tok.size() > 9 ||
        !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw InputError(path + ": not a symbol id: '" + tok + "'");
    }
    out.push_back(static_cast<Symbol>(std::stoul(tok)));
  }
  return out;
}

}  // namespace

LoadedPair load_pair(const InputSpec& xs, const InputSpec& ys) {
  if (xs.encoding != ys.encoding) throw InputError("both files must use the same encoding");
  const std::string tx = read_file(xs.path);
  const std::string ty = read_file(ys.path);
  const std::optional<std::uint32_t> forced = xs.alphabet_size ? xs.alphabet_size : ys.alphabet_size;

  std::vector<Symbol> sx, sy;
  LoadedPair out;
  std::uint32_t inferred = 1;
  if (xs.encoding == Encoding::chars) {
    std::map<char, Symbol> ids;
    auto encode = [&](const std::string& word) {
      std::vector<Symbol> s;
      for (char c : word) {
        auto [it, inserted] = ids.emplace(c, static_cast<Symbol>(ids.size()));
        if (inserted) out.symbol_map.emplace_back(1, c);
        s.push_back(it->second);
      }
      return s;
    };
    sx = encode(single_line(tx, xs.path));
    sy = encode(single_line(ty, ys.path));
    inferred = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(ids.size()));
  } else {
    sx = parse_tokens(tx, xs.path);
    sy = parse_tokens(ty, ys.path);
    for (Symbol s : sx) inferred = std::max(inferred, s + 1);
    for (Symbol s : sy) inferred = std::max(inferred, s + 1);
  }
  if (forced && *forced < inferred) {
    throw InputError("alphabet size " + std::to_string(*forced) + " is too small for the input (needs " +
                     std::to_string(inferred) + ")");
  }
  const std::uint32_t a = forced.value_or(inferred);
  out.x = Sequence(std::move(sx), a);
  out.y = Sequence(std::move(sy), a);
  return out;
}

}  // namespace subseq::cli
