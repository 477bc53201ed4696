#include "subseq/count.hpp"

#include <algorithm>
#include <string>

#include "subseq/errors.hpp"
#include "subseq/residue.hpp"

namespace subseq {

namespace {

void check_pair(const Sequence& x, const Sequence& y) {
  if (x.alphabet_size() != y.alphabet_size()) {
    throw InputError("words use different alphabets (" + std::to_string(x.alphabet_size()) + " vs " +
                     std::to_string(y.alphabet_size()) + ")");
  }
}

// Largest value any prefix table entry of levels 1..levels can take.
mpz_class table_bound(std::size_t nx, std::size_t ny, std::size_t levels) {
  mpz_class bound = 0;
  for (std::size_t l = 1; l <= levels; ++l) {
    mpz_class b = binomial(nx, l) * binomial(ny, l);
    if (b > bound) bound = b;
  }
  return bound;
}

}  // namespace

std::vector<BigCount> count_up_to_level(const Sequence& x, const Sequence& y, std::size_t max_level,
                                        kernels::Backend backend) {
  check_pair(x, y);
  const std::size_t nx = x.length();
  const std::size_t ny = y.length();
  const std::size_t levels = std::min({max_level, nx, ny});
  if (levels == 0) return {};

  const std::vector<std::uint64_t> moduli = residue::primes_exceeding(table_bound(nx, ny, levels));
  const std::size_t width = ny + 1;
  const std::span<const Symbol> ys = y.symbols();

  // residues[c * levels + (l - 1)] = P_l(nx, ny) mod moduli[c]
  std::vector<std::uint64_t> residues(moduli.size() * levels);
  std::vector<std::uint64_t> rows((levels + 1) * width);
  for (std::size_t c = 0; c < moduli.size(); ++c) {
    const std::uint64_t p = moduli[c];
    std::fill(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(width), 1);
    std::fill(rows.begin() + static_cast<std::ptrdiff_t>(width), rows.end(), 0);
    for (std::size_t i = 1; i <= nx; ++i) {
      const Symbol xi = x[i - 1];
      // Descending so that level l-1 still holds row i-1 when level l reads it.
      for (std::size_t l = std::min(levels, i); l >= 1; --l) {
        const std::span<const std::uint64_t> lower(rows.data() + (l - 1) * width, ny);
        const std::span<std::uint64_t> out(rows.data() + l * width + 1, ny);
        kernels::accumulate_row(backend, ys, xi, lower, out, p);
      }
    }
    for (std::size_t l = 1; l <= levels; ++l) residues[c * levels + (l - 1)] = rows[l * width + ny];
  }

  std::vector<BigCount> out;
  out.reserve(levels);
  std::vector<std::uint64_t> channel(moduli.size());
  for (std::size_t l = 1; l <= levels; ++l) {
    for (std::size_t c = 0; c < moduli.size(); ++c) channel[c] = residues[c * levels + (l - 1)];
    out.emplace_back(residue::reconstruct(channel, moduli));
  }
  return out;
}

BigCount count_k(const Sequence& x, const Sequence& y, std::size_t k, kernels::Backend backend) {
  if (k == 0) throw InputError("k must be at least 1");
  check_pair(x, y);
  if (k > std::min(x.length(), y.length())) return BigCount{};
  return count_up_to_level(x, y, k, backend).back();
}

BigCount count_k(const Sequence& x, const Sequence& y, std::size_t k) {
  return count_k(x, y, k, kernels::default_backend());
}

std::vector<BigCount> count_by_level(const Sequence& x, const Sequence& y, kernels::Backend backend) {
  return count_up_to_level(x, y, std::min(x.length(), y.length()), backend);
}

std::vector<BigCount> count_by_level(const Sequence& x, const Sequence& y) {
  return count_by_level(x, y, kernels::default_backend());
}

BigCount count_all(const Sequence& x, const Sequence& y) {
  BigCount total;
  for (const BigCount& c : count_by_level(x, y)) total += c;
  return total;
}

BigCount count_all_direct(const Sequence& x, const Sequence& y) {
  check_pair(x, y);
  const std::size_t nx = x.length();
  const std::size_t ny = y.length();
  std::vector<mpz_class> prev(ny + 1, 1);
  std::vector<mpz_class> cur(ny + 1);
  for (std::size_t i = 1; i <= nx; ++i) {
    cur[0] = 1;
    const Symbol xi = x[i - 1];
    for (std::size_t j = 1; j <= ny; ++j) {
      mpz_class& a = cur[j];
      mpz_add(a.get_mpz_t(), prev[j].get_mpz_t(), cur[j - 1].get_mpz_t());
      if (xi != y[j - 1]) mpz_sub(a.get_mpz_t(), a.get_mpz_t(), prev[j - 1].get_mpz_t());
    }
    std::swap(prev, cur);
  }
  return BigCount(prev[ny] - 1);
}

BigCount count_k_bruteforce(const Sequence& x, const Sequence& y, std::size_t k, std::uint64_t budget) {
  if (k == 0) throw InputError("k must be at least 1");
  check_pair(x, y);
  const std::size_t nx = x.length();
  const std::size_t ny = y.length();
  if (k > std::min(nx, ny)) return BigCount{};
  const mpz_class work = binomial(nx, k) * binomial(ny, k);
  if (work > mpz_class(std::to_string(budget))) {
    throw BudgetError("enumeration needs " + work.get_str() + " tuple pairs, budget is " + std::to_string(budget));
  }

  // All k-subsets of [0, n) as index tuples, in lexicographic order.
  auto subsets = [k](std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t s = 0; s < k; ++s) idx[s] = s;
    while (true) {
      out.push_back(idx);
      std::size_t s = k;
      while (s > 0 && idx[s - 1] == n - k + (s - 1)) --s;
      if (s == 0) break;
      ++idx[s - 1];
      for (std::size_t t = s; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
  };

  const auto xs = subsets(nx);
  const auto ys = subsets(ny);
  std::uint64_t matches = 0;
  for (const auto& I : xs) {
    for (const auto& J : ys) {
      bool equal = true;
      for (std::size_t s = 0; s < k && equal; ++s) equal = x[I[s]] == y[J[s]];
      matches += equal;
    }
  }
  return BigCount(matches);
}

LevelTables level_tables(const Sequence& x, const Sequence& y, std::size_t level) {
  if (level == 0) throw InputError("level must be at least 1");
  check_pair(x, y);
  const std::size_t nx = x.length();
  const std::size_t ny = y.length();

  Matrix<BigCount> prev_prefix(nx + 1, ny + 1);
  for (std::size_t i = 0; i <= nx; ++i) {
    for (std::size_t j = 0; j <= ny; ++j) prev_prefix(i, j) = BigCount(1);  // P_0
  }
  LevelTables t;
  for (std::size_t l = 1; l <= level; ++l) {
    t = LevelTables{l, Matrix<BigCount>(nx + 1, ny + 1), Matrix<BigCount>(nx + 1, ny + 1)};
    for (std::size_t i = 1; i <= nx; ++i) {
      for (std::size_t j = 1; j <= ny; ++j) {
        if (x[i - 1] == y[j - 1]) t.ending_counts(i, j) = prev_prefix(i - 1, j - 1);
        const mpz_class p = t.prefix_counts(i - 1, j).value() + t.prefix_counts(i, j - 1).value() -
                            t.prefix_counts(i - 1, j - 1).value() + t.ending_counts(i, j).value();
        t.prefix_counts(i, j) = BigCount(p);
      }
    }
    prev_prefix = t.prefix_counts;
  }
  return t;
}

}  // namespace subseq
