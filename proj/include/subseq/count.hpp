#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subseq/bignum.hpp"
#include "subseq/kernels.hpp"
#include "subseq/sequence.hpp"

/// Exact counts of common-subsequence embedding pairs of two words.
///
/// An embedding pair of length k is a pair of strictly increasing index
/// tuples (i_1 < ... < i_k) into x and (j_1 < ... < j_k) into y with
/// x[i_s] == y[j_s] for every s. count_k returns how many there are; the
/// total over k >= 1 is T_n.
///
/// The leveled engine keeps, for every level l, the prefix count
/// P_l(i, j) = number of l-long embedding pairs inside x[1..i], y[1..j]:
///
///   E_l(i, j) = [x_i == y_j] * P_{l-1}(i-1, j-1),   P_0 = 1
///   P_l(i, j) = P_l(i-1, j) + P_l(i, j-1) - P_l(i-1, j-1) + E_l(i, j)
///
/// Row i of level l only reads row i-1 of levels l and l-1, so all levels
/// advance together one row at a time. The arithmetic runs on residues
/// modulo enough ~62-bit primes to cover C(n_x, l) * C(n_y, l), which bounds
/// every table entry, and the result is rebuilt by CRT. Work per level is
/// n_x * n_y cells per residue channel.
namespace subseq {

/// Default number of index-tuple pairs the enumeration oracle may visit.
inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

/// Dense row-major matrix, used to expose DP tables.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Full (n_x+1) x (n_y+1) tables of one level of the DP.
struct LevelTables {
  std::size_t level = 0;
  /// l-long embedding pairs whose last matched pair is exactly (i, j).
  Matrix<BigCount> ending_counts;
  /// l-long embedding pairs inside the prefixes x[1..i], y[1..j].
  Matrix<BigCount> prefix_counts;
};

/// Number of k-long embedding pairs. Zero when k > min(|x|, |y|).
/// Throws InputError for k == 0 or mismatched alphabets.
BigCount count_k(const Sequence& x, const Sequence& y, std::size_t k);
BigCount count_k(const Sequence& x, const Sequence& y, std::size_t k, kernels::Backend backend);

/// Entry l-1 holds count_k(x, y, l) for l = 1..min(|x|, |y|).
std::vector<BigCount> count_by_level(const Sequence& x, const Sequence& y);
std::vector<BigCount> count_by_level(const Sequence& x, const Sequence& y, kernels::Backend backend);

/// Levels 1..min(max_level, |x|, |y|) from one leveled sweep.
std::vector<BigCount> count_up_to_level(const Sequence& x, const Sequence& y, std::size_t max_level,
                                        kernels::Backend backend);

/// Total number of nonempty embedding pairs, summed over the level profile.
BigCount count_all(const Sequence& x, const Sequence& y);

/// Total number of nonempty embedding pairs from the single-table recurrence
/// A(i,j) = A(i-1,j) + A(i,j-1) - A(i-1,j-1) + [x_i == y_j] A(i-1,j-1),
/// A(0,.) = A(.,0) = 1, minus one for the empty pair. Independent of the
/// leveled engine: plain big-integer arithmetic, two rows of storage.
BigCount count_all_direct(const Sequence& x, const Sequence& y);

/// Enumerates every pair of k-subsets. Throws BudgetError when
/// C(|x|,k) * C(|y|,k) exceeds `budget`.
BigCount count_k_bruteforce(const Sequence& x, const Sequence& y, std::size_t k,
                            std::uint64_t budget = kDefaultTupleBudget);

/// Big-integer tables of level `level` (>= 1), built level by level with
/// full matrices. Meant for inspection and small inputs.
LevelTables level_tables(const Sequence& x, const Sequence& y, std::size_t level);

}  // namespace subseq
