#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace egqldpc {

// Binary vector packed into 64-bit words; bit j lives in word j / 64.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const noexcept;
  bool none() const noexcept;
  std::vector<std::size_t> support() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  BitVector& operator^=(const BitVector& other);
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic order of support lists: of two vectors of equal weight the one
// whose first differing position is set compares smaller.
bool support_less(const BitVector& a, const BitVector& b);

// Dense binary matrix, row-major, one packed word run per row. At least one
// row and one column.
class BinMatrix {
 public:
  BinMatrix(std::size_t rows, std::size_t cols);

  static BinMatrix identity(std::size_t n);
  static BinMatrix ones(std::size_t rows, std::size_t cols);
  static BinMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static BinMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true);

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<std::uint64_t> row(std::size_t r) { return {words_.data() + r * stride_, stride_}; }
  BitVector row_vector(std::size_t r) const;

  std::size_t row_weight(std::size_t r) const;
  std::vector<std::size_t> row_weights() const;
  std::vector<std::size_t> col_weights() const;
  std::size_t nnz() const;

  friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

inline constexpr std::uint64_t kDefaultPairBudget = 10'000'000;

BinMatrix compose_blocks(std::span<const BinMatrix> blocks);
BinMatrix transpose(const BinMatrix& a);
BinMatrix multiply(const BinMatrix& a, const BinMatrix& b);
// a * v over GF(2); v.size() must equal a.cols().
BitVector multiply(const BinMatrix& a, const BitVector& v);

std::size_t rank(const BinMatrix& a);
// cols - rank independent vectors spanning {v : a v = 0}.
// One vector per non-pivot column f, with bit f set and no other non-pivot
// bit, so a sum of t basis vectors has weight at least t.
std::vector<BitVector> nullspace_basis(const BinMatrix& a);

std::size_t overlap(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

// overlap count -> number of unordered row pairs with that overlap. Throws
// BudgetExceeded when C(rows, 2) exceeds pair_budget.
std::map<std::size_t, std::uint64_t> overlap_histogram(const BinMatrix& a,
                                                       std::uint64_t pair_budget = kDefaultPairBudget);

struct SelfOrthReport {
  bool ok = true;
  std::vector<std::pair<std::size_t, std::size_t>> violating_pairs;  // i < j, odd overlap
  std::vector<std::size_t> odd_weight_rows;

  std::size_t violation_count() const { return violating_pairs.size() + odd_weight_rows.size(); }
};

// a * a^T == 0, decided row pair by row pair.
SelfOrthReport self_orth_check(const BinMatrix& a, std::uint64_t pair_budget = kDefaultPairBudget);

struct RegularityMetrics {
  std::vector<std::size_t> row_weights;
  std::vector<std::size_t> col_weights;
  bool four_cycle_free = true;
};

RegularityMetrics regularity_metrics(const BinMatrix& a, std::uint64_t pair_budget = kDefaultPairBudget);

}  // namespace egqldpc
