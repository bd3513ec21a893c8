#include "egqldpc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "egqldpc/error.hpp"

namespace egqldpc {
namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

std::uint64_t pair_count(std::size_t rows) {
  return rows < 2 ? 0 : std::uint64_t{rows} * (rows - 1) / 2;
}

void check_pair_budget(const BinMatrix& a, std::uint64_t budget) {
  if (pair_count(a.rows()) > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(pair_count(a.rows())) + " row pairs exceed budget " + std::to_string(budget));
  }
}

// Row reduction in place. Columns are scanned left to right; the pivot for a
// column is the first remaining row with that bit set. With full = true rows
// above the pivot are cleared as well (reduced row echelon form).
std::vector<std::size_t> eliminate(BinMatrix& a, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
    std::size_t pivot = next;
    while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != next) {
      auto x = a.row(pivot);
      auto y = a.row(next);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const auto src = a.row(next);
    for (std::size_t r = full ? 0 : next + 1; r < a.rows(); ++r) {
      if (r != next && a.get(r, c)) xor_into(a.row(r), src);
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (const auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t x) { return x == 0; });
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t x = words_[w]; x != 0; x &= x - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  xor_into(words_, other.words_);
  return *this;
}

bool support_less(const BitVector& a, const BitVector& b) {
  const auto x = a.words();
  const auto y = b.words();
  for (std::size_t w = 0; w < std::min(x.size(), y.size()); ++w) {
    const std::uint64_t diff = x[w] ^ y[w];
    if (diff != 0) return (x[w] >> std::countr_zero(diff)) & 1U;
  }
  return false;
}

BinMatrix::BinMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(word_count(cols)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::InvalidDimension,
                "matrix must have at least one row and one column, got " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
  words_.assign(rows_ * stride_, 0);
}

BinMatrix BinMatrix::identity(std::size_t n) {
  BinMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinMatrix BinMatrix::ones(std::size_t rows, std::size_t cols) {
  BinMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c);
  }
  return m;
}

BinMatrix BinMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

BinMatrix BinMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) throw Error(ErrorCode::InvalidDimension, "entries must be 0 or 1");
      m.set(r, c, rows[r][c] == 1);
    }
  }
  return m;
}

void BinMatrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  auto& word = words_[r * stride_ + (c >> 6)];
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

BitVector BinMatrix::row_vector(std::size_t r) const {
  BitVector v(cols_);
  std::copy_n(row(r).begin(), stride_, v.words().begin());
  return v;
}

std::size_t BinMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (const auto x : row(r)) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

std::vector<std::size_t> BinMatrix::row_weights() const {
  std::vector<std::size_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = row_weight(r);
  return out;
}

std::vector<std::size_t> BinMatrix::col_weights() const {
  std::vector<std::size_t> out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto words = row(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      for (std::uint64_t x = words[w]; x != 0; x &= x - 1) {
        ++out[w * 64 + static_cast<std::size_t>(std::countr_zero(x))];
      }
    }
  }
  return out;
}

std::size_t BinMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto x : words_) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

BinMatrix compose_blocks(std::span<const BinMatrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::InvalidDimension, "no blocks to compose");
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) {
      throw Error(ErrorCode::RowCountMismatch,
                  "block has " + std::to_string(b.rows()) + " rows, expected " + std::to_string(rows));
    }
    cols += b.cols();
  }
  BinMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r) {
      const auto words = b.row(r);
      for (std::size_t w = 0; w < words.size(); ++w) {
        for (std::uint64_t x = words[w]; x != 0; x &= x - 1) {
          out.set(r, offset + w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        }
      }
    }
    offset += b.cols();
  }
  return out;
}

BinMatrix transpose(const BinMatrix& a) {
  BinMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto words = a.row(r);
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (std::uint64_t x = words[w]; x != 0; x &= x - 1) {
        t.set(w * 64 + static_cast<std::size_t>(std::countr_zero(x)), r);
      }
    }
  }
  return t;
}

BinMatrix multiply(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                  "x" + std::to_string(b.cols()));
  }
  BinMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row(r);
    const auto words = a.row(r);
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (std::uint64_t x = words[w]; x != 0; x &= x - 1) {
        xor_into(dst, b.row(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
      }
    }
  }
  return out;
}

BitVector multiply(const BinMatrix& a, const BitVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from column count");
  BitVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto x = a.row(r);
    const auto y = v.words();
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < x.size(); ++w) acc ^= x[w] & y[w];
    out.set(r, std::popcount(acc) & 1);
  }
  return out;
}

std::size_t rank(const BinMatrix& a) {
  BinMatrix work = a;
  return eliminate(work, false).size();
}

std::vector<BitVector> nullspace_basis(const BinMatrix& a) {
  BinMatrix work = a;
  const auto pivots = eliminate(work, true);
  std::vector<char> is_pivot(a.cols(), 0);
  for (const auto c : pivots) is_pivot[c] = 1;

  std::vector<BitVector> basis;
  basis.reserve(a.cols() - pivots.size());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(a.cols());
    v.set(free);
    // Row i of the reduced form reads x_{pivot_i} + sum_{free f} r_{i,f} x_f = 0.
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (work.get(i, free)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t overlap(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t n = 0;
  for (std::size_t w = 0; w < a.size(); ++w) n += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return n;
}

std::map<std::size_t, std::uint64_t> overlap_histogram(const BinMatrix& a, std::uint64_t pair_budget) {
  if (a.rows() < 2) throw Error(ErrorCode::InvalidDimension, "overlap histogram needs at least two rows");
  check_pair_budget(a, pair_budget);
  std::map<std::size_t, std::uint64_t> hist;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.rows(); ++j) ++hist[overlap(a.row(i), a.row(j))];
  }
  return hist;
}

SelfOrthReport self_orth_check(const BinMatrix& a, std::uint64_t pair_budget) {
  check_pair_budget(a, pair_budget);
  SelfOrthReport report;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.row_weight(i) % 2 != 0) report.odd_weight_rows.push_back(i);
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      if (overlap(a.row(i), a.row(j)) % 2 != 0) report.violating_pairs.emplace_back(i, j);
    }
  }
  report.ok = report.violation_count() == 0;
  return report;
}

RegularityMetrics regularity_metrics(const BinMatrix& a, std::uint64_t pair_budget) {
  check_pair_budget(a, pair_budget);
  RegularityMetrics m{a.row_weights(), a.col_weights(), true};
  for (std::size_t i = 0; i < a.rows() && m.four_cycle_free; ++i) {
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      if (overlap(a.row(i), a.row(j)) >= 2) {
        m.four_cycle_free = false;
        break;
      }
    }
  }
  return m;
}

}  // namespace egqldpc
