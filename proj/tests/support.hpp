#pragma once

// Conversions and generators shared by the test binaries.

#include <random>
#include <vector>

#include "egqldpc/code_builder.hpp"
#include "egqldpc/gf2.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::IntMatrix to_ints(const egqldpc::BinMatrix& m) {
  oracle::IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  }
  return out;
}

inline egqldpc::BinMatrix from_ints(const oracle::IntMatrix& a) {
  egqldpc::BinMatrix m(a.size(), a.front().size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a[r].size(); ++c) m.set(r, c, a[r][c] != 0);
  }
  return m;
}

inline egqldpc::BinMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                        double density = 0.5) {
  std::bernoulli_distribution bit(density);
  egqldpc::BinMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  }
  return m;
}

inline egqldpc::BinMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, double density = 0.5) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  const auto rows = dim(rng);
  return random_matrix(rng, rows, dim(rng), density);
}

// Every code (every parallel class included) over a set of small geometries
// whose length is at most max_cols.
inline std::vector<egqldpc::CssCode> small_codes(std::size_t max_cols) {
  using egqldpc::Family;
  std::vector<egqldpc::CssCode> out;
  const std::pair<std::uint32_t, std::uint32_t> geometries[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2},
                                                                {3, 3}, {4, 2}, {2, 7}, {2, 8}, {2, 9}};
  for (const auto& [m, q] : geometries) {
    std::vector<egqldpc::CodeSpec> specs{{Family::PuncturedEG, m, q, std::nullopt},
                                         {Family::FullEG, m, q, std::nullopt}};
    for (std::int64_t i = 0; i < egqldpc::b_coefficient(m, q); ++i) {
      specs.push_back({Family::ParallelClassCode, m, q, static_cast<std::uint32_t>(i)});
    }
    for (const auto& spec : specs) {
      auto code = egqldpc::build_code(spec);
      if (code.n() <= max_cols) out.push_back(std::move(code));
    }
  }
  return out;
}

}  // namespace support
