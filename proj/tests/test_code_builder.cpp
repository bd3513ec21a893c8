#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "egqldpc/code_builder.hpp"
#include "egqldpc/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace egqldpc;
using support::to_ints;

namespace {

struct Geo {
  std::uint32_t m, q;
};

std::vector<Geo> buildable(std::uint64_t max_points) {
  std::vector<Geo> out;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u, 23u, 25u, 27u, 29u, 31u, 32u}) {
    std::uint64_t n = std::uint64_t{q} * q;
    for (std::uint32_t m = 2; n <= max_points; ++m, n *= q) out.push_back({m, q});
  }
  return out;
}

std::vector<CodeSpec> all_specs(const Geo& g) {
  std::vector<CodeSpec> out{{Family::PuncturedEG, g.m, g.q, std::nullopt}, {Family::FullEG, g.m, g.q, std::nullopt}};
  const auto classes = b_coefficient(g.m, g.q);
  // First, middle and last class are representative; all classes are
  // checked in the analysis tests for small geometries.
  for (auto i : {std::int64_t{0}, classes / 2, classes - 1}) {
    out.push_back({Family::ParallelClassCode, g.m, g.q, static_cast<std::uint32_t>(i)});
  }
  return out;
}

bool all_even(const std::vector<std::size_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x % 2 == 0; });
}

bool all_equal(const std::vector<std::size_t>& v, std::size_t x) {
  return std::all_of(v.begin(), v.end(), [x](std::size_t y) { return y == x; });
}

}  // namespace

TEST_CASE("b_coefficient") {
  CHECK(b_coefficient(1, 7) == 1);
  CHECK(b_coefficient(2, 3) == 4);
  CHECK(b_coefficient(3, 2) == 7);
  CHECK(b_coefficient(0, 5) == 0);
}

TEST_CASE("FullEG core for EG(2,2) is the printed point-line matrix up to line order") {
  const auto core = build_core({Family::FullEG, 2, 2, std::nullopt});
  REQUIRE(core.rows() == 4);
  REQUIRE(core.cols() == 6);
  // Canonical line order l1, l4, l2, l5, l3, l6 against the printed l1..l6.
  const std::size_t printed_col[] = {0, 3, 1, 4, 2, 5};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      CHECK(core.get(r, c) == (oracle::printed::kFullEg22Transposed[r][printed_col[c]] == 1));
    }
  }
}

TEST_CASE("PuncturedEG cores match the printed incidence matrices") {
  const auto core22 = build_core({Family::PuncturedEG, 2, 2, std::nullopt});
  CHECK(to_ints(core22) == oracle::transpose(oracle::printed::kPuncturedEg22));

  const auto core23 = build_core({Family::PuncturedEG, 2, 3, std::nullopt});
  CHECK(core23.rows() == 8);
  CHECK(core23.cols() == 8);
  CHECK(oracle::permutation_equivalent(to_ints(core23), oracle::transpose(oracle::printed::kPuncturedEg23)));
}

TEST_CASE("ParallelClassCode cores for EG(2,2) are the printed class matrices") {
  for (std::uint32_t i = 0; i < 3; ++i) {
    const auto core = build_core({Family::ParallelClassCode, 2, 2, i});
    CHECK(to_ints(core) == oracle::printed::kParallelEg22[i]);
  }
}

TEST_CASE("select_recipe case table") {
  using enum Block;
  using B = std::vector<Block>;
  CHECK(select_recipe(Family::PuncturedEG, 2, 2).blocks == B{Core, OnesColumn, Identity});
  CHECK(select_recipe(Family::PuncturedEG, 2, 3).blocks == B{Core, OnesColumn, Identity, Identity});
  CHECK(select_recipe(Family::PuncturedEG, 4, 3).blocks == B{Core, OnesColumn});
  CHECK(select_recipe(Family::PuncturedEG, 3, 3).blocks == B{Core, OnesColumn, Identity});
  CHECK(select_recipe(Family::PuncturedEG, 4, 2).blocks == B{Core, OnesColumn, Identity});

  CHECK(select_recipe(Family::FullEG, 2, 2).blocks == B{Core, OnesColumn, Identity, Identity});
  CHECK(select_recipe(Family::FullEG, 2, 4).blocks == B{Core, OnesColumn, Identity, Identity});
  CHECK(select_recipe(Family::FullEG, 3, 2).blocks == B{Core, OnesColumn});
  CHECK(select_recipe(Family::FullEG, 3, 3).blocks == B{Core, OnesColumn});
  CHECK(select_recipe(Family::FullEG, 2, 3).blocks == B{Core, OnesColumn, Identity});
  CHECK(select_recipe(Family::FullEG, 4, 5).blocks == B{Core, OnesColumn, Identity});

  for (std::uint32_t m : {2u, 3u, 4u}) CHECK(select_recipe(Family::ParallelClassCode, m, 2).blocks == B{Core, Identity, Identity});
  CHECK(select_recipe(Family::ParallelClassCode, 2, 3).blocks == B{Core, Identity});
  CHECK(select_recipe(Family::ParallelClassCode, 2, 4).blocks == B{Core});
  CHECK(select_recipe(Family::ParallelClassCode, 3, 8).blocks == B{Core});

  CHECK(select_recipe(Family::PuncturedEG, 2, 3).to_string() == "C|1|I|I");
}

TEST_CASE("build_code examples") {
  const auto steane = build_code({Family::PuncturedEG, 2, 2, std::nullopt});
  CHECK(steane.gen_rows() == 3);
  CHECK(steane.n() == 7);
  CHECK(to_ints(steane.h_orth) == oracle::append_blocks(oracle::transpose(oracle::printed::kPuncturedEg22), true, 1));

  const auto full = build_code({Family::FullEG, 2, 2, std::nullopt});
  CHECK(full.gen_rows() == 4);
  CHECK(full.n() == 15);

  for (std::uint32_t i = 0; i < 3; ++i) {
    const auto pc = build_code({Family::ParallelClassCode, 2, 2, i});
    CHECK(pc.gen_rows() == 2);
    CHECK(pc.n() == 8);
    CHECK(to_ints(pc.h_orth) == oracle::append_blocks(oracle::printed::kParallelEg22[i], false, 2));
  }
}

TEST_CASE("assemble_stabilizer is block diagonal") {
  const auto steane = build_code({Family::PuncturedEG, 2, 2, std::nullopt});
  const auto s = assemble_stabilizer(steane);
  CHECK(s.rows() == 6);
  CHECK(s.cols() == 14);
  const auto pc = build_code({Family::ParallelClassCode, 2, 2, 1});
  CHECK(assemble_stabilizer(pc).rows() == 4);
  CHECK(assemble_stabilizer(pc).cols() == 16);

  for (const auto& code : {steane, pc, build_code({Family::FullEG, 3, 3, std::nullopt})}) {
    const auto st = assemble_stabilizer(code);
    const std::size_t r = code.gen_rows(), n = code.n();
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < n; ++c) {
        CHECK(st.get(i, c) == code.h_orth.get(i, c));
        CHECK(st.get(r + i, n + c) == code.h_orth.get(i, c));
        CHECK_FALSE(st.get(i, n + c));
        CHECK_FALSE(st.get(r + i, c));
      }
    }
  }
}

TEST_CASE("paper_params examples") {
  CHECK(paper_params(Family::PuncturedEG, 2, 2) == PaperParams{7, 1, 3, DistanceClaim::Lower});
  CHECK(paper_params(Family::PuncturedEG, 2, 3) == PaperParams{25, 9, 2, DistanceClaim::Exact});
  CHECK(paper_params(Family::FullEG, 2, 2) == PaperParams{15, 7, 2, DistanceClaim::Exact});
  CHECK(paper_params(Family::FullEG, 3, 2) == PaperParams{29, 13, 3, DistanceClaim::Lower});
  CHECK(paper_params(Family::ParallelClassCode, 2, 2) == PaperParams{8, 4, 2, DistanceClaim::Exact});
  CHECK(paper_params(Family::ParallelClassCode, 2, 3) == PaperParams{12, 6, 2, DistanceClaim::Exact});
  CHECK(paper_params(Family::ParallelClassCode, 2, 4) == PaperParams{16, 8, 2, DistanceClaim::Exact});
}

TEST_CASE("claimed length equals built length for every q^m <= 1024") {
  for (const auto& g : buildable(1024)) {
    for (const auto& spec : all_specs(g)) {
      CAPTURE(to_string(spec.family));
      CAPTURE(g.m);
      CAPTURE(g.q);
      const auto code = build_code(spec);
      CHECK(static_cast<std::int64_t>(code.n()) == paper_params(spec.family, g.m, g.q).n);
      CHECK(all_even(code.h_orth.row_weights()));
    }
  }
}

TEST_CASE("core weight profiles") {
  for (const auto& g : buildable(1024)) {
    CAPTURE(g.m);
    CAPTURE(g.q);
    const auto q = static_cast<std::size_t>(g.q);
    const auto bm = static_cast<std::size_t>(b_coefficient(g.m, g.q));
    const auto bm1 = static_cast<std::size_t>(b_coefficient(g.m - 1, g.q));

    const auto punctured = build_core({Family::PuncturedEG, g.m, g.q, std::nullopt});
    CHECK(punctured.rows() == bm * (q - 1));
    std::size_t qm1 = 1;
    for (std::uint32_t i = 0; i + 1 < g.m; ++i) qm1 *= q;
    CHECK(punctured.cols() == (qm1 - 1) * bm);
    CHECK(all_equal(punctured.col_weights(), q));
    CHECK(all_equal(punctured.row_weights(), q * bm1));

    const auto full = build_core({Family::FullEG, g.m, g.q, std::nullopt});
    CHECK(all_equal(full.row_weights(), bm));
    CHECK(all_equal(full.col_weights(), q));

    const auto pc = build_core({Family::ParallelClassCode, g.m, g.q, 0});
    CHECK(all_equal(pc.row_weights(), q));
    CHECK(all_equal(pc.col_weights(), 1));
    if (pc.rows() >= 2) {
      const auto hist = overlap_histogram(pc);
      CHECK(hist.size() == 1);
      CHECK(hist.begin()->first == 0);
    }
  }
}

TEST_CASE("identity blocks give full row rank") {
  for (const auto& g : buildable(256)) {
    for (const auto& spec : all_specs(g)) {
      const auto code = build_code(spec);
      if (code.recipe.has_identity()) CHECK(rank(code.h_orth) == code.gen_rows());
    }
  }
}

TEST_CASE("builder errors") {
  auto code_of = [](auto&& fn) -> ErrorCode {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidGeometry;
  };
  CHECK(code_of([] { build_code({Family::ParallelClassCode, 2, 2, 3}); }) == ErrorCode::InvalidClassIndex);
  CHECK(code_of([] { build_code({Family::ParallelClassCode, 2, 2, std::nullopt}); }) == ErrorCode::InvalidClassIndex);
  CHECK(code_of([] { build_code({Family::FullEG, 2, 2, 0}); }) == ErrorCode::InvalidClassIndex);
  CHECK(code_of([] { build_code({Family::FullEG, 2, 6, std::nullopt}); }) == ErrorCode::NotPrimePower);
  CHECK(code_of([] { build_code({Family::FullEG, 1, 2, std::nullopt}); }) == ErrorCode::InvalidGeometry);
  CHECK(code_of([] { build_core({Family::FullEG, 5, 2, std::nullopt}, 16); }) == ErrorCode::UnsupportedGeometry);
  CHECK(code_of([] { build_core({Family::FullEG, 2, 128, std::nullopt}); }) == ErrorCode::UnsupportedGeometry);
}

TEST_CASE("family names") {
  CHECK(parse_family("h1") == Family::PuncturedEG);
  CHECK(parse_family("h2") == Family::FullEG);
  CHECK(parse_family("parallel") == Family::ParallelClassCode);
  CHECK_THROWS_AS(parse_family("h3"), Error);
}
