#include "egqldpc/code_builder.hpp"

#include <cstdlib>
#include <string>

#include "egqldpc/error.hpp"
#include "egqldpc/geometry.hpp"

namespace egqldpc {
namespace {

// Dense matrices beyond this many bits (512 MiB) are refused.
constexpr std::uint64_t kMaxMatrixBits = std::uint64_t{1} << 32;

std::int64_t ipow(std::int64_t base, std::uint32_t exp) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string describe(Family f, std::uint32_t m, std::uint32_t q) {
  return std::string(to_string(f)) + "(m=" + std::to_string(m) + ", q=" + std::to_string(q) + ")";
}

struct Selection {
  OrthRecipe recipe;
  PaperParams params;
};

Selection select(Family family, std::uint32_t m, std::uint32_t q) {
  using enum Block;
  const bool q_odd = q % 2 == 1;
  const bool m_odd = m % 2 == 1;
  const std::int64_t Q = q;
  const std::int64_t qm = ipow(Q, m);
  const std::int64_t qm1 = ipow(Q, m - 1);
  switch (family) {
    case Family::PuncturedEG: {
      const std::int64_t b = b_coefficient(m - 1, q);
      if (q_odd && m == 2) {
        return {{"q-odd-m2", {Core, OnesColumn, Identity, Identity}},
                {3 * Q * Q - 2, Q * Q, 2, DistanceClaim::Exact}};
      }
      if (q_odd && !m_odd) {
        return {{"q-odd-m-even", {Core, OnesColumn}},
                {(qm - 1) * b + 1, (qm - 1) * (b - 2) + 1, Q + 1, DistanceClaim::Lower}};
      }
      return {{"q-even-or-qm-odd", {Core, OnesColumn, Identity}},
              {(qm - 1) * (b + 1) + 1, (qm - 1) * (b - 1) + 1, Q + 1, DistanceClaim::Lower}};
    }
    case Family::FullEG: {
      const std::int64_t b = b_coefficient(m, q);
      if (!q_odd && m == 2) {
        return {{"q-even-m2", {Core, OnesColumn, Identity, Identity}},
                {3 * Q * Q + Q + 1, Q * Q + Q + 1, 2, DistanceClaim::Exact}};
      }
      if (q_odd && !m_odd) {
        return {{"q-odd-m-even", {Core, OnesColumn, Identity}},
                {qm1 * b + qm + 1, qm1 * b - qm + 1, Q + 1, DistanceClaim::Lower}};
      }
      return {{"q-even-m-ge3-or-qm-odd", {Core, OnesColumn}},
              {qm1 * b + 1, qm1 * b - 2 * qm + 1, Q + 1, DistanceClaim::Lower}};
    }
    case Family::ParallelClassCode: {
      if (q == 2) {
        return {{"q-2", {Core, Identity, Identity}}, {ipow(2, m + 1), ipow(2, m), 2, DistanceClaim::Exact}};
      }
      if (q_odd) {
        return {{"q-odd", {Core, Identity}}, {qm + qm1, qm - qm1, 2, DistanceClaim::Exact}};
      }
      return {{"q-even-ge4", {Core}}, {qm, qm - 2 * qm1, 2, DistanceClaim::Exact}};
    }
  }
  throw Error(ErrorCode::InvalidGeometry, "unknown family");
}

Selection checked_select(Family family, std::uint32_t m, std::uint32_t q) {
  validate(CodeSpec{family, m, q, family == Family::ParallelClassCode ? std::optional<std::uint32_t>(0) : std::nullopt});
  Selection s = select(family, m, q);
  if (s.params.k <= 0) {
    throw Error(ErrorCode::NonpositiveDimension,
                describe(family, m, q) + " has claimed dimension " + std::to_string(s.params.k));
  }
  return s;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::PuncturedEG: return "PuncturedEG";
    case Family::FullEG: return "FullEG";
    case Family::ParallelClassCode: return "ParallelClassCode";
  }
  return "Unknown";
}

Family parse_family(std::string_view name) {
  if (name == "h1" || name == "PuncturedEG") return Family::PuncturedEG;
  if (name == "h2" || name == "FullEG") return Family::FullEG;
  if (name == "parallel" || name == "ParallelClassCode") return Family::ParallelClassCode;
  throw Error(ErrorCode::InvalidGeometry, "unknown family '" + std::string(name) + "'");
}

bool OrthRecipe::has_identity() const {
  for (const auto b : blocks) {
    if (b == Block::Identity) return true;
  }
  return false;
}

std::string OrthRecipe::to_string() const {
  std::string out;
  for (const auto b : blocks) {
    if (!out.empty()) out += '|';
    out += b == Block::Core ? "C" : b == Block::OnesColumn ? "1" : "I";
  }
  return out;
}

std::uint64_t size_cap() {
  if (const char* env = std::getenv("EGQLDPC_SIZE_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
  }
  return kDefaultSizeCap;
}

std::int64_t b_coefficient(std::uint32_t t, std::uint32_t q) {
  std::int64_t sum = 0, term = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

void validate(const CodeSpec& spec) {
  if (spec.m < 2) throw Error(ErrorCode::InvalidGeometry, "dimension m must be >= 2");
  (void)make_field_of_order(spec.q);
  if (spec.family != Family::ParallelClassCode) {
    if (spec.class_index) throw Error(ErrorCode::InvalidClassIndex, "class index only applies to ParallelClassCode");
    return;
  }
  if (!spec.class_index) throw Error(ErrorCode::InvalidClassIndex, "ParallelClassCode needs a class index");
  const auto classes = b_coefficient(spec.m, spec.q);
  if (*spec.class_index >= classes) {
    throw Error(ErrorCode::InvalidClassIndex, "class " + std::to_string(*spec.class_index) + " out of range [0, " +
                                                  std::to_string(classes) + ")");
  }
}

BinMatrix build_core(const CodeSpec& spec, std::uint64_t cap) {
  validate(spec);
  const std::uint64_t points = static_cast<std::uint64_t>(ipow(spec.q, spec.m));
  if (points > cap) {
    throw Error(ErrorCode::UnsupportedGeometry, describe(spec.family, spec.m, spec.q) + " has " +
                                                    std::to_string(points) + " points, above the cap of " +
                                                    std::to_string(cap));
  }
  const Geometry geom(spec.m, make_field_of_order(spec.q));
  const auto expected = expected_stats(spec.m, spec.q);
  const std::uint64_t bits = points * expected.n_lines;
  if (bits > kMaxMatrixBits) {
    throw Error(ErrorCode::UnsupportedGeometry, describe(spec.family, spec.m, spec.q) + " incidence matrix too large");
  }

  switch (spec.family) {
    case Family::PuncturedEG: {
      const std::uint64_t cols = (ipow(spec.q, spec.m - 1) - 1) * expected.n_classes;
      BinMatrix core(points - 1, cols);
      std::size_t col = 0;
      geom.for_each_line([&](const Line& l) {
        if (l.base == 0) return;  // passes through the origin
        for (const auto p : l.points) core.set(p - 1, col);
        ++col;
      });
      return core;
    }
    case Family::FullEG: {
      BinMatrix core(points, expected.n_lines);
      std::size_t col = 0;
      geom.for_each_line([&](const Line& l) {
        for (const auto p : l.points) core.set(p, col);
        ++col;
      });
      return core;
    }
    case Family::ParallelClassCode: {
      BinMatrix core(points / spec.q, points);
      std::size_t row = 0;
      geom.for_each_line_in_class(*spec.class_index, [&](const Line& l) {
        for (const auto p : l.points) core.set(row, p);
        ++row;
      });
      return core;
    }
  }
  throw Error(ErrorCode::InvalidGeometry, "unknown family");
}

OrthRecipe select_recipe(Family family, std::uint32_t m, std::uint32_t q) {
  return checked_select(family, m, q).recipe;
}

PaperParams paper_params(Family family, std::uint32_t m, std::uint32_t q) {
  return checked_select(family, m, q).params;
}

CssCode build_code(const CodeSpec& spec, std::uint64_t cap) {
  OrthRecipe recipe = select_recipe(spec.family, spec.m, spec.q);
  BinMatrix core = build_core(spec, cap);
  std::vector<BinMatrix> blocks;
  for (const auto b : recipe.blocks) {
    switch (b) {
      case Block::Core: blocks.push_back(core); break;
      case Block::OnesColumn: blocks.push_back(BinMatrix::ones(core.rows(), 1)); break;
      case Block::Identity: blocks.push_back(BinMatrix::identity(core.rows())); break;
    }
  }
  BinMatrix h_orth = compose_blocks(blocks);
  return CssCode{spec, std::move(core), std::move(recipe), std::move(h_orth)};
}

BinMatrix assemble_stabilizer(const CssCode& code) {
  const std::size_t r = code.gen_rows();
  const std::size_t n = code.n();
  BinMatrix s(2 * r, 2 * n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!code.h_orth.get(i, c)) continue;
      s.set(i, c);
      s.set(r + i, n + c);
    }
  }
  return s;
}

}  // namespace egqldpc
