#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egqldpc/gf2.hpp"

namespace egqldpc {

enum class Family {
  PuncturedEG,        // nonzero points x lines avoiding the origin
  FullEG,             // all points x all lines
  ParallelClassCode,  // lines of one parallel class x all points
};

std::string_view to_string(Family f);
// Accepts the CLI names h1 / h2 / parallel as well as the enum spellings.
Family parse_family(std::string_view name);

struct CodeSpec {
  Family family = Family::PuncturedEG;
  std::uint32_t m = 2;
  std::uint32_t q = 2;
  std::optional<std::uint32_t> class_index;  // ParallelClassCode only

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

enum class Block { Core, OnesColumn, Identity };

struct OrthRecipe {
  std::string case_label;
  std::vector<Block> blocks;

  bool has_identity() const;
  // "C|1|I|I" style rendering.
  std::string to_string() const;
  friend bool operator==(const OrthRecipe&, const OrthRecipe&) = default;
};

enum class DistanceClaim { Exact, Lower };

struct PaperParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d_bound = 0;
  DistanceClaim d_kind = DistanceClaim::Lower;

  friend bool operator==(const PaperParams&, const PaperParams&) = default;
};

struct CssCode {
  CodeSpec spec;
  BinMatrix core;  // rows index stabilizer generators
  OrthRecipe recipe;
  BinMatrix h_orth;

  std::size_t n() const { return h_orth.cols(); }
  std::size_t gen_rows() const { return h_orth.rows(); }
};

// q^m cap applied by build_core. Reads EGQLDPC_SIZE_CAP, default 4096.
std::uint64_t size_cap();
inline constexpr std::uint64_t kDefaultSizeCap = 4096;

// 1 + q + ... + q^(t-1).
std::int64_t b_coefficient(std::uint32_t t, std::uint32_t q);

// Throws InvalidGeometry for m < 2, NotPrimePower for q, InvalidClassIndex for a
// missing, superfluous or out-of-range class index.
void validate(const CodeSpec& spec);

BinMatrix build_core(const CodeSpec& spec, std::uint64_t cap = size_cap());
OrthRecipe select_recipe(Family family, std::uint32_t m, std::uint32_t q);
CssCode build_code(const CodeSpec& spec, std::uint64_t cap = size_cap());
// diag(h_orth, h_orth): X-type generators first, then Z-type.
BinMatrix assemble_stabilizer(const CssCode& code);
PaperParams paper_params(Family family, std::uint32_t m, std::uint32_t q);

}  // namespace egqldpc
