#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egqldpc/code_builder.hpp"
#include "egqldpc/gf2.hpp"

namespace egqldpc {

enum class DistanceKind { Exact, LowerBoundVerified, Inconclusive };
std::string_view to_string(DistanceKind k);

// Distance reported for a parity-check matrix whose kernel is {0}.
inline constexpr std::size_t kNoCodeword = std::numeric_limits<std::size_t>::max();

inline constexpr std::size_t kDefaultDimCap = 26;
inline constexpr std::uint64_t kDefaultWeightBudget = 100'000'000;

struct DistanceResult {
  DistanceKind kind = DistanceKind::Inconclusive;
  // Exact: minimum weight (or kNoCodeword). LowerBoundVerified: w such that no
  // nonzero codeword of weight <= w - 1 exists.
  std::size_t value = 0;
  std::uint64_t work = 0;  // vectors examined
  // Lexicographically smallest minimum-weight codeword, when kind is Exact.
  std::optional<BitVector> witness;
};

struct Dimension {
  std::size_t rank = 0;
  std::int64_t k = 0;
};

Dimension computed_dimension(const CssCode& code);

// Minimum weight over every nonzero kernel vector, enumerated as sums of t
// nullspace basis vectors for t = 1, 2, ... A sum of t basis vectors weighs at
// least t, so sizes above the best weight found are skipped. Throws
// CapExceeded when the kernel dimension is above dim_cap.
DistanceResult exact_distance(const BinMatrix& h, std::size_t dim_cap = kDefaultDimCap);

// Enumerates every vector of weight <= w in ascending weight, supports in
// lexicographic order. Inconclusive without any work when the number of
// candidates exceeds budget.
DistanceResult verify_distance_floor(const BinMatrix& h, std::size_t w,
                                     std::uint64_t budget = kDefaultWeightBudget);

struct RegularityReport {
  std::vector<std::size_t> column_weights;  // rho profile of the core
  std::vector<std::size_t> row_weights;     // lambda profile of the core
  std::optional<std::size_t> rho;           // set when every column weight agrees
  std::optional<std::size_t> lambda;        // set when every row weight agrees
  bool regular = false;
  bool four_cycle_free = false;
  std::map<std::size_t, std::uint64_t> core_overlaps;
  std::map<std::size_t, std::uint64_t> h_orth_overlaps;
  bool h_orth_overlaps_even = false;
};

RegularityReport regularity_report(const CssCode& code, std::uint64_t pair_budget = kDefaultPairBudget);

enum class Verdict { Confirmed, Refuted, Unverified };
std::string_view to_string(Verdict v);

struct VerdictEntry {
  Verdict verdict = Verdict::Unverified;
  std::string reason;
};

struct AnalysisOptions {
  std::size_t dim_cap = kDefaultDimCap;
  std::uint64_t weight_budget = kDefaultWeightBudget;
  std::uint64_t pair_budget = kDefaultPairBudget;
  std::uint64_t size_cap = egqldpc::size_cap();
};

struct ClaimReport {
  CodeSpec spec;
  std::string case_label;
  std::string recipe;
  PaperParams paper;
  std::size_t n = 0;
  std::size_t gen_rows = 0;
  std::size_t rank = 0;
  std::int64_t k_computed = 0;
  SelfOrthReport self_orth;
  DistanceResult distance;
  std::map<std::string, VerdictEntry> verdicts;  // length, self_orthogonality, dimension, distance

  bool any(Verdict v) const;
  bool all_confirmed() const;
};

ClaimReport claim_check(const CssCode& code, const AnalysisOptions& options = {});
ClaimReport claim_check(const CodeSpec& spec, const AnalysisOptions& options = {});

struct SweepConfig {
  std::vector<Family> families;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> geometries;  // (m, q)
  AnalysisOptions options;
};

struct SweepEntry {
  CodeSpec spec;
  std::optional<ClaimReport> report;
  std::string error_name;  // empty on success
  std::string error_detail;
};

// Whether every parallel-class code of one EG(m,q) has the same parameters.
struct ClassConsistency {
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  bool consistent = false;
};

struct SweepResult {
  std::vector<SweepEntry> entries;
  std::vector<ClassConsistency> class_consistency;
};

// One entry per combination (per class index for ParallelClassCode), in
// family-major, then geometry order. Failures are recorded, never thrown.
SweepResult sweep(const SweepConfig& config);

}  // namespace egqldpc
