#include "egqldpc/code_analysis.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "egqldpc/error.hpp"

namespace egqldpc {
namespace {

// C(n, k) saturating at `limit + 1`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    std::uint64_t product = 0;
    if (__builtin_mul_overflow(r, n - k + i, &product)) return limit + 1;
    r = product / i;
    if (r > limit) return limit + 1;
  }
  return r;
}

bool better(const BitVector& candidate, std::size_t weight, const std::optional<BitVector>& best,
            std::size_t best_weight) {
  if (!best) return true;
  if (weight != best_weight) return weight < best_weight;
  return support_less(candidate, *best);
}

class FloorSearch {
 public:
  FloorSearch(const BinMatrix& h, std::size_t weight) : columns_(transpose(h)), weight_(weight) {
    partial_.assign(weight + 1, BitVector(h.rows()));
    chosen_.resize(weight);
  }

  // True when a kernel vector of exactly weight_ exists; chosen_ then holds the
  // lexicographically first support.
  bool run() { return descend(0, 0); }

  std::uint64_t work() const { return work_; }
  const std::vector<std::size_t>& support() const { return chosen_; }

 private:
  bool descend(std::size_t depth, std::size_t start) {
    if (depth == weight_) {
      ++work_;
      return partial_[depth].none();
    }
    const std::size_t n = columns_.rows();
    for (std::size_t c = start; c + (weight_ - depth) <= n; ++c) {
      auto& next = partial_[depth + 1];
      const auto prev = partial_[depth].words();
      const auto col = columns_.row(c);
      auto dst = next.words();
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = prev[w] ^ col[w];
      chosen_[depth] = c;
      if (descend(depth + 1, c + 1)) return true;
    }
    return false;
  }

  BinMatrix columns_;  // row c is column c of h
  std::size_t weight_;
  std::vector<BitVector> partial_;
  std::vector<std::size_t> chosen_;
  std::uint64_t work_ = 0;
};

// Visits every sum of exactly `size` distinct basis vectors.
class CombinationSearch {
 public:
  CombinationSearch(const std::vector<BitVector>& basis, std::size_t size, std::size_t len)
      : basis_(basis), size_(size), partial_(size + 1, BitVector(len)) {}

  template <class Visit>
  void run(Visit&& visit) {
    descend(0, 0, visit);
  }

  std::uint64_t work() const { return work_; }

 private:
  template <class Visit>
  void descend(std::size_t depth, std::size_t start, Visit& visit) {
    if (depth == size_) {
      ++work_;
      visit(partial_[depth]);
      return;
    }
    for (std::size_t i = start; i + (size_ - depth) <= basis_.size(); ++i) {
      partial_[depth + 1] = partial_[depth];
      partial_[depth + 1] ^= basis_[i];
      descend(depth + 1, i + 1, visit);
    }
  }

  const std::vector<BitVector>& basis_;
  std::size_t size_;
  std::vector<BitVector> partial_;
  std::uint64_t work_ = 0;
};

VerdictEntry distance_verdict(const PaperParams& paper, const DistanceResult& d) {
  const std::string bound = std::to_string(paper.d_bound);
  if (d.kind == DistanceKind::Inconclusive) return {Verdict::Unverified, "distance search exceeded its budget"};
  if (d.kind == DistanceKind::Exact) {
    if (d.value == kNoCodeword) {
      if (paper.d_kind == DistanceClaim::Lower) return {Verdict::Confirmed, "kernel is trivial"};
      return {Verdict::Refuted, "kernel is trivial, claimed d = " + bound};
    }
    const std::string got = "computed d = " + std::to_string(d.value);
    if (paper.d_kind == DistanceClaim::Exact) {
      return d.value == static_cast<std::size_t>(paper.d_bound)
                 ? VerdictEntry{Verdict::Confirmed, got}
                 : VerdictEntry{Verdict::Refuted, got + ", claimed d = " + bound};
    }
    return d.value >= static_cast<std::size_t>(paper.d_bound)
               ? VerdictEntry{Verdict::Confirmed, got}
               : VerdictEntry{Verdict::Refuted, got + ", claimed d >= " + bound};
  }
  // Lower bound verified: no codeword of weight < value.
  const std::string got = "verified d >= " + std::to_string(d.value);
  if (paper.d_kind == DistanceClaim::Lower && d.value >= static_cast<std::size_t>(paper.d_bound)) {
    return {Verdict::Confirmed, got};
  }
  if (paper.d_kind == DistanceClaim::Exact && d.value > static_cast<std::size_t>(paper.d_bound)) {
    return {Verdict::Refuted, got + ", claimed d = " + bound};
  }
  return {Verdict::Unverified, got + ", claimed " + (paper.d_kind == DistanceClaim::Exact ? "d = " : "d >= ") + bound};
}

bool same_parameters(const ClaimReport& a, const ClaimReport& b) {
  return a.n == b.n && a.rank == b.rank && a.k_computed == b.k_computed && a.distance.kind == b.distance.kind &&
         a.distance.value == b.distance.value && a.self_orth.ok == b.self_orth.ok;
}

}  // namespace

std::string_view to_string(DistanceKind k) {
  switch (k) {
    case DistanceKind::Exact: return "exact";
    case DistanceKind::LowerBoundVerified: return "lower-bound-verified";
    case DistanceKind::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "CONFIRMED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Unverified: return "UNVERIFIED";
  }
  return "UNKNOWN";
}

Dimension computed_dimension(const CssCode& code) {
  const std::size_t r = rank(code.h_orth);
  return {r, static_cast<std::int64_t>(code.n()) - 2 * static_cast<std::int64_t>(r)};
}

DistanceResult exact_distance(const BinMatrix& h, std::size_t dim_cap) {
  const auto basis = nullspace_basis(h);
  if (basis.size() > dim_cap) {
    throw Error(ErrorCode::CapExceeded, "kernel dimension " + std::to_string(basis.size()) + " exceeds cap " +
                                            std::to_string(dim_cap));
  }
  DistanceResult result{DistanceKind::Exact, kNoCodeword, 0, std::nullopt};
  for (std::size_t t = 1; t <= basis.size() && t <= result.value; ++t) {
    CombinationSearch search(basis, t, h.cols());
    search.run([&](const BitVector& v) {
      const std::size_t w = v.weight();
      if (better(v, w, result.witness, result.value)) {
        result.value = w;
        result.witness = v;
      }
    });
    result.work += search.work();
  }
  return result;
}

DistanceResult verify_distance_floor(const BinMatrix& h, std::size_t w, std::uint64_t budget) {
  std::uint64_t candidates = 0;
  for (std::size_t j = 0; j <= w; ++j) {
    candidates += binomial_capped(h.cols(), j, budget);
    if (candidates > budget) return {DistanceKind::Inconclusive, 0, 0, std::nullopt};
  }

  DistanceResult result{DistanceKind::LowerBoundVerified, w + 1, 1, std::nullopt};  // the zero vector
  for (std::size_t j = 1; j <= std::min(w, h.cols()); ++j) {
    FloorSearch search(h, j);
    const bool found = search.run();
    result.work += search.work();
    if (found) {
      BitVector witness(h.cols());
      for (const auto c : search.support()) witness.set(c);
      result.kind = DistanceKind::Exact;
      result.value = j;
      result.witness = std::move(witness);
      return result;
    }
  }
  return result;
}

RegularityReport regularity_report(const CssCode& code, std::uint64_t pair_budget) {
  RegularityReport r;
  const auto metrics = regularity_metrics(code.core, pair_budget);
  r.column_weights = metrics.col_weights;
  r.row_weights = metrics.row_weights;
  auto constant = [](const std::vector<std::size_t>& v) -> std::optional<std::size_t> {
    if (v.empty() || std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end()) return std::nullopt;
    return v.front();
  };
  r.rho = constant(r.column_weights);
  r.lambda = constant(r.row_weights);
  r.regular = r.rho.has_value() && r.lambda.has_value();
  r.four_cycle_free = metrics.four_cycle_free;
  if (code.core.rows() >= 2) {
    r.core_overlaps = overlap_histogram(code.core, pair_budget);
    r.h_orth_overlaps = overlap_histogram(code.h_orth, pair_budget);
  }
  r.h_orth_overlaps_even = std::all_of(r.h_orth_overlaps.begin(), r.h_orth_overlaps.end(),
                                       [](const auto& kv) { return kv.first % 2 == 0; });
  return r;
}

bool ClaimReport::any(Verdict v) const {
  return std::any_of(verdicts.begin(), verdicts.end(), [v](const auto& kv) { return kv.second.verdict == v; });
}

bool ClaimReport::all_confirmed() const {
  return !verdicts.empty() && !any(Verdict::Refuted) && !any(Verdict::Unverified);
}

ClaimReport claim_check(const CssCode& code, const AnalysisOptions& options) {
  ClaimReport r;
  r.spec = code.spec;
  r.case_label = code.recipe.case_label;
  r.recipe = code.recipe.to_string();
  r.paper = paper_params(code.spec.family, code.spec.m, code.spec.q);
  r.n = code.n();
  r.gen_rows = code.gen_rows();
  const auto dim = computed_dimension(code);
  r.rank = dim.rank;
  r.k_computed = dim.k;
  r.self_orth = self_orth_check(code.h_orth, options.pair_budget);

  const std::size_t kernel_dim = r.n - r.rank;
  if (kernel_dim <= options.dim_cap) {
    r.distance = exact_distance(code.h_orth, options.dim_cap);
  } else {
    const auto bound = static_cast<std::size_t>(r.paper.d_bound);
    const std::size_t w = r.paper.d_kind == DistanceClaim::Exact ? bound : bound - 1;
    r.distance = verify_distance_floor(code.h_orth, w, options.weight_budget);
  }

  r.verdicts["length"] = static_cast<std::int64_t>(r.n) == r.paper.n
                             ? VerdictEntry{Verdict::Confirmed, "n = " + std::to_string(r.n)}
                             : VerdictEntry{Verdict::Refuted, "built n = " + std::to_string(r.n) +
                                                                  ", claimed n = " + std::to_string(r.paper.n)};
  if (r.self_orth.ok) {
    r.verdicts["self_orthogonality"] = {Verdict::Confirmed, "H H^T = 0"};
  } else {
    r.verdicts["self_orthogonality"] = {
        Verdict::Refuted, std::to_string(r.self_orth.violating_pairs.size()) + " row pairs with odd overlap, " +
                              std::to_string(r.self_orth.odd_weight_rows.size()) + " rows of odd weight"};
  }
  const std::string k_text = "computed k = " + std::to_string(r.k_computed);
  if (!r.self_orth.ok) {
    r.verdicts["dimension"] = {Verdict::Refuted, "stabilizer generators do not commute; " + k_text};
  } else if (r.k_computed == r.paper.k) {
    r.verdicts["dimension"] = {Verdict::Confirmed, k_text};
  } else {
    r.verdicts["dimension"] = {Verdict::Refuted, k_text + ", claimed k = " + std::to_string(r.paper.k)};
  }
  r.verdicts["distance"] = distance_verdict(r.paper, r.distance);
  return r;
}

ClaimReport claim_check(const CodeSpec& spec, const AnalysisOptions& options) {
  return claim_check(build_code(spec, options.size_cap), options);
}

SweepResult sweep(const SweepConfig& config) {
  SweepResult result;
  auto record = [&](const CodeSpec& spec) -> SweepEntry& {
    SweepEntry entry;
    entry.spec = spec;
    try {
      entry.report = claim_check(spec, config.options);
    } catch (const Error& e) {
      entry.error_name = std::string(e.name());
      entry.error_detail = e.what();
    }
    result.entries.push_back(std::move(entry));
    return result.entries.back();
  };

  for (const auto family : config.families) {
    for (const auto& [m, q] : config.geometries) {
      if (family != Family::ParallelClassCode) {
        record(CodeSpec{family, m, q, std::nullopt});
        continue;
      }
      std::int64_t classes = 0;
      try {
        validate(CodeSpec{family, m, q, 0});
        classes = b_coefficient(m, q);
      } catch (const Error& e) {
        result.entries.push_back({CodeSpec{family, m, q, std::nullopt}, std::nullopt, std::string(e.name()), e.what()});
        continue;
      }
      const std::size_t first = result.entries.size();
      for (std::int64_t i = 0; i < classes; ++i) record(CodeSpec{family, m, q, static_cast<std::uint32_t>(i)});
      bool consistent = true;
      for (std::size_t i = first; i < result.entries.size(); ++i) {
        const auto& a = result.entries[first];
        const auto& b = result.entries[i];
        consistent = consistent && a.report && b.report && same_parameters(*a.report, *b.report);
      }
      result.class_consistency.push_back({m, q, consistent});
    }
  }
  return result;
}

}  // namespace egqldpc
