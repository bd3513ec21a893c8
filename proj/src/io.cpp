#include "egqldpc/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "egqldpc/error.hpp"
#include "egqldpc/geometry.hpp"

namespace egqldpc {
namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kReportListLimit = 20;

void append_list(std::string& out, const std::vector<std::size_t>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  out += '\n';
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

class AlistReader {
 public:
  explicit AlistReader(std::string_view text) : lines_(split_lines(text)) {
    // Trailing blank lines are tolerated, nothing else after the last row.
    while (!lines_.empty() && lines_.back().find_first_not_of(" \t\r") == std::string_view::npos) lines_.pop_back();
  }

  [[noreturn]] void fail(std::size_t line, const std::string& reason) const {
    throw Error(ErrorCode::MalformedAlist, "line " + std::to_string(line + 1) + ": " + reason);
  }

  std::vector<std::size_t> numbers(std::size_t line, std::size_t expected) const {
    if (line >= lines_.size()) fail(line, "unexpected end of input");
    std::vector<std::size_t> out;
    std::string_view s = lines_[line];
    while (!s.empty() && (s.back() == '\r')) s.remove_suffix(1);
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] == ' ' || s[pos] == '\t') {
        ++pos;
        continue;
      }
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
      if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
        fail(line, "expected a non-negative integer");
      }
      out.push_back(value);
      pos = static_cast<std::size_t>(ptr - s.data());
    }
    if (out.size() != expected) {
      fail(line, "expected " + std::to_string(expected) + " values, found " + std::to_string(out.size()));
    }
    return out;
  }

  std::size_t line_count() const { return lines_.size(); }

 private:
  std::vector<std::string_view> lines_;
};

// Reads one incidence list: `weight` indices in [1, limit], then zero padding.
std::vector<std::size_t> read_incidences(const AlistReader& reader, std::size_t line, std::size_t width,
                                         std::size_t weight, std::size_t limit) {
  const auto values = reader.numbers(line, width);
  std::vector<std::size_t> out;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < width; ++i) {
    const std::size_t v = values[i];
    if (i < weight) {
      if (v == 0) reader.fail(line, "fewer entries than the declared weight " + std::to_string(weight));
      if (v > limit) reader.fail(line, "index " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
      if (!seen.insert(v).second) reader.fail(line, "duplicate index " + std::to_string(v));
      out.push_back(v - 1);
    } else if (v != 0) {
      reader.fail(line, "more entries than the declared weight " + std::to_string(weight));
    }
  }
  return out;
}

json matrix_json(const BinMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json support = json::array();
    for (const auto c : a.row_vector(r).support()) support.push_back(c);
    rows.push_back(std::move(support));
  }
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"row_support", std::move(rows)}};
}

std::string distance_value(const DistanceResult& d) {
  return d.value == kNoCodeword ? "inf" : std::to_string(d.value);
}

std::string join_support(const BitVector& v) {
  std::string out;
  for (const auto c : v.support()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

}  // namespace

std::string write_alist(const BinMatrix& a) {
  const auto t = transpose(a);
  const auto col_w = a.col_weights();
  const auto row_w = a.row_weights();
  const std::size_t max_col = *std::max_element(col_w.begin(), col_w.end());
  const std::size_t max_row = *std::max_element(row_w.begin(), row_w.end());

  std::string out;
  out += std::to_string(a.cols()) + ' ' + std::to_string(a.rows()) + '\n';
  out += std::to_string(max_col) + ' ' + std::to_string(max_row) + '\n';
  append_list(out, col_w);
  append_list(out, row_w);
  auto emit = [&out](const BitVector& v, std::size_t width) {
    std::vector<std::size_t> entries;
    for (const auto i : v.support()) entries.push_back(i + 1);
    entries.resize(width, 0);
    append_list(out, entries);
  };
  for (std::size_t c = 0; c < a.cols(); ++c) emit(t.row_vector(c), max_col);
  for (std::size_t r = 0; r < a.rows(); ++r) emit(a.row_vector(r), max_row);
  return out;
}

BinMatrix parse_alist(std::string_view text) {
  const AlistReader reader(text);
  const auto header = reader.numbers(0, 2);
  const std::size_t cols = header[0], rows = header[1];
  if (cols == 0 || rows == 0) reader.fail(0, "dimensions must be positive");
  const auto maxima = reader.numbers(1, 2);
  const auto col_w = reader.numbers(2, cols);
  const auto row_w = reader.numbers(3, rows);
  if (*std::max_element(col_w.begin(), col_w.end()) != maxima[0]) reader.fail(1, "max column weight disagrees with line 3");
  if (*std::max_element(row_w.begin(), row_w.end()) != maxima[1]) reader.fail(1, "max row weight disagrees with line 4");

  BinMatrix a(rows, cols);
  std::size_t line = 4;
  for (std::size_t c = 0; c < cols; ++c, ++line) {
    for (const auto r : read_incidences(reader, line, maxima[0], col_w[c], rows)) a.set(r, c);
  }
  for (std::size_t r = 0; r < rows; ++r, ++line) {
    const auto listed = read_incidences(reader, line, maxima[1], row_w[r], cols);
    if (listed.size() != a.row_weight(r)) reader.fail(line, "row section disagrees with column section");
    for (const auto c : listed) {
      if (!a.get(r, c)) reader.fail(line, "row section disagrees with column section");
    }
  }
  if (reader.line_count() > line) reader.fail(line, "trailing content");
  return a;
}

std::string write_mtx(const BinMatrix& a) {
  std::string out = "%%MatrixMarket matrix coordinate pattern general\n";
  out += std::to_string(a.rows()) + ' ' + std::to_string(a.cols()) + ' ' + std::to_string(a.nnz()) + '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto c : a.row_vector(r).support()) out += std::to_string(r + 1) + ' ' + std::to_string(c + 1) + '\n';
  }
  return out;
}

BinMatrix parse_mtx(std::string_view text) {
  const auto lines = split_lines(text);
  auto fail = [](std::size_t line, const std::string& reason) -> void {
    throw Error(ErrorCode::MalformedMatrixMarket, "line " + std::to_string(line + 1) + ": " + reason);
  };
  if (lines.empty()) fail(0, "empty input");
  std::istringstream banner{std::string(lines[0])};
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || object != "matrix" || format != "coordinate" || symmetry != "general" ||
      (field != "pattern" && field != "integer")) {
    fail(0, "expected '%%MatrixMarket matrix coordinate pattern|integer general'");
  }
  const bool valued = field == "integer";
  std::size_t i = 1;
  while (i < lines.size() && !lines[i].empty() && lines[i][0] == '%') ++i;
  if (i >= lines.size()) fail(i, "missing size line");
  std::istringstream size_line{std::string(lines[i])};
  long long rows = 0, cols = 0, nnz = 0;
  if (!(size_line >> rows >> cols >> nnz) || rows <= 0 || cols <= 0 || nnz < 0) fail(i, "bad size line");
  BinMatrix a(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  long long seen = 0;
  for (++i; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::istringstream entry{std::string(lines[i])};
    long long r = 0, c = 0, v = 1;
    if (!(entry >> r >> c) || (valued && !(entry >> v))) fail(i, "bad entry");
    if (r < 1 || r > rows || c < 1 || c > cols) fail(i, "index out of range");
    if (v != 0 && v != 1) fail(i, "entries must be 0 or 1");
    if (a.get(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1))) fail(i, "duplicate entry");
    a.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1), v == 1);
    ++seen;
  }
  if (seen != nnz) fail(i, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(seen));
  return a;
}

std::string write_report(const ClaimReport& r) {
  std::map<std::string, std::string> kv;
  kv["schema"] = std::string(kReportSchema);
  kv["ordering_version"] = std::to_string(kOrderingVersion);
  kv["family"] = std::string(to_string(r.spec.family));
  kv["m"] = std::to_string(r.spec.m);
  kv["q"] = std::to_string(r.spec.q);
  if (r.spec.class_index) kv["class_index"] = std::to_string(*r.spec.class_index);
  kv["case_label"] = r.case_label;
  kv["recipe"] = r.recipe;
  kv["n"] = std::to_string(r.n);
  kv["n_paper"] = std::to_string(r.paper.n);
  kv["gen_rows"] = std::to_string(r.gen_rows);
  kv["rank"] = std::to_string(r.rank);
  kv["k_paper"] = std::to_string(r.paper.k);
  kv["k_computed"] = std::to_string(r.k_computed);
  kv["d_paper"] = std::to_string(r.paper.d_bound);
  kv["d_paper_kind"] = r.paper.d_kind == DistanceClaim::Exact ? "exact" : "lower";
  kv["d_computed"] = r.distance.kind == DistanceKind::Inconclusive ? "unknown" : distance_value(r.distance);
  kv["d_computed_kind"] = std::string(to_string(r.distance.kind));
  kv["distance_work"] = std::to_string(r.distance.work);
  if (r.distance.witness) kv["distance_witness"] = join_support(*r.distance.witness);
  kv["self_orthogonal"] = r.self_orth.ok ? "true" : "false";
  kv["violation_count"] = std::to_string(r.self_orth.violation_count());
  if (!r.self_orth.violating_pairs.empty()) {
    std::string pairs;
    const auto& v = r.self_orth.violating_pairs;
    for (std::size_t i = 0; i < std::min(v.size(), kReportListLimit); ++i) {
      if (!pairs.empty()) pairs += ' ';
      pairs += std::to_string(v[i].first) + '-' + std::to_string(v[i].second);
    }
    kv["violating_pairs"] = pairs;
  }
  if (!r.self_orth.odd_weight_rows.empty()) {
    std::string rows;
    const auto& v = r.self_orth.odd_weight_rows;
    for (std::size_t i = 0; i < std::min(v.size(), kReportListLimit); ++i) {
      if (!rows.empty()) rows += ' ';
      rows += std::to_string(v[i]);
    }
    kv["odd_weight_rows"] = rows;
  }
  for (const auto& [name, entry] : r.verdicts) {
    kv["verdict." + name] = std::string(to_string(entry.verdict));
    kv["verdict." + name + ".reason"] = entry.reason;
  }
  std::string out;
  for (const auto& [k, v] : kv) out += k + '=' + v + '\n';
  return out;
}

std::string write_bundle_json(const CssCode& code, const ClaimReport& report, const BinMatrix& stabilizer,
                              bool inline_matrices, std::string_view file_ext) {
  json meta;
  meta["schema"] = "bundle-v1";
  meta["ordering_version"] = kOrderingVersion;
  meta["family"] = std::string(to_string(code.spec.family));
  meta["m"] = code.spec.m;
  meta["q"] = code.spec.q;
  meta["class_index"] = code.spec.class_index ? json(*code.spec.class_index) : json(nullptr);
  meta["case_label"] = code.recipe.case_label;
  meta["recipe"] = code.recipe.to_string();
  meta["n"] = code.n();
  meta["gen_rows"] = code.gen_rows();
  meta["rank"] = report.rank;
  meta["k_paper"] = report.paper.k;
  meta["k_computed"] = report.k_computed;
  meta["d_paper"] = {{"value", report.paper.d_bound},
                     {"kind", report.paper.d_kind == DistanceClaim::Exact ? "exact" : "lower"}};
  json d_value = report.distance.kind == DistanceKind::Inconclusive || report.distance.value == kNoCodeword
                     ? json(nullptr)
                     : json(report.distance.value);
  meta["d_computed"] = {{"kind", std::string(to_string(report.distance.kind))}, {"value", d_value}};
  meta["self_orthogonal"] = report.self_orth.ok;
  meta["violation_count"] = report.self_orth.violation_count();

  const std::pair<const char*, const BinMatrix*> payloads[] = {
      {"core", &code.core}, {"h_orth", &code.h_orth}, {"stabilizer", &stabilizer}};
  json matrices;
  for (const auto& [name, m] : payloads) {
    if (inline_matrices) {
      matrices[name] = matrix_json(*m);
    } else {
      matrices[name] = {{"file", std::string(name) + "." + std::string(file_ext)}, {"rows", m->rows()},
                        {"cols", m->cols()}};
    }
  }
  meta["matrices"] = std::move(matrices);
  return meta.dump(2) + "\n";
}

SweepConfig parse_sweep_config(std::string_view text) {
  auto fail = [](const std::string& reason) -> void { throw Error(ErrorCode::MalformedConfig, reason); };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  SweepConfig config;
  try {
    if (!doc.contains("families") || !doc["families"].is_array()) fail("'families' must be an array");
    for (const auto& f : doc["families"]) {
      try {
        config.families.push_back(parse_family(f.get<std::string>()));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    if (doc.contains("geometries")) {
      for (const auto& g : doc["geometries"]) {
        if (!g.is_array() || g.size() != 2) fail("each geometry must be [m, q]");
        config.geometries.emplace_back(g[0].get<std::uint32_t>(), g[1].get<std::uint32_t>());
      }
    } else if (doc.contains("m") && doc.contains("q")) {
      for (const auto& m : doc["m"]) {
        for (const auto& q : doc["q"]) config.geometries.emplace_back(m.get<std::uint32_t>(), q.get<std::uint32_t>());
      }
    } else {
      fail("need 'geometries' or both 'm' and 'q'");
    }
    if (doc.contains("exact_cap")) config.options.dim_cap = doc["exact_cap"].get<std::size_t>();
    if (doc.contains("budget")) config.options.weight_budget = doc["budget"].get<std::uint64_t>();
    if (doc.contains("pair_budget")) config.options.pair_budget = doc["pair_budget"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    fail(e.what());
  }
  return config;
}

std::string write_sweep(const SweepResult& result) {
  std::string out;
  for (const auto& entry : result.entries) {
    if (entry.report) {
      out += write_report(*entry.report);
    } else {
      std::map<std::string, std::string> kv;
      kv["schema"] = std::string(kReportSchema);
      kv["family"] = std::string(to_string(entry.spec.family));
      kv["m"] = std::to_string(entry.spec.m);
      kv["q"] = std::to_string(entry.spec.q);
      if (entry.spec.class_index) kv["class_index"] = std::to_string(*entry.spec.class_index);
      kv["error"] = entry.error_name;
      kv["error_detail"] = entry.error_detail;
      for (const auto& [k, v] : kv) out += k + '=' + v + '\n';
    }
    out += '\n';
  }
  for (const auto& c : result.class_consistency) {
    out += "class_consistency m=" + std::to_string(c.m) + " q=" + std::to_string(c.q) + " " +
           (c.consistent ? "consistent" : "inconsistent") + '\n';
  }
  return out;
}

}  // namespace egqldpc
