#include "egqldpc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "egqldpc/code_analysis.hpp"
#include "egqldpc/code_builder.hpp"
#include "egqldpc/error.hpp"
#include "egqldpc/geometry.hpp"
#include "egqldpc/io.hpp"

namespace egqldpc::cli {
namespace {

namespace fs = std::filesystem;

struct CodeArgs {
  std::string family;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::optional<std::uint32_t> class_index;

  CodeSpec spec() const { return {parse_family(family), m, q, class_index}; }
};

void add_code_options(CLI::App* cmd, CodeArgs& args) {
  cmd->add_option("--family", args.family, "Code family")
      ->required()
      ->check(CLI::IsMember({"h1", "h2", "parallel"}));
  cmd->add_option("--m", args.m, "Geometry dimension")->required()->check(CLI::Range(2u, 64u));
  cmd->add_option("--q", args.q, "Field order (a prime power)")->required()->check(CLI::Range(2u, 1u << 24));
  cmd->add_option("--class", args.class_index, "Parallel class index (family parallel only)");
}

void add_analysis_options(CLI::App* cmd, AnalysisOptions& options) {
  cmd->add_option("--exact-cap", options.dim_cap, "Largest kernel dimension enumerated exactly");
  cmd->add_option("--budget", options.weight_budget, "Vector budget of the bounded distance search");
  cmd->add_option("--pair-budget", options.pair_budget, "Row-pair budget of overlap computations");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string coords_text(const Geometry& g, std::uint32_t index) {
  std::string out = "(";
  const auto c = g.coords(index);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c[i].code);
  }
  return out + ")";
}

std::string points_text(const Geometry& g, const std::vector<std::uint32_t>& points) {
  std::string out;
  for (const auto p : points) {
    if (!out.empty()) out += ' ';
    out += coords_text(g, p);
  }
  return out;
}

int verdict_status(bool refuted, bool unverified) {
  if (refuted) return kExitRefuted;
  if (unverified) return kExitUnverified;
  return kExitOk;
}

int run_geom(std::uint32_t m, std::uint32_t q, bool list_lines, bool list_classes, std::ostream& out) {
  std::uint64_t points = 1;
  for (std::uint32_t i = 0; i < m && points <= size_cap(); ++i) points *= q;
  if (points > size_cap()) {
    throw Error(ErrorCode::UnsupportedGeometry, "q^m exceeds the size cap of " + std::to_string(size_cap()));
  }
  const Geometry g(m, make_field_of_order(q));
  if (list_lines) {
    g.for_each_line([&](const Line& l) {
      out << "class=" << l.class_id << " dir=" << coords_text(g, l.direction) << " base=" << coords_text(g, l.base)
          << " points=" << points_text(g, l.points) << '\n';
    });
  }
  if (list_classes) {
    for (std::uint32_t k = 0; k < g.num_classes(); ++k) {
      std::vector<std::uint32_t> bases;
      g.for_each_line_in_class(k, [&](const Line& l) { bases.push_back(l.base); });
      out << "class=" << k << " dir=" << coords_text(g, g.directions()[k]) << " lines=" << bases.size()
          << " bases=" << points_text(g, bases) << '\n';
    }
  }
  if (!list_lines && !list_classes) {
    const auto s = g.stats();
    out << "points=" << s.n_points << " lines=" << s.n_lines << " classes=" << s.n_classes
        << " lines/point=" << s.lines_per_point << " points/line=" << s.points_per_line
        << " parallels/line=" << s.parallels_per_line << '\n';
  }
  return kExitOk;
}

int run_build(const CodeArgs& args, const AnalysisOptions& options, const std::string& dir, const std::string& format,
              std::ostream& out) {
  const CssCode code = build_code(args.spec(), options.size_cap);
  const ClaimReport report = claim_check(code, options);
  const BinMatrix stabilizer = assemble_stabilizer(code);
  const fs::path root(dir);
  fs::create_directories(root);
  if (format == "json") {
    write_file(root / "bundle.json", write_bundle_json(code, report, stabilizer, true, ""));
    out << "wrote " << (root / "bundle.json").string() << '\n';
    return kExitOk;
  }
  auto serialize = format == "mtx" ? write_mtx : write_alist;
  const std::pair<const char*, const BinMatrix*> payloads[] = {
      {"core", &code.core}, {"h_orth", &code.h_orth}, {"stabilizer", &stabilizer}};
  for (const auto& [name, m] : payloads) {
    const fs::path file = root / (std::string(name) + "." + format);
    write_file(file, serialize(*m));
    out << "wrote " << file.string() << '\n';
  }
  write_file(root / "metadata.json", write_bundle_json(code, report, stabilizer, false, format));
  out << "wrote " << (root / "metadata.json").string() << '\n';
  return kExitOk;
}

int run_check(const CodeArgs& args, const AnalysisOptions& options, std::ostream& out) {
  const ClaimReport report = claim_check(args.spec(), options);
  out << write_report(report);
  return verdict_status(report.any(Verdict::Refuted), report.any(Verdict::Unverified));
}

int run_distance(const std::string& path, std::size_t exact_cap, std::optional<std::size_t> floor,
                 std::uint64_t budget, std::ostream& out) {
  const std::string text = read_file(path);
  const BinMatrix h = fs::path(path).extension() == ".mtx" ? parse_mtx(text) : parse_alist(text);
  const DistanceResult d = floor ? verify_distance_floor(h, *floor, budget) : exact_distance(h, exact_cap);
  out << "kind=" << to_string(d.kind) << '\n';
  out << "value=";
  if (d.kind == DistanceKind::Inconclusive) {
    out << "unknown";
  } else if (d.value == kNoCodeword) {
    out << "inf";
  } else {
    out << d.value;
  }
  out << '\n';
  if (d.witness) {
    std::string cols;
    for (const auto c : d.witness->support()) cols += (cols.empty() ? "" : ",") + std::to_string(c);
    out << "witness=" << cols << '\n';
  }
  out << "work=" << d.work << '\n';
  return d.kind == DistanceKind::Inconclusive ? kExitUnverified : kExitOk;
}

int run_sweep(const std::string& path, std::ostream& out) {
  const SweepResult result = sweep(parse_sweep_config(read_file(path)));
  out << write_sweep(result);
  bool refuted = false, unverified = false, failed = false;
  for (const auto& e : result.entries) {
    if (!e.report) {
      failed = true;
      continue;
    }
    refuted = refuted || e.report->any(Verdict::Refuted);
    unverified = unverified || e.report->any(Verdict::Unverified);
  }
  for (const auto& c : result.class_consistency) refuted = refuted || !c.consistent;
  const int status = verdict_status(refuted, unverified);
  return status == kExitOk && failed ? kExitConstruction : status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum LDPC codes from Euclidean geometries: construction and parameter checks", "egqldpc"};
  app.require_subcommand(1);

  std::uint32_t geom_m = 0, geom_q = 0;
  bool stats = false, list_lines = false, list_classes = false;
  auto* geom = app.add_subcommand("geom", "Enumerate EG(m,q)");
  geom->add_option("--m", geom_m, "Dimension")->required()->check(CLI::Range(2u, 64u));
  geom->add_option("--q", geom_q, "Field order")->required()->check(CLI::Range(2u, 1u << 24));
  geom->add_flag("--stats", stats, "Print counts (default)");
  geom->add_flag("--list-lines", list_lines, "List every line");
  geom->add_flag("--list-classes", list_classes, "List every parallel class");

  CodeArgs build_args;
  AnalysisOptions build_options;
  std::string out_dir, format = "alist";
  auto* build = app.add_subcommand("build", "Write core, H_orth and stabilizer matrices");
  add_code_options(build, build_args);
  add_analysis_options(build, build_options);
  build->add_option("--out", out_dir, "Output directory")->required();
  build->add_option("--format", format, "Matrix format")->check(CLI::IsMember({"alist", "mtx", "json"}));

  CodeArgs check_args;
  AnalysisOptions check_options;
  auto* check = app.add_subcommand("check", "Compare claimed and computed parameters");
  add_code_options(check, check_args);
  add_analysis_options(check, check_options);

  std::string distance_in;
  std::size_t exact_cap = kDefaultDimCap;
  std::optional<std::size_t> floor;
  std::uint64_t budget = kDefaultWeightBudget;
  auto* distance = app.add_subcommand("distance", "Minimum distance of the kernel of a parity-check matrix");
  distance->add_option("--in", distance_in, "alist (or .mtx) file")->required();
  distance->add_option("--exact-cap", exact_cap, "Largest kernel dimension enumerated exactly");
  distance->add_option("--floor", floor, "Verify that no codeword of weight <= W exists");
  distance->add_option("--budget", budget, "Vector budget for --floor");

  std::string config_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check many codes from a JSON configuration");
  sweep_cmd->add_option("--config", config_path, "Configuration file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*geom) return run_geom(geom_m, geom_q, list_lines, list_classes, out);
    if (*build) return run_build(build_args, build_options, out_dir, format, out);
    if (*check) return run_check(check_args, check_options, out);
    if (*distance) return run_distance(distance_in, exact_cap, floor, budget, out);
    if (*sweep_cmd) return run_sweep(config_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::UnsupportedGeometry ? kExitSizeCap : kExitConstruction;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConstruction;
  }
  return kExitUsage;
}

}  // namespace egqldpc::cli
