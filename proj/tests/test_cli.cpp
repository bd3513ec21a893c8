#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "egqldpc/cli.hpp"
#include "egqldpc/gf2.hpp"
#include "egqldpc/io.hpp"

using namespace egqldpc;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("egqldpc_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

// Restores EGQLDPC_SIZE_CAP on scope exit.
struct SizeCap {
  explicit SizeCap(const char* value) { setenv("EGQLDPC_SIZE_CAP", value, 1); }
  ~SizeCap() { unsetenv("EGQLDPC_SIZE_CAP"); }
};

}  // namespace

TEST_CASE("geom --stats") {
  const auto r = run({"geom", "--m", "2", "--q", "2", "--stats"});
  CHECK(r.status == 0);
  CHECK(r.out == "points=4 lines=6 classes=3 lines/point=3 points/line=2 parallels/line=1\n");
  CHECK(run({"geom", "--m", "2", "--q", "2"}).out == r.out);
  CHECK(run({"geom", "--m", "3", "--q", "3"}).out ==
        "points=27 lines=117 classes=13 lines/point=13 points/line=3 parallels/line=8\n");
}

TEST_CASE("geom listings") {
  const auto lines = run({"geom", "--m", "2", "--q", "2", "--list-lines"});
  CHECK(lines.status == 0);
  CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 6);
  CHECK(lines.out.rfind("class=0 dir=(0,1) base=(0,0) points=(0,0) (0,1)\n", 0) == 0);
  const auto classes = run({"geom", "--m", "2", "--q", "3", "--list-classes"});
  CHECK(std::count(classes.out.begin(), classes.out.end(), '\n') == 4);
}

TEST_CASE("check exit status follows the verdicts") {
  const auto steane = run({"check", "--family", "h1", "--m", "2", "--q", "2"});
  CHECK(steane.status == cli::kExitOk);
  CHECK(steane.out.find("\nn=7\n") != std::string::npos);
  CHECK(steane.out.find("\nk_computed=1\n") != std::string::npos);
  CHECK(steane.out.find("\nd_computed=3\n") != std::string::npos);

  // Self-orthogonality fails for the q = 3 punctured code.
  const auto q3 = run({"check", "--family", "h1", "--m", "2", "--q", "3"});
  CHECK(q3.status == cli::kExitRefuted);
  CHECK(q3.out.find("verdict.self_orthogonality=REFUTED") != std::string::npos);

  CHECK(run({"check", "--family", "h2", "--m", "2", "--q", "2"}).status == cli::kExitOk);
  CHECK(run({"check", "--family", "parallel", "--m", "2", "--q", "2", "--class", "2"}).status == cli::kExitOk);
  CHECK(run({"check", "--family", "h2", "--m", "3", "--q", "2"}).status == cli::kExitRefuted);

  // Bounded search forced and starved: the distance claim cannot be decided.
  const auto starved = run({"check", "--family", "h1", "--m", "2", "--q", "2", "--exact-cap", "0", "--budget", "1"});
  CHECK(starved.status == cli::kExitUnverified);
  CHECK(starved.out.find("verdict.distance=UNVERIFIED") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run({}).status == cli::kExitUsage);
  CHECK(run({"frobnicate"}).status == cli::kExitUsage);
  CHECK(run({"check", "--family", "h1", "--m", "2"}).status == cli::kExitUsage);
  CHECK(run({"check", "--family", "h7", "--m", "2", "--q", "2"}).status == cli::kExitUsage);
  CHECK(run({"geom", "--m", "1", "--q", "2"}).status == cli::kExitUsage);
  CHECK(run({"geom", "--m", "two", "--q", "2"}).status == cli::kExitUsage);
  CHECK(run({"build", "--family", "h1", "--m", "2", "--q", "2", "--out", "x", "--format", "csv"}).status ==
        cli::kExitUsage);
  CHECK(run({"--help"}).status == cli::kExitOk);
}

TEST_CASE("construction errors exit 65 and name the error") {
  const auto r = run({"check", "--family", "h1", "--m", "2", "--q", "6"});
  CHECK(r.status == cli::kExitConstruction);
  CHECK(r.err.find("NotPrimePower") != std::string::npos);
  const auto cls = run({"check", "--family", "parallel", "--m", "2", "--q", "2", "--class", "3"});
  CHECK(cls.status == cli::kExitConstruction);
  CHECK(cls.err.find("InvalidClassIndex") != std::string::npos);
  CHECK(run({"distance", "--in", "/nonexistent/h.alist"}).status == cli::kExitConstruction);
}

TEST_CASE("size cap violations exit 66") {
  const auto big = run({"check", "--family", "h2", "--m", "13", "--q", "2"});
  CHECK(big.status == cli::kExitSizeCap);
  CHECK(big.err.find("UnsupportedGeometry") != std::string::npos);
  CHECK(run({"geom", "--m", "2", "--q", "65"}).status == cli::kExitSizeCap);
  {
    SizeCap cap("8");
    CHECK(run({"check", "--family", "h1", "--m", "2", "--q", "3"}).status == cli::kExitSizeCap);
    CHECK(run({"geom", "--m", "2", "--q", "3"}).status == cli::kExitSizeCap);
    CHECK(run({"geom", "--m", "2", "--q", "2"}).status == cli::kExitOk);
  }
  CHECK(run({"geom", "--m", "2", "--q", "3"}).status == cli::kExitOk);
}

TEST_CASE("build writes matrices that round-trip") {
  const auto dir = scratch("build");
  const auto r = run({"build", "--family", "h2", "--m", "2", "--q", "2", "--out", dir.string()});
  REQUIRE(r.status == 0);
  const auto code = build_code(CodeSpec{Family::FullEG, 2, 2, std::nullopt});
  CHECK(parse_alist(slurp(dir / "core.alist")) == code.core);
  CHECK(parse_alist(slurp(dir / "h_orth.alist")) == code.h_orth);
  CHECK(parse_alist(slurp(dir / "stabilizer.alist")) == assemble_stabilizer(code));
  CHECK(slurp(dir / "metadata.json").find("\"h_orth.alist\"") != std::string::npos);

  const auto mtx = run({"build", "--family", "parallel", "--m", "2", "--q", "3", "--class", "1", "--out",
                        dir.string(), "--format", "mtx"});
  REQUIRE(mtx.status == 0);
  CHECK(parse_mtx(slurp(dir / "h_orth.mtx")) == build_code(CodeSpec{Family::ParallelClassCode, 2, 3, 1}).h_orth);

  REQUIRE(run({"build", "--family", "h1", "--m", "2", "--q", "2", "--out", dir.string(), "--format", "json"}).status ==
          0);
  CHECK(slurp(dir / "bundle.json").find("\"row_support\"") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("distance subcommand") {
  const auto dir = scratch("distance");
  spit(dir / "steane.alist", write_alist(build_code(CodeSpec{Family::PuncturedEG, 2, 2, std::nullopt}).h_orth));
  const auto exact = run({"distance", "--in", (dir / "steane.alist").string()});
  CHECK(exact.status == 0);
  CHECK(exact.out.rfind("kind=exact\nvalue=3\nwitness=", 0) == 0);

  const auto floor = run({"distance", "--in", (dir / "steane.alist").string(), "--floor", "2"});
  CHECK(floor.status == 0);
  CHECK(floor.out == "kind=lower-bound-verified\nvalue=3\nwork=29\n");

  const auto starved = run({"distance", "--in", (dir / "steane.alist").string(), "--floor", "2", "--budget", "3"});
  CHECK(starved.status == cli::kExitUnverified);
  CHECK(starved.out == "kind=inconclusive\nvalue=unknown\nwork=0\n");

  spit(dir / "eye.mtx", write_mtx(BinMatrix::identity(3)));
  CHECK(run({"distance", "--in", (dir / "eye.mtx").string()}).out == "kind=exact\nvalue=inf\nwork=0\n");

  spit(dir / "bad.alist", "2 2\n1 1\n");
  const auto bad = run({"distance", "--in", (dir / "bad.alist").string()});
  CHECK(bad.status == cli::kExitConstruction);
  CHECK(bad.err.find("MalformedAlist") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("sweep subcommand") {
  const auto dir = scratch("sweep");
  spit(dir / "ok.json", R"({"families": ["parallel"], "geometries": [[2, 2]]})");
  const auto ok = run({"sweep", "--config", (dir / "ok.json").string()});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("class_consistency m=2 q=2 consistent\n") != std::string::npos);

  spit(dir / "mixed.json", R"({"families": ["h1"], "geometries": [[2, 2], [2, 3]]})");
  CHECK(run({"sweep", "--config", (dir / "mixed.json").string()}).status == cli::kExitRefuted);

  spit(dir / "broken.json", R"({"families": ["h1"], "geometries": [[2, 6]]})");
  const auto broken = run({"sweep", "--config", (dir / "broken.json").string()});
  CHECK(broken.status == cli::kExitConstruction);
  CHECK(broken.out.find("error=NotPrimePower") != std::string::npos);

  spit(dir / "junk.json", "{");
  CHECK(run({"sweep", "--config", (dir / "junk.json").string()}).status == cli::kExitConstruction);
  fs::remove_all(dir);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::vector<std::string>> invocations = {
      {"check", "--family", "h1", "--m", "2", "--q", "3"},
      {"check", "--family", "h2", "--m", "3", "--q", "2"},
      {"geom", "--m", "3", "--q", "2", "--list-lines"},
  };
  for (const auto& args : invocations) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
