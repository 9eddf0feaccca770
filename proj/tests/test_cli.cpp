#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace entrothresh::cli;

namespace {

const fs::path kFixtures = ENTROTHRESH_FIXTURE_DIR;

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "entrothresh_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "entrothresh-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(fields);
  }
  return rows;
}

fs::path flat_image() {
  const auto p = scratch("flat.pgm");
  std::ofstream(p, std::ios::binary) << "P5\n2 2\n255\n" << std::string(4, '\x40');
  return p;
}

}  // namespace

TEST_CASE("compare mode on a two-tone image") {
  const auto r = invoke({"--input", (kFixtures / "two_tone.pgm").string(), "--mode",
                         "compare", "--grid", "0.1,0.5,0.9"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"index", "threshold_tsallis", "edges_tsallis",
                                            "threshold_kaniadakis", "edges_kaniadakis"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][1] == "10");
    CHECK(rows[i][3] == "10");
    CHECK(rows[i][2] == rows[1][2]);
    CHECK(rows[i][4] == rows[1][2]);
  }
  CHECK(r.err.find("mirror check") != std::string::npos);
}

TEST_CASE("compare mode on cameraman with the default grid") {
  const auto report = scratch("camera.csv");
  const std::vector<std::string> args{"--input", (kFixtures / "cameraman.pgm").string(),
                                      "--mode", "compare", "--grid-default",
                                      "--report", report.string()};
  const auto r = invoke(args);
  REQUIRE(r.status == kExitOk);
  const auto text = slurp(report);
  const auto rows = csv_rows(text);
  REQUIRE(rows.size() == 14);
  for (const auto& row : rows) CHECK(row.size() == 5);
  CHECK(rows[13][0] == "0.99");
  CHECK(r.out.find("best tsallis") != std::string::npos);
  CHECK(r.out.find("best kaniadakis") != std::string::npos);

  // Stdout CSV matches the file byte for byte; reruns are identical.
  const auto again = invoke({"--input", (kFixtures / "cameraman.pgm").string(), "--mode",
                             "compare", "--grid-default"});
  CHECK(again.out == text);
  invoke(args);
  CHECK(slurp(report) == text);
}

TEST_CASE("single and sweep modes") {
  const auto camera = (kFixtures / "cameraman.pgm").string();
  const auto r = invoke({"--input", camera, "--entropy", "shannon"});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.find("threshold: 140") != std::string::npos);

  const auto img = scratch("single.pgm");
  CHECK(invoke({"--input", camera, "--entropy", "tsallis", "--index", "0.5",
                "--out-image", img.string()})
            .status == kExitOk);
  CHECK(fs::exists(img));

  const auto sweep_img = scratch("sweep.pgm");
  const auto s = invoke({"--input", camera, "--mode", "sweep", "--entropy",
                         "kaniadakis", "--grid", "0.2, 0.1", "--connectivity", "8",
                         "--out-image", sweep_img.string()});
  REQUIRE(s.status == kExitOk);
  const auto rows = csv_rows(s.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].size() == 3);
  CHECK(rows[1][0] == "0.1");
  CHECK(fs::exists(sweep_img));

  CHECK(invoke({"--input", camera, "--entropy", "tsallis", "--index", "1.5"}).status ==
        kExitUsage);
  CHECK(invoke({"--input", camera, "--entropy", "tsallis", "--index", "1.5",
                "--allow-extended-index"})
            .status == kExitOk);
}

TEST_CASE("usage errors") {
  const auto camera = (kFixtures / "cameraman.pgm").string();
  const std::vector<std::vector<std::string>> bad{
      {},
      {"--input", camera},
      {"--input", camera, "--entropy", "shannon", "--index", "0.5"},
      {"--input", camera, "--entropy", "tsallis"},
      {"--input", camera, "--entropy", "renyi"},
      {"--input", camera, "--mode", "sweep", "--entropy", "shannon", "--grid-default"},
      {"--input", camera, "--mode", "sweep", "--entropy", "tsallis"},
      {"--input", camera, "--mode", "compare", "--grid", ""},
      {"--input", camera, "--mode", "compare", "--grid", " , "},
      {"--input", camera, "--mode", "compare", "--grid", "0.1,abc"},
      {"--input", camera, "--mode", "compare", "--grid", "0.1,0.1"},
      {"--input", camera, "--mode", "compare", "--grid", "0.5,1.2"},
      {"--input", camera, "--mode", "compare", "--grid", "0.5", "--grid-default"},
      {"--input", camera, "--mode", "compare", "--entropy", "tsallis", "--grid-default"},
      {"--input", camera, "--mode", "compare", "--grid-default", "--out-image", "x.pgm"},
      {"--input", camera, "--mode", "compare", "--grid-default", "--connectivity", "6"},
      {"--input", camera, "--mode", "compare", "--grid-default", "--jump-tolerance", "-1"},
  };
  for (const auto& args : bad) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    CHECK(invoke(args).status == kExitUsage);
  }
}

TEST_CASE("input, infeasible and output statuses") {
  CHECK(invoke({"--input", scratch("missing.pgm").string(), "--entropy", "shannon"})
            .status == kExitInput);
  CHECK(invoke({"--input", (kFixtures / "README.md").string(), "--entropy", "shannon"})
            .status == kExitInput);
  CHECK(invoke({"--input", flat_image().string(), "--entropy", "shannon"}).status ==
        kExitInfeasible);
  CHECK(invoke({"--input", flat_image().string(), "--mode", "compare", "--grid-default"})
            .status == kExitInfeasible);

  const auto unwritable = scratch("no-dir") / "deeper" / "report.csv";
  const auto r = invoke({"--input", (kFixtures / "two_tone.pgm").string(), "--mode",
                         "compare", "--grid-default", "--report", unwritable.string()});
  CHECK(r.status == kExitOutput);
  CHECK_FALSE(fs::exists(unwritable));
  CHECK(invoke({"--input", (kFixtures / "two_tone.pgm").string(), "--entropy", "shannon",
                "--out-image", unwritable.string()})
            .status == kExitOutput);
}

TEST_CASE("failed runs leave an existing report untouched") {
  const auto report = scratch("keep.csv");
  std::ofstream(report) << "previous";
  CHECK(invoke({"--input", flat_image().string(), "--mode", "compare", "--grid-default",
                "--report", report.string()})
            .status == kExitInfeasible);
  CHECK(slurp(report) == "previous");
}

TEST_CASE("transition warnings") {
  const auto r = invoke({"--input", (kFixtures / "cameraman.pgm").string(), "--mode",
                         "sweep", "--entropy", "tsallis", "--grid-default",
                         "--jump-tolerance", "0"});
  REQUIRE(r.status == kExitOk);
  CHECK(r.err.find("warning: tsallis threshold jumps") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("--grid-default") != std::string::npos);
}
