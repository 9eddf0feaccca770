#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "entrothresh/error.hpp"
#include "entrothresh/report.hpp"

namespace fs = std::filesystem;
using namespace entrothresh;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "entrothresh_test_report";
  fs::create_directories(dir);
  return dir / name;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an entrothresh::Error");
  return ErrorCode::InvalidArgument;
}

SweepTable table_of(EntropyKind kind, std::vector<double> idx, std::vector<int> thr,
                    std::vector<std::uint64_t> edges) {
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < idx.size(); ++i) rows.push_back({idx[i], thr[i], edges[i]});
  return SweepTable(kind, std::move(rows));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("format_index prints the shortest round-trip decimal") {
  CHECK(format_index(0.99) == "0.99");
  CHECK(format_index(0.01) == "0.01");
  CHECK(format_index(0.5) == "0.5");
  CHECK(format_index(0.55) == "0.55");
  CHECK(format_index(1.0 - 0.01) == "0.99");
  CHECK(format_index(2.0) == "2");
}

TEST_CASE("compare report layout") {
  ReportTables tables{table_of(EntropyKind::Tsallis, {0.5}, {160}, {4895}),
                      table_of(EntropyKind::Kaniadakis, {0.5}, {160}, {4895})};
  CHECK(format_csv(tables) ==
        "index,threshold_tsallis,edges_tsallis,threshold_kaniadakis,"
        "edges_kaniadakis\n0.5,160,4895,160,4895\n");
}

TEST_CASE("single-functional reports have three columns") {
  const ReportTables t{table_of(EntropyKind::Tsallis, {0.1, 0.2}, {3, 4}, {5, 6}),
                       std::nullopt};
  CHECK(format_csv(t) == "index,threshold_tsallis,edges_tsallis\n0.1,3,5\n0.2,4,6\n");
  const ReportTables k{std::nullopt,
                       table_of(EntropyKind::Kaniadakis, {0.3}, {9}, {1})};
  CHECK(format_csv(k) == "index,threshold_kaniadakis,edges_kaniadakis\n0.3,9,1\n");
  CHECK(code_of([] { format_csv(ReportTables{}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("tables must be in the right slots") {
  const ReportTables swapped{table_of(EntropyKind::Kaniadakis, {0.1}, {1}, {1}),
                             std::nullopt};
  CHECK(code_of([&] { format_csv(swapped); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("mismatched grids are rejected and nothing is written") {
  const ReportTables tables{table_of(EntropyKind::Tsallis, {0.1, 0.2}, {1, 2}, {3, 4}),
                            table_of(EntropyKind::Kaniadakis, {0.1, 0.3}, {1, 2}, {3, 4})};
  const auto p = scratch("mismatch.csv");
  fs::remove(p);
  CHECK(code_of([&] { emit_csv(tables, p); }) == ErrorCode::InvalidArgument);
  CHECK_FALSE(fs::exists(p));
  CHECK_FALSE(fs::exists(p.string() + ".tmp"));
}

TEST_CASE("emit_csv writes atomically and reports I/O failures") {
  const ReportTables t{table_of(EntropyKind::Tsallis, {0.25}, {17}, {2}), std::nullopt};
  const auto p = scratch("ok.csv");
  emit_csv(t, p);
  CHECK(slurp(p) == format_csv(t));
  CHECK_FALSE(fs::exists(p.string() + ".tmp"));

  const auto bad = scratch("missing-dir") / "x" / "r.csv";
  CHECK(code_of([&] { emit_csv(t, bad); }) == ErrorCode::Io);
  CHECK(code_of([&] { read_csv(scratch("nope.csv")); }) == ErrorCode::FileNotFound);
}

TEST_CASE("parse_csv rejects foreign text") {
  for (const char* text : {"", "a,b,c\n1,2,3\n", "index,threshold_tsallis,edges_tsallis\n0.1,x,3\n",
                           "index,threshold_tsallis,edges_tsallis\n0.1,2\n",
                           "index,threshold_tsallis,edges_tsallis\n0.2,1,1\n0.1,1,1\n"}) {
    CAPTURE(text);
    CHECK(code_of([&] { parse_csv(text); }) == ErrorCode::MalformedHeader);
  }
}

TEST_CASE("format then parse reproduces the tables") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> thr(0, 254);
  std::uniform_int_distribution<std::uint64_t> edges(0, 512 * 512);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> grid;
    for (int i = 0; i < 1 + trial % 15; ++i) {
      double x = u(rng);
      if (x == 0.0) x = 0.5;
      grid.push_back(x);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<SweepRow> tr, kr;
    for (double x : grid) {
      tr.push_back({x, thr(rng), edges(rng)});
      kr.push_back({x, thr(rng), edges(rng)});
    }
    ReportTables tables{SweepTable(EntropyKind::Tsallis, tr),
                        SweepTable(EntropyKind::Kaniadakis, kr)};
    if (trial % 3 == 1) tables.tsallis.reset();
    if (trial % 3 == 2) tables.kaniadakis.reset();

    const auto back = parse_csv(format_csv(tables));
    CHECK(back.tsallis == tables.tsallis);
    CHECK(back.kaniadakis == tables.kaniadakis);

    const auto p = scratch("roundtrip.csv");
    emit_csv(tables, p);
    const auto from_disk = read_csv(p);
    CHECK(from_disk.tsallis == tables.tsallis);
    CHECK(from_disk.kaniadakis == tables.kaniadakis);
  }
}
