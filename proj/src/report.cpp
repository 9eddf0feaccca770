#include "entrothresh/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <vector>

#include "entrothresh/error.hpp"
#include "file_io.hpp"

namespace entrothresh {

namespace {

constexpr std::string_view kIndexColumn = "index";

struct Column {
  std::string_view threshold;
  std::string_view edges;
};

constexpr Column kTsallisColumns{"threshold_tsallis", "edges_tsallis"};
constexpr Column kKaniadakisColumns{"threshold_kaniadakis", "edges_kaniadakis"};

void check_tables(const ReportTables& tables) {
  if (!tables.tsallis && !tables.kaniadakis) {
    throw Error(ErrorCode::InvalidArgument, "report needs at least one table");
  }
  if (tables.tsallis && tables.tsallis->kind() != EntropyKind::Tsallis) {
    throw Error(ErrorCode::InvalidArgument, "tsallis slot holds another kind");
  }
  if (tables.kaniadakis &&
      tables.kaniadakis->kind() != EntropyKind::Kaniadakis) {
    throw Error(ErrorCode::InvalidArgument, "kaniadakis slot holds another kind");
  }
  if (tables.tsallis && tables.kaniadakis) {
    const auto& t = *tables.tsallis;
    const auto& k = *tables.kaniadakis;
    bool same = t.size() == k.size();
    for (std::size_t i = 0; same && i < t.size(); ++i) {
      same = t[i].index == k[i].index;
    }
    if (!same) {
      throw Error(ErrorCode::InvalidArgument,
                  "paired tables must share the same index grid");
    }
  }
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw Error(ErrorCode::MalformedHeader,
                "line " + std::to_string(line_no) + ": cannot parse '" +
                    std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string format_index(double index) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, index);
  if (ec != std::errc()) {
    throw Error(ErrorCode::InvalidArgument, "cannot format index");
  }
  return std::string(buf, ptr);
}

std::string format_csv(const ReportTables& tables) {
  check_tables(tables);
  std::string out(kIndexColumn);
  for (const auto* cols : {tables.tsallis ? &kTsallisColumns : nullptr,
                           tables.kaniadakis ? &kKaniadakisColumns : nullptr}) {
    if (!cols) continue;
    out += ',';
    out += cols->threshold;
    out += ',';
    out += cols->edges;
  }
  out += '\n';

  const SweepTable& grid = tables.tsallis ? *tables.tsallis : *tables.kaniadakis;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out += format_index(grid[i].index);
    for (const auto* table : {tables.tsallis ? &*tables.tsallis : nullptr,
                              tables.kaniadakis ? &*tables.kaniadakis : nullptr}) {
      if (!table) continue;
      out += ',';
      out += std::to_string((*table)[i].threshold);
      out += ',';
      out += std::to_string((*table)[i].edge_pixels);
    }
    out += '\n';
  }
  return out;
}

ReportTables parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  if (lines.empty()) {
    throw Error(ErrorCode::MalformedHeader, "CSV report is empty");
  }

  const auto header = split_fields(lines.front());
  const bool has_t = header.size() >= 3 && header[1] == kTsallisColumns.threshold &&
                     header[2] == kTsallisColumns.edges;
  const std::size_t k_at = has_t ? 3 : 1;
  const bool has_k = header.size() >= k_at + 2 &&
                     header[k_at] == kKaniadakisColumns.threshold &&
                     header[k_at + 1] == kKaniadakisColumns.edges;
  const std::size_t width = 1 + 2 * (has_t ? 1 : 0) + 2 * (has_k ? 1 : 0);
  if (header.empty() || header[0] != kIndexColumn || (!has_t && !has_k) ||
      header.size() != width) {
    throw Error(ErrorCode::MalformedHeader,
                "unrecognized CSV header: " + std::string(lines.front()));
  }

  std::vector<SweepRow> t_rows;
  std::vector<SweepRow> k_rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != width) {
      throw Error(ErrorCode::MalformedHeader,
                  "line " + std::to_string(i + 1) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(width));
    }
    const double index = parse_number<double>(fields[0], i + 1);
    std::size_t col = 1;
    if (has_t) {
      t_rows.push_back(SweepRow{index, parse_number<int>(fields[col], i + 1),
                                parse_number<std::uint64_t>(fields[col + 1], i + 1)});
      col += 2;
    }
    if (has_k) {
      k_rows.push_back(SweepRow{index, parse_number<int>(fields[col], i + 1),
                                parse_number<std::uint64_t>(fields[col + 1], i + 1)});
    }
  }

  ReportTables tables;
  try {
    if (has_t) tables.tsallis.emplace(EntropyKind::Tsallis, std::move(t_rows));
    if (has_k) tables.kaniadakis.emplace(EntropyKind::Kaniadakis, std::move(k_rows));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedHeader, e.what());
  }
  return tables;
}

void emit_csv(const ReportTables& tables, const std::filesystem::path& path) {
  const std::string text = format_csv(tables);
  detail::write_file_atomic(
      path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                      text.size()));
}

ReportTables read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::FileNotFound, "cannot open " + path.string());
  }
  const std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_csv(text);
}

}  // namespace entrothresh
