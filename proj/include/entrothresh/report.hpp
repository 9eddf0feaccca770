#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "entrothresh/sweep.hpp"

namespace entrothresh {

// Either table may be absent, but not both. When both are present they must
// share the index grid.
struct ReportTables {
  std::optional<SweepTable> tsallis;
  std::optional<SweepTable> kaniadakis;
};

// Shortest decimal that round-trips to `index` (0.99 prints as "0.99").
std::string format_index(double index);

// Header: index,threshold_tsallis,edges_tsallis,threshold_kaniadakis,edges_kaniadakis
// with the absent pair omitted for single-functional reports.
std::string format_csv(const ReportTables& tables);

// Inverse of format_csv. Throws MalformedHeader on anything it did not write.
ReportTables parse_csv(std::string_view text);

// Validates, formats and then writes via a temporary + rename, so no file is
// created when the tables are rejected or the write fails.
void emit_csv(const ReportTables& tables, const std::filesystem::path& path);

ReportTables read_csv(const std::filesystem::path& path);

}  // namespace entrothresh
