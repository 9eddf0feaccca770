#pragma once

#include <cstdint>
#include <filesystem>
#include <span>

namespace entrothresh::detail {

// Writes to a sibling "<path>.tmp" and renames it over `path`. On failure
// the temporary is removed and `path` is left untouched.
void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes);

}  // namespace entrothresh::detail
