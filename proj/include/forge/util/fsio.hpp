#pragma once

#include <filesystem>
#include <string>

namespace forge::util {

// Whole-file read; throws forge::Error if the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

// Writes content to a sibling temp file and renames it into place, so a
// crashed or interrupted stage never leaves a half-written artifact.
// Content is written byte for byte (binary mode, LF endings preserved).
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace forge::util
