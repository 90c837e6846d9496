#pragma once

#include <filesystem>
#include <string>

namespace dca {

std::string read_text_file(const std::filesystem::path& path);

// Writes via temp-file + rename so concurrent readers never see partial content.
void write_text_file(const std::filesystem::path& path, const std::string& content);

void ensure_directory(const std::filesystem::path& dir);

} // namespace dca
