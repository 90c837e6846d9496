#pragma once

#include <filesystem>
#include <string>

namespace dca {

// Hex-encoded SHA-256. Used for cache keys and output-manifest content hashes.
std::string sha256_hex(const std::string& data);

std::string sha256_file_hex(const std::filesystem::path& path);

} // namespace dca
