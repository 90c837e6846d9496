#include "common/fsio.hpp"

#include "common/error.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

namespace dca {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    static std::atomic<unsigned> counter{0};
    if (path.has_parent_path()) {
        ensure_directory(path.parent_path());
    }
    const auto tmp = path.parent_path() /
        (path.filename().string() + ".tmp" + std::to_string(counter.fetch_add(1)));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InternalError("cannot write file: " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw InternalError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InternalError("rename failed for " + path.string() + ": " + ec.message());
    }
}

void ensure_directory(const std::filesystem::path& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec && !std::filesystem::is_directory(dir)) {
        throw InternalError("cannot create directory " + dir.string() + ": " + ec.message());
    }
}

} // namespace dca
