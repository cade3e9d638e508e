#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace testutil {

// Fresh directory under the system temp root; callers may leave it
// behind, the names never collide.
inline std::filesystem::path unique_temp_dir(const std::string& stem) {
    static std::mt19937_64 eng(std::random_device{}());
    const auto p =
        std::filesystem::temp_directory_path() / (stem + "_" + std::to_string(eng()));
    std::filesystem::create_directories(p);
    return p;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil
