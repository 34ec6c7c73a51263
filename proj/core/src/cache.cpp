#include "gdpoly/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace gdpoly {

namespace fs = std::filesystem;

void atomic_write(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    std::random_device rd;
    const fs::path tmp =
        target.parent_path() /
        (target.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("rename to " + path + " failed: " +
                                 ec.message());
    }
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string gd_table_cache_path(const std::string& dir) {
    return (fs::path(dir) / "gd_table.json").string();
}

GDTable load_or_compute_gd_table(const std::string& dir, int max_n,
                                 std::string* warning) {
    if (warning) warning->clear();
    if (dir.empty()) {
        GDTable t;
        t.extend(max_n);
        return t;
    }
    const std::string path = gd_table_cache_path(dir);
    GDTable table;
    bool loaded = false;
    if (auto content = read_file(path)) {
        try {
            table = GDTable::from_json(*content);
            loaded = true;
        } catch (const std::exception& e) {
            if (warning)
                *warning = "cache at " + path +
                           " ignored (recomputing): " + e.what();
        }
    }
    const bool needs_extend = table.max_n() < max_n;
    table.extend(max_n);
    if (!loaded || needs_extend) atomic_write(path, table.to_json());
    return table;
}

}  // namespace gdpoly
