#pragma once

#include "gdpoly/gd_table.hpp"

#include <optional>
#include <string>

namespace gdpoly {

// Writes content to path via a temp file in the same directory plus rename,
// so readers never observe a partial file.
void atomic_write(const std::string& path, const std::string& content);

std::optional<std::string> read_file(const std::string& path);

// Loads dir/gd_table.json when present and valid, extends it to max_n, and
// persists the result. A missing, corrupt, or version-mismatched cache falls
// back to a fresh computation (never a wrong answer); *warning explains why.
// An empty dir disables persistence.
GDTable load_or_compute_gd_table(const std::string& dir, int max_n,
                                 std::string* warning = nullptr);

std::string gd_table_cache_path(const std::string& dir);

}  // namespace gdpoly
