#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace eot {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Collapse whitespace runs to single spaces and trim the ends.
std::string collapse_ws(std::string_view s);

std::vector<std::string> split_lines(std::string_view text);
std::string replace_all(std::string text, std::string_view from, std::string_view to);
bool contains_ci(std::string_view haystack, std::string_view needle);
std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

std::uint64_t fnv1a64(std::string_view data);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Run fn(i) for i in [0, total) with at most `concurrency` worker threads.
// The first exception thrown by any task is rethrown after all workers join.
void parallel_for_index(int total, int concurrency, const std::function<void(int)>& fn);

} // namespace eot
