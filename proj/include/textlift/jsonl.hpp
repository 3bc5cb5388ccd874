#pragma once

#include "json.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace textlift::jsonl {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

/// Calls `fn(record, line_no)` for every non-empty line. Parse failures
/// raise a data error carrying file + line locus.
void for_each_record(const std::filesystem::path& path,
                     const std::function<void(const json&, size_t)>& fn);

std::vector<json> read_all(const std::filesystem::path& path);

/// Writes records one per line via a temp file + rename, so readers never
/// observe a partially written store.
void write_all(const std::filesystem::path& path, const std::vector<ojson>& records);

std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace textlift::jsonl
