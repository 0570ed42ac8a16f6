#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zkmatch/hashmatch.hpp"

namespace zkmatch {

/// Corpus ingestion. A directory loads one document per regular file
/// (top level only, lexicographic filename order, id = filename); a plain
/// file is split on newlines (id = zero-based line number).
Corpus load_corpus(const std::string& path);

/// Pattern file: one pattern per line; supports \xNN hex escapes and \\ for
/// a literal backslash. Empty lines are skipped.
std::vector<std::string> load_patterns(const std::string& path);

/// Unescape a single pattern literal (\xNN and \\).
std::string parse_pattern_literal(std::string_view raw);

std::string bytes_to_hex(std::string_view bytes);
std::string hex_to_bytes(std::string_view hex);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace zkmatch
