#include "zkmatch/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace zkmatch {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("io: cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("io: cannot write '" + path + "'");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw InputError("io: short write to '" + path + "'");
    }
}

Corpus load_corpus(const std::string& path) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
        std::vector<std::string> names;
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.is_regular_file()) names.push_back(entry.path().filename().string());
        }
        std::sort(names.begin(), names.end());
        if (names.empty()) {
            throw InputError("io: corpus directory '" + path + "' contains no files");
        }
        std::vector<std::string> docs;
        docs.reserve(names.size());
        for (const std::string& name : names) {
            docs.push_back(read_file((fs::path(path) / name).string()));
        }
        return Corpus(std::move(names), std::move(docs));
    }

    std::string all = read_file(path);
    std::vector<std::string> ids, docs;
    std::size_t start = 0;
    while (start <= all.size()) {
        std::size_t nl = all.find('\n', start);
        std::size_t end = (nl == std::string::npos) ? all.size() : nl;
        // Drop only the phantom segment after a terminal newline.
        if (end == all.size() && start == all.size() && !docs.empty()) break;
        ids.push_back(std::to_string(docs.size()));
        docs.push_back(all.substr(start, end - start));
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return Corpus(std::move(ids), std::move(docs));
}

std::string parse_pattern_literal(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != '\\') {
            out.push_back(raw[i]);
            continue;
        }
        if (i + 1 < raw.size() && raw[i + 1] == '\\') {
            out.push_back('\\');
            ++i;
            continue;
        }
        if (i + 3 < raw.size() && raw[i + 1] == 'x') {
            out += hex_to_bytes(raw.substr(i + 2, 2));
            i += 3;
            continue;
        }
        throw InputError("io: invalid escape in pattern literal (use \\xNN or \\\\)");
    }
    return out;
}

std::vector<std::string> load_patterns(const std::string& path) {
    std::string all = read_file(path);
    std::vector<std::string> patterns;
    std::size_t start = 0;
    while (start < all.size()) {
        std::size_t nl = all.find('\n', start);
        std::size_t end = (nl == std::string::npos) ? all.size() : nl;
        std::string_view line(all.data() + start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) patterns.push_back(parse_pattern_literal(line));
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return patterns;
}

std::string bytes_to_hex(std::string_view bytes) {
    std::string hex;
    hex.reserve(bytes.size() * 2);
    for (char ch : bytes) {
        auto b = static_cast<std::uint8_t>(ch);
        hex.push_back("0123456789abcdef"[b >> 4]);
        hex.push_back("0123456789abcdef"[b & 0xf]);
    }
    return hex;
}

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw InputError("io: invalid hex digit");
}

} // namespace

std::string hex_to_bytes(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw InputError("io: hex string must have even length");
    }
    std::string bytes;
    bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        bytes.push_back(static_cast<char>(hex_nibble(hex[i]) * 16 + hex_nibble(hex[i + 1])));
    }
    return bytes;
}

} // namespace zkmatch
