#include "rydsim/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rydsim::io {

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_config(const std::string& text,
                  const std::vector<std::string>& allowed) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) ==
            allowed.end())
            throw ConfigError("unknown config key: " + it.key());
    }
    return j;
}

CsvWriter::CsvWriter(std::string path, std::vector<std::string> columns)
    : path_(std::move(path)), columns_(std::move(columns)) {}

void CsvWriter::meta(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
}

void CsvWriter::row(const std::vector<double>& values) {
    rows_.push_back(values);
}

void CsvWriter::write() {
    std::ofstream out(path_);
    if (!out) throw ConfigError("cannot write file: " + path_);
    for (const auto& [k, v] : meta_) out << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
    out.precision(17);
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out << r[i] << (i + 1 < r.size() ? "," : "\n");
    }
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create directory " + dir);
}

} // namespace rydsim::io
