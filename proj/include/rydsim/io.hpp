#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydsim/types.hpp"

namespace rydsim::io {

using json = nlohmann::json;

// FNV-1a 64-bit over raw bytes; used to fingerprint catalogs and configs.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

std::string read_file(const std::string& path); // throws ConfigError

// Parses JSON and rejects any key not in `allowed` (top level).
json parse_config(const std::string& text,
                  const std::vector<std::string>& allowed);

// Column-oriented CSV with "# key=value" metadata header lines.
class CsvWriter {
  public:
    CsvWriter(std::string path, std::vector<std::string> columns);
    void meta(const std::string& key, const std::string& value);
    void row(const std::vector<double>& values);
    void write(); // flush to disk

  private:
    std::string path_;
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::vector<double>> rows_;
};

void write_json(const std::string& path, const json& j);
void ensure_dir(const std::string& dir);

} // namespace rydsim::io
