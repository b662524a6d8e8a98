#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace scatter {

// FNV-1a of a canonical config string; printed into every CSV header.
std::uint64_t config_hash(const std::string& canonical);
std::string hash_hex(std::uint64_t h);

// Shortest round-trip decimal formatting, reproducible across runs.
std::string format_double(double v);

// Writes "# config=<hash>" then a named header row, then rows of
// format_double-rendered values.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& columns,
              const std::string& config_hash_hex);
    void row(const std::vector<double>& values);
    void raw_row(const std::string& line);

private:
    std::ostream& os_;
    std::size_t ncols_;
};

}  // namespace scatter
