#include "scatter/csv.hpp"

#include <charconv>
#include <ostream>

#include "scatter/errors.hpp"

namespace scatter {

std::uint64_t config_hash(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw Error("format_double failed");
    return std::string(buf, p);
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& columns,
                     const std::string& config_hash_hex)
    : os_(os), ncols_(columns.size()) {
    os_ << "# config=" << (config_hash_hex.empty() ? "none" : config_hash_hex)
        << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != ncols_)
        throw InvalidArgumentError("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
        os_ << format_double(values[i]) << (i + 1 < values.size() ? "," : "\n");
}

void CsvWriter::raw_row(const std::string& line) { os_ << line << "\n"; }

}  // namespace scatter
