#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace qgf {

/// Shortest round-trip decimal form of a double ('.' decimal separator),
/// so identical numbers serialize to identical text.
std::string format_double(double v);

std::uint64_t fnv1a_hash(const std::string& text);

/// Comma-separated writer with '#'-prefixed metadata lines.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void comment(const std::string& text);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);

private:
    std::ofstream out_;
    std::string path_;
};

} // namespace qgf
