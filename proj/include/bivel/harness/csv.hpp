/// @file csv.hpp
/// @brief RFC-4180-style CSV output with locale-independent full precision.

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace bivel::harness {

/// Formats with %.17g: round-trips any double, '.' decimal separator.
std::string format_double(double value);

/// Quotes and escapes a field when it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

/// Streams one CSV file: header row in the constructor, then data rows.
/// Lines end with CRLF; fields are escaped per RFC 4180. Throws
/// std::runtime_error when the file cannot be opened or written.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& cells);
    void row(const std::vector<double>& values);

    /// Flushes and verifies stream health; called by the destructor too.
    void close();

    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

private:
    void write_line(const std::vector<std::string>& cells);

    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t columns_ = 0;
};

} // namespace bivel::harness
