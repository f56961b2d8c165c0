/// @file csv.cpp
/// @brief RFC-4180-style CSV output with locale-independent full precision.

#include "bivel/harness/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace bivel::harness {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string csv_escape(const std::string& field) {
    const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary), columns_(header.size()) {
    if (!out_) {
        throw std::runtime_error("cannot open CSV file for writing: " + path.string());
    }
    if (header.empty()) {
        throw std::runtime_error("CSV header row must not be empty: " + path.string());
    }
    write_line(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) {
        throw std::runtime_error("CSV row width " + std::to_string(cells.size()) +
                                 " does not match header width " + std::to_string(columns_) +
                                 " in " + path_.string());
    }
    write_line(cells);
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_double(v));
    row(cells);
}

void CsvWriter::write_line(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << csv_escape(cells[i]);
    }
    out_ << "\r\n";
    if (!out_) {
        throw std::runtime_error("write failure on CSV file: " + path_.string());
    }
}

void CsvWriter::close() {
    if (out_.is_open()) {
        out_.flush();
        const bool ok = static_cast<bool>(out_);
        out_.close();
        if (!ok) {
            throw std::runtime_error("write failure on CSV file: " + path_.string());
        }
    }
}

CsvWriter::~CsvWriter() {
    try {
        close();
    } catch (...) {
        // Destructors must not throw; close() explicitly to observe failures.
    }
}

} // namespace bivel::harness
