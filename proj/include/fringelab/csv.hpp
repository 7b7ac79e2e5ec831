#pragma once

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fringelab/errors.hpp"

namespace fringelab {

// Shortest round-trip decimal form of a double (std::to_chars). The format
// is locale-independent and canonical, so writing the same value always
// yields the same bytes and re-parsing recovers the value exactly.
inline std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

// Strict full-token parse; returns false on any trailing garbage.
inline bool parse_double(std::string_view token, double& out) {
    // from_chars rejects leading '+' and whitespace; trim and handle '+'.
    std::size_t begin = token.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return false;
    std::size_t end = token.find_last_not_of(" \t\r");
    token = token.substr(begin, end - begin + 1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return false;
    auto res = std::from_chars(token.data(), token.data() + token.size(), out);
    return res.ec == std::errc() && res.ptr == token.data() + token.size();
}

inline std::vector<std::string_view> split_fields(std::string_view line, char delim = ',') {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline std::string strip_eol(std::string line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return line;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Reads a numeric CSV with a mandatory header line. Column count of each
// row must match the header. Blank lines are skipped.
inline CsvTable read_numeric_csv(const std::filesystem::path& path,
                                 std::string_view expected_header) {
    std::ifstream in(path);
    if (!in) {
        throw CsvError(CsvError::Code::missing_file,
                       "cannot open CSV file: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw CsvError(CsvError::Code::bad_header,
                       path.string() + ": empty file, expected header '" +
                           std::string(expected_header) + "'");
    }
    line = strip_eol(line);
    if (line != expected_header) {
        throw CsvError(CsvError::Code::bad_header,
                       path.string() + ": bad header '" + line + "', expected '" +
                           std::string(expected_header) + "'");
    }
    CsvTable table;
    for (auto field : split_fields(line)) table.header.emplace_back(field);

    const std::size_t n_cols = table.header.size();
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_eol(line);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != n_cols) {
            std::ostringstream msg;
            msg << path.string() << ":" << line_no << ": expected " << n_cols
                << " fields, got " << fields.size();
            throw CsvError(CsvError::Code::bad_row, msg.str());
        }
        std::vector<double> row(n_cols);
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (!parse_double(fields[c], row[c])) {
                std::ostringstream msg;
                msg << path.string() << ":" << line_no << ": column '"
                    << table.header[c] << "' holds non-numeric value '"
                    << std::string(fields[c]) << "'";
                throw CsvError(CsvError::Code::malformed_number, msg.str());
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << text;
}

}  // namespace fringelab
