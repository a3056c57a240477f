#include "sdgsrrf/csv.hpp"

#include "sdgsrrf/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace sdgsrrf::csv {

Reader::Reader(std::istream& in, char delimiter) : in_(in), delimiter_(delimiter) {}

std::optional<Row> Reader::next() {
    std::string raw;
    while (std::getline(in_, raw)) {
        ++line_;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;

        Row row;
        row.line = line_;
        std::string field;
        bool quoted = false;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            char c = raw[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < raw.size() && raw[i + 1] == '"') {
                        field += '"';
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    field += c;
                }
                // a quoted field may span physical lines; splice the next one
                // in and let the loop consume the newline
                if (quoted && i + 1 == raw.size()) {
                    std::string continuation;
                    if (!std::getline(in_, continuation)) break;
                    ++line_;
                    if (!continuation.empty() && continuation.back() == '\r')
                        continuation.pop_back();
                    raw += '\n';
                    raw += continuation;
                }
            } else if (c == '"' && field.empty()) {
                quoted = true;
            } else if (c == delimiter_) {
                row.fields.push_back(std::move(field));
                field.clear();
            } else {
                field += c;
            }
        }
        if (quoted) throw MalformedRow(row.line, "unterminated quoted field");
        row.fields.push_back(std::move(field));
        return row;
    }
    return std::nullopt;
}

void write_row(std::ostream& out, std::span<const std::string> fields, char delimiter) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << delimiter;
        const std::string& f = fields[i];
        bool needs_quotes = f.find_first_of("\"\n") != std::string::npos ||
                            f.find(delimiter) != std::string::npos;
        if (!needs_quotes) {
            out << f;
            continue;
        }
        out << '"';
        for (char c : f) {
            if (c == '"') out << '"';
            out << c;
        }
        out << '"';
    }
    out << '\n';
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    std::string s = buf;
    if (s == "-0" || s.rfind("-0.", 0) == 0) {
        bool all_zero = true;
        for (char c : s)
            if (c != '-' && c != '0' && c != '.') all_zero = false;
        if (all_zero) s.erase(0, 1);
    }
    return s;
}

double parse_double(std::string_view field, std::size_t line) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw MalformedRow(line, "not a number: '" + std::string(field) + "'");
    return value;
}

int parse_int(std::string_view field, std::size_t line) {
    int value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw MalformedRow(line, "not an integer: '" + std::string(field) + "'");
    return value;
}

bool is_missing(std::string_view field) { return field.empty() || field == "NA"; }

}  // namespace sdgsrrf::csv
