#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Small RFC-4180-ish CSV layer: comma (or caller-chosen) delimiter, optional
// double-quote escaping, UTF-8 passthrough, '.' decimal separator. This is
// all the tidy fixtures need; no attempt at a general-purpose CSV library.

namespace sdgsrrf::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based physical line of the first character
};

class Reader {
public:
    explicit Reader(std::istream& in, char delimiter = ',');

    /// Next record, or nullopt at end of input. Blank lines are skipped.
    std::optional<Row> next();

private:
    std::istream& in_;
    char delimiter_;
    std::size_t line_ = 0;
};

void write_row(std::ostream& out, std::span<const std::string> fields, char delimiter = ',');

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Fixed-point presentation formatting (one decimal in the report emitters).
std::string format_fixed(double value, int decimals);

/// Strict double parse of a full field; throws MalformedRow on failure.
double parse_double(std::string_view field, std::size_t line);

int parse_int(std::string_view field, std::size_t line);

bool is_missing(std::string_view field);  // empty cell or literal NA

}  // namespace sdgsrrf::csv
