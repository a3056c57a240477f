#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdgsrrf {

/// Base class for all recoverable data and validation failures raised by the
/// library. Each error carries a stable machine-readable code alongside the
/// human-readable message; the CLI maps any Error to exit status 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// A domain type was constructed with a violated invariant. The message names
/// the offending field.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& message)
        : Error("validation", "invalid field '" + field + "': " + message),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class MalformedRow : public Error {
public:
    MalformedRow(std::size_t line, const std::string& message)
        : Error("malformed_row", "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateKey : public Error {
public:
    DuplicateKey(const std::string& indicator, const std::string& geo, int year)
        : Error("duplicate_key", "duplicate observation key (" + indicator + ", " + geo +
                                     ", " + std::to_string(year) + ")") {}
};

class NonFiniteValue : public Error {
public:
    explicit NonFiniteValue(const std::string& context)
        : Error("non_finite_value", "non-finite value: " + context) {}
};

class EmptyPool : public Error {
public:
    explicit EmptyPool(const std::string& indicator)
        : Error("empty_pool", "no observations to pool for indicator " + indicator) {}
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what)
        : Error("empty_input", what + " requires at least one element") {}
};

class DegenerateGoalposts : public Error {
public:
    DegenerateGoalposts(const std::string& indicator, double g1, double g2)
        : Error("degenerate_goalposts", "indicator " + indicator + ": lower goalpost " +
                                            std::to_string(g1) + " >= upper goalpost " +
                                            std::to_string(g2)) {}
};

class NonFiniteInput : public Error {
public:
    explicit NonFiniteInput(const std::string& context)
        : Error("non_finite_input", "non-finite input: " + context) {}
};

class MissingGoalposts : public Error {
public:
    explicit MissingGoalposts(const std::string& indicator)
        : Error("missing_goalposts", "no goalposts for indicator " + indicator),
          indicator_(indicator) {}

    const std::string& indicator() const noexcept { return indicator_; }

private:
    std::string indicator_;
};

class NegativeScore : public Error {
public:
    explicit NegativeScore(double value)
        : Error("negative_score",
                "normalized scores must be non-negative, got " + std::to_string(value)) {}
};

struct CellKey {
    std::string geo;
    int year = 0;
    std::string indicator;
};

/// Raised by the index computation when score cells are missing; lists every
/// gap rather than the first one found.
class MissingCell : public Error {
public:
    explicit MissingCell(std::vector<CellKey> gaps)
        : Error("missing_cell", describe(gaps)), gaps_(std::move(gaps)) {}

    const std::vector<CellKey>& gaps() const noexcept { return gaps_; }

private:
    static std::string describe(const std::vector<CellKey>& gaps);
    std::vector<CellKey> gaps_;
};

class ZeroScore : public Error {
public:
    explicit ZeroScore(const std::string& indicator)
        : Error("zero_score",
                "indicator " + indicator + " has a non-positive score; log-decomposition "
                                           "is undefined") {}
};

class InsufficientGeos : public Error {
public:
    explicit InsufficientGeos(int year)
        : Error("insufficient_geos", "gap metrics for year " + std::to_string(year) +
                                         " need at least two geographies") {}
};

class UnparseableCode : public Error {
public:
    UnparseableCode(const std::string& text, std::size_t position, const std::string& reason)
        : Error("unparseable_code", "cannot parse measure code '" + text + "' at position " +
                                        std::to_string(position) + ": " + reason),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace sdgsrrf
