#ifndef STDFF_ERRORS_HPP
#define STDFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stdff {

// A required table entry or factorization is not available.
struct MissingDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation was abandoned because it exceeded its effort budget.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or invalid table file content; carries the offending line.
struct TableFormatError : std::runtime_error {
    TableFormatError(const std::string& path, unsigned long line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    unsigned long line_number;
};

}  // namespace stdff

#endif
