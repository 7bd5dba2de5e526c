#ifndef STDFF_FACTOR_DB_HPP
#define STDFF_FACTOR_DB_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "stdff/errors.hpp"
#include "stdff/natural.hpp"

namespace stdff {

// Outcome of a bounded factoring attempt. When the effort budget ran out,
// the unfactored composite part is reported in cofactor (1 when complete),
// so factors.value() * cofactor always reproduces the input.
struct PartialFactorization {
    Factorization factors;
    Natural cofactor = 1;

    bool complete() const { return cofactor == 1; }
};

inline constexpr std::uint64_t kDefaultFactorBudget = 4'000'000;

// Trial division up to 10^5 followed by Pollard rho (Brent variant) with a
// deterministic parameter schedule; budget caps the total rho iterations.
PartialFactorization factorize(const Natural& n, std::uint64_t budget = kDefaultFactorBudget);

enum class FactorProvenance { computed, loaded };

// Factorizations of p^n - 1, merged from table files and local factoring.
// File format, one entry per line:
//     <p> <n>: <f1>[^e1] <f2>[^e2] ...
// '#' starts a comment, blank lines are ignored. Entries are validated on
// load: every factor must be prime and the product must equal p^n - 1.
class FactorTable {
public:
    void load_file(const std::string& path);

    // Returns the stored factorization, falling back to local factoring
    // within the default budget; throws MissingDataError when the number
    // cannot be fully factored.
    const Factorization& lookup(const Natural& p, unsigned n);

    // Table contents only, no local factoring.
    std::optional<Factorization> find(const Natural& p, unsigned n) const;
    std::optional<FactorProvenance> provenance(const Natural& p, unsigned n) const;

    std::size_t size() const { return entries_.size(); }

private:
    struct Entry {
        Factorization factors;
        FactorProvenance provenance;
    };
    std::map<std::pair<Natural, unsigned>, Entry> entries_;
};

}  // namespace stdff

#endif
