#include "stdff/factor_db.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace stdff {

namespace {

constexpr unsigned long kTrialLimit = 100000;

// Brent's cycle-finding variant of Pollard rho with x^2 + c and a fixed
// starting point; deterministic across runs. Returns a nontrivial factor or
// nullopt when the iteration budget is exhausted.
std::optional<Natural> pollard_rho_brent(const Natural& n, std::uint64_t& budget) {
    for (Natural c = 1; c < 64; c += 1) {
        Natural y = 2, r = 1, q = 1, g = 1, x = y, ys = y;
        while (g == 1) {
            x = y;
            for (Natural i = 0; i < r; i += 1) y = (y * y + c) % n;
            Natural k = 0;
            while (k < r && g == 1) {
                ys = y;
                Natural chunk = r - k;
                if (chunk > 128) chunk = 128;
                for (Natural i = 0; i < chunk; i += 1) {
                    if (budget == 0) return std::nullopt;
                    --budget;
                    y = (y * y + c) % n;
                    Natural d = x > y ? x - y : y - x;
                    if (d != 0) q = q * d % n;
                }
                g = natural_gcd(q, n);
                k += chunk;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time to split the collapsed gcd.
            g = 1;
            while (g == 1) {
                if (budget == 0) return std::nullopt;
                --budget;
                ys = (ys * ys + c) % n;
                Natural d = x > ys ? x - ys : ys - x;
                g = natural_gcd(d, n);
            }
        }
        if (g != n) return g;
        // Cycle degenerated for this c; retry with the next polynomial.
    }
    return std::nullopt;
}

}  // namespace

PartialFactorization factorize(const Natural& n, std::uint64_t budget) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    std::map<Natural, unsigned> found;
    Natural rest = n;
    for (unsigned long d = 2; d <= kTrialLimit && rest > 1; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
                rest /= d;
                ++e;
            }
            found[Natural(d)] = e;
        }
        if (Natural(d) * d > rest) break;
    }
    if (rest > 1 && Natural(kTrialLimit) * kTrialLimit > rest) {
        // Remainder below the trial-division square bound is prime.
        found[rest] += 1;
        rest = 1;
    }

    Natural unfactored = 1;
    std::vector<Natural> stack;
    if (rest > 1) stack.push_back(rest);
    while (!stack.empty()) {
        Natural v = stack.back();
        stack.pop_back();
        if (is_prime(v)) {
            found[v] += 1;
            continue;
        }
        if (mpz_perfect_square_p(v.get_mpz_t())) {
            Natural s;
            mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
            stack.push_back(s);
            stack.push_back(s);
            continue;
        }
        auto factor = pollard_rho_brent(v, budget);
        if (!factor) {
            unfactored *= v;
            continue;
        }
        stack.push_back(*factor);
        stack.push_back(v / *factor);
    }

    std::vector<Factorization::Term> terms;
    terms.reserve(found.size());
    for (const auto& [prime, exp] : found) terms.push_back({prime, exp});
    return PartialFactorization{Factorization::from_terms(std::move(terms)), unfactored};
}

void FactorTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("FactorTable: cannot open " + path);
    std::string line;
    unsigned long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string p_tok, n_tok;
        if (!(ls >> p_tok)) continue;
        if (!(ls >> n_tok) || n_tok.empty() || n_tok.back() != ':')
            throw TableFormatError(path, line_number, "expected '<p> <n>: factors'");
        n_tok.pop_back();
        Natural p;
        unsigned n = 0;
        std::string factors_text((std::istreambuf_iterator<char>(ls)), {});
        Factorization factors;
        try {
            p = Natural(p_tok);
            Natural nn(n_tok);
            if (!nn.fits_uint_p()) throw std::invalid_argument("n too large");
            n = static_cast<unsigned>(nn.get_ui());
            factors = Factorization::parse(factors_text);
        } catch (const std::invalid_argument& e) {
            throw TableFormatError(path, line_number, e.what());
        }
        if (!is_prime(p))
            throw TableFormatError(path, line_number, "p is not prime");
        if (n == 0)
            throw TableFormatError(path, line_number, "n must be positive");
        if (factors.value() != natural_pow(p, n) - 1)
            throw TableFormatError(path, line_number, "product does not equal p^n - 1");
        entries_[{p, n}] = Entry{std::move(factors), FactorProvenance::loaded};
    }
}

const Factorization& FactorTable::lookup(const Natural& p, unsigned n) {
    const auto key = std::make_pair(p, n);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second.factors;
    PartialFactorization result = factorize(natural_pow(p, n) - 1);
    if (!result.complete())
        throw MissingDataError("no complete factorization of " + p.get_str() + "^" +
                               std::to_string(n) + " - 1 (composite cofactor " +
                               result.cofactor.get_str() + ")");
    auto [pos, inserted] =
        entries_.emplace(key, Entry{std::move(result.factors), FactorProvenance::computed});
    return pos->second.factors;
}

std::optional<Factorization> FactorTable::find(const Natural& p, unsigned n) const {
    auto it = entries_.find({p, n});
    if (it == entries_.end()) return std::nullopt;
    return it->second.factors;
}

std::optional<FactorProvenance> FactorTable::provenance(const Natural& p, unsigned n) const {
    auto it = entries_.find({p, n});
    if (it == entries_.end()) return std::nullopt;
    return it->second.provenance;
}

}  // namespace stdff
