#ifndef STDFF_NATURAL_HPP
#define STDFF_NATURAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stdff {

// Arbitrary-precision non-negative integer. Steinitz numbers reach p^n, so
// there is no magnitude cap anywhere in this library.
using Natural = mpz_class;

inline Natural natural_pow(const Natural& base, unsigned long e) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Natural natural_gcd(const Natural& a, const Natural& b) {
    Natural r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Natural natural_lcm(const Natural& a, const Natural& b) {
    Natural r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline unsigned long natural_to_ulong(const Natural& n) {
    if (!n.fits_ulong_p())
        throw std::overflow_error("natural_to_ulong: value does not fit into unsigned long");
    return n.get_ui();
}

// b^e mod m. m = 0 is a domain error.
Natural mod_pow(const Natural& b, const Natural& e, const Natural& m);

// The b in [1, m) with a*b = 1 mod m; throws if gcd(a, m) != 1 or m < 2.
Natural mod_inverse(const Natural& a, const Natural& m);

// Largest t with r^t | n; n = 0 is a domain error.
unsigned r_valuation(const Natural& n, const Natural& r);

// Smallest l >= 1 with q^l = 1 mod r, for prime r not dividing q.
// Always a divisor of r-1.
Natural multiplicative_order_mod(const Natural& q, const Natural& r);

// Primality. Deterministic Miller-Rabin below 2^64; Baillie-PSW style
// probable-prime test (via GMP) above, see primality_is_certain().
bool is_prime(const Natural& n);

// True when is_prime(n) is a proven answer rather than a probable one.
bool primality_is_certain(const Natural& n);

// Ordered multiset of (prime, exponent) pairs with strictly increasing
// primes. The empty factorization represents 1.
class Factorization {
public:
    struct Term {
        Natural prime;
        unsigned exponent;
    };

    Factorization() = default;

    // Validates primality, positivity of exponents and strict prime order.
    static Factorization from_terms(std::vector<Term> terms);

    // Whitespace separated "prime[^exponent]" tokens, e.g. "2^4 5".
    static Factorization parse(const std::string& text);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Natural value() const;

    bool contains(const Natural& prime) const;
    unsigned exponent_of(const Natural& prime) const;  // 0 when absent

    std::string to_string() const;

    bool operator==(const Factorization& other) const = default;

private:
    std::vector<Term> terms_;
};

inline bool operator==(const Factorization::Term& a, const Factorization::Term& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
}

}  // namespace stdff

#endif
