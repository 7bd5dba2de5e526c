#include "stdff/natural.hpp"

#include <sstream>

namespace stdff {

Natural mod_pow(const Natural& b, const Natural& e, const Natural& m) {
    if (m == 0)
        throw std::domain_error("mod_pow: modulus must be >= 1");
    Natural r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Natural mod_inverse(const Natural& a, const Natural& m) {
    if (m < 2)
        throw std::domain_error("mod_inverse: modulus must be >= 2");
    Natural r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: argument is not invertible modulo " + m.get_str());
    return r;
}

unsigned r_valuation(const Natural& n, const Natural& r) {
    if (n == 0)
        throw std::domain_error("r_valuation: undefined for 0");
    Natural rest;
    mp_bitcnt_t t = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), r.get_mpz_t());
    return static_cast<unsigned>(t);
}

Natural multiplicative_order_mod(const Natural& q, const Natural& r) {
    if (q % r == 0)
        throw std::domain_error("multiplicative_order_mod: arguments are not coprime");
    // The order divides r-1; strip prime factors of r-1 one at a time.
    Natural group = r - 1;
    Natural order = group;
    Natural rest = group;
    Natural d = 2;
    std::vector<Natural> primes;
    while (d * d <= rest) {
        if (rest % d == 0) {
            primes.push_back(d);
            while (rest % d == 0) rest /= d;
        }
        d += 1;
    }
    if (rest > 1) primes.push_back(rest);
    for (const Natural& s : primes) {
        while (order % s == 0 && mod_pow(q, order / s, r) == 1)
            order /= s;
    }
    return order;
}

namespace {

bool miller_rabin_witness(const Natural& n, const Natural& a) {
    // Returns true when a witnesses compositeness of odd n > 2.
    Natural d = n - 1;
    unsigned s = r_valuation(d, 2);
    d >>= s;
    Natural x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

const Natural kDeterministicBound = Natural(1) << 64;

}  // namespace

bool is_prime(const Natural& n) {
    if (n < 2) return false;
    static const unsigned long small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                                 23, 29, 31, 37, 41, 43, 47};
    for (unsigned long sp : small_primes) {
        if (n == sp) return true;
        if (n % sp == 0) return false;
    }
    if (n < kDeterministicBound) {
        // These twelve bases decide primality for all n < 3.3e24.
        for (unsigned long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (miller_rabin_witness(n, a)) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool primality_is_certain(const Natural& n) {
    return n < kDeterministicBound;
}

Factorization Factorization::from_terms(std::vector<Term> terms) {
    const Natural* previous = nullptr;
    for (const Term& t : terms) {
        if (t.exponent == 0)
            throw std::invalid_argument("Factorization: exponents must be positive");
        if (!is_prime(t.prime))
            throw std::invalid_argument("Factorization: " + t.prime.get_str() + " is not prime");
        if (previous && !(*previous < t.prime))
            throw std::invalid_argument("Factorization: primes must be strictly increasing");
        previous = &t.prime;
    }
    Factorization f;
    f.terms_ = std::move(terms);
    return f;
}

Factorization Factorization::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<Term> terms;
    std::string token;
    while (in >> token) {
        auto caret = token.find('^');
        Term t;
        t.exponent = 1;
        try {
            t.prime = Natural(token.substr(0, caret));
            if (caret != std::string::npos) {
                Natural e(token.substr(caret + 1));
                if (e <= 0 || !e.fits_uint_p())
                    throw std::invalid_argument("bad exponent");
                t.exponent = static_cast<unsigned>(e.get_ui());
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Factorization::parse: malformed token '" + token + "'");
        }
        terms.push_back(std::move(t));
    }
    return from_terms(std::move(terms));
}

Natural Factorization::value() const {
    Natural v = 1;
    for (const Term& t : terms_) v *= natural_pow(t.prime, t.exponent);
    return v;
}

bool Factorization::contains(const Natural& prime) const {
    return exponent_of(prime) != 0;
}

unsigned Factorization::exponent_of(const Natural& prime) const {
    for (const Term& t : terms_)
        if (t.prime == prime) return t.exponent;
    return 0;
}

std::string Factorization::to_string() const {
    std::string out;
    for (const Term& t : terms_) {
        if (!out.empty()) out += ' ';
        out += t.prime.get_str();
        if (t.exponent != 1) out += '^' + std::to_string(t.exponent);
    }
    return out;
}

}  // namespace stdff
