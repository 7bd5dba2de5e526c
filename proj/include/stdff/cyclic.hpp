#ifndef STDFF_CYCLIC_HPP
#define STDFF_CYCLIC_HPP

#include "stdff/stdfield.hpp"

namespace stdff {

// Value of the lift into Q/Z: the reduced fraction num/den taken mod 1,
// with den coprime to the characteristic. The complex side exp(2*pi*i*num/den)
// stays symbolic.
struct LiftValue {
    Natural num = 0;
    Natural den = 1;

    static LiftValue make(const Natural& a, const Natural& m);

    bool operator==(const LiftValue&) const = default;
    std::string to_string() const { return num.get_str() + "/" + den.get_str(); }
};

// v_r(p^k - 1) without forming the big power: the order of p mod r locates
// the first k with r | p^k - 1, and the multiplicity then grows exactly with
// v_r of the exponent (with the usual special treatment of r = 2).
unsigned r_multiplicity_closed_form(const Natural& p, unsigned k, const Natural& r);

// The standard generator y_{n,r} of the Sylow r-subgroup of F_{p^n}^x,
// of order r^t with r^t || p^n - 1. Computed in the smallest subfield that
// carries the full r-multiplicity and embedded upward; results are cached.
FieldElement standard_cyclic_generator_prime_power(const Natural& p, unsigned n, const Natural& r);

// Steinitz-smallest y with y^r = target, where target has order r^(t-1) and
// r^t || (p^n - 1): find one r-th root via a discrete logarithm, then scan
// the r-th roots of unity for the smallest candidate.
FieldElement rth_root_steinitz_smallest(const FieldElement& target, const Natural& r, unsigned t);

// Discrete logarithm in the cyclic group generated by g of order r^s,
// digit by digit; each digit search uses baby-step giant-step when r is
// large and a linear scan otherwise. Throws when h is not a power of g.
Natural pohlig_hellman_log(const FieldElement& g, const FieldElement& h, const Natural& r,
                           unsigned s);

// The element y_m of F_{p^n} with lift value 1/m: combine suitable powers
// of the y_{n,r} for the primes r of m, then correct the exponent so the
// fractions add up to exactly 1/m. Requires m | p^n - 1 and the
// factorization of m.
FieldElement standard_generator(const Natural& p, unsigned n, const Natural& m,
                                const Factorization& fac_m);

// Exact multiplicative order of x given a factorized multiple of it.
Natural element_order(const FieldElement& x, const Factorization& fac);

}  // namespace stdff

#endif
