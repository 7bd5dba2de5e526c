#ifndef STDFF_STEINITZ_HPP
#define STDFF_STEINITZ_HPP

#include "stdff/natural.hpp"

namespace stdff {

// (m*i + a) mod q with m the largest integer <= (4/5)q coprime to q and a
// the largest integer <= (2/3)q. As a function of i mod q this is a
// bijection on [0, q); it serves as the deterministic pseudo-random
// enumeration order used throughout the standard constructions.
inline Natural standard_affine_shift(const Natural& q, const Natural& i) {
    if (q < 1) throw std::domain_error("standard_affine_shift: q must be >= 1");
    Natural m = 4 * q / 5;
    while (natural_gcd(m, q) != 1) m -= 1;  // q = 1 ends at m = 0, gcd(0,1) = 1
    Natural a = 2 * q / 3;
    return (m * i + a) % q;
}

// Degree over the prime field together with the Steinitz number inside the
// standard field of that degree; identifies an element of the algebraic
// closure independently of the ambient field it was written in.
struct SteinitzPair {
    unsigned degree = 1;
    Natural number = 0;

    bool operator==(const SteinitzPair&) const = default;
};

}  // namespace stdff

#endif
