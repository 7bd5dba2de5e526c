#ifndef STDFF_GF2EXT_HPP
#define STDFF_GF2EXT_HPP

#include <climits>

#include "stdff/natural.hpp"

namespace stdff {

// Bit-packed GF(2^n) for standard fields of prime degree n, where the tower
// basis coincides with the power basis of x_n and an element's Steinitz
// number is exactly its coefficient bit pattern. Multiplication is a
// carry-less product (via an integer product with 8-bit spaced operands)
// followed by reduction modulo the defining polynomial, which is sparse for
// the standard constructions.
//
// Steinitz numbering, and therefore every StandardAffineShift-driven search,
// matches the generic StandardField of the same degree bit for bit; the big
// degree-107 search runs on this representation.
class Gf2ExtField {
public:
    using Element = Natural;  // bit i = coefficient of x^i

    Gf2ExtField(unsigned n, Natural defining_poly_bits)
        : n_(n), f_(std::move(defining_poly_bits)) {
        if (n_ < 1 || mpz_sizeinbase(f_.get_mpz_t(), 2) != n_ + 1)
            throw std::invalid_argument("Gf2ExtField: defining polynomial must have degree n");
        tail_ = f_;
        mpz_clrbit(tail_.get_mpz_t(), n_);
        size_ = Natural(1) << n_;
    }

    unsigned degree() const { return n_; }
    Natural size() const { return size_; }
    Natural characteristic() const { return 2; }
    const Natural& defining_poly_bits() const { return f_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a ^ b; }
    Element sub(const Element& a, const Element& b) const { return a ^ b; }
    Element neg(const Element& a) const { return a; }

    Element mul(const Element& a, const Element& b) const { return reduce(clmul(a, b)); }

    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("Gf2ExtField::inv: division by zero");
        Natural r0 = a, r1 = f_, s0 = 1, s1 = 0;
        while (r1 != 0) {
            const unsigned long d0 = mpz_sizeinbase(r0.get_mpz_t(), 2);
            const unsigned long d1 = mpz_sizeinbase(r1.get_mpz_t(), 2);
            if (d0 < d1) {
                std::swap(r0, r1);
                std::swap(s0, s1);
                continue;
            }
            const unsigned long shift = d0 - d1;
            r0 ^= r1 << shift;
            s0 ^= s1 << shift;
            if (r0 == 0) {
                std::swap(r0, r1);
                std::swap(s0, s1);
                break;
            }
        }
        if (r0 != 1)
            throw std::domain_error("Gf2ExtField::inv: element not invertible");
        return reduce(s0);
    }

    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    Element from_steinitz(const Natural& s) const {
        if (s < 0 || s >= size_)
            throw std::out_of_range("Gf2ExtField::from_steinitz: number out of range");
        return s;
    }
    Natural to_steinitz(const Element& a) const { return a; }

    // Carry-less product of two bit polynomials. Coefficient sums stay
    // below 2^8 for degrees under 255, so 8-bit spacing is collision free.
    static Natural clmul(const Natural& a, const Natural& b) {
        if (a == 0 || b == 0) return 0;
        Natural ea = space_out(a), eb = space_out(b);
        Natural prod = ea * eb;
        Natural out = 0;
        const unsigned long bits = mpz_sizeinbase(a.get_mpz_t(), 2) +
                                   mpz_sizeinbase(b.get_mpz_t(), 2) - 1;
        for (unsigned long k = 0; k < bits; ++k)
            if (mpz_tstbit(prod.get_mpz_t(), 8 * k))
                mpz_setbit(out.get_mpz_t(), k);
        return out;
    }

    Element reduce(Natural v) const {
        while (mpz_sizeinbase(v.get_mpz_t(), 2) > n_ && v != 0) {
            Natural hi = v >> n_;
            // v = lo + hi * X^n and X^n = tail  (mod f)
            mpz_tdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), n_);
            for (unsigned long bit = mpz_scan1(tail_.get_mpz_t(), 0); bit != ULONG_MAX;
                 bit = mpz_scan1(tail_.get_mpz_t(), bit + 1))
                v ^= hi << bit;
        }
        return v;
    }

private:
    static Natural space_out(const Natural& a) {
        Natural out = 0;
        for (unsigned long bit = mpz_scan1(a.get_mpz_t(), 0); bit != ULONG_MAX;
             bit = mpz_scan1(a.get_mpz_t(), bit + 1))
            mpz_setbit(out.get_mpz_t(), 8 * bit);
        return out;
    }

    unsigned n_;
    Natural f_;
    Natural tail_;
    Natural size_;
};

}  // namespace stdff

#endif
