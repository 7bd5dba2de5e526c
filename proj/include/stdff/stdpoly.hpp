#ifndef STDFF_STDPOLY_HPP
#define STDFF_STDPOLY_HPP

#include <compare>
#include <string>
#include <vector>

#include "stdff/poly.hpp"
#include "stdff/steinitz.hpp"

namespace stdff {

template <CoefficientField F>
typename F::Element field_pow(const F& K, const typename F::Element& base, const Natural& e) {
    if (e == 0) return K.one();
    typename F::Element r = K.one();
    for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
        r = K.mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = K.mul(r, base);
    }
    return r;
}

inline PrimeField::Element field_pow(const PrimeField& K, const PrimeField::Element& base,
                                     const Natural& e) {
    return K.pow(base, e);
}

// Deterministic non r-th power: walk the elements of F in StandardAffineShift
// order until one with a^((|F|-1)/r) != 1 appears. Requires r | (|F| - 1).
template <CoefficientField F>
typename F::Element non_rth_power(const F& K, const Natural& r) {
    const Natural size = K.size();
    const Natural group = size - 1;
    if (group % r != 0)
        throw std::domain_error("non_rth_power: r does not divide |F|-1");
    const Natural e = group / r;
    Natural i = 0;
    while (true) {
        i += 1;
        auto a = K.from_steinitz(standard_affine_shift(size, i));
        if (K.is_zero(a)) continue;
        if (!K.eq(field_pow(K, a, e), K.one())) return a;
    }
}

// The canonical search for a monic irreducible polynomial of degree r over K
// with constant term a: start from X^r + X + a, then try X^r + gX + a where
// g runs through K[X] by Steinitz number in StandardAffineShift order, the
// degree window widening by inc every r trials.
template <CoefficientField F>
DensePoly<F> find_irreducible_polynomial(const F& K, unsigned r, const typename F::Element& a) {
    if (r < 2) throw std::domain_error("find_irreducible_polynomial: degree must be >= 2");
    if (K.is_zero(a)) throw std::domain_error("find_irreducible_polynomial: a must be nonzero");
    const Natural q = K.size();

    auto candidate = [&](const DensePoly<F>& g) {
        std::vector<typename F::Element> c(r + 1, K.zero());
        c[0] = a;
        c[r] = K.one();
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            c[j + 1] = K.add(c[j + 1], g.coeffs[j]);
        return poly_from_coeffs(K, std::move(c));
    };

    unsigned inc = 1;
    while (natural_pow(q, inc) < 2 * r) ++inc;
    unsigned d = 0;
    DensePoly<F> f = candidate(poly_constant(K, K.one()));
    Natural count = 0;
    while (!is_irreducible(K, f)) {
        if (count % r == 0) d = std::min(d + inc, r - 1);
        Natural s = standard_affine_shift(natural_pow(q, d - 1), count);
        f = candidate(poly_from_steinitz(K, s));
        count += 1;
    }
    return f;
}

struct StdPolyKey {
    Natural p;
    unsigned r = 0;
    unsigned level = 0;

    friend bool operator<(const StdPolyKey& a, const StdPolyKey& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.r != b.r) return a.r < b.r;
        return a.level < b.level;
    }
    bool operator==(const StdPolyKey&) const = default;
};

// f_{r,level}: monic irreducible of degree r over F_{p^{r^(level-1)}},
// stored as the Steinitz numbers of its coefficients c_0..c_r over that field.
struct StdPolyRecord {
    StdPolyKey key;
    std::vector<Natural> coeff_steinitz;

    bool operator==(const StdPolyRecord&) const = default;
};

// The standard irreducible polynomial of prime degree r at the given tower
// level; four-case dispatch between Artin-Schreier, the two Kummer-type
// chains and the deterministic search. Results are cached per (p, r, level).
StdPolyRecord standard_prime_degree_poly(const Natural& p, unsigned r, unsigned level);

// Cache file, one record per line: "p r i: s0 s1 ... sr", '#' comments.
// Loading validates every record (monic, in range, irreducible) before
// merging it into the in-memory cache; save writes all cached records.
void stdpoly_cache_load(const std::string& path);
void stdpoly_cache_save(const std::string& path);

}  // namespace stdff

#endif
