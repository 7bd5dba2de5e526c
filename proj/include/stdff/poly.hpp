#ifndef STDFF_POLY_HPP
#define STDFF_POLY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "stdff/prime_field.hpp"

namespace stdff {

// Dense univariate polynomial, ascending coefficients, trailing zeros
// stripped. The zero polynomial has an empty coefficient list. The
// coefficient field is passed to every operation, never stored.
template <CoefficientField F>
struct DensePoly {
    std::vector<typename F::Element> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    // Degree of the zero polynomial is -1.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs.size()) - 1; }
};

template <CoefficientField F>
void poly_normalize(const F& K, DensePoly<F>& f) {
    while (!f.coeffs.empty() && K.is_zero(f.coeffs.back())) f.coeffs.pop_back();
}

template <CoefficientField F>
DensePoly<F> poly_from_coeffs(const F& K, std::vector<typename F::Element> coeffs) {
    DensePoly<F> f{std::move(coeffs)};
    poly_normalize(K, f);
    return f;
}

template <CoefficientField F>
DensePoly<F> poly_zero(const F&) {
    return {};
}

template <CoefficientField F>
DensePoly<F> poly_constant(const F& K, typename F::Element c) {
    DensePoly<F> f;
    if (!K.is_zero(c)) f.coeffs.push_back(std::move(c));
    return f;
}

template <CoefficientField F>
DensePoly<F> poly_x(const F& K) {
    return {{K.zero(), K.one()}};
}

template <CoefficientField F>
bool poly_eq(const F& K, const DensePoly<F>& f, const DensePoly<F>& g) {
    if (f.coeffs.size() != g.coeffs.size()) return false;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        if (!K.eq(f.coeffs[i], g.coeffs[i])) return false;
    return true;
}

template <CoefficientField F>
bool poly_is_monic(const F& K, const DensePoly<F>& f) {
    return !f.coeffs.empty() && K.eq(f.coeffs.back(), K.one());
}

template <CoefficientField F>
DensePoly<F> poly_add(const F& K, const DensePoly<F>& f, const DensePoly<F>& g) {
    std::vector<typename F::Element> c(std::max(f.coeffs.size(), g.coeffs.size()), K.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) c[i] = f.coeffs[i];
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) c[i] = K.add(c[i], g.coeffs[i]);
    return poly_from_coeffs(K, std::move(c));
}

template <CoefficientField F>
DensePoly<F> poly_sub(const F& K, const DensePoly<F>& f, const DensePoly<F>& g) {
    std::vector<typename F::Element> c(std::max(f.coeffs.size(), g.coeffs.size()), K.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) c[i] = f.coeffs[i];
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) c[i] = K.sub(c[i], g.coeffs[i]);
    return poly_from_coeffs(K, std::move(c));
}

template <CoefficientField F>
DensePoly<F> poly_scale(const F& K, const DensePoly<F>& f, const typename F::Element& s) {
    if (K.is_zero(s)) return {};
    DensePoly<F> r = f;
    for (auto& c : r.coeffs) c = K.mul(c, s);
    return r;
}

template <CoefficientField F>
DensePoly<F> poly_mul(const F& K, const DensePoly<F>& f, const DensePoly<F>& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<typename F::Element> c(f.coeffs.size() + g.coeffs.size() - 1, K.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (K.is_zero(f.coeffs[i])) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            c[i + j] = K.add(c[i + j], K.mul(f.coeffs[i], g.coeffs[j]));
    }
    return poly_from_coeffs(K, std::move(c));
}

// f = q*g + rem with deg rem < deg g.
template <CoefficientField F>
std::pair<DensePoly<F>, DensePoly<F>> poly_divrem(const F& K, const DensePoly<F>& f,
                                                  const DensePoly<F>& g) {
    if (g.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    if (f.coeffs.size() < g.coeffs.size()) return {DensePoly<F>{}, f};
    const std::size_t dg = g.coeffs.size() - 1;
    auto lead_inv = K.inv(g.coeffs.back());
    std::vector<typename F::Element> rem = f.coeffs;
    std::vector<typename F::Element> quot(f.coeffs.size() - dg, K.zero());
    for (std::size_t k = f.coeffs.size(); k-- > dg;) {
        if (K.is_zero(rem[k])) continue;
        auto q = K.mul(rem[k], lead_inv);
        quot[k - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[k - dg + j] = K.sub(rem[k - dg + j], K.mul(q, g.coeffs[j]));
    }
    return {poly_from_coeffs(K, std::move(quot)), poly_from_coeffs(K, std::move(rem))};
}

template <CoefficientField F>
DensePoly<F> poly_mod(const F& K, const DensePoly<F>& f, const DensePoly<F>& g) {
    return poly_divrem(K, f, g).second;
}

template <CoefficientField F>
DensePoly<F> poly_monic(const F& K, const DensePoly<F>& f) {
    if (f.is_zero() || poly_is_monic(K, f)) return f;
    return poly_scale(K, f, K.inv(f.coeffs.back()));
}

// Monic greatest common divisor; both inputs zero is a domain error.
template <CoefficientField F>
DensePoly<F> poly_gcd(const F& K, DensePoly<F> f, DensePoly<F> g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
    while (!g.is_zero()) {
        DensePoly<F> r = poly_mod(K, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_monic(K, f);
}

// Returns (d, u, v) with d = gcd(f, g) monic and u*f + v*g = d.
template <CoefficientField F>
std::array<DensePoly<F>, 3> poly_extended_gcd(const F& K, DensePoly<F> f, DensePoly<F> g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("poly_extended_gcd: gcd(0, 0) is undefined");
    DensePoly<F> u0 = poly_constant(K, K.one()), u1 = poly_zero(K);
    DensePoly<F> v0 = poly_zero(K), v1 = poly_constant(K, K.one());
    while (!g.is_zero()) {
        auto [q, r] = poly_divrem(K, f, g);
        f = std::move(g);
        g = std::move(r);
        DensePoly<F> nu = poly_sub(K, u0, poly_mul(K, q, u1));
        DensePoly<F> nv = poly_sub(K, v0, poly_mul(K, q, v1));
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    if (!poly_is_monic(K, f)) {
        auto s = K.inv(f.coeffs.back());
        f = poly_scale(K, f, s);
        u0 = poly_scale(K, u0, s);
        v0 = poly_scale(K, v0, s);
    }
    return {std::move(f), std::move(u0), std::move(v0)};
}

// base^e mod f, repeated squaring. f must have degree >= 1.
template <CoefficientField F>
DensePoly<F> poly_powmod(const F& K, const DensePoly<F>& base, const Natural& e,
                         const DensePoly<F>& f) {
    if (f.degree() < 1)
        throw std::domain_error("poly_powmod: modulus must have degree >= 1");
    DensePoly<F> result = poly_constant(K, K.one());
    DensePoly<F> b = poly_mod(K, base, f);
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        result = poly_mod(K, poly_mul(K, result, result), f);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = poly_mod(K, poly_mul(K, result, b), f);
    }
    return result;
}

template <CoefficientField F>
typename F::Element poly_eval(const F& K, const DensePoly<F>& f, const typename F::Element& x) {
    auto r = K.zero();
    for (std::size_t i = f.coeffs.size(); i-- > 0;) r = K.add(K.mul(r, x), f.coeffs[i]);
    return r;
}

// Irreducibility of a monic f over K with |K| = q: f is irreducible iff
// gcd(f, X^(q^t) - X) = 1 for 1 <= t <= deg(f)/2, ascending so that small
// factors are detected early. X^(q^t) for t >= 2 is obtained by applying
// the q-power map, cached as the images (X^j)^q mod f of the basis.
template <CoefficientField F>
bool is_irreducible(const F& K, const DensePoly<F>& f) {
    if (f.degree() < 1)
        throw std::domain_error("is_irreducible: degree must be >= 1");
    if (!poly_is_monic(K, f))
        throw std::domain_error("is_irreducible: polynomial must be monic");
    const std::size_t r = static_cast<std::size_t>(f.degree());
    if (r == 1) return true;
    const Natural q = K.size();
    const DensePoly<F> x = poly_x(K);

    DensePoly<F> xq = poly_powmod(K, x, q, f);
    if (!poly_eq(K, poly_gcd(K, f, poly_sub(K, xq, x)), poly_constant(K, K.one())))
        return false;

    std::vector<DensePoly<F>> frob;  // frob[j] = (X^j)^q mod f, built on first need
    auto apply_frobenius = [&](const DensePoly<F>& h) {
        // x -> x^q is K-linear, so h^q mod f is a combination of the cached images.
        DensePoly<F> out;
        for (std::size_t j = 0; j < h.coeffs.size(); ++j) {
            if (K.is_zero(h.coeffs[j])) continue;
            out = poly_add(K, out, poly_scale(K, frob[j], h.coeffs[j]));
        }
        return out;
    };

    DensePoly<F> xqt = xq;
    for (std::size_t t = 2; t <= r / 2; ++t) {
        if (frob.empty()) {
            frob.reserve(r);
            frob.push_back(poly_constant(K, K.one()));
            for (std::size_t j = 1; j < r; ++j)
                frob.push_back(poly_mod(K, poly_mul(K, frob[j - 1], xq), f));
        }
        xqt = apply_frobenius(xqt);
        if (!poly_eq(K, poly_gcd(K, f, poly_sub(K, xqt, x)), poly_constant(K, K.one())))
            return false;
    }
    return true;
}

// Steinitz number of a polynomial: s(f) = sum s(c_j) q^j.
template <CoefficientField F>
Natural poly_to_steinitz(const F& K, const DensePoly<F>& f) {
    const Natural q = K.size();
    Natural s = 0;
    for (std::size_t i = f.coeffs.size(); i-- > 0;) s = s * q + K.to_steinitz(f.coeffs[i]);
    return s;
}

// Inverse of poly_to_steinitz: base-q digits of s become the coefficients.
template <CoefficientField F>
DensePoly<F> poly_from_steinitz(const F& K, Natural s) {
    if (s < 0) throw std::domain_error("poly_from_steinitz: number must be non-negative");
    const Natural q = K.size();
    std::vector<typename F::Element> coeffs;
    while (s > 0) {
        Natural digit = s % q;
        coeffs.push_back(K.from_steinitz(digit));
        s /= q;
    }
    return poly_from_coeffs(K, std::move(coeffs));
}

}  // namespace stdff

#endif
