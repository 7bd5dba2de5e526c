#ifndef STDFF_PRIME_FIELD_HPP
#define STDFF_PRIME_FIELD_HPP

#include <concepts>

#include "stdff/natural.hpp"

namespace stdff {

// GF(p). Elements are bare residues in [0, p); the modulus lives here, in
// the shared field handle, so vectors of residues stay compact.
class PrimeField {
public:
    using Element = Natural;

    explicit PrimeField(Natural p) : p_(std::move(p)) {
        if (!is_prime(p_))
            throw std::invalid_argument("PrimeField: " + p_.get_str() + " is not prime");
    }

    const Natural& modulus() const { return p_; }
    Natural size() const { return p_; }
    Natural characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }

    Element add(const Element& a, const Element& b) const {
        Element r = a + b;
        if (r >= p_) r -= p_;
        return r;
    }
    Element sub(const Element& a, const Element& b) const {
        Element r = a - b;
        if (r < 0) r += p_;
        return r;
    }
    Element neg(const Element& a) const { return a == 0 ? Element(0) : Element(p_ - a); }
    Element mul(const Element& a, const Element& b) const { return a * b % p_; }
    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("PrimeField::inv: division by zero");
        return mod_inverse(a, p_);
    }
    Element pow(const Element& a, const Natural& e) const { return mod_pow(a, e, p_); }

    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    // Steinitz numbers of prime field elements are the residues themselves.
    Element from_steinitz(const Natural& s) const {
        if (s >= p_) throw std::out_of_range("PrimeField::from_steinitz: number out of range");
        return s;
    }
    Natural to_steinitz(const Element& a) const { return a; }

    // Canonical residue of an arbitrary integer.
    Element reduce(const Natural& a) const {
        Element r = a % p_;
        if (r < 0) r += p_;
        return r;
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    Natural p_;
};

// The coefficient-field contract shared by PrimeField and the constructed
// extension fields: enough arithmetic for dense polynomials plus Steinitz
// encode/decode, which the standard-polynomial searches rely on.
template <class F>
concept CoefficientField = requires(const F& k, const typename F::Element& a,
                                    const typename F::Element& b, const Natural& s) {
    { k.zero() } -> std::same_as<typename F::Element>;
    { k.one() } -> std::same_as<typename F::Element>;
    { k.add(a, b) } -> std::same_as<typename F::Element>;
    { k.sub(a, b) } -> std::same_as<typename F::Element>;
    { k.neg(a) } -> std::same_as<typename F::Element>;
    { k.mul(a, b) } -> std::same_as<typename F::Element>;
    { k.inv(a) } -> std::same_as<typename F::Element>;
    { k.is_zero(a) } -> std::convertible_to<bool>;
    { k.eq(a, b) } -> std::convertible_to<bool>;
    { k.size() } -> std::convertible_to<Natural>;
    { k.characteristic() } -> std::convertible_to<Natural>;
    { k.from_steinitz(s) } -> std::same_as<typename F::Element>;
    { k.to_steinitz(a) } -> std::convertible_to<Natural>;
};

}  // namespace stdff

#endif
