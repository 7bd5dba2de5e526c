#ifndef STDFF_STDFIELD_HPP
#define STDFF_STDFIELD_HPP

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "stdff/fp_linalg.hpp"
#include "stdff/poly.hpp"
#include "stdff/steinitz.hpp"

namespace stdff {

class StandardField;
using StandardFieldPtr = std::shared_ptr<const StandardField>;

// Element of a standard field, as coordinate vector of length n in the
// power basis (1, x_n, ..., x_n^(n-1)) of its field.
class FieldElement {
public:
    FieldElement() = default;

    const StandardField& field() const { return *field_; }
    const StandardFieldPtr& field_ptr() const { return field_; }
    const std::vector<Natural>& coeffs() const { return coeffs_; }

    bool operator==(const FieldElement& other) const {
        return field_ == other.field_ && coeffs_ == other.coeffs_;
    }
    bool operator!=(const FieldElement& other) const = default;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator-() const;

private:
    friend class StandardField;
    FieldElement(StandardFieldPtr f, std::vector<Natural> c)
        : field_(std::move(f)), coeffs_(std::move(c)) {}

    StandardFieldPtr field_;
    std::vector<Natural> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// F_{p^n} = F_p[X_n]/(f_n) with the canonical defining polynomial, plus the
// transition matrices between the power basis and the tower basis. Rows of
// to_tower() hold x_n^i in tower-basis coordinates; from_tower() is the
// inverse. Construct instances through standard_field(); they are immutable
// and shared.
class StandardField : public std::enable_shared_from_this<StandardField> {
public:
    using Element = FieldElement;

    const Natural& p() const { return prime_field_.modulus(); }
    unsigned degree() const { return n_; }
    Natural size() const { return size_; }
    Natural characteristic() const { return p(); }
    const PrimeField& prime_field() const { return prime_field_; }
    const DensePoly<PrimeField>& defining_poly() const { return defining_poly_; }
    const FpMatrix& to_tower() const { return to_tower_; }
    const FpMatrix& from_tower() const { return from_tower_; }
    // Degrees over F_p of the tower basis elements, in basis order.
    const std::vector<unsigned>& degree_list() const { return degree_list_; }
    // F_{p^{n/r}} for the largest prime r of n; null when n = 1.
    const StandardFieldPtr& subfield() const { return subfield_; }

    FieldElement zero() const;
    FieldElement one() const;
    // The canonical primitive element x_n (which is 1 when n = 1).
    FieldElement generator() const;
    FieldElement from_coeffs(std::vector<Natural> coeffs) const;
    FieldElement from_prime(const Natural& c) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, const Natural& e) const;
    bool is_zero(const FieldElement& a) const;
    bool eq(const FieldElement& a, const FieldElement& b) const;

    FieldElement from_steinitz(const Natural& s) const;
    Natural to_steinitz(const FieldElement& a) const;

    std::vector<Natural> tower_coords(const FieldElement& a) const;
    FieldElement from_tower_coords(const std::vector<Natural>& tau) const;

private:
    friend StandardFieldPtr standard_field(const Natural& p, unsigned n);

    static StandardFieldPtr build(const Natural& p, unsigned n);

    StandardField(PrimeField fp, unsigned n, DensePoly<PrimeField> f, FpMatrix to_tower,
                  FpMatrix from_tower, std::vector<unsigned> degree_list,
                  StandardFieldPtr subfield);

    void check_element(const FieldElement& a) const;
    FieldElement element(std::vector<Natural> coeffs) const;

    PrimeField prime_field_;
    unsigned n_;
    Natural size_;
    DensePoly<PrimeField> defining_poly_;
    FpMatrix to_tower_;
    FpMatrix from_tower_;
    std::vector<unsigned> degree_list_;
    StandardFieldPtr subfield_;
};

// Memoizing registry; repeated calls with the same (p, n) return the same
// object. Thread safe.
StandardFieldPtr standard_field(const Natural& p, unsigned n);

// Degrees over F_p of the tower basis elements of F_{p^n}.
std::vector<unsigned> tower_degree_list(unsigned n);

// Prime factorization of a degree, primes ascending.
std::vector<std::pair<unsigned, unsigned>> factor_degree(unsigned n);

// The natural embedding F_{p^m} -> F_{p^n} for m | n: tower coordinates of
// x scatter into the target positions whose basis degrees divide m.
FieldElement embed(const FieldElement& x, const StandardField& target);
FieldElement embed(const FieldElement& x, const StandardFieldPtr& target);

// Degree of x over the prime field (1 for x = 0).
unsigned element_degree(const FieldElement& x);

FieldElement ff_product(const FieldElement& x, const FieldElement& y);
FieldElement ff_inverse(const FieldElement& x);
FieldElement ff_pow(const FieldElement& x, const Natural& e);

// x^(p^k).
FieldElement frobenius(const FieldElement& x, unsigned k);

// Monic minimal polynomial of x over F_p.
DensePoly<PrimeField> minimal_polynomial(const FieldElement& x);

Natural element_to_steinitz(const FieldElement& x);
FieldElement steinitz_to_element(const StandardField& F, const Natural& s);
FieldElement steinitz_to_element(const StandardFieldPtr& F, const Natural& s);

// (degree of x, Steinitz number of x within the standard field of that degree).
SteinitzPair steinitz_pair(const FieldElement& x);

// Display form of an element as polynomial in the tower generators X_{r,i},
// with degree < r in each variable.
struct VariablePower {
    unsigned r = 0;
    unsigned level = 0;
    unsigned exponent = 0;
    bool operator==(const VariablePower&) const = default;
};

struct MultivariateTerm {
    Natural coefficient;
    std::vector<VariablePower> monomial;  // sorted by (r, level); empty = constant term
    bool operator==(const MultivariateTerm&) const = default;
};

std::vector<MultivariateTerm> multivariate_form(const FieldElement& x);
std::string multivariate_to_string(const std::vector<MultivariateTerm>& terms);

}  // namespace stdff

#endif
