#ifndef STDFF_CONWAY_HPP
#define STDFF_CONWAY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "stdff/cyclic.hpp"
#include "stdff/stdfield.hpp"

namespace stdff {

// Conway polynomials loaded from a table file, one per line:
//     <p> <n>: c0 c1 ... cn
// ascending coefficients in [0, p); '#' comments and blank lines as in the
// factor tables. Polynomials are checked to be monic of the right degree
// and irreducible when loaded.
class ConwayTable {
public:
    void load_file(const std::string& path);

    const DensePoly<PrimeField>& lookup(const Natural& p, unsigned n) const;
    std::optional<DensePoly<PrimeField>> find(const Natural& p, unsigned n) const;

    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::pair<Natural, unsigned>, DensePoly<PrimeField>> entries_;
};

// All n roots in F = F_{p^n} of an irreducible degree-n polynomial over F_p,
// sorted by Steinitz number. One root is found by deterministic splitting
// (quadratic-residue splitting for odd p, trace splitting for p = 2); the
// rest is its Frobenius orbit.
std::vector<FieldElement> roots_in_field(const DensePoly<PrimeField>& f, const StandardField& F);

// The canonical image z_n of the Conway generator in the standard field:
// the Steinitz-smallest root z of C_{p,n} with z^((p^n-1)/(p^m-1)) = z_m for
// every proper divisor m of n.
FieldElement conway_generator_element(const Natural& p, unsigned n, const ConwayTable& table);

SteinitzPair steinitz_pair_conway_generator(const Natural& p, unsigned n, const ConwayTable& table);

// The lift value a/m of x, i.e. the fraction with x = y_m^a for the standard
// generator y_m of order m. Requires x^m = 1 and the factorization of m;
// refuses (BudgetExceededError) when the Pohlig-Hellman digit searches would
// exceed the step budget.
LiftValue lift_log_small_order(const FieldElement& x, const Natural& m, const Factorization& fac_m,
                               std::uint64_t budget = 1u << 22);

}  // namespace stdff

#endif
