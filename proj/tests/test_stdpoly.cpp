#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "stdff/cyclic.hpp"
#include "stdff/errors.hpp"
#include "stdff/factor_db.hpp"
#include "stdff/stdpoly.hpp"

using namespace stdff;

namespace {

std::vector<Natural> nat_vec(std::initializer_list<long> values) {
    std::vector<Natural> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

// Decodes a record over its coefficient field F_{p^{r^(level-1)}}.
DensePoly<StandardField> decode(const StdPolyRecord& rec) {
    unsigned deg = 1;
    for (unsigned i = 1; i < rec.key.level; ++i) deg *= rec.key.r;
    auto K = standard_field(rec.key.p, deg);
    std::vector<FieldElement> coeffs;
    for (const Natural& s : rec.coeff_steinitz) coeffs.push_back(K->from_steinitz(s));
    return poly_from_coeffs(*K, std::move(coeffs));
}

}  // namespace

TEST_CASE("non_rth_power examples") {
    CHECK(non_rth_power(PrimeField(7), 3) == 2);
    CHECK(non_rth_power(PrimeField(5), 2) == 2);
    CHECK(non_rth_power(PrimeField(13), 3) == 2);
    auto F9 = standard_field(3, 2);
    CHECK(element_to_steinitz(non_rth_power(*F9, 2)) == 4);
    CHECK_THROWS_AS(non_rth_power(PrimeField(7), 5), std::domain_error);

    // Returned values are genuinely not r-th powers.
    for (auto [p, r] : std::vector<std::pair<unsigned, unsigned>>{
             {7, 2}, {7, 3}, {13, 2}, {13, 3}, {31, 5}, {101, 5}}) {
        PrimeField K(p);
        Natural a = non_rth_power(K, r);
        for (Natural x = 1; x < p; x += 1) CHECK(K.pow(x, r) != a);
    }
}

TEST_CASE("find_irreducible_polynomial hand traces") {
    PrimeField F2(2);
    auto f1 = find_irreducible_polynomial(F2, 3, Natural(1));
    CHECK(f1.coeffs == nat_vec({1, 1, 0, 1}));  // X^3+X+1 on the first try

    auto f2 = find_irreducible_polynomial(F2, 5, Natural(1));
    CHECK(f2.coeffs == nat_vec({1, 0, 1, 0, 0, 1}));  // X^5+X^2+1

    PrimeField F3(3);
    auto f3 = find_irreducible_polynomial(F3, 5, Natural(2));
    CHECK(f3.coeffs == nat_vec({2, 1, 1, 0, 0, 1}));  // X^5+X^2+X+2

    CHECK_THROWS_AS(find_irreducible_polynomial(F2, 3, Natural(0)), std::domain_error);
}

TEST_CASE("standard_prime_degree_poly golden examples") {
    CHECK(standard_prime_degree_poly(2, 2, 1).coeff_steinitz == nat_vec({1, 1, 1}));
    CHECK(standard_prime_degree_poly(3, 2, 1).coeff_steinitz == nat_vec({1, 0, 1}));
    CHECK(standard_prime_degree_poly(5, 2, 1).coeff_steinitz == nat_vec({3, 0, 1}));
    CHECK(standard_prime_degree_poly(7, 3, 1).coeff_steinitz == nat_vec({5, 0, 0, 1}));
    CHECK(standard_prime_degree_poly(2, 2, 2).coeff_steinitz == nat_vec({2, 1, 1}));
    CHECK(standard_prime_degree_poly(2, 5, 1).coeff_steinitz == nat_vec({1, 0, 1, 0, 0, 1}));
    CHECK(standard_prime_degree_poly(2, 3, 1).coeff_steinitz == nat_vec({1, 1, 0, 1}));
}

TEST_CASE("every standard polynomial is monic of degree r and irreducible") {
    for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
        for (unsigned r : {2u, 3u, 5u}) {
            for (unsigned level = 1; level <= 3; ++level) {
                unsigned long deg = 1;
                for (unsigned i = 0; i < level; ++i) deg *= r;
                if (deg > 32) continue;
                auto rec = standard_prime_degree_poly(p, r, level);
                REQUIRE(rec.coeff_steinitz.size() == r + 1);
                CHECK(rec.coeff_steinitz.back() == 1);
                auto f = decode(rec);
                auto K = standard_field(p, deg / r);
                CHECK(f.degree() == static_cast<std::ptrdiff_t>(r));
                CHECK(is_irreducible(*K, f));
            }
        }
    }
}

TEST_CASE("Kummer chains (case B): x_{r,i}^r = x_{r,i-1}, r-part of order is r^(t+i)") {
    for (auto [p, r] :
         std::vector<std::pair<unsigned, unsigned>>{{5, 2}, {13, 2}, {7, 3}, {13, 3}}) {
        const unsigned t = r_valuation(Natural(p) - 1, r);
        for (unsigned level = 1; level <= 3; ++level) {
            unsigned long deg = 1;
            for (unsigned i = 0; i < level; ++i) deg *= r;
            if (deg > 27) continue;
            auto F = standard_field(p, static_cast<unsigned>(deg));
            auto x = F->generator();
            if (level >= 2) {
                auto below = standard_field(p, static_cast<unsigned>(deg / r));
                CHECK(ff_pow(x, r) == embed(below->generator(), F));
            }
            Factorization fac = factorize(F->size() - 1).factors;
            CHECK(r_valuation(element_order(x, fac), r) == t + level);
        }
    }
}

TEST_CASE("case C chain: x_{2,1}^2 = -1, x_{2,2}^2 = a, then squares walk down") {
    for (unsigned p : {3u, 7u, 11u}) {
        auto F2 = standard_field(p, 2);
        CHECK(ff_pow(F2->generator(), 2) == F2->from_prime(Natural(p) - 1));
        Factorization fac2 = factorize(F2->size() - 1).factors;
        CHECK(element_order(F2->generator(), fac2) == 4);

        const unsigned t = r_valuation(Natural(p) * p - 1, 2);
        auto F4 = standard_field(p, 4);
        auto rec = standard_prime_degree_poly(p, 2, 2);
        auto a = embed(F2->from_steinitz(rec.coeff_steinitz[0]), F4);  // c_0 = -a
        CHECK(ff_pow(F4->generator(), 2) == -a);
        Factorization fac4 = factorize(F4->size() - 1).factors;
        CHECK(r_valuation(element_order(F4->generator(), fac4), 2) == t + 1);

        if (p == 3) {
            auto F8 = standard_field(p, 8);
            CHECK(ff_pow(F8->generator(), 2) == embed(F4->generator(), F8));
            Factorization fac8 = factorize(F8->size() - 1).factors;
            CHECK(r_valuation(element_order(F8->generator(), fac8), 2) == t + 2);
        }
    }
}

TEST_CASE("case D constant terms encode the norm chain") {
    // f_{r,1} has constant term -1, f_{r,i} has constant term -x_{r,i-1}.
    auto rec1 = standard_prime_degree_poly(2, 7, 1);
    CHECK(rec1.coeff_steinitz[0] == 1);  // -1 over F_2
    auto rec2 = standard_prime_degree_poly(2, 7, 2);
    auto K = standard_field(2, 7);
    CHECK(K->from_steinitz(rec2.coeff_steinitz[0]) == K->neg(K->generator()));

    auto rec3 = standard_prime_degree_poly(3, 5, 2);
    auto K3 = standard_field(3, 5);
    CHECK(K3->from_steinitz(rec3.coeff_steinitz[0]) == K3->neg(K3->generator()));
}

TEST_CASE("Artin-Schreier levels") {
    auto rec = standard_prime_degree_poly(3, 3, 2);  // X^3 - X - x_{3,1}^2 over F_27
    auto K = standard_field(3, 3);
    auto f = decode(rec);
    REQUIRE(f.degree() == 3);
    CHECK(f.coeffs[1] == K->neg(K->one()));
    CHECK(f.coeffs[2] == K->zero());
    CHECK(f.coeffs[0] == K->neg(K->pow(K->generator(), 2)));
    CHECK(is_irreducible(*K, f));

    auto rec3 = standard_prime_degree_poly(2, 2, 3);  // constant (x_{2,1} x_{2,2})^1
    auto K4 = standard_field(2, 4);
    auto prod = K4->mul(embed(standard_field(2, 2)->generator(), K4), K4->generator());
    CHECK(K4->from_steinitz(rec3.coeff_steinitz[0]) == prod);
}

TEST_CASE("records are deterministic") {
    auto a = standard_prime_degree_poly(5, 3, 2);
    auto b = standard_prime_degree_poly(5, 3, 2);
    CHECK(a == b);
}

TEST_CASE("cache file round trip and validation") {
    auto r1 = standard_prime_degree_poly(2, 3, 1);
    auto r2 = standard_prime_degree_poly(2, 3, 2);
    const std::string path = "stdpoly_cache_test.txt";
    stdpoly_cache_save(path);
    stdpoly_cache_load(path);  // must re-validate and accept its own output
    CHECK(standard_prime_degree_poly(2, 3, 2) == r2);

    // Reducible record is rejected.
    {
        std::ofstream out("stdpoly_bad1.txt");
        out << "2 3 1: 1 0 0 1\n";  // X^3 + 1 = (X+1)(X^2+X+1)
    }
    CHECK_THROWS_AS(stdpoly_cache_load("stdpoly_bad1.txt"), TableFormatError);

    // Malformed line is rejected with its line number.
    {
        std::ofstream out("stdpoly_bad2.txt");
        out << "# comment\n\n2 3 banana: 1 1 0 1\n";
    }
    try {
        stdpoly_cache_load("stdpoly_bad2.txt");
        CHECK(false);
    } catch (const TableFormatError& e) {
        CHECK(e.line_number == 3);
    }

    // Wrong coefficient count.
    {
        std::ofstream out("stdpoly_bad3.txt");
        out << "2 3 1: 1 1 0\n";
    }
    CHECK_THROWS_AS(stdpoly_cache_load("stdpoly_bad3.txt"), TableFormatError);

    std::remove(path.c_str());
    std::remove("stdpoly_bad1.txt");
    std::remove("stdpoly_bad2.txt");
    std::remove("stdpoly_bad3.txt");
    (void)r1;
}
