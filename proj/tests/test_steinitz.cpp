#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "stdff/steinitz.hpp"
#include "stdff/stdfield.hpp"

using namespace stdff;

TEST_CASE("standard_affine_shift examples") {
    CHECK(standard_affine_shift(7, 0) == 4);
    CHECK(standard_affine_shift(7, 2) == 0);
    CHECK(standard_affine_shift(8, 0) == 5);
    CHECK(standard_affine_shift(2, 1) == 0);
    CHECK(standard_affine_shift(1, 0) == 0);
    CHECK(standard_affine_shift(1, 12345) == 0);
    CHECK_THROWS_AS(standard_affine_shift(0, 1), std::domain_error);
}

TEST_CASE("standard_affine_shift is a bijection on [0, q)") {
    for (unsigned long q = 1; q <= 10000; ++q) {
        std::vector<bool> seen(q, false);
        for (unsigned long i = 0; i < q; ++i) {
            unsigned long v = standard_affine_shift(q, i).get_ui();
            REQUIRE_FALSE(seen[v]);
            seen[v] = true;
        }
    }
}

TEST_CASE("element Steinitz numbers, examples") {
    auto F4 = standard_field(2, 2);
    CHECK(element_to_steinitz(F4->zero()) == 0);
    CHECK(element_to_steinitz(F4->generator()) == 2);  // x_{2,1}

    auto F9 = standard_field(3, 2);
    auto x = F9->generator();
    CHECK(element_to_steinitz(F9->add(F9->one(), x)) == 4);  // 1 + x_{2,1}

    CHECK(steinitz_to_element(F4, 3) == F4->add(F4->generator(), F4->one()));
    CHECK(steinitz_to_element(F4, 0) == F4->zero());
    CHECK(steinitz_to_element(F9, 6) == F9->mul(F9->from_prime(2), x));  // 2*x_{2,1}
    CHECK_THROWS_AS(steinitz_to_element(F4, 4), std::out_of_range);
}

TEST_CASE("Steinitz round trip is exhaustive for small fields") {
    for (unsigned p : {2u, 3u, 5u, 7u, 13u}) {
        for (unsigned n = 1; n <= 8; ++n) {
            Natural size = natural_pow(p, n);
            if (size > 2187) break;
            auto F = standard_field(p, n);
            std::set<Natural> seen;
            for (Natural s = 0; s < size; s += 1) {
                auto x = F->from_steinitz(s);
                REQUIRE(F->to_steinitz(x) == s);
                seen.insert(F->to_steinitz(x));
            }
            CHECK(seen.size() == size.get_ui());  // s is onto {0, ..., p^n - 1}
        }
    }
}

TEST_CASE("steinitz_pair examples") {
    auto F16 = standard_field(2, 4);
    CHECK(steinitz_pair(F16->one()) == SteinitzPair{1, 1});
    CHECK(steinitz_pair(embed(standard_field(2, 2)->generator(), F16)) == SteinitzPair{2, 2});

    auto F64 = standard_field(2, 6);
    auto x31 = standard_field(2, 3)->generator();
    CHECK(steinitz_pair(embed(x31, F64)) == SteinitzPair{3, 2});
}

TEST_CASE("steinitz_pair is consistent with the degree-d standard field") {
    // The pair (d, m) of x must decode back to an element of F_{p^d} that
    // embeds to x.
    for (auto [p, n] :
         std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {2, 12}, {3, 6}, {5, 4}}) {
        auto F = standard_field(p, n);
        for (Natural s = 0; s < 400 && s < F->size(); s += 1) {
            auto x = F->from_steinitz(s);
            auto pair = steinitz_pair(x);
            REQUIRE(n % pair.degree == 0);
            auto sub = standard_field(p, pair.degree);
            REQUIRE(pair.number < sub->size());
            auto y = sub->from_steinitz(pair.number);
            CHECK(element_degree(y) == pair.degree);
            CHECK(embed(y, F) == x);
        }
    }
}

TEST_CASE("chain-subfield prefix property preserves Steinitz numbers") {
    // For m a product of an initial segment of the non-decreasing prime
    // sequence of n, the embedding F_{p^m} -> F_{p^n} is Steinitz-invariant.
    auto initial_segments = [](unsigned n) {
        std::vector<unsigned> primes;
        for (auto [r, e] : factor_degree(n))
            for (unsigned i = 0; i < e; ++i) primes.push_back(r);
        std::sort(primes.begin(), primes.end());
        std::vector<unsigned> segs{1};
        unsigned m = 1;
        for (unsigned r : primes) segs.push_back(m *= r);
        return segs;
    };
    for (unsigned p : {2u, 3u}) {
        for (unsigned n : {4u, 6u, 8u, 12u}) {
            auto F = standard_field(p, n);
            for (unsigned m : initial_segments(n)) {
                auto S = standard_field(p, m);
                Natural limit = S->size() < 256 ? S->size() : Natural(256);
                for (Natural s = 0; s < limit; s += 1)
                    REQUIRE(element_to_steinitz(embed(S->from_steinitz(s), F)) == s);
            }
        }
    }
}
