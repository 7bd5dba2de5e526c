#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <thread>

#include "stdff/stdfield.hpp"

using namespace stdff;

namespace {

std::vector<Natural> nat_vec(std::initializer_list<long> values) {
    std::vector<Natural> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("tower_degree_list examples and counting invariant") {
    CHECK(tower_degree_list(1) == std::vector<unsigned>{1});
    CHECK(tower_degree_list(4) == std::vector<unsigned>{1, 2, 4, 4});
    CHECK(tower_degree_list(6) == std::vector<unsigned>{1, 2, 3, 6, 3, 6});

    // #{j : d_j | m} = m for every m | n.
    for (unsigned n = 1; n <= 64; ++n) {
        auto list = tower_degree_list(n);
        REQUIRE(list.size() == n);
        CHECK(list[0] == 1);
        for (unsigned d : list) CHECK(n % d == 0);
        for (unsigned m = 1; m <= n; ++m) {
            if (n % m) continue;
            unsigned count = 0;
            for (unsigned d : list)
                if (m % d == 0) ++count;
            CHECK(count == m);
        }
    }
}

TEST_CASE("build_standard_field examples") {
    auto F4 = standard_field(2, 2);
    CHECK(F4->defining_poly().coeffs == nat_vec({1, 1, 1}));
    CHECK(F4->to_tower() == FpMatrix::identity(2));

    auto F16 = standard_field(2, 4);
    CHECK(F16->defining_poly().coeffs == nat_vec({1, 1, 0, 0, 1}));  // X^4+X+1

    auto F9 = standard_field(3, 2);
    CHECK(F9->defining_poly().coeffs == nat_vec({1, 0, 1}));  // X^2+1

    CHECK(standard_field(2, 1)->defining_poly().coeffs == nat_vec({1, 1}));  // X - 1
    CHECK(standard_field(2, 1)->generator() == standard_field(2, 1)->one());
}

TEST_CASE("defining polynomials are irreducible and to_tower is invertible") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        PrimeField Fp(p);
        for (unsigned n = 1; n <= 16; ++n) {
            auto F = standard_field(p, n);
            CHECK(is_irreducible(Fp, F->defining_poly()));
            CHECK(F->defining_poly().degree() == static_cast<std::ptrdiff_t>(n));
            // to_tower * from_tower = identity
            FpMatrix prod(n, n);
            for (unsigned i = 0; i < n; ++i) {
                std::vector<Natural> row(n);
                for (unsigned j = 0; j < n; ++j) row[j] = F->to_tower().at(i, j);
                auto back = fp_vec_mat(Fp, row, F->from_tower());
                for (unsigned j = 0; j < n; ++j) prod.at(i, j) = back[j];
            }
            CHECK(prod == FpMatrix::identity(n));
            // Row 0 of to_tower is e_0: the constant 1 is the first tower monomial.
            CHECK(F->to_tower().at(0, 0) == 1);
            for (unsigned j = 1; j < n; ++j) CHECK(F->to_tower().at(0, j) == 0);
        }
    }
}

TEST_CASE("field arithmetic in F_4") {
    auto F4 = standard_field(2, 2);
    auto x = F4->generator();
    auto xp1 = F4->add(x, F4->one());
    CHECK(ff_product(x, x) == xp1);
    CHECK(ff_product(x, xp1) == F4->one());
    CHECK(ff_inverse(x) == xp1);
    CHECK(ff_pow(x, 3) == F4->one());
    CHECK_THROWS_AS(ff_inverse(F4->zero()), std::domain_error);
}

TEST_CASE("embedding examples") {
    auto F4 = standard_field(2, 2);
    auto F16 = standard_field(2, 4);
    auto F8 = standard_field(2, 3);
    auto F64 = standard_field(2, 6);

    CHECK(embed(F4->one(), F16) == F16->one());
    CHECK(element_to_steinitz(embed(F4->generator(), F16)) == 2);
    CHECK(element_to_steinitz(embed(F8->generator(), F64)) == 4);
    CHECK_THROWS_AS(embed(F4->generator(), F8), std::domain_error);
    CHECK_THROWS_AS(embed(F4->generator(), standard_field(3, 4)), std::domain_error);
}

TEST_CASE("embeddings are field homomorphisms (exhaustive small, random larger)") {
    std::vector<std::pair<unsigned, unsigned>> chains;
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned m : {1u, 2u, 3u, 4u}) {
            for (unsigned n : {2u, 4u, 6u, 8u, 12u}) {
                if (n % m) continue;
                auto S = standard_field(p, m);
                auto F = standard_field(p, n);
                const bool small = S->size() <= 64;
                std::mt19937_64 rng(1000003ull * p + 1009ull * m + n);
                auto sample = [&](int i) {
                    if (small) return S->from_steinitz(i);
                    return S->from_steinitz(Natural(rng()) % S->size());
                };
                const int count = small ? static_cast<int>(S->size().get_ui()) : 40;
                for (int i = 0; i < count; ++i) {
                    for (int j = 0; j < count; ++j) {
                        auto a = sample(i);
                        auto b = sample(j);
                        REQUIRE(embed(S->mul(a, b), F) == F->mul(embed(a, F), embed(b, F)));
                        REQUIRE(embed(S->add(a, b), F) == F->add(embed(a, F), embed(b, F)));
                    }
                }
                CHECK(embed(S->one(), F) == F->one());
            }
        }
    }
}

TEST_CASE("embedding transitivity over divisor chains") {
    for (unsigned p : {2u, 3u}) {
        for (unsigned k : {1u, 2u, 3u}) {
            for (unsigned m : {2u, 4u, 6u}) {
                if (m % k) continue;
                for (unsigned n : {4u, 8u, 12u, 24u}) {
                    if (n % m) continue;
                    auto K = standard_field(p, k);
                    auto M = standard_field(p, m);
                    auto N = standard_field(p, n);
                    Natural limit = K->size() < 128 ? K->size() : Natural(128);
                    for (Natural s = 0; s < limit; s += 1) {
                        auto x = K->from_steinitz(s);
                        REQUIRE(embed(embed(x, M), N) == embed(x, N));
                    }
                }
            }
        }
    }
}

TEST_CASE("element_degree examples and Frobenius characterization") {
    auto F16 = standard_field(2, 4);
    CHECK(element_degree(F16->zero()) == 1);
    CHECK(element_degree(embed(standard_field(2, 2)->generator(), F16)) == 2);
    CHECK(element_degree(F16->generator()) == 4);

    for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {3, 4}, {5, 2}}) {
        auto F = standard_field(p, n);
        for (Natural s = 0; s < F->size() && s < 200; s += 1) {
            auto x = F->from_steinitz(s);
            unsigned d = element_degree(x);
            CHECK(n % d == 0);
            CHECK(frobenius(x, d) == x);
            for (unsigned k = 1; k < d; ++k) REQUIRE(frobenius(x, k) != x);
        }
    }
}

TEST_CASE("frobenius examples") {
    auto F4 = standard_field(2, 2);
    auto x = F4->generator();
    CHECK(frobenius(x, 1) == F4->add(x, F4->one()));
    CHECK(frobenius(F4->one(), 1) == F4->one());

    auto F9 = standard_field(3, 2);
    auto y = F9->generator();
    CHECK(frobenius(y, 1) == F9->mul(F9->from_prime(2), y));

    // frobenius(., n) is the identity; frobenius is a ring homomorphism.
    auto F27 = standard_field(3, 3);
    for (Natural s = 0; s < 27; s += 1) {
        auto a = F27->from_steinitz(s);
        CHECK(frobenius(a, 3) == a);
        auto b = F27->from_steinitz((s * 7 + 3) % 27);
        CHECK(frobenius(F27->mul(a, b), 1) == F27->mul(frobenius(a, 1), frobenius(b, 1)));
        CHECK(frobenius(F27->add(a, b), 1) == F27->add(frobenius(a, 1), frobenius(b, 1)));
    }
}

TEST_CASE("minimal_polynomial examples and degree property") {
    auto F16 = standard_field(2, 4);
    CHECK(minimal_polynomial(F16->zero()).coeffs == nat_vec({0, 1}));  // X
    CHECK(minimal_polynomial(embed(standard_field(2, 2)->generator(), F16)).coeffs ==
          nat_vec({1, 1, 1}));
    CHECK(minimal_polynomial(F16->generator()).coeffs == F16->defining_poly().coeffs);

    PrimeField F3(3);
    auto F27 = standard_field(3, 3);
    for (Natural s = 0; s < 27; s += 1) {
        auto x = F27->from_steinitz(s);
        auto mp = minimal_polynomial(x);
        CHECK(mp.degree() == static_cast<std::ptrdiff_t>(element_degree(x)));
        CHECK(poly_is_monic(F3, mp));
        if (s > 0) CHECK(is_irreducible(F3, mp));
        // x is a root of its minimal polynomial.
        auto val = F27->zero();
        for (std::size_t i = mp.coeffs.size(); i-- > 0;)
            val = F27->add(F27->mul(val, x), F27->from_prime(mp.coeffs[i]));
        CHECK(F27->is_zero(val));
    }
}

TEST_CASE("x_n is a primitive element") {
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned n : {2u, 4u, 6u, 9u, 10u, 12u}) {
            auto F = standard_field(p, n);
            CHECK(minimal_polynomial(F->generator()).degree() ==
                  static_cast<std::ptrdiff_t>(n));
        }
    }
}

TEST_CASE("tower coordinates match the p-adic digits of the Steinitz number") {
    for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 4}, {5, 3}}) {
        auto F = standard_field(p, n);
        for (Natural s = 0; s < F->size() && s < 300; s += 1) {
            auto tau = F->tower_coords(F->from_steinitz(s));
            Natural rest = s;
            for (unsigned i = 0; i < n; ++i) {
                CHECK(tau[i] == rest % p);
                rest /= p;
            }
        }
    }
}

TEST_CASE("multivariate_form examples") {
    auto F4 = standard_field(2, 2);
    CHECK(multivariate_form(F4->zero()).empty());
    CHECK(multivariate_to_string(multivariate_form(F4->zero())) == "0");

    auto e3 = F4->from_steinitz(3);
    auto terms = multivariate_form(e3);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].coefficient == 1);
    CHECK(terms[0].monomial.empty());
    CHECK(terms[1].monomial == std::vector<VariablePower>{{2, 1, 1}});
    CHECK(multivariate_to_string(terms) == "1 + X_{2,1}");

    auto F16 = standard_field(2, 4);
    auto t16 = multivariate_form(F16->from_steinitz(4));
    REQUIRE(t16.size() == 1);
    CHECK(t16[0].monomial == std::vector<VariablePower>{{2, 2, 1}});
    CHECK(multivariate_to_string(t16) == "X_{2,2}");

    // x_6 = x_{2,1} * x_{3,1}
    auto F64 = standard_field(2, 6);
    auto t64 = multivariate_form(F64->generator());
    REQUIRE(t64.size() == 1);
    CHECK(t64[0].monomial == std::vector<VariablePower>{{2, 1, 1}, {3, 1, 1}});
}

TEST_CASE("registry is shared and safe under concurrent construction") {
    auto a = standard_field(2, 12);
    auto b = standard_field(2, 12);
    CHECK(a.get() == b.get());

    std::vector<std::thread> workers;
    std::vector<StandardFieldPtr> results(8);
    for (int i = 0; i < 8; ++i)
        workers.emplace_back([&results, i] { results[i] = standard_field(5, 18); });
    for (auto& w : workers) w.join();
    for (int i = 1; i < 8; ++i) CHECK(results[i].get() == results[0].get());
}
