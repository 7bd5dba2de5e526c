#include "stdff/cyclic.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace stdff {

namespace {

std::vector<unsigned> divisors_ascending(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

LiftValue LiftValue::make(const Natural& a, const Natural& m) {
    if (m < 1) throw std::domain_error("LiftValue: denominator must be positive");
    Natural num = a % m;
    if (num < 0) num += m;
    if (num == 0) return LiftValue{0, 1};
    Natural g = natural_gcd(num, m);
    return LiftValue{num / g, m / g};
}

unsigned r_multiplicity_closed_form(const Natural& p, unsigned k, const Natural& r) {
    if (k == 0) throw std::domain_error("r_multiplicity_closed_form: k must be positive");
    if (p % r == 0) throw std::domain_error("r_multiplicity_closed_form: r must differ from p");
    if (r == 2) {
        if (k % 2 == 1) return r_valuation(p - 1, 2);
        return r_valuation(p * p - 1, 2) + r_valuation(Natural(k), 2) - 1;
    }
    const Natural l0 = multiplicative_order_mod(p, r);
    if (Natural(k) % l0 != 0) return 0;
    const unsigned t0 = r_valuation(natural_pow(p, natural_to_ulong(l0)) - 1, r);
    return t0 + r_valuation(Natural(k) / l0, r);
}

Natural pohlig_hellman_log(const FieldElement& g, const FieldElement& h, const Natural& r,
                           unsigned s) {
    const StandardField& F = g.field();
    if (h.field_ptr() != g.field_ptr())
        throw std::invalid_argument("pohlig_hellman_log: elements from different fields");
    if (s == 0) {
        if (F.eq(h, F.one())) return 0;
        throw std::domain_error("pohlig_hellman_log: h is not a power of g");
    }
    const FieldElement gamma = F.pow(g, natural_pow(r, s - 1));  // order r
    if (F.eq(gamma, F.one()))
        throw std::domain_error("pohlig_hellman_log: g does not have order r^s");

    // Solves gamma^d = target for d in [0, r); linear scan for small r,
    // baby-step giant-step above.
    auto digit_log = [&](const FieldElement& target) -> Natural {
        if (r <= 64) {
            FieldElement cur = F.one();
            for (Natural d = 0; d < r; d += 1) {
                if (F.eq(cur, target)) return d;
                cur = F.mul(cur, gamma);
            }
            throw std::domain_error("pohlig_hellman_log: h is not a power of g");
        }
        Natural steps;
        mpz_sqrt(steps.get_mpz_t(), r.get_mpz_t());
        if (steps * steps < r) steps += 1;
        std::map<Natural, Natural> baby;  // Steinitz number -> exponent
        FieldElement cur = F.one();
        for (Natural b = 0; b < steps; b += 1) {
            baby.emplace(element_to_steinitz(cur), b);
            cur = F.mul(cur, gamma);
        }
        const FieldElement giant = F.inv(F.pow(gamma, steps));
        cur = target;
        for (Natural a = 0; a * steps < r + steps; a += 1) {
            auto it = baby.find(element_to_steinitz(cur));
            if (it != baby.end()) return (a * steps + it->second) % r;
            cur = F.mul(cur, giant);
        }
        throw std::domain_error("pohlig_hellman_log: h is not a power of g");
    };

    const FieldElement ginv = F.inv(g);
    Natural e = 0;
    for (unsigned j = 0; j < s; ++j) {
        const FieldElement adjusted = F.mul(h, F.pow(ginv, e));
        const FieldElement hj = F.pow(adjusted, natural_pow(r, s - 1 - j));
        e += digit_log(hj) * natural_pow(r, j);
    }
    if (!F.eq(F.pow(g, e), h))
        throw std::domain_error("pohlig_hellman_log: h is not a power of g");
    return e;
}

FieldElement rth_root_steinitz_smallest(const FieldElement& target, const Natural& r, unsigned t) {
    const StandardField& F = target.field();
    if (t == 0) throw std::domain_error("rth_root_steinitz_smallest: t must be positive");
    const Natural group = F.size() - 1;
    if (r_valuation(group, r) < t)
        throw std::domain_error("rth_root_steinitz_smallest: r^t does not divide p^n - 1");
    const Natural rt = natural_pow(r, t);
    const Natural rtm1 = rt / r;
    if (!F.eq(F.pow(target, rtm1), F.one()) ||
        (t >= 2 && F.eq(F.pow(target, rtm1 / r), F.one())))
        throw std::domain_error("rth_root_steinitz_smallest: target does not have order r^(t-1)");

    // Deterministic search for an element of order r^t.
    const Natural cofactor = group / rt;
    FieldElement y;
    Natural i = 0;
    while (true) {
        i += 1;
        const FieldElement w = F.from_steinitz(standard_affine_shift(F.size(), i));
        if (F.is_zero(w)) continue;
        const FieldElement z = F.pow(w, cofactor);
        if (!F.eq(F.pow(z, rtm1), F.one())) {
            y = z;
            break;
        }
    }

    const Natural b = t >= 2 ? pohlig_hellman_log(F.pow(y, r), target, r, t - 1) : Natural(0);
    FieldElement cur = F.pow(y, b);               // one r-th root of target
    const FieldElement omega = F.pow(y, rtm1);    // primitive r-th root of unity
    FieldElement best = cur;
    Natural best_s = element_to_steinitz(best);
    for (Natural j = 1; j < r; j += 1) {
        cur = F.mul(cur, omega);
        Natural s = element_to_steinitz(cur);
        if (s < best_s) {
            best = cur;
            best_s = std::move(s);
        }
    }
    return best;
}

FieldElement standard_cyclic_generator_prime_power(const Natural& p, unsigned n,
                                                   const Natural& r) {
    if (n == 0) throw std::domain_error("standard_cyclic_generator_prime_power: n must be positive");
    if (!is_prime(r))
        throw std::invalid_argument("standard_cyclic_generator_prime_power: r must be prime");
    if (mod_pow(p, Natural(n), r) != 1)
        throw std::domain_error("standard_cyclic_generator_prime_power: r does not divide p^n - 1");

    using Key = std::tuple<Natural, unsigned, Natural>;
    static std::map<Key, FieldElement> cache;
    static std::mutex mutex;
    const Key key{p, n, r};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    // (a) multiplicity t of r in p^n - 1 and the minimal divisor of n that
    // already reaches it; the generator lives there.
    const unsigned t = r_multiplicity_closed_form(p, n, r);
    unsigned k = n;
    for (unsigned d : divisors_ascending(n)) {
        if (mod_pow(p, Natural(d), r) != 1) continue;
        if (r_multiplicity_closed_form(p, d, r) == t) {
            k = d;
            break;
        }
    }

    FieldElement result;
    const StandardFieldPtr F = standard_field(p, n);
    if (k < n) {
        result = embed(standard_cyclic_generator_prime_power(p, k, r), F);
    } else {
        // (b) base degree of the recursion.
        unsigned l = 0;
        if (r == 2 && (p + 1) % 4 == 0 && n % 2 == 0) {
            l = 2;
        } else {
            for (unsigned d : divisors_ascending(n)) {
                if (mod_pow(p, Natural(d), r) == 1) {
                    l = d;
                    break;
                }
            }
        }
        const Natural group = F->size() - 1;
        if (l == n) {
            // (c) power a StandardAffineShift-enumerated element with full
            // r-part up to the Sylow generator.
            const Natural cofactor = group / r;
            FieldElement x = F->zero();
            Natural count = 0;
            while (F->is_zero(x) || F->eq(F->pow(x, cofactor), F->one())) {
                count += 1;
                x = F->from_steinitz(standard_affine_shift(F->size(), count));
            }
            result = F->pow(x, group / natural_pow(r, t));
        } else {
            // (d) lift the generator of the index-r subfield through an r-th root.
            const unsigned rsmall = static_cast<unsigned>(r.get_ui());
            const FieldElement below =
                embed(standard_cyclic_generator_prime_power(p, n / rsmall, r), F);
            result = rth_root_steinitz_smallest(below, r, t);
        }
    }

    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(result));
    return it->second;
}

FieldElement standard_generator(const Natural& p, unsigned n, const Natural& m,
                                const Factorization& fac_m) {
    if (m < 1) throw std::domain_error("standard_generator: m must be positive");
    if (fac_m.value() != m)
        throw std::invalid_argument("standard_generator: factorization does not match m");
    const StandardFieldPtr F = standard_field(p, n);
    const Natural group = F->size() - 1;
    if (group % m != 0)
        throw std::domain_error("standard_generator: m does not divide p^n - 1");
    if (m == 1) return F->one();

    FieldElement yprime = F->one();
    Natural a = 0;
    for (const auto& term : fac_m.terms()) {
        const unsigned sr = r_multiplicity_closed_form(p, n, term.prime);
        const Natural rt = natural_pow(term.prime, term.exponent);
        const FieldElement ynr = standard_cyclic_generator_prime_power(p, n, term.prime);
        yprime = F->mul(yprime, F->pow(ynr, natural_pow(term.prime, sr - term.exponent)));
        a += m / rt;
    }
    const Natural b = mod_inverse(a % m, m);
    return F->pow(yprime, b);
}

Natural element_order(const FieldElement& x, const Factorization& fac) {
    const StandardField& F = x.field();
    if (F.is_zero(x)) throw std::domain_error("element_order: zero has no multiplicative order");
    Natural order = fac.value();
    if (!F.eq(F.pow(x, order), F.one()))
        throw std::invalid_argument("element_order: x^N != 1 for the given factorization");
    for (const auto& term : fac.terms()) {
        for (unsigned i = 0; i < term.exponent; ++i) {
            const Natural candidate = order / term.prime;
            if (F.eq(F.pow(x, candidate), F.one()))
                order = candidate;
            else
                break;
        }
    }
    return order;
}

}  // namespace stdff
