#include "stdff/conway.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stdff/errors.hpp"

namespace stdff {

void ConwayTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ConwayTable: cannot open " + path);
    std::string line;
    unsigned long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string p_tok, n_tok;
        if (!(ls >> p_tok)) continue;
        if (!(ls >> n_tok) || n_tok.empty() || n_tok.back() != ':')
            throw TableFormatError(path, line_number, "expected '<p> <n>: c0 c1 ... cn'");
        n_tok.pop_back();
        Natural p;
        unsigned n = 0;
        std::vector<Natural> coeffs;
        try {
            p = Natural(p_tok);
            Natural nn(n_tok);
            if (!nn.fits_uint_p()) throw std::invalid_argument("n too large");
            n = static_cast<unsigned>(nn.get_ui());
            std::string c_tok;
            while (ls >> c_tok) coeffs.emplace_back(c_tok);
        } catch (const std::invalid_argument& e) {
            throw TableFormatError(path, line_number, e.what());
        }
        if (!is_prime(p)) throw TableFormatError(path, line_number, "p is not prime");
        if (n == 0) throw TableFormatError(path, line_number, "n must be positive");
        if (coeffs.size() != n + 1)
            throw TableFormatError(path, line_number, "expected n+1 coefficients");
        for (const Natural& c : coeffs)
            if (c < 0 || c >= p)
                throw TableFormatError(path, line_number, "coefficient out of range [0, p)");
        PrimeField Fp(p);
        auto f = poly_from_coeffs(Fp, coeffs);
        if (f.degree() != static_cast<std::ptrdiff_t>(n) || !poly_is_monic(Fp, f))
            throw TableFormatError(path, line_number, "polynomial is not monic of degree n");
        if (!is_irreducible(Fp, f))
            throw TableFormatError(path, line_number, "polynomial is not irreducible");
        entries_[{p, n}] = std::move(f);
    }
}

const DensePoly<PrimeField>& ConwayTable::lookup(const Natural& p, unsigned n) const {
    auto it = entries_.find({p, n});
    if (it == entries_.end())
        throw MissingDataError("ConwayTable: no entry for p=" + p.get_str() +
                               " n=" + std::to_string(n));
    return it->second;
}

std::optional<DensePoly<PrimeField>> ConwayTable::find(const Natural& p, unsigned n) const {
    auto it = entries_.find({p, n});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

namespace {

DensePoly<StandardField> lift_to_field(const DensePoly<PrimeField>& f, const StandardField& F) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) coeffs.push_back(F.from_prime(c));
    return poly_from_coeffs(F, std::move(coeffs));
}

// Deterministic splitting of a squarefree product of linear factors over F.
FieldElement find_one_root(DensePoly<StandardField> h, const StandardField& F) {
    const Natural q = F.size();
    Natural shift = 0;
    while (h.degree() > 1) {
        const FieldElement delta = F.from_steinitz(standard_affine_shift(q, shift));
        shift += 1;
        DensePoly<StandardField> w;
        if (F.p() == 2) {
            // Trace map of delta*X: sum over (delta X)^(2^i), i < n.
            DensePoly<StandardField> term =
                poly_mod(F, poly_scale(F, poly_x(F), delta), h);
            w = term;
            for (unsigned i = 1; i < F.degree(); ++i) {
                term = poly_mod(F, poly_mul(F, term, term), h);
                w = poly_add(F, w, term);
            }
        } else {
            // (X + delta)^((q-1)/2) - 1 vanishes on roots z with z + delta
            // a nonzero square.
            DensePoly<StandardField> base = poly_add(F, poly_x(F), poly_constant(F, delta));
            w = poly_sub(F, poly_powmod(F, base, (q - 1) / 2, h), poly_constant(F, F.one()));
        }
        DensePoly<StandardField> g = poly_gcd(F, h, w);
        if (g.degree() < 1 || g.degree() == h.degree()) continue;
        // Either side works (the roots form one Frobenius orbit); keep the
        // smaller factor.
        DensePoly<StandardField> other = poly_divrem(F, h, g).first;
        h = g.degree() <= other.degree() ? std::move(g) : std::move(other);
    }
    return F.neg(h.coeffs[0]);  // h = X + c
}

}  // namespace

std::vector<FieldElement> roots_in_field(const DensePoly<PrimeField>& f, const StandardField& F) {
    if (f.degree() != static_cast<std::ptrdiff_t>(F.degree()))
        throw std::domain_error("roots_in_field: degree of f must equal the field degree");
    const PrimeField Fp(F.p());
    if (!is_irreducible(Fp, poly_monic(Fp, f)))
        throw std::domain_error("roots_in_field: f must be irreducible");

    const unsigned n = F.degree();
    std::vector<FieldElement> roots;
    if (n == 1) {
        roots.push_back(F.from_prime(Fp.neg(Fp.mul(f.coeffs[0], Fp.inv(f.coeffs[1])))));
        return roots;
    }
    FieldElement z = find_one_root(lift_to_field(poly_monic(Fp, f), F), F);
    roots.push_back(z);
    for (unsigned i = 1; i < n; ++i) {
        z = frobenius(z, 1);
        roots.push_back(z);
    }
    std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) {
        return element_to_steinitz(a) < element_to_steinitz(b);
    });
    return roots;
}

namespace {

FieldElement conway_zero_recursive(const Natural& p, unsigned n, const ConwayTable& table,
                                   std::map<unsigned, FieldElement>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    const StandardFieldPtr F = standard_field(p, n);
    const auto& cpoly = table.lookup(p, n);
    std::vector<FieldElement> candidates = roots_in_field(cpoly, *F);
    const Natural qn = F->size() - 1;
    for (unsigned m = 1; m < n; ++m) {
        if (n % m != 0) continue;
        const FieldElement zm = embed(conway_zero_recursive(p, m, table, memo), F);
        const Natural exponent = qn / (natural_pow(p, m) - 1);
        std::erase_if(candidates, [&](const FieldElement& z) {
            return !F->eq(F->pow(z, exponent), zm);
        });
    }
    if (candidates.empty())
        throw std::runtime_error("conway_generator_element: no compatible root; table entry for p=" +
                                 p.get_str() + " n=" + std::to_string(n) + " is inconsistent");
    // roots_in_field returns Steinitz-sorted roots, so the first survivor is
    // the minimal one.
    auto [pos, inserted] = memo.emplace(n, candidates.front());
    return pos->second;
}

}  // namespace

FieldElement conway_generator_element(const Natural& p, unsigned n, const ConwayTable& table) {
    std::map<unsigned, FieldElement> memo;
    return conway_zero_recursive(p, n, table, memo);
}

SteinitzPair steinitz_pair_conway_generator(const Natural& p, unsigned n,
                                            const ConwayTable& table) {
    return steinitz_pair(conway_generator_element(p, n, table));
}

LiftValue lift_log_small_order(const FieldElement& x, const Natural& m, const Factorization& fac_m,
                               std::uint64_t budget) {
    const StandardField& F = x.field();
    if (m < 1) throw std::domain_error("lift_log_small_order: m must be positive");
    if (fac_m.value() != m)
        throw std::invalid_argument("lift_log_small_order: factorization does not match m");
    if (!F.eq(F.pow(x, m), F.one()))
        throw std::domain_error("lift_log_small_order: x^m != 1");
    if (m == 1) return LiftValue{0, 1};

    // Estimated group operations of the digit searches; refuse rather than
    // run an open-ended computation.
    Natural cost = 0;
    for (const auto& term : fac_m.terms()) {
        Natural per_digit = term.prime;
        if (term.prime > 64) {
            mpz_sqrt(per_digit.get_mpz_t(), term.prime.get_mpz_t());
            per_digit = 2 * (per_digit + 1);
        }
        cost += term.exponent * per_digit;
    }
    if (cost > Natural(budget))
        throw BudgetExceededError("lift_log_small_order: order " + m.get_str() +
                                  " exceeds the discrete-log budget");

    const FieldElement ym =
        standard_generator(F.p(), F.degree(), m, fac_m);
    // Chinese-remainder the per-prime-power logarithms.
    Natural a = 0, modulus = 1;
    for (const auto& term : fac_m.terms()) {
        const Natural rt = natural_pow(term.prime, term.exponent);
        const Natural cof = m / rt;
        const Natural ar =
            pohlig_hellman_log(F.pow(ym, cof), F.pow(x, cof), term.prime, term.exponent);
        // combine a mod modulus with ar mod rt
        const Natural inv = mod_inverse(modulus % rt, rt);
        const Natural diff = ((ar - a) % rt + rt) % rt;
        a += modulus * (diff * inv % rt);
        modulus *= rt;
    }
    return LiftValue::make(a, m);
}

}  // namespace stdff
