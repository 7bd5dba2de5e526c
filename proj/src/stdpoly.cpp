#include "stdff/stdpoly.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "stdff/errors.hpp"
#include "stdff/stdfield.hpp"

namespace stdff {

namespace {

std::map<StdPolyKey, StdPolyRecord>& record_cache() {
    static std::map<StdPolyKey, StdPolyRecord> cache;
    return cache;
}

std::mutex& record_mutex() {
    static std::mutex m;
    return m;
}

unsigned checked_pow(unsigned base, unsigned e) {
    unsigned long long v = 1;
    for (unsigned i = 0; i < e; ++i) {
        v *= base;
        if (v > (1u << 24))
            throw std::domain_error("standard_prime_degree_poly: level out of supported range");
    }
    return static_cast<unsigned>(v);
}

std::vector<Natural> record_from_poly(const PrimeField& K, const DensePoly<PrimeField>& f,
                                      unsigned r) {
    std::vector<Natural> s(r + 1, Natural(0));
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) s[j] = K.to_steinitz(f.coeffs[j]);
    return s;
}

std::vector<Natural> record_from_poly(const StandardField& K, const DensePoly<StandardField>& f,
                                      unsigned r) {
    std::vector<Natural> s(r + 1, Natural(0));
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) s[j] = K.to_steinitz(f.coeffs[j]);
    return s;
}

StdPolyRecord compute_record(const Natural& p, unsigned r, unsigned level) {
    const Natural rn(r);
    const PrimeField Fp(p);
    std::vector<Natural> coeffs(r + 1, Natural(0));
    coeffs[r] = 1;

    if (rn == p) {
        // Artin-Schreier: X^p - X - (x_{p,1} ... x_{p,level-1})^(p-1), the
        // product being empty (so the constant 1) at level 1.
        coeffs[1] = p - 1;  // -1
        if (level == 1) {
            coeffs[0] = p - 1;
        } else {
            StandardFieldPtr K = standard_field(p, checked_pow(r, level - 1));
            FieldElement prod = K->one();
            for (unsigned j = 1; j < level; ++j)
                prod = K->mul(prod, embed(standard_field(p, checked_pow(r, j))->generator(), *K));
            FieldElement a = K->pow(prod, p - 1);
            coeffs[0] = K->to_steinitz(K->neg(a));
        }
    } else if ((p - 1) % rn == 0 && (r != 2 || (p - 1) % 4 == 0)) {
        // Kummer chain X^r - a, then X^r - x_{r,i-1}.
        if (level == 1) {
            coeffs[0] = Fp.neg(non_rth_power(Fp, rn));
        } else {
            StandardFieldPtr K = standard_field(p, checked_pow(r, level - 1));
            coeffs[0] = K->to_steinitz(K->neg(K->generator()));
        }
    } else if (r == 2 && (p + 1) % 4 == 0) {
        // X^2 + 1 first, X^2 - a over F_{p^2} second, then the chain.
        if (level == 1) {
            coeffs[0] = 1;
        } else if (level == 2) {
            StandardFieldPtr K = standard_field(p, 2);
            coeffs[0] = K->to_steinitz(K->neg(non_rth_power(*K, 2)));
        } else {
            StandardFieldPtr K = standard_field(p, checked_pow(2, level - 1));
            coeffs[0] = K->to_steinitz(K->neg(K->generator()));
        }
    } else {
        // Deterministic search with prescribed constant term: norm of the
        // new generator down to the previous field is the previous generator.
        if (level == 1) {
            auto f = find_irreducible_polynomial(Fp, r, Fp.neg(Fp.one()));
            coeffs = record_from_poly(Fp, f, r);
        } else {
            StandardFieldPtr K = standard_field(p, checked_pow(r, level - 1));
            auto f = find_irreducible_polynomial(*K, r, K->neg(K->generator()));
            coeffs = record_from_poly(*K, f, r);
        }
    }
    return StdPolyRecord{StdPolyKey{p, r, level}, std::move(coeffs)};
}

}  // namespace

StdPolyRecord standard_prime_degree_poly(const Natural& p, unsigned r, unsigned level) {
    if (!is_prime(p))
        throw std::invalid_argument("standard_prime_degree_poly: p must be prime");
    if (!is_prime(Natural(r)))
        throw std::invalid_argument("standard_prime_degree_poly: r must be prime");
    if (level == 0)
        throw std::invalid_argument("standard_prime_degree_poly: level must be >= 1");
    const StdPolyKey key{p, r, level};
    {
        std::lock_guard<std::mutex> lock(record_mutex());
        auto it = record_cache().find(key);
        if (it != record_cache().end()) return it->second;
    }
    StdPolyRecord rec = compute_record(p, r, level);
    std::lock_guard<std::mutex> lock(record_mutex());
    auto [it, inserted] = record_cache().emplace(key, std::move(rec));
    return it->second;
}

void stdpoly_cache_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("stdpoly_cache_load: cannot open " + path);
    std::vector<std::pair<unsigned long, StdPolyRecord>> parsed;
    std::string line;
    unsigned long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string p_tok, r_tok, i_tok;
        if (!(ls >> p_tok)) continue;  // blank line
        if (!(ls >> r_tok >> i_tok) || i_tok.empty() || i_tok.back() != ':')
            throw TableFormatError(path, line_number, "expected 'p r i: s0 ... sr'");
        i_tok.pop_back();
        StdPolyRecord rec;
        try {
            rec.key.p = Natural(p_tok);
            rec.key.r = static_cast<unsigned>(Natural(r_tok).get_ui());
            rec.key.level = static_cast<unsigned>(Natural(i_tok).get_ui());
            std::string s_tok;
            while (ls >> s_tok) rec.coeff_steinitz.emplace_back(s_tok);
        } catch (const std::invalid_argument&) {
            throw TableFormatError(path, line_number, "malformed number");
        }
        if (rec.coeff_steinitz.size() != rec.key.r + 1)
            throw TableFormatError(path, line_number, "expected r+1 coefficients");
        parsed.emplace_back(line_number, std::move(rec));
    }
    // Validate in ascending key order so lower levels are available when a
    // higher level forces construction of its coefficient field.
    std::sort(parsed.begin(), parsed.end(),
              [](const auto& a, const auto& b) { return a.second.key < b.second.key; });
    for (auto& [ln, rec] : parsed) {
        if (!is_prime(rec.key.p) || !is_prime(Natural(rec.key.r)) || rec.key.level == 0)
            throw TableFormatError(path, ln, "p and r must be prime, i >= 1");
        StandardFieldPtr K = standard_field(rec.key.p, checked_pow(rec.key.r, rec.key.level - 1));
        std::vector<FieldElement> coeffs;
        for (const Natural& s : rec.coeff_steinitz) {
            if (s < 0 || s >= K->size())
                throw TableFormatError(path, ln, "coefficient Steinitz number out of range");
            coeffs.push_back(K->from_steinitz(s));
        }
        auto f = poly_from_coeffs(*K, std::move(coeffs));
        if (f.degree() != static_cast<std::ptrdiff_t>(rec.key.r) || !poly_is_monic(*K, f))
            throw TableFormatError(path, ln, "polynomial is not monic of degree r");
        if (!is_irreducible(*K, f))
            throw TableFormatError(path, ln, "polynomial is not irreducible");
        std::lock_guard<std::mutex> lock(record_mutex());
        record_cache().emplace(rec.key, rec);
    }
}

void stdpoly_cache_save(const std::string& path) {
    std::map<StdPolyKey, StdPolyRecord> snapshot;
    {
        std::lock_guard<std::mutex> lock(record_mutex());
        snapshot = record_cache();
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("stdpoly_cache_save: cannot open " + path);
    out << "# standard prime-degree polynomials: p r i: s0 ... sr\n";
    for (const auto& [key, rec] : snapshot) {
        out << key.p << ' ' << key.r << ' ' << key.level << ':';
        for (const Natural& s : rec.coeff_steinitz) out << ' ' << s;
        out << '\n';
    }
}

}  // namespace stdff
