#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stdff/conway.hpp"
#include "stdff/cyclic.hpp"
#include "stdff/errors.hpp"
#include "stdff/factor_db.hpp"
#include "stdff/stdpoly.hpp"

namespace {

using namespace stdff;

// Flag validation failures; mapped to exit code 2 like parse errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text, const char* what) {
    try {
        Natural v(text);
        if (v < 0) throw std::invalid_argument("negative");
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + text +
                         "'");
    }
}

Natural require_prime(const std::string& text, const char* what) {
    Natural v = parse_natural(text, what);
    if (!is_prime(v)) throw UsageError(std::string(what) + ": " + v.get_str() + " is not prime");
    return v;
}

void print_line(bool labeled, const std::string& label, const std::string& value) {
    if (labeled)
        std::cout << label << '=' << value << '\n';
    else
        std::cout << value << '\n';
}

std::string join(const std::vector<Natural>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ' ';
        out << values[i];
    }
    return out.str();
}

std::vector<std::string> table_paths_from_env() {
    std::vector<std::string> paths;
    if (const char* env = std::getenv("STDFF_FACTOR_TABLES")) {
        std::istringstream in(env);
        std::string item;
        while (std::getline(in, item, ':'))
            if (!item.empty()) paths.push_back(item);
    }
    return paths;
}

FactorTable load_factor_tables(const std::vector<std::string>& flag_paths) {
    FactorTable table;
    for (const auto& path : table_paths_from_env()) table.load_file(path);
    for (const auto& path : flag_paths) table.load_file(path);
    return table;
}

// Factorization of m for the gen command: inline flag first, then the
// tables (restricting the stored factorization of p^n - 1 to m), then local
// factoring.
Factorization resolve_order_factors(const Natural& p, unsigned n, const Natural& m,
                                    bool factors_given, const std::string& factors_text,
                                    const std::vector<std::string>& table_flag_paths) {
    if (factors_given) {
        Factorization fac;
        try {
            fac = Factorization::parse(factors_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--factors: ") + e.what());
        }
        if (fac.value() != m)
            throw UsageError("--factors: product " + fac.value().get_str() + " does not equal " +
                             m.get_str());
        return fac;
    }
    FactorTable table = load_factor_tables(table_flag_paths);
    if (auto whole = table.find(p, n)) {
        std::vector<Factorization::Term> terms;
        for (const auto& term : whole->terms()) {
            unsigned e = r_valuation(m, term.prime);
            if (e > 0) terms.push_back({term.prime, e});
        }
        return Factorization::from_terms(std::move(terms));
    }
    PartialFactorization local = factorize(m);
    if (!local.complete())
        throw MissingDataError("no factorization of " + m.get_str() +
                               " available (composite cofactor " + local.cofactor.get_str() + ")");
    return local.factors;
}

struct CommonArgs {
    std::string p;
    unsigned n = 0;
    bool labeled = false;
};

int dispatch(int argc, char** argv) {
    CLI::App app{"standardized finite fields: canonical towers, Steinitz numbering, "
                 "cyclic generators"};
    app.require_subcommand(1);

    // stdpoly
    auto* c_stdpoly = app.add_subcommand(
        "stdpoly", "Steinitz numbers of the coefficients of f_{r,i} over F_{p^(r^(i-1))}");
    std::string sp_p;
    unsigned sp_r = 0, sp_i = 0;
    bool sp_labeled = false;
    std::string sp_cache;
    c_stdpoly->add_option("-p", sp_p, "characteristic (prime)")->required();
    c_stdpoly->add_option("-r", sp_r, "degree (prime)")->required();
    c_stdpoly->add_option("-i", sp_i, "tower level (>= 1)")->required();
    c_stdpoly->add_option("--stdpoly-cache", sp_cache, "cache file to load and update");
    c_stdpoly->add_flag("--labeled", sp_labeled, "key=value output");

    // field
    auto* c_field = app.add_subcommand("field", "defining polynomial f_n of F_{p^n} over F_p");
    CommonArgs fa;
    c_field->add_option("-p", fa.p, "characteristic (prime)")->required();
    c_field->add_option("-n", fa.n, "degree (>= 1)")->required();
    c_field->add_flag("--labeled", fa.labeled, "key=value output");

    // gen
    auto* c_gen = app.add_subcommand("gen", "Steinitz number of the standard generator y_m "
                                            "of order m in F_{p^n}");
    CommonArgs ga;
    std::string g_m, g_factors;
    bool g_factors_given = false;
    std::vector<std::string> g_tables;
    c_gen->add_option("-p", ga.p, "characteristic (prime)")->required();
    c_gen->add_option("-n", ga.n, "degree (>= 1)")->required();
    c_gen->add_option("-m", g_m, "order (divides p^n - 1)")->required();
    c_gen->add_option("--factors", g_factors, "factorization of m, e.g. \"2^3 5\"");
    c_gen->add_flag("--labeled", ga.labeled, "key=value output");
    c_gen->add_option("--factor-table", g_tables, "factor table file (repeatable)");

    // embed
    auto* c_embed = app.add_subcommand("embed", "image of the element with Steinitz number s "
                                                "under F_{p^m} -> F_{p^n}");
    std::string e_p, e_s;
    unsigned e_m = 0, e_n = 0;
    bool e_labeled = false;
    c_embed->add_option("-p", e_p, "characteristic (prime)")->required();
    c_embed->add_option("-m", e_m, "source degree")->required();
    c_embed->add_option("-n", e_n, "target degree")->required();
    c_embed->add_option("-s", e_s, "Steinitz number in F_{p^m}")->required();
    c_embed->add_flag("--labeled", e_labeled, "key=value output");

    // order
    auto* c_order = app.add_subcommand("order", "multiplicative order of the element with "
                                                "Steinitz number s in F_{p^n}");
    CommonArgs oa;
    std::string o_s, o_factors;
    std::vector<std::string> o_tables;
    c_order->add_option("-p", oa.p, "characteristic (prime)")->required();
    c_order->add_option("-n", oa.n, "degree (>= 1)")->required();
    c_order->add_option("-s", o_s, "Steinitz number")->required();
    c_order->add_option("--factors", o_factors, "factorization of p^n - 1");
    c_order->add_option("--factor-table", o_tables, "factor table file (repeatable)");
    c_order->add_flag("--labeled", oa.labeled, "key=value output");

    // minpoly
    auto* c_minpoly = app.add_subcommand("minpoly", "minimal polynomial over F_p of the element "
                                                    "with Steinitz number s in F_{p^n}");
    CommonArgs ma;
    std::string m_s;
    c_minpoly->add_option("-p", ma.p, "characteristic (prime)")->required();
    c_minpoly->add_option("-n", ma.n, "degree (>= 1)")->required();
    c_minpoly->add_option("-s", m_s, "Steinitz number")->required();
    c_minpoly->add_flag("--labeled", ma.labeled, "key=value output");

    // conway
    auto* c_conway = app.add_subcommand("conway", "Steinitz pair of the Conway generator image "
                                                  "in the standard field");
    CommonArgs ca;
    std::string c_table;
    c_conway->add_option("-p", ca.p, "characteristic (prime)")->required();
    c_conway->add_option("-n", ca.n, "degree (>= 1)")->required();
    c_conway->add_option("--conway-table", c_table, "Conway polynomial table file")->required();
    c_conway->add_flag("--labeled", ca.labeled, "key=value output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g_factors_given = c_gen->count("--factors") > 0;
    const bool o_factors_given = c_order->count("--factors") > 0;

    if (c_stdpoly->parsed()) {
        const Natural p = require_prime(sp_p, "-p");
        if (!is_prime(Natural(sp_r))) throw UsageError("-r: must be prime");
        if (sp_i == 0) throw UsageError("-i: must be >= 1");
        if (!sp_cache.empty()) {
            std::ifstream probe(sp_cache);
            if (probe.good()) stdpoly_cache_load(sp_cache);
        }
        const StdPolyRecord rec = standard_prime_degree_poly(p, sp_r, sp_i);
        if (!sp_cache.empty()) stdpoly_cache_save(sp_cache);
        print_line(sp_labeled, "coeff_steinitz", join(rec.coeff_steinitz));
        return 0;
    }

    if (c_field->parsed()) {
        const Natural p = require_prime(fa.p, "-p");
        if (fa.n == 0) throw UsageError("-n: must be >= 1");
        const auto F = standard_field(p, fa.n);
        print_line(fa.labeled, "defining_poly", join(F->defining_poly().coeffs));
        return 0;
    }

    if (c_gen->parsed()) {
        const Natural p = require_prime(ga.p, "-p");
        if (ga.n == 0) throw UsageError("-n: must be >= 1");
        const Natural m = parse_natural(g_m, "-m");
        if (m < 1) throw std::domain_error("gen: m must be >= 1");
        if ((natural_pow(p, ga.n) - 1) % m != 0)
            throw std::domain_error("gen: m does not divide p^n - 1");
        const Factorization fac =
            resolve_order_factors(p, ga.n, m, g_factors_given, g_factors, g_tables);
        const FieldElement y = standard_generator(p, ga.n, m, fac);
        print_line(ga.labeled, "steinitz", element_to_steinitz(y).get_str());
        return 0;
    }

    if (c_embed->parsed()) {
        const Natural p = require_prime(e_p, "-p");
        if (e_m == 0 || e_n == 0) throw UsageError("-m/-n: must be >= 1");
        if (e_n % e_m != 0) throw std::domain_error("embed: m must divide n");
        const Natural s = parse_natural(e_s, "-s");
        const auto src = standard_field(p, e_m);
        const auto dst = standard_field(p, e_n);
        const FieldElement x = src->from_steinitz(s);  // throws out_of_range when s >= p^m
        print_line(e_labeled, "steinitz", element_to_steinitz(embed(x, dst)).get_str());
        return 0;
    }

    if (c_order->parsed()) {
        const Natural p = require_prime(oa.p, "-p");
        if (oa.n == 0) throw UsageError("-n: must be >= 1");
        const Natural s = parse_natural(o_s, "-s");
        // Resolve the factorization before constructing the field so that a
        // missing factorization fails fast.
        Factorization fac;
        if (o_factors_given) {
            try {
                fac = Factorization::parse(o_factors);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--factors: ") + e.what());
            }
            if (fac.value() != natural_pow(p, oa.n) - 1)
                throw UsageError("--factors: product does not equal p^n - 1");
        } else {
            FactorTable table = load_factor_tables(o_tables);
            fac = table.lookup(p, oa.n);  // MissingDataError when unfactorable
        }
        const auto F = standard_field(p, oa.n);
        const FieldElement x = F->from_steinitz(s);
        if (F->is_zero(x)) throw std::domain_error("order: zero has no multiplicative order");
        print_line(oa.labeled, "order", element_order(x, fac).get_str());
        return 0;
    }

    if (c_minpoly->parsed()) {
        const Natural p = require_prime(ma.p, "-p");
        if (ma.n == 0) throw UsageError("-n: must be >= 1");
        const Natural s = parse_natural(m_s, "-s");
        const auto F = standard_field(p, ma.n);
        const auto mp = minimal_polynomial(F->from_steinitz(s));
        print_line(ma.labeled, "minpoly", join(mp.coeffs));
        return 0;
    }

    if (c_conway->parsed()) {
        const Natural p = require_prime(ca.p, "-p");
        if (ca.n == 0) throw UsageError("-n: must be >= 1");
        ConwayTable table;
        table.load_file(c_table);
        const SteinitzPair pair = steinitz_pair_conway_generator(p, ca.n, table);
        print_line(ca.labeled, "steinitz_pair",
                   std::to_string(pair.degree) + " " + pair.number.get_str());
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const MissingDataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const TableFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
