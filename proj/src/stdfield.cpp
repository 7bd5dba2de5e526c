#include "stdff/stdfield.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "stdff/stdpoly.hpp"

namespace stdff {

namespace {

unsigned checked_degree_pow(unsigned base, unsigned e) {
    unsigned long long v = 1;
    for (unsigned i = 0; i < e; ++i) {
        v *= base;
        if (v > (1u << 24))
            throw std::domain_error("standard_field: degree out of supported range");
    }
    return static_cast<unsigned>(v);
}

}  // namespace

std::vector<std::pair<unsigned, unsigned>> factor_degree(unsigned n) {
    if (n == 0) throw std::domain_error("factor_degree: n must be positive");
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

std::vector<unsigned> tower_degree_list(unsigned n) {
    if (n == 0) throw std::domain_error("tower_degree_list: n must be positive");
    if (n == 1) return {1};
    auto factors = factor_degree(n);
    const auto [r, l] = factors.back();
    const unsigned rl = checked_degree_pow(r, l);
    std::vector<unsigned> prev = tower_degree_list(n / r);
    std::vector<unsigned> out = prev;
    out.reserve(n);
    for (unsigned copy = 1; copy < r; ++copy)
        for (unsigned d : prev) out.push_back(std::lcm(d, rl));
    return out;
}

StandardField::StandardField(PrimeField fp, unsigned n, DensePoly<PrimeField> f,
                             FpMatrix to_tower, FpMatrix from_tower,
                             std::vector<unsigned> degree_list, StandardFieldPtr subfield)
    : prime_field_(std::move(fp)),
      n_(n),
      size_(natural_pow(prime_field_.modulus(), n)),
      defining_poly_(std::move(f)),
      to_tower_(std::move(to_tower)),
      from_tower_(std::move(from_tower)),
      degree_list_(std::move(degree_list)),
      subfield_(std::move(subfield)) {}

void StandardField::check_element(const FieldElement& a) const {
    if (a.field_.get() != this)
        throw std::invalid_argument("FieldElement belongs to a different field");
}

FieldElement StandardField::element(std::vector<Natural> coeffs) const {
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement StandardField::zero() const {
    return element(std::vector<Natural>(n_, Natural(0)));
}

FieldElement StandardField::one() const {
    std::vector<Natural> c(n_, Natural(0));
    c[0] = 1;
    return element(std::move(c));
}

FieldElement StandardField::generator() const {
    if (n_ == 1) return one();  // x_1 = 1, the empty tower product
    std::vector<Natural> c(n_, Natural(0));
    c[1] = 1;
    return element(std::move(c));
}

FieldElement StandardField::from_coeffs(std::vector<Natural> coeffs) const {
    if (coeffs.size() > n_)
        throw std::invalid_argument("StandardField::from_coeffs: too many coefficients");
    coeffs.resize(n_, Natural(0));
    for (auto& c : coeffs) c = prime_field_.reduce(c);
    return element(std::move(coeffs));
}

FieldElement StandardField::from_prime(const Natural& c) const {
    std::vector<Natural> v(n_, Natural(0));
    v[0] = prime_field_.reduce(c);
    return element(std::move(v));
}

FieldElement StandardField::add(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    std::vector<Natural> c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = prime_field_.add(a.coeffs_[i], b.coeffs_[i]);
    return element(std::move(c));
}

FieldElement StandardField::sub(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    std::vector<Natural> c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = prime_field_.sub(a.coeffs_[i], b.coeffs_[i]);
    return element(std::move(c));
}

FieldElement StandardField::neg(const FieldElement& a) const {
    check_element(a);
    std::vector<Natural> c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = prime_field_.neg(a.coeffs_[i]);
    return element(std::move(c));
}

FieldElement StandardField::mul(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    const Natural& p = prime_field_.modulus();
    std::vector<Natural> t(2 * n_ - 1, Natural(0));
    for (unsigned i = 0; i < n_; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) t[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    for (auto& c : t) c %= p;
    // Reduce by the monic defining polynomial.
    const auto& f = defining_poly_.coeffs;
    for (std::size_t k = t.size(); k-- > n_;) {
        if (t[k] == 0) continue;
        const Natural c = t[k];
        for (unsigned j = 0; j < n_; ++j)
            t[k - n_ + j] = prime_field_.sub(t[k - n_ + j], c * f[j] % p);
        t[k] = 0;
    }
    t.resize(n_);
    return element(std::move(t));
}

FieldElement StandardField::inv(const FieldElement& a) const {
    check_element(a);
    if (is_zero(a)) throw std::domain_error("ff_inverse: division by zero");
    auto ap = poly_from_coeffs(prime_field_, a.coeffs_);
    auto [g, u, v] = poly_extended_gcd(prime_field_, ap, defining_poly_);
    (void)v;
    if (g.degree() != 0)
        throw std::domain_error("ff_inverse: element not invertible (corrupt field?)");
    auto inv = poly_mod(prime_field_, u, defining_poly_);
    std::vector<Natural> c = inv.coeffs;
    c.resize(n_, Natural(0));
    return element(std::move(c));
}

FieldElement StandardField::pow(const FieldElement& a, const Natural& e) const {
    check_element(a);
    if (e == 0) return one();
    FieldElement r = one();
    for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
}

bool StandardField::is_zero(const FieldElement& a) const {
    check_element(a);
    for (const auto& c : a.coeffs_)
        if (c != 0) return false;
    return true;
}

bool StandardField::eq(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    return a.coeffs_ == b.coeffs_;
}

FieldElement StandardField::from_steinitz(const Natural& s) const {
    if (s < 0 || s >= size_)
        throw std::out_of_range("steinitz_to_element: number out of range");
    const Natural& p = prime_field_.modulus();
    std::vector<Natural> tau(n_, Natural(0));
    Natural rest = s;
    for (unsigned i = 0; i < n_ && rest > 0; ++i) {
        tau[i] = rest % p;
        rest /= p;
    }
    return from_tower_coords(tau);
}

Natural StandardField::to_steinitz(const FieldElement& a) const {
    auto tau = tower_coords(a);
    const Natural& p = prime_field_.modulus();
    Natural s = 0;
    for (unsigned i = n_; i-- > 0;) s = s * p + tau[i];
    return s;
}

std::vector<Natural> StandardField::tower_coords(const FieldElement& a) const {
    check_element(a);
    return fp_vec_mat(prime_field_, a.coeffs_, to_tower_);
}

FieldElement StandardField::from_tower_coords(const std::vector<Natural>& tau) const {
    return element(fp_vec_mat(prime_field_, tau, from_tower_));
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    return field_->add(*this, other);
}
FieldElement FieldElement::operator-(const FieldElement& other) const {
    return field_->sub(*this, other);
}
FieldElement FieldElement::operator*(const FieldElement& other) const {
    return field_->mul(*this, other);
}
FieldElement FieldElement::operator-() const { return field_->neg(*this); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    if (!x.field_ptr()) return os << "FieldElement()";
    return os << "FieldElement(p=" << x.field().p() << ", n=" << x.field().degree()
              << ", s=" << element_to_steinitz(x) << ")";
}

// Builds F_{p^n} from F_{p^m} (m = n/r, r the largest prime of n) by
// adjoining the level-t generator of the r-tower, t = v_r(n). Elements of
// the new field are handled as length-r vectors over F_{p^m} during
// construction; the power basis and the matrices fall out of the powers of
// x_n = x_{n'} * x_{r,t}.
StandardFieldPtr StandardField::build(const Natural& p, unsigned n) {
    PrimeField Fp(p);
    if (n == 1) {
        std::vector<PrimeField::Element> f1{Fp.neg(Fp.one()), Fp.one()};  // X - 1
        return StandardFieldPtr(new StandardField(
            Fp, 1, poly_from_coeffs(Fp, std::move(f1)), FpMatrix::identity(1),
            FpMatrix::identity(1), {1}, nullptr));
    }

    const auto factors = factor_degree(n);
    const unsigned r = factors.back().first;   // largest prime of n
    const unsigned t = factors.back().second;  // its multiplicity
    const unsigned m = n / r;
    const unsigned nprime = n / checked_degree_pow(r, t);

    StandardFieldPtr Km = standard_field(p, m);
    StandardFieldPtr Klevel = standard_field(p, checked_degree_pow(r, t - 1));
    const StdPolyRecord rec = standard_prime_degree_poly(p, r, t);

    // Coefficients of fbar_{r,t} as elements of F_{p^m}.
    std::vector<FieldElement> fbar;
    fbar.reserve(r + 1);
    for (const Natural& s : rec.coeff_steinitz)
        fbar.push_back(embed(Klevel->from_steinitz(s), Km));

    const FieldElement xprime = embed(standard_field(p, nprime)->generator(), Km);

    // cur holds x_n^j as vector of r coefficients over F_{p^m}.
    std::vector<FieldElement> cur(r, Km->zero());
    cur[0] = Km->one();

    FpMatrix T(n, n);
    auto store_row = [&](unsigned row, const std::vector<FieldElement>& v) {
        for (unsigned i = 0; i < r; ++i) {
            auto tau = Km->tower_coords(v[i]);
            for (unsigned j = 0; j < m; ++j) T.at(row, i * m + j) = tau[j];
        }
    };
    auto times_xn = [&](const std::vector<FieldElement>& v) {
        std::vector<FieldElement> u(r, Km->zero());
        for (unsigned i = 0; i < r; ++i) u[i] = Km->mul(xprime, v[i]);
        std::vector<FieldElement> next(r, Km->zero());
        for (unsigned i = 0; i + 1 < r; ++i) next[i + 1] = u[i];
        const FieldElement& w = u[r - 1];  // coefficient of x_{r,t}^r
        if (!Km->is_zero(w)) {
            for (unsigned j = 0; j < r; ++j)
                next[j] = Km->sub(next[j], Km->mul(w, fbar[j]));
        }
        return next;
    };

    store_row(0, cur);
    for (unsigned j = 1; j < n; ++j) {
        cur = times_xn(cur);
        store_row(j, cur);
    }
    FpMatrix Tinv = fp_inverse(Fp, T);

    cur = times_xn(cur);  // x_n^n
    std::vector<Natural> tau_n(n);
    for (unsigned i = 0; i < r; ++i) {
        auto tau = Km->tower_coords(cur[i]);
        for (unsigned j = 0; j < m; ++j) tau_n[i * m + j] = tau[j];
    }
    std::vector<Natural> lambda = fp_vec_mat(Fp, tau_n, Tinv);

    std::vector<PrimeField::Element> fcoeffs(n + 1, Natural(0));
    for (unsigned j = 0; j < n; ++j) fcoeffs[j] = Fp.neg(lambda[j]);
    fcoeffs[n] = 1;

    return StandardFieldPtr(new StandardField(Fp, n, poly_from_coeffs(Fp, std::move(fcoeffs)),
                                              std::move(T), std::move(Tinv),
                                              tower_degree_list(n), Km));
}

StandardFieldPtr standard_field(const Natural& p, unsigned n) {
    if (n == 0) throw std::domain_error("standard_field: degree must be positive");
    using Key = std::pair<Natural, unsigned>;
    static std::map<Key, StandardFieldPtr> registry;
    static std::mutex mutex;
    const Key key{p, n};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = registry.find(key);
        if (it != registry.end()) return it->second;
    }
    StandardFieldPtr built = StandardField::build(p, n);  // recursion happens outside the lock
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = registry.emplace(key, std::move(built));
    return it->second;
}

FieldElement embed(const FieldElement& x, const StandardField& target) {
    const StandardField& src = x.field();
    if (&src == &target) return x;
    if (src.p() != target.p())
        throw std::domain_error("embed: fields have different characteristic");
    const unsigned m = src.degree();
    const unsigned n = target.degree();
    if (n % m != 0) throw std::domain_error("embed: source degree does not divide target degree");
    auto tau = src.tower_coords(x);
    std::vector<Natural> out(n, Natural(0));
    unsigned next = 0;
    for (unsigned j = 0; j < n; ++j) {
        if (m % target.degree_list()[j] == 0) {
            out[j] = tau[next];
            ++next;
        }
    }
    if (next != m) throw std::logic_error("embed: tower basis mismatch");
    return target.from_tower_coords(out);
}

FieldElement embed(const FieldElement& x, const StandardFieldPtr& target) {
    return embed(x, *target);
}

unsigned element_degree(const FieldElement& x) {
    const StandardField& F = x.field();
    auto tau = F.tower_coords(x);
    unsigned d = 1;
    for (unsigned j = 0; j < F.degree(); ++j)
        if (tau[j] != 0) d = std::lcm(d, F.degree_list()[j]);
    return d;
}

FieldElement ff_product(const FieldElement& x, const FieldElement& y) {
    return x.field().mul(x, y);
}

FieldElement ff_inverse(const FieldElement& x) { return x.field().inv(x); }

FieldElement ff_pow(const FieldElement& x, const Natural& e) { return x.field().pow(x, e); }

FieldElement frobenius(const FieldElement& x, unsigned k) {
    return x.field().pow(x, natural_pow(x.field().p(), k));
}

DensePoly<PrimeField> minimal_polynomial(const FieldElement& x) {
    const StandardField& F = x.field();
    const PrimeField& Fp = F.prime_field();
    FpDependencySolver solver(Fp, F.degree());
    FieldElement power = F.one();
    while (true) {
        auto dependency = solver.add_row(power.coeffs());
        if (dependency) {
            // x^k = sum lambda_i x^i  =>  minpoly = X^k - sum lambda_i X^i
            std::vector<PrimeField::Element> c(dependency->size() + 1);
            for (std::size_t i = 0; i < dependency->size(); ++i) c[i] = Fp.neg((*dependency)[i]);
            c[dependency->size()] = 1;
            return poly_from_coeffs(Fp, std::move(c));
        }
        power = F.mul(power, x);
    }
}

Natural element_to_steinitz(const FieldElement& x) { return x.field().to_steinitz(x); }

FieldElement steinitz_to_element(const StandardField& F, const Natural& s) {
    return F.from_steinitz(s);
}

FieldElement steinitz_to_element(const StandardFieldPtr& F, const Natural& s) {
    return F->from_steinitz(s);
}

SteinitzPair steinitz_pair(const FieldElement& x) {
    const StandardField& F = x.field();
    const unsigned d = element_degree(x);
    auto tau = F.tower_coords(x);
    const Natural& p = F.p();
    // Steinitz number inside F_{p^d}: the subfield basis is the subsequence
    // of positions whose degrees divide d.
    std::vector<Natural> digits;
    digits.reserve(d);
    for (unsigned j = 0; j < F.degree(); ++j)
        if (d % F.degree_list()[j] == 0) digits.push_back(tau[j]);
    Natural s = 0;
    for (std::size_t i = digits.size(); i-- > 0;) s = s * p + digits[i];
    return SteinitzPair{d, s};
}

namespace {

std::vector<std::vector<VariablePower>> tower_monomials(unsigned n) {
    if (n == 1) return {{}};
    const auto factors = factor_degree(n);
    const auto [r, l] = factors.back();
    auto base = tower_monomials(n / r);
    std::vector<std::vector<VariablePower>> out;
    out.reserve(base.size() * r);
    for (unsigned e = 0; e < r; ++e) {
        for (const auto& mono : base) {
            auto m = mono;
            if (e > 0) m.push_back(VariablePower{r, l, e});
            out.push_back(std::move(m));
        }
    }
    return out;
}

}  // namespace

std::vector<MultivariateTerm> multivariate_form(const FieldElement& x) {
    const StandardField& F = x.field();
    auto tau = F.tower_coords(x);
    auto monomials = tower_monomials(F.degree());
    std::vector<MultivariateTerm> terms;
    for (unsigned j = 0; j < F.degree(); ++j) {
        if (tau[j] == 0) continue;
        auto mono = monomials[j];
        std::sort(mono.begin(), mono.end(), [](const VariablePower& a, const VariablePower& b) {
            return std::pair(a.r, a.level) < std::pair(b.r, b.level);
        });
        terms.push_back(MultivariateTerm{tau[j], std::move(mono)});
    }
    return terms;
}

std::string multivariate_to_string(const std::vector<MultivariateTerm>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& term : terms) {
        if (!first) out << " + ";
        first = false;
        if (term.monomial.empty()) {
            out << term.coefficient;
            continue;
        }
        bool wrote = false;
        if (term.coefficient != 1) {
            out << term.coefficient;
            wrote = true;
        }
        for (const auto& vp : term.monomial) {
            if (wrote) out << "*";
            out << "X_{" << vp.r << "," << vp.level << "}";
            if (vp.exponent > 1) out << "^" << vp.exponent;
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace stdff
