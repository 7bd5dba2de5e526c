#ifndef STDFF_FP_LINALG_HPP
#define STDFF_FP_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "stdff/prime_field.hpp"

namespace stdff {

// Small dense matrix over GF(p), row major. Just enough linear algebra for
// the tower-basis transition matrices and minimal polynomials.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Natural> a;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Natural(0)) {}

    Natural& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Natural& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static FpMatrix identity(std::size_t n) {
        FpMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const FpMatrix&) const = default;
};

// Row vector times matrix.
inline std::vector<Natural> fp_vec_mat(const PrimeField& K, const std::vector<Natural>& v,
                                       const FpMatrix& m) {
    if (v.size() != m.rows) throw std::invalid_argument("fp_vec_mat: size mismatch");
    std::vector<Natural> out(m.cols, Natural(0));
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (K.is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            out[j] = K.add(out[j], K.mul(v[i], m.at(i, j)));
    }
    return out;
}

// Gauss-Jordan inverse; throws on singular input.
inline FpMatrix fp_inverse(const PrimeField& K, FpMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("fp_inverse: matrix not square");
    const std::size_t n = m.rows;
    FpMatrix inv = FpMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && K.is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == n) throw std::domain_error("fp_inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Natural s = K.inv(m.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = K.mul(m.at(col, j), s);
            inv.at(col, j) = K.mul(inv.at(col, j), s);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || K.is_zero(m.at(i, col))) continue;
            Natural f = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(col, j)));
                inv.at(i, j) = K.sub(inv.at(i, j), K.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

// Incremental detector for the first linear dependency among a stream of
// row vectors. add_row returns, once the new row is dependent, coefficients
// expressing it as a combination of the previously added rows.
class FpDependencySolver {
public:
    FpDependencySolver(const PrimeField& K, std::size_t cols) : K_(K), cols_(cols) {}

    std::optional<std::vector<Natural>> add_row(std::vector<Natural> v) {
        if (v.size() != cols_) throw std::invalid_argument("FpDependencySolver: size mismatch");
        // combo expresses the reduced v in terms of the original rows.
        std::vector<Natural> combo(count_, Natural(0));
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const std::size_t p = pivot_[b];
            if (K_.is_zero(v[p])) continue;
            Natural f = v[p];
            for (std::size_t j = 0; j < cols_; ++j)
                v[j] = K_.sub(v[j], K_.mul(f, basis_[b][j]));
            for (std::size_t j = 0; j < history_[b].size(); ++j)
                combo[j] = K_.add(combo[j], K_.mul(f, history_[b][j]));
        }
        std::size_t p = 0;
        while (p < cols_ && K_.is_zero(v[p])) ++p;
        if (p == cols_) return combo;  // dependent: row = sum combo[i] * row_i
        Natural s = K_.inv(v[p]);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = K_.mul(v[j], s);
        // The stored basis row is s*(row - sum combo[i]*row_i).
        for (auto& c : combo) c = K_.mul(c, K_.neg(s));
        combo.resize(count_ + 1, Natural(0));
        combo[count_] = s;
        basis_.push_back(std::move(v));
        pivot_.push_back(p);
        history_.push_back(std::move(combo));
        ++count_;
        return std::nullopt;
    }

private:
    PrimeField K_;
    std::size_t cols_;
    std::size_t count_ = 0;
    std::vector<std::vector<Natural>> basis_;
    std::vector<std::size_t> pivot_;
    std::vector<std::vector<Natural>> history_;
};

}  // namespace stdff

#endif
