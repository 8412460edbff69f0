#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "field.hpp"

namespace asmkit {

/// Dense square matrix over an exact field, row-major.
template <ExactField F>
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, F(0)) {}
    ExactMatrix(std::size_t dim, std::vector<F> entries) : dim_(dim), data_(std::move(entries)) {
        if (data_.size() != dim_ * dim_) throw contract_violation("ExactMatrix: entry count is not dim^2");
    }

    std::size_t dim() const { return dim_; }
    F& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    bool is_skew_symmetric() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!asmkit::is_zero((*this)(i, i))) return false;
            for (std::size_t j = i + 1; j < dim_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < dim_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < dim_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    friend bool operator==(const ExactMatrix& l, const ExactMatrix& r) {
        return l.dim_ == r.dim_ && l.data_ == r.data_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<F> data_;
};

/// Determinant by Gaussian elimination. The pivot is the first nonzero
/// entry of the column; no magnitude pivoting is needed in exact arithmetic.
template <ExactField F>
F det(ExactMatrix<F> m) {
    const std::size_t n = m.dim();
    F result(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m(pivot, k))) ++pivot;
        if (pivot == n) return F(0);
        if (pivot != k) {
            m.swap_rows(pivot, k);
            result = -result;
        }
        const F inv = inverse(m(k, k));
        result *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(m(i, k))) continue;
            const F factor = m(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return result;
}

namespace detail {

template <ExactField F>
F pfaffian_expand(const ExactMatrix<F>& m, std::vector<std::size_t>& idx) {
    if (idx.empty()) return F(1);
    const std::size_t first = idx.front();
    F total(0);
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
        const F& entry = m(first, idx[pos]);
        if (is_zero(entry)) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t q = 1; q < idx.size(); ++q)
            if (q != pos) rest.push_back(idx[q]);
        F term = entry * pfaffian_expand(m, rest);
        if (pos % 2 == 1) total += term;
        else total -= term;
    }
    return total;
}

template <ExactField F>
void require_pfaffian_input(const ExactMatrix<F>& m) {
    if (m.dim() % 2 != 0) throw contract_violation("pfaffian: odd dimension");
    if (!m.is_skew_symmetric()) throw contract_violation("pfaffian: matrix is not skew-symmetric");
}

}  // namespace detail

/// Pfaffian by recursive expansion along the first row. Exponential; used
/// for small matrices and as the reference in tests.
template <ExactField F>
F pfaffian_expansion(const ExactMatrix<F>& m) {
    detail::require_pfaffian_input(m);
    std::vector<std::size_t> idx(m.dim());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return detail::pfaffian_expand(m, idx);
}

/// Pfaffian by skew-symmetric elimination: Pf(A) = A[k][k+1] * Pf(Schur
/// complement of the leading 2x2 block). A simultaneous row/column swap
/// negates the Pfaffian.
template <ExactField F>
F pfaffian_elimination(ExactMatrix<F> m) {
    detail::require_pfaffian_input(m);
    const std::size_t n = m.dim();
    F result(1);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t pivot = k + 1;
        while (pivot < n && is_zero(m(k, pivot))) ++pivot;
        if (pivot == n) return F(0);
        if (pivot != k + 1) {
            m.swap_rows(pivot, k + 1);
            m.swap_cols(pivot, k + 1);
            result = -result;
        }
        const F pivot_value = m(k, k + 1);
        result *= pivot_value;
        const F inv = inverse(pivot_value);
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                F update = (m(k + 1, i) * m(k, j) - m(k, i) * m(k + 1, j)) * inv;
                m(i, j) += update;
                m(j, i) = -m(i, j);
            }
        }
    }
    return result;
}

template <ExactField F>
F pfaffian(const ExactMatrix<F>& m) {
    if (m.dim() < 6) return pfaffian_expansion(m);
    return pfaffian_elimination(m);
}

}  // namespace asmkit
