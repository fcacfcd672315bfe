#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cxvec/errors.hpp"
#include "cxvec/scalar.hpp"
#include "cxvec/vector.hpp"

namespace cxvec {

/// An M x N grid of complex scalars stored as a vector of row vectors,
/// mirroring (complex^N)^M. Entries are addressed m(i, j) with 1-based i, j.
template <typename R>
class CMatrix {
public:
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(checked(rows, cols), cvector_zero<R>(cols)) {}

    static CMatrix from_rows(std::vector<CVector<R>> rows) {
        if (rows.empty()) {
            throw DimensionError("CMatrix: row count must be >= 1");
        }
        for (const auto& r : rows) {
            if (r.dim() != rows.front().dim()) {
                throw DimensionError("CMatrix: ragged rows");
            }
        }
        return CMatrix(std::move(rows));
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return rows_.front().dim(); }

    const CVector<R>& row(std::size_t i) const {
        check_row(i);
        return rows_[i - 1];
    }

    const Complex<R>& operator()(std::size_t i, std::size_t j) const {
        check_row(i);
        return rows_[i - 1](j);
    }
    Complex<R>& operator()(std::size_t i, std::size_t j) {
        check_row(i);
        return rows_[i - 1](j);
    }

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) {
        return !(a == b);
    }

    /// Rebuilds the matrix by applying f to every row, the matrix-level
    /// reading of vector_map.
    template <typename F>
    static CMatrix map_rows(F&& f, const CMatrix& m) {
        std::vector<CVector<R>> rows;
        rows.reserve(m.rows());
        for (std::size_t i = 1; i <= m.rows(); ++i) {
            rows.push_back(f(m.row(i)));
        }
        return from_rows(std::move(rows));
    }

    template <typename F>
    static CMatrix map2_rows(F&& f, const CMatrix& a, const CMatrix& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols()) {
            throw DimensionError("cmatrix: shapes " + shape_str(a) + " and "
                                 + shape_str(b) + " differ");
        }
        std::vector<CVector<R>> rows;
        rows.reserve(a.rows());
        for (std::size_t i = 1; i <= a.rows(); ++i) {
            rows.push_back(f(a.row(i), b.row(i)));
        }
        return from_rows(std::move(rows));
    }

private:
    explicit CMatrix(std::vector<CVector<R>> rows) : rows_(std::move(rows)) {}

    static std::size_t checked(std::size_t r, std::size_t c) {
        if (r == 0 || c == 0) {
            throw DimensionError("CMatrix: shape must be >= 1x1");
        }
        return r;
    }

    void check_row(std::size_t i) const {
        if (i < 1 || i > rows_.size()) {
            throw IndexError("row index " + std::to_string(i) + " outside 1.."
                             + std::to_string(rows_.size()));
        }
    }

    static std::string shape_str(const CMatrix& m) {
        return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    }

    std::vector<CVector<R>> rows_;
};

template <typename R>
CMatrix<R> cmatrix_zero(std::size_t rows, std::size_t cols) {
    return CMatrix<R>(rows, cols);
}

template <typename R>
CMatrix<R> cmatrix_identity(std::size_t n) {
    CMatrix<R> m(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        m(i, i) = cx(scalar_field<R>::one());
    }
    return m;
}

/// cmatrix_neg = vector_map (--)
template <typename R>
CMatrix<R> cmatrix_neg(const CMatrix<R>& m) {
    return CMatrix<R>::map_rows([](const CVector<R>& r) { return cvector_neg(r); }, m);
}

/// cmatrix_cnj = vector_map cvector_cnj
template <typename R>
CMatrix<R> cmatrix_cnj(const CMatrix<R>& m) {
    return CMatrix<R>::map_rows([](const CVector<R>& r) { return cvector_cnj(r); }, m);
}

/// cmatrix_add = vector_map2 (+)
template <typename R>
CMatrix<R> cmatrix_add(const CMatrix<R>& a, const CMatrix<R>& b) {
    return CMatrix<R>::map2_rows(
        [](const CVector<R>& u, const CVector<R>& v) { return cvector_add(u, v); }, a, b);
}

/// cmatrix_smul = vector_map o (%)
template <typename R>
CMatrix<R> cmatrix_smul(const Complex<R>& a, const CMatrix<R>& m) {
    return CMatrix<R>::map_rows(
        [&a](const CVector<R>& r) { return cvector_smul(a, r); }, m);
}

/// Entry (i,j) = sum_k m1$i$k * m2$k$j.
template <typename R>
CMatrix<R> cmatrix_mul(const CMatrix<R>& m1, const CMatrix<R>& m2) {
    if (m1.cols() != m2.rows()) {
        throw DimensionError("cmatrix_mul: inner dimensions "
                             + std::to_string(m1.cols()) + " and "
                             + std::to_string(m2.rows()) + " differ");
    }
    CMatrix<R> out(m1.rows(), m2.cols());
    for (std::size_t i = 1; i <= m1.rows(); ++i) {
        for (std::size_t j = 1; j <= m2.cols(); ++j) {
            Complex<R> acc{};
            for (std::size_t k = 1; k <= m1.cols(); ++k) {
                acc = acc + m1(i, k) * m2(k, j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

/// Matrix application to a vector, the P = 1 case of cmatrix_mul.
template <typename R>
CVector<R> cmatrix_cvector_mul(const CMatrix<R>& m, const CVector<R>& v) {
    if (m.cols() != v.dim()) {
        throw DimensionError("cmatrix_cvector_mul: matrix has "
                             + std::to_string(m.cols()) + " columns, vector dim "
                             + std::to_string(v.dim()));
    }
    CVector<R> out = cvector_zero<R>(m.rows());
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        Complex<R> acc{};
        for (std::size_t k = 1; k <= m.cols(); ++k) {
            acc = acc + m(i, k) * v(k);
        }
        out(i) = acc;
    }
    return out;
}

} // namespace cxvec
