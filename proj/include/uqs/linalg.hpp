#pragma once

#include "uqs/error.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace uqs {

template <class S>
bool scalar_is_zero(const S& x) {
    if constexpr (requires { x.is_zero(); })
        return x.is_zero();
    else
        return x == 0;
}

// Dense row-major matrix over an exact field.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, S(0)) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw InvalidArgument("matrix shape mismatch in product");
        Matrix p(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const S& x = (*this)(i, k);
                if (scalar_is_zero(x)) continue;
                for (int j = 0; j < o.c_; ++j)
                    if (!scalar_is_zero(o(k, j))) p(i, j) += x * o(k, j);
            }
        return p;
    }
    Matrix operator+(const Matrix& o) const {
        Matrix p = *this;
        for (size_t i = 0; i < a_.size(); ++i) p.a_[i] += o.a_[i];
        return p;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix p = *this;
        for (size_t i = 0; i < a_.size(); ++i) p.a_[i] -= o.a_[i];
        return p;
    }
    Matrix scaled(const S& s) const {
        Matrix p = *this;
        for (auto& x : p.a_) x *= s;
        return p;
    }
    std::vector<S> apply(const std::vector<S>& v) const {
        std::vector<S> w(r_, S(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!scalar_is_zero((*this)(i, j)) && !scalar_is_zero(v[j])) w[i] += (*this)(i, j) * v[j];
        return w;
    }
    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

private:
    int r_ = 0, c_ = 0;
    std::vector<S> a_;
};

// In-place reduced row echelon form; returns the pivot columns.
template <class S>
std::vector<int> rref(Matrix<S>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!scalar_is_zero(m(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        S inv = S(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j)
            if (!scalar_is_zero(m(row, j))) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || scalar_is_zero(m(i, col))) continue;
            S f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!scalar_is_zero(m(row, j))) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
int rank(Matrix<S> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of {v : m v = 0}.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<S>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        std::vector<S> v(m.cols(), S(0));
        v[free] = S(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some solution of m x = b, if one exists.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& m, const std::vector<S>& b) {
    Matrix<S> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<S> x(m.cols(), S(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), m.cols());
    return x;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
    int n = m.rows();
    if (n != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    Matrix<S> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S(1);
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<S> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Basis (as rows) of the row space, in reduced echelon form.
template <class S>
std::vector<std::vector<S>> row_space(Matrix<S> m) {
    auto piv = rref(m);
    std::vector<std::vector<S>> rows;
    for (size_t r = 0; r < piv.size(); ++r) {
        std::vector<S> v(m.cols());
        for (int j = 0; j < m.cols(); ++j) v[j] = m(static_cast<int>(r), j);
        rows.push_back(std::move(v));
    }
    return rows;
}

}  // namespace uqs
