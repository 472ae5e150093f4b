#pragma once

#include "uqs/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uqs {

// Row space kept in fully reduced echelon form, built one vector at a time.
template <class S>
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<S>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Residual of v after elimination against the current rows (zero iff v lies in the span).
    std::vector<S> reduce(std::vector<S> v) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            S c = v[pivots_[k]];
            if (scalar_is_zero(c)) continue;
            const auto& row = rows_[k];
            for (int j = 0; j < cols_; ++j)
                if (!scalar_is_zero(row[j])) v[j] -= c * row[j];
        }
        return v;
    }

    bool contains(const std::vector<S>& v) const { return is_zero_vector(reduce(v)); }

    // Adds v; returns true if it enlarged the span.
    bool add(const std::vector<S>& v) {
        std::vector<S> r = reduce(v);
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (!scalar_is_zero(r[j])) {
                p = j;
                break;
            }
        if (p < 0) return false;
        S inv = S(1) / r[p];
        for (int j = p; j < cols_; ++j)
            if (!scalar_is_zero(r[j])) r[j] *= inv;
        for (auto& row : rows_) {
            S c = row[p];
            if (scalar_is_zero(c)) continue;
            for (int j = p; j < cols_; ++j)
                if (!scalar_is_zero(r[j])) row[j] -= c * r[j];
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

    // Coordinates of a vector of the span with respect to rows().
    std::vector<S> coordinates(const std::vector<S>& v) const {
        if (!contains(v)) throw Defect("vector is not in the span");
        std::vector<S> c(rows_.size());
        for (size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
        return c;
    }

    // Basis of the orthogonal complement in the sense of linear equations: all x with row . x = 0.
    std::vector<std::vector<S>> kernel() const {
        std::vector<bool> is_piv(cols_, false);
        for (int p : pivots_) is_piv[p] = true;
        std::vector<std::vector<S>> out;
        for (int f = 0; f < cols_; ++f) {
            if (is_piv[f]) continue;
            std::vector<S> x(cols_, S(0));
            x[f] = S(1);
            for (size_t k = 0; k < rows_.size(); ++k) x[pivots_[k]] = -rows_[k][f];
            out.push_back(std::move(x));
        }
        return out;
    }

    static bool is_zero_vector(const std::vector<S>& v) {
        for (const auto& x : v)
            if (!scalar_is_zero(x)) return false;
        return true;
    }

private:
    int cols_;
    std::vector<std::vector<S>> rows_;
    std::vector<int> pivots_;
};

// A finite-dimensional representation given by the matrices of a fixed list of algebra generators.
template <class S>
struct ModuleRep {
    int dim = 0;
    std::vector<std::string> names;
    std::vector<Matrix<S>> gens;

    int index_of(const std::string& name) const {
        for (size_t k = 0; k < names.size(); ++k)
            if (names[k] == name) return static_cast<int>(k);
        throw InvalidArgument("module has no generator named " + name);
    }
    const Matrix<S>& gen(const std::string& name) const { return gens[index_of(name)]; }
};

template <class S>
Matrix<S> matrix_power(const Matrix<S>& a, int k) {
    Matrix<S> out = Matrix<S>::identity(a.rows());
    for (int i = 0; i < k; ++i) out = out * a;
    return out;
}

template <class S>
bool is_scalar_matrix(const Matrix<S>& a, S* value = nullptr) {
    if (a.rows() != a.cols()) return false;
    S c = a.rows() ? a(0, 0) : S(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == (i == j ? c : S(0)))) return false;
    if (value) *value = c;
    return true;
}

// Smallest submodule containing the given vectors, as a reduced echelon basis.
template <class S>
RowReducer<S> spin(const ModuleRep<S>& rep, const std::vector<std::vector<S>>& seeds) {
    RowReducer<S> span(rep.dim);
    std::vector<std::vector<S>> queue;
    for (const auto& v : seeds)
        if (span.add(v)) queue.push_back(v);
    while (!queue.empty()) {
        std::vector<S> v = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : rep.gens) {
            std::vector<S> w = g.apply(v);
            if (span.add(w)) queue.push_back(std::move(w));
        }
    }
    return span;
}

// Action on an invariant subspace, in the coordinates of its echelon basis.
template <class S>
ModuleRep<S> submodule(const ModuleRep<S>& rep, const RowReducer<S>& sub) {
    ModuleRep<S> out{sub.rank(), rep.names, {}};
    for (const auto& g : rep.gens) {
        Matrix<S> m(sub.rank(), sub.rank());
        for (int k = 0; k < sub.rank(); ++k) {
            auto c = sub.coordinates(g.apply(sub.rows()[k]));
            for (int i = 0; i < sub.rank(); ++i) m(i, k) = c[i];
        }
        out.gens.push_back(std::move(m));
    }
    return out;
}

// Action on V / N, using the non-pivot coordinates of N's echelon basis as a complement.
template <class S>
ModuleRep<S> quotient(const ModuleRep<S>& rep, const RowReducer<S>& sub) {
    std::vector<bool> is_piv(rep.dim, false);
    for (int p : sub.pivots()) is_piv[p] = true;
    std::vector<int> free;
    for (int j = 0; j < rep.dim; ++j)
        if (!is_piv[j]) free.push_back(j);
    int q = static_cast<int>(free.size());
    ModuleRep<S> out{q, rep.names, {}};
    for (const auto& g : rep.gens) {
        Matrix<S> m(q, q);
        for (int k = 0; k < q; ++k) {
            std::vector<S> e(rep.dim, S(0));
            e[free[k]] = S(1);
            auto r = sub.reduce(g.apply(e));
            for (int i = 0; i < q; ++i) m(i, k) = r[free[i]];
        }
        out.gens.push_back(std::move(m));
    }
    return out;
}

template <class S>
ModuleRep<S> direct_sum(const ModuleRep<S>& a, const ModuleRep<S>& b) {
    if (a.names != b.names) throw InvalidArgument("direct sum of modules over different generator lists");
    ModuleRep<S> out{a.dim + b.dim, a.names, {}};
    for (size_t g = 0; g < a.gens.size(); ++g) {
        Matrix<S> m(out.dim, out.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) m(i, j) = a.gens[g](i, j);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.gens[g](i, j);
        out.gens.push_back(std::move(m));
    }
    return out;
}

// Basis of Hom(a, b): matrices X (b.dim x a.dim) with X a_g = b_g X for every generator.
template <class S>
std::vector<Matrix<S>> hom_space(const ModuleRep<S>& a, const ModuleRep<S>& b) {
    if (a.gens.size() != b.gens.size()) throw InvalidArgument("hom space between modules of different algebras");
    int n = a.dim, p = b.dim;
    RowReducer<S> eqs(n * p);
    for (size_t g = 0; g < a.gens.size(); ++g) {
        const auto& A = a.gens[g];
        const auto& B = b.gens[g];
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<S> row(n * p, S(0));
                for (int k = 0; k < n; ++k)
                    if (!scalar_is_zero(A(k, j))) row[i * n + k] += A(k, j);
                for (int k = 0; k < p; ++k)
                    if (!scalar_is_zero(B(i, k))) row[k * n + j] -= B(i, k);
                eqs.add(row);
            }
    }
    std::vector<Matrix<S>> out;
    for (const auto& x : eqs.kernel()) {
        Matrix<S> m(p, n);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = x[i * n + j];
        out.push_back(std::move(m));
    }
    return out;
}

// Dimension of the matrix algebra generated by the generator matrices (and the identity).
template <class S>
int matrix_algebra_dim(const ModuleRep<S>& rep) {
    int d = rep.dim;
    auto flat = [d](const Matrix<S>& m) {
        std::vector<S> v(static_cast<size_t>(d) * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) v[i * d + j] = m(i, j);
        return v;
    };
    RowReducer<S> span(d * d);
    std::vector<Matrix<S>> queue{Matrix<S>::identity(d)};
    span.add(flat(queue[0]));
    while (!queue.empty()) {
        Matrix<S> m = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : rep.gens) {
            Matrix<S> x = g * m;
            if (span.add(flat(x))) queue.push_back(std::move(x));
        }
        if (span.rank() == d * d) break;
    }
    return span.rank();
}

// Largest submodule on which the functional phi and all its translates vanish.
template <class S>
RowReducer<S> largest_submodule_in_kernel(const ModuleRep<S>& rep, const std::vector<S>& phi) {
    ModuleRep<S> dual{rep.dim, rep.names, {}};
    for (const auto& g : rep.gens) dual.gens.push_back(g.transpose());
    RowReducer<S> functionals = spin(dual, {phi});
    RowReducer<S> out(rep.dim);
    for (const auto& v : functionals.kernel()) out.add(v);
    return out;
}

}  // namespace uqs
