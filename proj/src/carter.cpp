#include "uqs/carter.hpp"

#include "uqs/error.hpp"

#include <functional>
#include <numeric>

namespace uqs {

namespace {

QMatrix gram(const RootSystem& rs, const std::vector<Root>& v) {
    int n = static_cast<int>(v.size());
    QMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rs.form(v[i], v[j]);
    return g;
}

int rank_of_roots(const std::vector<Root>& v, int l) {
    QMatrix m(static_cast<int>(v.size()), l);
    for (size_t i = 0; i < v.size(); ++i)
        for (int j = 0; j < l; ++j) m(static_cast<int>(i), j) = v[i][j];
    return rank(m);
}

WeylElement product_of_reflections(const RootSystem& rs, const std::vector<Root>& roots) {
    WeylElement w = WeylElement::identity(rs.rank());
    for (const auto& r : roots) w = w * rs.root_reflection(r);
    return w;
}

// Coordinates of the orthogonal projection of x onto span(gammas), in the gamma basis.
std::vector<Rational> project(const RootSystem& rs, const std::vector<Root>& gammas, const QMatrix& ginv,
                              const Root& x) {
    int n = static_cast<int>(gammas.size());
    std::vector<Rational> rhs(n);
    for (int k = 0; k < n; ++k) rhs[k] = rs.form(x, gammas[k]);
    return ginv.apply(rhs);
}

// Matrix of (1+s)(1-s)^{-1} on span(gammas) in the gamma basis.
QMatrix cayley_operator(const RootSystem& rs, const CarterDecomposition& cd, QMatrix* ginv_out) {
    auto gs = cd.gammas();
    int n = static_cast<int>(gs.size());
    QMatrix g = gram(rs, gs);
    auto ginv = inverse(g);
    if (!ginv) throw Defect("gamma roots are linearly dependent");
    QMatrix sm(n, n);
    for (int j = 0; j < n; ++j) {
        auto col = project(rs, gs, *ginv, cd.s.apply(gs[j]));
        for (int k = 0; k < n; ++k) sm(k, j) = col[k];
    }
    QMatrix id = QMatrix::identity(n);
    auto denom = inverse(id - sm);
    if (!denom) throw Defect("1 - s is singular on the moved space");
    if (ginv_out) *ginv_out = *ginv;
    return (id + sm) * *denom;
}

}  // namespace

std::vector<Root> CarterDecomposition::gammas() const {
    std::vector<Root> g = gammas1;
    g.insert(g.end(), gammas2.begin(), gammas2.end());
    return g;
}

WeylElement CarterDecomposition::involution1(const RootSystem& rs) const { return product_of_reflections(rs, gammas1); }
WeylElement CarterDecomposition::involution2(const RootSystem& rs) const { return product_of_reflections(rs, gammas2); }

int moved_rank(const RootSystem& rs, const WeylElement& s) {
    int l = rs.rank();
    QMatrix m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m(i, j) = (i == j ? 1 : 0) - s.matrix()[i][j];
    return rank(m);
}

std::vector<CarterDecomposition> carter_decompositions(const RootSystem& rs, const WeylElement& s, size_t limit) {
    std::vector<CarterDecomposition> out;
    int lp = moved_rank(rs, s);
    int D = rs.num_positive();
    if (lp == 0) {
        out.push_back(CarterDecomposition{s, {}, {}, 0});
        return out;
    }
    IntVec pick;
    std::function<void(int)> rec = [&](int start) {
        if (out.size() >= limit) return;
        if (static_cast<int>(pick.size()) == lp) {
            std::vector<Root> roots;
            for (int k : pick) roots.push_back(rs.positive_root(k));
            if (rank_of_roots(roots, rs.rank()) != lp) return;
            // Components of the non-orthogonality graph; each must be 2-colourable.
            IntVec comp(lp, -1), colour(lp, 0);
            int ncomp = 0;
            for (int v = 0; v < lp; ++v) {
                if (comp[v] >= 0) continue;
                comp[v] = ncomp;
                IntVec stack{v};
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (int y = 0; y < lp; ++y) {
                        if (y == x || rs.form(roots[x], roots[y]) == 0) continue;
                        if (comp[y] < 0) {
                            comp[y] = ncomp;
                            colour[y] = 1 - colour[x];
                            stack.push_back(y);
                        } else if (colour[y] == colour[x]) {
                            return;
                        }
                    }
                }
                ++ncomp;
            }
            for (long mask = 0; mask < (1L << ncomp) && out.size() < limit; ++mask) {
                CarterDecomposition cd{s, {}, {}, lp};
                for (int v = 0; v < lp; ++v) {
                    int c = colour[v] ^ static_cast<int>((mask >> comp[v]) & 1);
                    (c == 0 ? cd.gammas1 : cd.gammas2).push_back(roots[v]);
                }
                if (cd.involution1(rs) * cd.involution2(rs) == s) out.push_back(std::move(cd));
            }
            return;
        }
        for (int k = start; k < D; ++k) {
            pick.push_back(k);
            rec(k + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

CarterDecomposition carter_decompose(const RootSystem& rs, const WeylElement& s) {
    auto all = carter_decompositions(rs, s, 1);
    if (all.empty()) throw BudgetExceeded("no decomposition into two orthogonal involutions was found");
    return all.front();
}

void validate_decomposition(const RootSystem& rs, const CarterDecomposition& cd) {
    for (const auto* part : {&cd.gammas1, &cd.gammas2})
        for (size_t i = 0; i < part->size(); ++i) {
            if (rs.index_of((*part)[i]) < 0) throw Defect("gamma is not a positive root");
            for (size_t j = i + 1; j < part->size(); ++j)
                if (rs.form((*part)[i], (*part)[j]) != 0) throw Defect("gammas within one involution are not orthogonal");
        }
    if (!(cd.involution1(rs) * cd.involution2(rs) == cd.s)) throw Defect("product of involutions differs from s");
    auto gs = cd.gammas();
    if (static_cast<int>(gs.size()) != cd.l_prime || rank_of_roots(gs, rs.rank()) != cd.l_prime ||
        moved_rank(rs, cd.s) != cd.l_prime)
        throw Defect("gammas do not form a basis of the moved space");
}

QMatrix cayley_matrix(const RootSystem& rs, const CarterDecomposition& cd) {
    auto gs = cd.gammas();
    int n = static_cast<int>(gs.size());
    QMatrix c = cayley_operator(rs, cd, nullptr);
    QMatrix g = gram(rs, gs);
    QMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out(i, j) += c(k, i) * g(k, j);
    return out;
}

QMatrix cayley_closed_form(const RootSystem& rs, const CarterDecomposition& cd) {
    auto gs = cd.gammas();
    int n = static_cast<int>(gs.size());
    QMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int e = i < j ? -1 : (i == j ? 0 : 1);
            out(i, j) = e * rs.form(gs[i], gs[j]);
        }
    return out;
}

Rational cayley_form(const RootSystem& rs, const CarterDecomposition& cd, const Root& x, const Root& y) {
    if (cd.l_prime == 0) return 0;
    auto gs = cd.gammas();
    QMatrix ginv;
    QMatrix c = cayley_operator(rs, cd, &ginv);
    auto px = project(rs, gs, ginv, x);
    auto cx = c.apply(px);
    Rational v = 0;
    for (size_t k = 0; k < gs.size(); ++k) v += cx[k] * rs.form(gs[k], y);
    return v;
}

CayleyData compute_arithmetic(const RootSystem& rs, const CarterDecomposition& cd, int m) {
    const auto& dt = rs.datum();
    int l = rs.rank();
    if (m < 3 || m % 2 == 0) throw InvalidArgument("m must be odd and at least 3");
    for (int di : dt.d)
        if (m <= di) throw InvalidArgument("m must exceed every symmetrizer d_i");
    CayleyData out;
    out.m = m;
    out.cayley_gamma = cd.l_prime > 0 ? cayley_matrix(rs, cd) : QMatrix(0, 0);
    out.p = QMatrix(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            out.p(i, j) = cayley_form(rs, cd, rs.simple_root(i), rs.simple_root(j)) / dt.d[j];
    mpz_class d = 1;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) d = lcm(d, mpz_class(out.p(i, j).get_den()));
    out.d = static_cast<int>(d.get_si());
    if (std::gcd(out.d, m) != 1)
        throw InvalidArgument("no n with n d = 1 mod m: gcd(d, m) = " + std::to_string(std::gcd(out.d, m)) +
                              " for d = " + std::to_string(out.d));
    out.n = 1;
    while ((static_cast<long>(out.n) * out.d) % m != 1 % m) ++out.n;
    out.c = QMatrix(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) out.c(i, j) = Rational(out.n) * out.d * dt.d[j] * out.p(i, j);
    for (int i = 0; i < l; ++i) {
        if (out.c(i, i) != 0) throw Defect("c_ii is nonzero");
        for (int j = 0; j < l; ++j)
            if (out.c(i, j) != -out.c(j, i)) throw Defect("c is not antisymmetric");
    }
    out.n_int = solve_nij(out, dt);
    return out;
}

IntMatrix solve_nij(const CayleyData& data, const CartanDatum& datum) {
    int l = datum.rank;
    IntMatrix n(l, IntVec(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            Rational v = data.c(i, j) / datum.d[j];
            if (v.get_den() != 1)
                throw InvalidArgument("n_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + v.get_str() +
                                      " is not an integer");
            n[i][j] = static_cast<int>(v.get_num().get_si());
        }
    if (!satisfies_nij_equation(n, data.c, datum)) throw Defect("n_ij does not solve d_j n_ij - d_i n_ji = c_ij");
    return n;
}

bool satisfies_nij_equation(const IntMatrix& n, const QMatrix& c, const CartanDatum& datum) {
    int l = datum.rank;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (Rational(datum.d[j] * n[i][j] - datum.d[i] * n[j][i]) != c(i, j)) return false;
    return true;
}

}  // namespace uqs
