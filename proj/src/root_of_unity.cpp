#include "uqs/root_of_unity.hpp"

#include <gmp.h>

#include <algorithm>

namespace uqs {

namespace {

// Value of a Laurent polynomial in q at q = e^d.
Cyc evaluate(const LaurentQ& x, int m, int d) {
    Cyc out(0);
    for (int k = x.low(); k <= x.high(); ++k) {
        Rational c = x.coeff(k);
        if (c != 0) out += Cyc(c) * Cyc::root_power(m, static_cast<long>(k) * d);
    }
    return out;
}

IntVec unit_vector(int n, int i, int value = 1) {
    IntVec v(n, 0);
    v[i] = value;
    return v;
}

// Mixed-radix layout of the bounded monomials: digits t_0..t_{D-1}, s_0..s_{l-1}, r_0..r_{D-1}.
PbwMonomial decode(int index, int D, int l, int m) {
    PbwMonomial mono{IntVec(D), IntVec(l), IntVec(D)};
    for (int k = 0; k < D; ++k, index /= m) mono.t[k] = index % m;
    for (int i = 0; i < l; ++i, index /= m) mono.s[i] = index % m;
    for (int k = 0; k < D; ++k, index /= m) mono.r[k] = index % m;
    return mono;
}

int encode(const PbwMonomial& mono, int m) {
    int index = 0, scale = 1;
    auto put = [&](int digit) {
        if (digit < 0 || digit >= m) throw Defect("monomial " + monomial_to_string(mono) + " is not reduced");
        index += digit * scale;
        scale *= m;
    };
    for (int x : mono.t) put(x);
    for (int x : mono.s) put(x);
    for (int x : mono.r) put(x);
    return index;
}

CycAlgebra::Coords to_coords(const AlgebraElement<Cyc>& x, int m) {
    CycAlgebra::Coords c;
    for (const auto& [mono, v] : x.terms) CycAlgebra::add_to(c, encode(mono, m), v);
    return c;
}

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::optional<mpz_class> exact_root(const mpz_class& x, int m) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m)) == 0) return std::nullopt;
    return r;
}

Matrix<Cyc> identity_minus(const Matrix<Cyc>& g, const Cyc& lambda) {
    Matrix<Cyc> a = g;
    for (int i = 0; i < a.rows(); ++i) a(i, i) -= lambda;
    return a;
}

}  // namespace

CentralCharacter CentralCharacter::restricted(const RootSystem& rs, int m) {
    CentralCharacter eta;
    eta.m = m;
    for (const auto& r : rs.positive_roots()) {
        eta.values_x_plus[r] = Cyc(0);
        eta.values_x_minus[r] = Cyc(0);
    }
    eta.values_l.assign(rs.rank(), Cyc(1));
    return eta;
}

Cyc CentralCharacter::x_plus(const Root& r) const {
    auto it = values_x_plus.find(r);
    return it == values_x_plus.end() ? Cyc(0) : it->second;
}

Cyc CentralCharacter::x_minus(const Root& r) const {
    auto it = values_x_minus.find(r);
    return it == values_x_minus.end() ? Cyc(0) : it->second;
}

void check_order(const CartanDatum& cd, int m) {
    if (m < 3 || m % 2 == 0) throw InvalidArgument("the order m must be odd and at least 3, got " + std::to_string(m));
    for (int d : cd.d)
        if (m <= d) throw InvalidArgument("the order m must exceed every d_i");
}

void CentralCharacter::validate(const RootSystem& rs) const {
    check_order(rs.datum(), m);
    if (static_cast<int>(values_l.size()) != rs.rank()) throw InvalidArgument("eta needs one l-value per simple root");
    for (size_t i = 0; i < values_l.size(); ++i)
        if (values_l[i].is_zero()) throw InvalidArgument("eta(l_" + std::to_string(i + 1) + ") must be nonzero");
    for (const auto* table : {&values_x_plus, &values_x_minus})
        for (const auto& [r, v] : *table)
            if (rs.index_of(r) < 0) throw InvalidArgument("eta is keyed by a vector that is not a positive root");
    auto check_field = [this](const Cyc& v) {
        if (v.order() != 0 && v.order() != m)
            throw InvalidArgument("eta value " + v.to_string() + " is not in Q(e) for m = " + std::to_string(m));
    };
    for (const auto& v : values_l) check_field(v);
    for (const auto* table : {&values_x_plus, &values_x_minus})
        for (const auto& [r, v] : *table) check_field(v);
}

Cyc root_factor(const QuantumGroup& g, int pos, int m) {
    CyclotomicField f{m};
    int d = g.root_d(pos);
    return (f.q_pow(d) - f.q_pow(-d)).pow(m);
}

CentralElements central_elements(std::shared_ptr<const QuantumGroup> group, int m, bool verify, int sample_stride) {
    check_order(group->roots().datum(), m);
    auto alg = std::make_shared<RootOfUnityAlgebra>(group, CyclotomicField{m});
    CentralElements out;
    out.algebra = alg;
    int D = group->num_positive(), l = group->rank();
    for (int k = 0; k < D; ++k) {
        Cyc f = root_factor(*group, k, m);
        out.x_plus.push_back(alg->power(alg->root_plus(k), m).scaled(f));
        out.x_minus.push_back(alg->power(alg->root_minus(k), m).scaled(f));
    }
    for (int i = 0; i < l; ++i) out.l.push_back(alg->l_monomial(unit_vector(l, i, m)));
    if (!verify) return out;
    std::vector<std::pair<std::string, AlgebraElement<Cyc>>> gens;
    for (int i = 0; i < l; ++i) {
        gens.emplace_back("X_" + std::to_string(i + 1) + "^+", alg->x_plus(i));
        gens.emplace_back("X_" + std::to_string(i + 1) + "^-", alg->x_minus(i));
        gens.emplace_back("L_" + std::to_string(i + 1), alg->l_monomial(unit_vector(l, i)));
    }
    auto check = [&](const AlgebraElement<Cyc>& z, const std::string& name) {
        for (const auto& [gname, g] : gens)
            if (!alg->commutator(z, g).is_zero())
                throw Defect(name + " does not commute with " + gname + " at m = " + std::to_string(m));
    };
    int stride = std::max(1, sample_stride);
    for (int k = 0; k < D; k += stride) {
        check(out.x_plus[k], "x^+ at position " + std::to_string(k + 1));
        check(out.x_minus[k], "x^- at position " + std::to_string(k + 1));
    }
    for (int i = 0; i < l; ++i) check(out.l[i], "l_" + std::to_string(i + 1));
    return out;
}

CentralReduction<Cyc> central_reduction(const QuantumGroup& g, const CentralCharacter& eta) {
    CentralReduction<Cyc> red;
    red.m = eta.m;
    for (int k = 0; k < g.num_positive(); ++k) {
        Cyc f = root_factor(g, k, eta.m);
        red.minus_power.push_back(eta.x_minus(g.root_at(k)) / f);
        red.plus_power.push_back(eta.x_plus(g.root_at(k)) / f);
    }
    red.l_power = eta.values_l;
    return red;
}

PbwMonomial UEta::monomial_at(int index) const {
    return decode(index, pbw->num_positive(), pbw->rank(), eta.m);
}

int UEta::index_of(const PbwMonomial& mono) const { return encode(mono, eta.m); }

CycAlgebra::Coords UEta::coords(const AlgebraElement<Cyc>& x) const { return to_coords(x, eta.m); }

AlgebraElement<Cyc> UEta::element(const CycAlgebra::Coords& c) const {
    AlgebraElement<Cyc> x;
    for (const auto& [k, v] : c) x.add(monomial_at(k), v);
    return x;
}

long UEta::expected_dim() const { return ipow(eta.m, 2 * pbw->num_positive() + pbw->rank()); }

std::vector<std::string> u_eta_generator_names(int D, int l) {
    std::vector<std::string> names;
    for (int k = 0; k < D; ++k) names.push_back("e" + std::to_string(k + 1));
    for (int k = 0; k < D; ++k) names.push_back("f" + std::to_string(k + 1));
    for (int i = 0; i < l; ++i) names.push_back("L" + std::to_string(i + 1));
    for (int i = 0; i < l; ++i) names.push_back("Linv" + std::to_string(i + 1));
    return names;
}

namespace {

std::vector<AlgebraElement<Cyc>> generator_elements(const RootOfUnityAlgebra& alg) {
    int D = alg.num_positive(), l = alg.rank();
    std::vector<AlgebraElement<Cyc>> gens;
    for (int k = 0; k < D; ++k) gens.push_back(alg.root_plus(k));
    for (int k = 0; k < D; ++k) gens.push_back(alg.root_minus(k));
    for (int i = 0; i < l; ++i) gens.push_back(alg.l_monomial(unit_vector(l, i)));
    for (int i = 0; i < l; ++i) gens.push_back(alg.l_monomial(unit_vector(l, i, -1)));
    return gens;
}

}  // namespace

UEta build_U_eta(std::shared_ptr<const QuantumGroup> group, const CentralCharacter& eta) {
    eta.validate(group->roots());
    int D = group->num_positive(), l = group->rank(), m = eta.m;
    long dim = ipow(m, 2 * D + l);
    if (dim > 50'000'000) throw BudgetExceeded("U_eta(g) has more than 5e7 basis monomials");
    auto pbw = std::make_shared<RootOfUnityAlgebra>(group, CyclotomicField{m}, central_reduction(*group, eta));
    auto product = [pbw, D, l, m](int i, int j) {
        auto x = pbw->monomial(decode(i, D, l, m));
        auto y = pbw->monomial(decode(j, D, l, m));
        return to_coords(pbw->multiply(x, y), m);
    };
    auto label = [D, l, m](int i) { return monomial_to_string(decode(i, D, l, m)); };
    std::vector<std::pair<std::string, CycAlgebra::Coords>> gens;
    auto names = u_eta_generator_names(D, l);
    auto elems = generator_elements(*pbw);
    for (size_t k = 0; k < names.size(); ++k) gens.emplace_back(names[k], to_coords(elems[k], m));
    UEta u{pbw, eta, CycAlgebra(static_cast<int>(dim), product, 0, static_cast<int>(dim - 1), gens, label)};
    return u;
}

CycMatrix act(const UEta& u, const CycModule& v, const AlgebraElement<Cyc>& x) {
    int D = u.pbw->num_positive(), l = u.pbw->rank();
    if (static_cast<int>(v.gens.size()) != 2 * D + 2 * l) throw InvalidArgument("module does not match U_eta(g)");
    CycMatrix out(v.dim, v.dim);
    for (const auto& [mono, c] : x.terms) {
        CycMatrix m = CycMatrix::identity(v.dim);
        for (int k = D - 1; k >= 0; --k)
            for (int p = 0; p < mono.t[k]; ++p) m = m * v.gens[D + k];
        for (int i = 0; i < l; ++i) {
            const CycMatrix& g = mono.s[i] >= 0 ? v.gens[2 * D + i] : v.gens[2 * D + l + i];
            for (int p = 0; p < std::abs(mono.s[i]); ++p) m = m * g;
        }
        for (int k = 0; k < D; ++k)
            for (int p = 0; p < mono.r[k]; ++p) m = m * v.gens[k];
        out = out + m.scaled(c);
    }
    return out;
}

void verify_module(const UEta& u, const CycModule& v) {
    const RootOfUnityAlgebra& alg = *u.pbw;
    const QuantumGroup& g = alg.group();
    const CartanDatum& cd = g.roots().datum();
    int D = alg.num_positive(), l = alg.rank(), m = u.m();
    if (v.names != u_eta_generator_names(D, l)) throw InvalidArgument("module does not match U_eta(g)");
    auto fail = [](const std::string& what) { throw Defect("module relation fails: " + what); };
    CycMatrix id = CycMatrix::identity(v.dim);

    auto elems = generator_elements(alg);
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b)
            if (!(v.gens[a] * v.gens[b] == act(u, v, alg.multiply(elems[a], elems[b]))))
                fail("rho(" + v.names[a] + ") rho(" + v.names[b] + ") differs from rho of the product");

    for (int k = 0; k < D; ++k) {
        Cyc f = root_factor(g, k, m);
        const Root& beta = g.root_at(k);
        if (!(matrix_power(v.gens[k], m) == id.scaled(u.eta.x_plus(beta) / f))) fail("central value of e^m");
        if (!(matrix_power(v.gens[D + k], m) == id.scaled(u.eta.x_minus(beta) / f))) fail("central value of f^m");
    }
    for (int i = 0; i < l; ++i) {
        if (!(matrix_power(v.gens[2 * D + i], m) == id.scaled(u.eta.values_l[i]))) fail("central value of L^m");
        if (!(v.gens[2 * D + i] * v.gens[2 * D + l + i] == id)) fail("L L^-1 = 1");
    }

    CyclotomicField field{m};
    auto e = [&](int i) { return v.gens[g.position_of(g.roots().simple_root(i))]; };
    auto f = [&](int i) { return v.gens[D + g.position_of(g.roots().simple_root(i))]; };
    auto k_mat = [&](int i, int sign) {
        CycMatrix out = id;
        IntVec s = g.k_vector(i);
        for (int j = 0; j < l; ++j) {
            int p = sign * s[j];
            const CycMatrix& lj = p >= 0 ? v.gens[2 * D + j] : v.gens[2 * D + l + j];
            for (int r = 0; r < std::abs(p); ++r) out = out * lj;
        }
        return out;
    };
    for (int i = 0; i < l; ++i) {
        const CycMatrix& li = v.gens[2 * D + i];
        const CycMatrix& li_inv = v.gens[2 * D + l + i];
        for (int j = 0; j < l; ++j) {
            if (!(v.gens[2 * D + i] * v.gens[2 * D + j] == v.gens[2 * D + j] * v.gens[2 * D + i])) fail("L_i L_j");
            long w = i == j ? cd.d[i] : 0;
            if (!(li * e(j) * li_inv == e(j).scaled(field.q_pow(w)))) fail("L-conjugation of e");
            if (!(li * f(j) * li_inv == f(j).scaled(field.q_pow(-w)))) fail("L-conjugation of f");
            CycMatrix comm = e(i) * f(j) - f(j) * e(i);
            CycMatrix rhs(v.dim, v.dim);
            if (i == j) rhs = (k_mat(i, 1) - k_mat(i, -1)).scaled((field.q_pow(cd.d[i]) - field.q_pow(-cd.d[i])).inverse());
            if (!(comm == rhs)) fail("e-f commutation");
            if (i == j) continue;
            int n = 1 - cd.a[i][j];
            for (bool plus : {true, false}) {
                CycMatrix gi = plus ? e(i) : f(i), gj = plus ? e(j) : f(j);
                CycMatrix sum(v.dim, v.dim);
                for (int r = 0; r <= n; ++r) {
                    Cyc coeff = evaluate(q_binomial(n, r), m, cd.d[i]);
                    if (r % 2) coeff = -coeff;
                    sum = sum + (matrix_power(gi, n - r) * gj * matrix_power(gi, r)).scaled(coeff);
                }
                if (!sum.is_zero()) fail(plus ? "Serre relation for e" : "Serre relation for f");
            }
        }
    }
}

Cyc frobenius_pairing(const CycAlgebra& a, const CycAlgebra::Coords& x, const CycAlgebra::Coords& y) {
    auto xy = a.multiply(x, y);
    auto it = xy.find(a.top());
    return it == xy.end() ? Cyc(0) : it->second;
}

FrobeniusForm frobenius_form(const CycAlgebra& a, int budget, int associativity_samples, unsigned seed) {
    if (a.dim() > budget)
        throw BudgetExceeded("Gram matrix of dimension " + std::to_string(a.dim()) + " exceeds the budget " +
                             std::to_string(budget));
    a.check_associativity(associativity_samples, seed);
    FrobeniusForm form;
    form.dim = a.dim();
    form.gram = CycMatrix(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const auto& p = a.basis_product(i, j);
            auto it = p.find(a.top());
            if (it != p.end()) form.gram(i, j) = it->second;
        }
    form.rank = rank(form.gram);
    if (!form.nondegenerate())
        throw Defect("Frobenius form is degenerate: rank " + std::to_string(form.rank) + " < " +
                     std::to_string(form.dim));
    return form;
}

CycModule baby_verma(const UEta& u, const std::vector<Cyc>& lambda) {
    const RootOfUnityAlgebra& alg = *u.pbw;
    const QuantumGroup& g = alg.group();
    int D = alg.num_positive(), l = alg.rank(), m = u.m();
    if (static_cast<int>(lambda.size()) != l) throw InvalidArgument("lambda needs one value per simple root");
    for (int k = 0; k < D; ++k)
        if (!u.eta.x_plus(g.root_at(k)).is_zero())
            throw InvalidArgument("baby Verma modules need eta to vanish on every x^+");
    for (int i = 0; i < l; ++i)
        if (!(lambda[i].pow(m) == u.eta.values_l[i]))
            throw InvalidArgument("lambda_" + std::to_string(i + 1) + "^m differs from eta(l_" + std::to_string(i + 1) + ")");
    int dim = static_cast<int>(ipow(m, D));
    CycModule z{dim, u_eta_generator_names(D, l), {}};
    auto elems = generator_elements(alg);
    for (const auto& gen : elems) {
        CycMatrix mat(dim, dim);
        for (int col = 0; col < dim; ++col) {
            PbwMonomial mono = decode(col, D, 0, m);
            mono.s.assign(l, 0);
            mono.r.assign(D, 0);
            for (const auto& [res, c] : alg.multiply(gen, alg.monomial(mono)).terms) {
                bool kills = false;
                for (int x : res.r) kills = kills || x != 0;
                if (kills) continue;
                Cyc w = c;
                for (int i = 0; i < l; ++i) w *= lambda[i].pow(res.s[i]);
                int row = 0, scale = 1;
                for (int k = 0; k < D; ++k, scale *= m) row += res.t[k] * scale;
                mat(row, col) += w;
            }
        }
        z.gens.push_back(std::move(mat));
    }
    return z;
}

std::vector<Cyc> mth_roots(const Cyc& c, int m) {
    if (c.is_zero()) return {Cyc(0)};
    if (!c.is_rational()) return {};
    Rational r = c.rational_value();
    mpz_class num = abs(r.get_num()), den = r.get_den();
    auto a = exact_root(num, m), b = exact_root(den, m);
    if (!a || !b) return {};
    if (r < 0 && m % 2 == 0) return {};
    Rational rho(*a, *b);
    if (r < 0) rho = -rho;
    std::vector<Cyc> out;
    for (int j = 0; j < m; ++j) out.push_back(Cyc(rho) * Cyc::root_power(m, j));
    return out;
}

RowReducer<Cyc> radical(const CycAlgebra& a, int budget) {
    int n = a.dim();
    if (n > budget)
        throw BudgetExceeded("radical of an algebra of dimension " + std::to_string(n) + " exceeds the budget " +
                             std::to_string(budget));
    std::vector<Cyc> tr(n, Cyc(0));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            const auto& p = a.basis_product(k, j);
            auto it = p.find(j);
            if (it != p.end()) tr[k] += it->second;
        }
    RowReducer<Cyc> form(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Cyc> row(n, Cyc(0));
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : a.basis_product(i, j))
                if (!tr[k].is_zero()) row[j] += c * tr[k];
        form.add(row);
    }
    RowReducer<Cyc> out(n);
    for (const auto& v : form.kernel()) out.add(v);
    return out;
}

namespace {

// Test elements g - lambda with g^m scalar on the module; lambda runs over the m-th roots.
struct SplitElement {
    int gen = 0;
    std::vector<Cyc> eigenvalues;
    bool nilpotent = false;
};

std::vector<SplitElement> split_elements(const CycModule& v, int m) {
    std::vector<SplitElement> out;
    for (size_t k = 0; k < v.gens.size(); ++k) {
        Cyc c;
        if (!is_scalar_matrix(matrix_power(v.gens[k], m), &c)) continue;
        auto roots = mth_roots(c, m);
        if (roots.empty()) continue;
        out.push_back({static_cast<int>(k), roots, c.is_zero()});
    }
    return out;
}

// Columns of w spanning a subspace; returns the basis of {x in span w : a x = 0}.
std::vector<std::vector<Cyc>> restricted_kernel(const CycMatrix& a, const std::vector<std::vector<Cyc>>& w) {
    int d = a.rows();
    CycMatrix aw(d, static_cast<int>(w.size()));
    for (size_t c = 0; c < w.size(); ++c) {
        auto col = a.apply(w[c]);
        for (int i = 0; i < d; ++i) aw(i, static_cast<int>(c)) = col[i];
    }
    std::vector<std::vector<Cyc>> out;
    for (const auto& y : nullspace(aw)) {
        std::vector<Cyc> x(d, Cyc(0));
        for (size_t c = 0; c < w.size(); ++c)
            if (!y[c].is_zero())
                for (int i = 0; i < d; ++i) x[i] += y[c] * w[c][i];
        out.push_back(std::move(x));
    }
    return out;
}

bool preserves(const CycMatrix& a, const std::vector<std::vector<Cyc>>& w) {
    RowReducer<Cyc> span(a.rows());
    for (const auto& x : w) span.add(x);
    for (const auto& x : w)
        if (!span.contains(a.apply(x))) return false;
    return true;
}

void split(const CycModule& n, int m, std::vector<CycModule>& found) {
    if (n.dim == 0) return;
    auto elements = split_elements(n, m);
    std::vector<std::vector<Cyc>> w;
    for (int i = 0; i < n.dim; ++i) {
        std::vector<Cyc> e(n.dim, Cyc(0));
        e[i] = Cyc(1);
        w.push_back(std::move(e));
    }
    for (const auto& s : elements) {
        if (!s.nilpotent) continue;
        auto k = restricted_kernel(n.gens[s.gen], w);
        if (!k.empty()) w = std::move(k);
    }
    for (const auto& s : elements) {
        if (s.nilpotent || !preserves(n.gens[s.gen], w)) continue;
        std::vector<std::vector<Cyc>> best;
        for (const auto& lambda : s.eigenvalues) {
            auto k = restricted_kernel(identity_minus(n.gens[s.gen], lambda), w);
            if (!k.empty() && (best.empty() || k.size() < best.size())) best = std::move(k);
        }
        if (!best.empty()) w = std::move(best);
    }
    for (const auto& x : w) {
        RowReducer<Cyc> sub = spin(n, {x});
        if (sub.rank() < n.dim) {
            split(submodule(n, sub), m, found);
            split(quotient(n, sub), m, found);
            return;
        }
    }
    if (!is_absolutely_simple(n, m))
        throw NotSplit("no test element splits a module of dimension " + std::to_string(n.dim));
    for (const auto& s : found)
        if (isomorphic(s, n)) return;
    found.push_back(n);
}

}  // namespace

bool is_absolutely_simple(const CycModule& v, int m) {
    if (v.dim == 0) return false;
    if (v.dim == 1) return true;
    if (v.dim <= 10) return matrix_algebra_dim(v) == v.dim * v.dim;
    for (const auto& s : split_elements(v, m))
        for (const auto& lambda : s.eigenvalues) {
            CycMatrix a = identity_minus(v.gens[s.gen], lambda);
            auto ker = nullspace(a);
            if (ker.size() != 1) continue;
            if (spin(v, {ker[0]}).rank() < v.dim) return false;
            CycModule dual{v.dim, v.names, {}};
            for (const auto& g : v.gens) dual.gens.push_back(g.transpose());
            auto coker = nullspace(a.transpose());
            return spin(dual, {coker[0]}).rank() == v.dim;
        }
    if (v.dim <= 40) return matrix_algebra_dim(v) == v.dim * v.dim;
    throw NotSplit("no element with a one-dimensional eigenspace decides simplicity in dimension " +
                   std::to_string(v.dim));
}

bool isomorphic(const CycModule& a, const CycModule& b) {
    if (a.dim != b.dim || a.names != b.names) return false;
    return !hom_space(a, b).empty();
}

std::vector<CycModule> simple_modules(const CycAlgebra& a, int m, int budget) {
    RowReducer<Cyc> rad = radical(a, budget);
    CycModule top = quotient(a.regular_module(), rad);
    std::vector<CycModule> found;
    split(top, m, found);
    long total = 0;
    for (const auto& s : found) total += static_cast<long>(s.dim) * s.dim;
    if (total != a.dim() - rad.rank())
        throw Defect("simple modules account for " + std::to_string(total) + " of the " +
                     std::to_string(a.dim() - rad.rank()) + " dimensions of A / rad A");
    return found;
}

CycModule baby_verma_head(const CycModule& z) {
    std::vector<Cyc> phi(z.dim, Cyc(0));
    phi[0] = Cyc(1);
    return quotient(z, largest_submodule_in_kernel(z, phi));
}

}  // namespace uqs
