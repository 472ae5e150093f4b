#include "uqs/realization.hpp"

namespace uqs {

namespace {

RationalQ qi_binomial(int n, int k, int d) {
    auto fact = [d](int m) {
        LaurentQ r(1);
        for (int j = 1; j <= m; ++j) {
            LaurentQ num;
            for (int e = 0; e < j; ++e) num += LaurentQ::q(d * (j - 1 - 2 * e));
            r *= num;
        }
        return r;
    };
    return RationalQ(fact(n)) / RationalQ(fact(k) * fact(n - k));
}

IntVec negated(IntVec v) {
    for (int& x : v) x = -x;
    return v;
}

}  // namespace

template <class Field>
Realization<Field>::Realization(std::shared_ptr<const PbwAlgebra<Field>> algebra, IntMatrix n)
    : alg_(std::move(algebra)), n_(std::move(n)) {
    int l = alg_->rank();
    if (static_cast<int>(n_.size()) != l) throw InvalidArgument("n must be an l x l matrix");
    for (const auto& row : n_)
        if (static_cast<int>(row.size()) != l) throw InvalidArgument("n must be an l x l matrix");
    const auto& d = alg_->group().roots().datum().d;
    c_.assign(l, IntVec(l, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) c_[i][j] = d[j] * n_[i][j] - d[i] * n_[j][i];
}

template <class Field>
Realization<Field> Realization<Field>::from_cayley(std::shared_ptr<const PbwAlgebra<Field>> algebra,
                                                   const CayleyData& data, bool inverse) {
    IntMatrix n = data.n_int;
    int l = static_cast<int>(n.size());
    const auto& d = algebra->group().roots().datum().d;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (!(data.c(i, j) == Rational(d[j] * n[i][j] - d[i] * n[j][i])))
                throw Defect("integer solution n does not reproduce c_ij");
    if (inverse)
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) n[i][j] = -n[i][j] - (i == j ? 1 : 0);
    return Realization(std::move(algebra), std::move(n));
}

template <class Field>
long Realization<Field>::c_form(const Root& a, const Root& b) const {
    long v = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) v += static_cast<long>(a[i]) * b[j] * c_[i][j];
    return v;
}

template <class Field>
IntVec Realization<Field>::v(const Root& beta) const {
    int l = alg_->rank();
    IntVec out(l, 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) out[j] += beta[i] * n_[i][j];
    return out;
}

template <class Field>
auto Realization<Field>::e(int i) const -> Element {
    return e_root(alg_->group().position_of(alg_->group().roots().simple_root(i)));
}

template <class Field>
auto Realization<Field>::f(int i) const -> Element {
    return f_root(alg_->group().position_of(alg_->group().roots().simple_root(i)));
}

template <class Field>
auto Realization<Field>::e_root(int pos) const -> Element {
    Element x = alg_->multiply(alg_->root_plus(pos), alg_->l_monomial(v(alg_->group().root_at(pos))));
    x.tag = Presentation::s_realized;
    return x;
}

template <class Field>
auto Realization<Field>::f_root(int pos) const -> Element {
    Element x = alg_->multiply(alg_->l_monomial(negated(v(alg_->group().root_at(pos)))), alg_->root_minus(pos));
    x.tag = Presentation::s_realized;
    return x;
}

template <class Field>
auto Realization<Field>::image(const PbwMonomial& mono) const -> Element {
    int D = alg_->num_positive();
    Element x = alg_->one();
    for (int k = D - 1; k >= 0; --k)
        for (int p = 0; p < mono.t[k]; ++p) x = alg_->multiply(x, f_root(k));
    x = alg_->multiply(x, alg_->l_monomial(mono.s));
    for (int k = 0; k < D; ++k)
        for (int p = 0; p < mono.r[k]; ++p) x = alg_->multiply(x, e_root(k));
    x.tag = Presentation::s_realized;
    return x;
}

template <class Field>
auto Realization<Field>::kappa(const IntVec& t) const -> S {
    Element ft = image(PbwMonomial{t, IntVec(alg_->rank(), 0), IntVec(alg_->num_positive(), 0)});
    IntVec s = negated(v(alg_->group().weight_of(t)));
    Element target = alg_->monomial(PbwMonomial{t, s, IntVec(alg_->num_positive(), 0)});
    if (ft.terms.size() != 1 || target.terms.size() != 1 || ft.terms.begin()->first != target.terms.begin()->first)
        throw Defect("f-monomial is not a single PBW term");
    return ft.terms.begin()->second / target.terms.begin()->second;
}

template <class Field>
auto Realization<Field>::f_coordinates(const Element& x) const -> std::map<IntVec, S> {
    std::map<IntVec, S> out;
    int D = alg_->num_positive();
    for (const auto& [mono, c] : x.terms) {
        for (int k = 0; k < D; ++k)
            if (mono.r[k]) throw Defect("element has a positive root vector factor: " + monomial_to_string(mono));
        Element ft = image(PbwMonomial{mono.t, IntVec(alg_->rank(), 0), IntVec(D, 0)});
        if (ft.terms.size() != 1 || ft.terms.begin()->first != mono)
            throw Defect("monomial " + monomial_to_string(mono) + " is not in the span of the f-monomials");
        out.emplace(mono.t, c / ft.terms.begin()->second);
    }
    return out;
}

template <class Field>
auto Realization<Field>::f_relation(int a, int b) const -> FRelation {
    if (a >= b) throw InvalidArgument("f_relation expects positions a < b");
    const auto& g = alg_->group();
    FRelation rel;
    rel.a = a;
    rel.b = b;
    rel.exponent = g.roots().form(g.root_at(a), g.root_at(b)) + c_form(g.root_at(a), g.root_at(b));
    Element fa = f_root(a), fb = f_root(b);
    Element lhs = alg_->multiply(fa, fb) - alg_->multiply(fb, fa).scaled(alg_->q_pow(rel.exponent));
    rel.rhs = f_coordinates(lhs);
    for (const auto& [t, c] : rel.rhs)
        for (int k = 0; k < static_cast<int>(t.size()); ++k)
            if (t[k] && (k <= a || k >= b))
                throw Defect("f-relation for positions " + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                             " leaves the window");
    return rel;
}

template <class Field>
void Realization<Field>::verify_relations() const {
    const auto& cd = alg_->group().roots().datum();
    int l = alg_->rank();
    const Field& field = alg_->field();
    auto fail = [](const std::string& what, int i, int j) {
        throw Defect(what + " fails for (i, j) = (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    };
    for (int i = 0; i < l; ++i) {
        IntVec ei(l, 0);
        ei[i] = 1;
        Element li = alg_->l_monomial(ei), li_inv = alg_->l_monomial(negated(ei));
        for (int j = 0; j < l; ++j) {
            long w = i == j ? cd.d[i] : 0;
            if (!(alg_->multiply(alg_->multiply(li, e(j)), li_inv) == e(j).scaled(alg_->q_pow(w))))
                fail("L-conjugation of e", i, j);
            if (!(alg_->multiply(alg_->multiply(li, f(j)), li_inv) == f(j).scaled(alg_->q_pow(-w))))
                fail("L-conjugation of f", i, j);
            Element lhs = alg_->multiply(e(i), f(j)) - alg_->multiply(f(j), e(i)).scaled(alg_->q_pow(c_[j][i]));
            Element rhs;
            if (i == j) {
                S inv = field.lift((RationalQ::q(cd.d[i]) - RationalQ::q(-cd.d[i])).inverse());
                rhs = (alg_->k_power(i, 1) - alg_->k_power(i, -1)).scaled(inv);
            }
            if (!(lhs == rhs)) fail("e-f commutation", i, j);
            if (i == j) continue;
            int n = 1 - cd.a[i][j];
            for (bool plus : {true, false}) {
                Element sum;
                Element gi = plus ? e(i) : f(i), gj = plus ? e(j) : f(j);
                for (int r = 0; r <= n; ++r) {
                    Element term = alg_->multiply(alg_->multiply(alg_->power(gi, n - r), gj), alg_->power(gi, r));
                    S coeff = field.lift(qi_binomial(n, r, cd.d[i])) * alg_->q_pow(static_cast<long>(r) * c_[i][j]);
                    if (r % 2) coeff = -coeff;
                    sum += term.scaled(coeff);
                }
                if (!sum.is_zero()) fail(plus ? "twisted Serre relation for e" : "twisted Serre relation for f", i, j);
            }
        }
    }
}

template <class Field>
int Realization<Field>::image_rank(int max_degree, int s_range, int* count) const {
    int D = alg_->num_positive();
    int l = alg_->rank();
    std::vector<IntVec> exps;
    IntVec cur(2 * D, 0);
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == 2 * D) {
            exps.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[k] = e;
            self(self, k + 1, left - e);
        }
        cur[k] = 0;
    };
    rec(rec, 0, max_degree);
    std::vector<IntVec> svals;
    IntVec s(l, -s_range);
    while (true) {
        svals.push_back(s);
        int i = 0;
        while (i < l && s[i] == s_range) s[i++] = -s_range;
        if (i == l) break;
        ++s[i];
    }
    std::vector<Element> images;
    std::map<PbwMonomial, int> cols;
    for (const auto& tr : exps)
        for (const auto& sv : svals) {
            PbwMonomial mono{IntVec(tr.begin(), tr.begin() + D), sv, IntVec(tr.begin() + D, tr.end())};
            images.push_back(image(mono));
            for (const auto& [m, c] : images.back().terms) cols.emplace(m, static_cast<int>(cols.size()));
        }
    if (count) *count = static_cast<int>(images.size());
    Matrix<S> mat(static_cast<int>(images.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < images.size(); ++r)
        for (const auto& [m, c] : images[r].terms) mat(static_cast<int>(r), cols.at(m)) = c;
    return rank(mat);
}

template class Realization<GenericField>;
template class Realization<CyclotomicField>;

}  // namespace uqs
