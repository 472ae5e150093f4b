#include "uqs/whittaker.hpp"

#include <algorithm>
#include <map>

namespace uqs {

namespace {

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Cyc int_pow(const Cyc& x, long e) { return e >= 0 ? x.pow(e) : x.inverse().pow(-e); }

std::string root_string(const Root& r) {
    std::string s = "(";
    for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

Root weight_of_exponents(const QuantumGroup& g, const IntVec& t) { return g.weight_of(t); }

long evaluate_h(const Root& w, const IntVec& h) {
    long v = 0;
    for (size_t j = 0; j < w.size(); ++j) v += static_cast<long>(w[j]) * h[j];
    return v;
}

std::vector<Cyc> flatten(const CycMatrix& m) {
    std::vector<Cyc> v(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v[static_cast<size_t>(i) * m.cols() + j] = m(i, j);
    return v;
}

CycMatrix unflatten(const std::vector<Cyc>& v, int rows, int cols) {
    CycMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = v[static_cast<size_t>(i) * cols + j];
    return m;
}

std::vector<Cyc> column(const CycMatrix& m, int j) {
    std::vector<Cyc> c(m.rows());
    for (int i = 0; i < m.rows(); ++i) c[i] = m(i, j);
    return c;
}

int nullity(const CycMatrix& a) { return a.cols() - rank(a); }

}  // namespace

int WhittakerContext::gamma_position(int i) const {
    for (size_t k = 0; k < m_plus.size(); ++k)
        if (gamma_of[k] == i) return m_plus[k];
    throw InvalidArgument("no gamma with index " + std::to_string(i + 1));
}

WhittakerContext whittaker_context(const RootSystem& rs, const AdaptedOrdering& ao, int m) {
    check_order(rs.datum(), m);
    WhittakerContext ctx{rs, ao, compute_arithmetic(rs, ao.carter, m), m, nullptr, {}, {}, 0};
    ctx.group = std::make_shared<QuantumGroup>(rs, reversed_ordering(rs, ao.ordering));
    int D = rs.num_positive();
    for (int p = ao.seg_m_plus.begin; p < ao.seg_m_plus.end; ++p) ctx.m_plus.push_back(D - 1 - p);
    std::sort(ctx.m_plus.begin(), ctx.m_plus.end());
    auto gammas = ao.carter.gammas();
    ctx.l_prime = static_cast<int>(gammas.size());
    for (int pos : ctx.m_plus) {
        const Root& r = ctx.group->root_at(pos);
        auto it = std::find(gammas.begin(), gammas.end(), r);
        ctx.gamma_of.push_back(it == gammas.end() ? -1 : static_cast<int>(it - gammas.begin()));
    }
    for (int i = 0; i < ctx.l_prime; ++i)
        if (std::find(ctx.gamma_of.begin(), ctx.gamma_of.end(), i) == ctx.gamma_of.end())
            throw Defect("gamma_" + std::to_string(i + 1) + " lies outside Delta_{m+}");
    return ctx;
}

WhittakerData whittaker_data(const WhittakerContext& ctx, const CentralCharacter& eta) {
    WhittakerData w{ctx, build_U_eta(ctx.group, eta), nullptr, {}};
    w.psi = std::make_shared<Realization<CyclotomicField>>(
        Realization<CyclotomicField>::from_cayley(w.u.pbw, ctx.data, true));
    for (int pos : ctx.m_plus) w.f.push_back(w.psi->f_root(pos));
    return w;
}

std::vector<Cyc> f_power_values(const WhittakerData& w) {
    std::vector<Cyc> out;
    const auto& alg = *w.u.pbw;
    for (size_t k = 0; k < w.f.size(); ++k) {
        auto p = alg.power(w.f[k], w.ctx.m);
        if (p.is_zero()) {
            out.push_back(Cyc(0));
            continue;
        }
        auto one = alg.one();
        if (p.terms.size() != 1 || p.terms.begin()->first != one.terms.begin()->first)
            throw Defect("f^m is not central for the root " + root_string(w.ctx.group->root_at(w.ctx.m_plus[k])));
        out.push_back(p.terms.begin()->second);
    }
    return out;
}

CentralCharacter slice_character(const WhittakerContext& ctx, const std::vector<Cyc>& c,
                                 const std::vector<Cyc>& l_values) {
    if (static_cast<int>(c.size()) != ctx.l_prime) throw InvalidArgument("need one value c_i per gamma");
    CentralCharacter eta = CentralCharacter::restricted(ctx.rs, ctx.m);
    eta.values_l = l_values;
    for (size_t k = 0; k < ctx.m_plus.size(); ++k)
        if (ctx.gamma_of[k] >= 0) eta.values_x_minus[ctx.group->root_at(ctx.m_plus[k])] = Cyc(1);
    if (ctx.l_prime == 0) return eta;
    auto probe = f_power_values(whittaker_data(ctx, eta));
    for (size_t k = 0; k < ctx.m_plus.size(); ++k) {
        int i = ctx.gamma_of[k];
        if (i < 0) continue;
        eta.values_x_minus[ctx.group->root_at(ctx.m_plus[k])] = c[i].pow(ctx.m) / probe[k];
    }
    return eta;
}

std::vector<std::string> slice_violations(const WhittakerData& w) {
    std::vector<std::string> out;
    auto values = f_power_values(w);
    for (size_t k = 0; k < values.size(); ++k) {
        std::string root = root_string(w.ctx.group->root_at(w.ctx.m_plus[k]));
        int i = w.ctx.gamma_of[k];
        if (i >= 0 && values[k].is_zero())
            out.push_back("eta(f^m) = 0 for gamma_" + std::to_string(i + 1) + " = " + root);
        if (i < 0 && !values[k].is_zero())
            out.push_back("eta(f^m) = " + values[k].to_string() + " != 0 for the root " + root);
    }
    return out;
}

int NilpotentSubalgebraData::index_of(const IntVec& t) const {
    auto it = std::find(basis.begin(), basis.end(), t);
    if (it == basis.end()) throw Defect("exponent vector outside the basis of U_eta(m-)");
    return static_cast<int>(it - basis.begin());
}

NilpotentSubalgebraData build_m_minus(const WhittakerData& w) {
    auto violations = slice_violations(w);
    if (!violations.empty()) {
        std::string msg = "eta is not on the slice:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw PreconditionRejected(msg);
    }
    const auto& ctx = w.ctx;
    const auto& alg = *w.u.pbw;
    int D = alg.num_positive(), l = alg.rank(), m = ctx.m;
    int k = static_cast<int>(ctx.m_plus.size());
    int dim = static_cast<int>(ipow(m, k));
    NilpotentSubalgebraData nd;
    auto values = f_power_values(w);
    nd.dchar.assign(ctx.l_prime, Cyc(0));
    for (int e = 0; e < k; ++e)
        if (ctx.gamma_of[e] >= 0) nd.dchar[ctx.gamma_of[e]] = values[e];

    auto lookup = std::make_shared<std::map<IntVec, int>>();
    auto scale = std::make_shared<std::vector<std::pair<PbwMonomial, Cyc>>>();
    for (int index = 0; index < dim; ++index) {
        IntVec t(D, 0);
        bool radical = false;
        int rest = index;
        for (int e = 0; e < k; ++e, rest /= m) {
            t[ctx.m_plus[e]] = rest % m;
            if (rest % m && ctx.gamma_of[e] < 0) radical = true;
        }
        nd.basis.push_back(t);
        if (radical) nd.radical_basis.push_back(index);
        auto img = w.psi->image(PbwMonomial{t, IntVec(l, 0), IntVec(D, 0)});
        if (img.terms.size() != 1 || img.terms.begin()->first.t != t)
            throw Defect("f-monomial is not a single PBW term");
        scale->emplace_back(img.terms.begin()->first, img.terms.begin()->second);
        lookup->emplace(t, index);
        nd.images.push_back(std::move(img));
    }
    auto images = std::make_shared<std::vector<AlgebraElement<Cyc>>>(nd.images);
    auto pbw = w.u.pbw;
    auto product = [pbw, images, lookup, scale](int i, int j) {
        CycAlgebra::Coords out;
        for (const auto& [mono, c] : pbw->multiply((*images)[i], (*images)[j]).terms) {
            auto it = lookup->find(mono.t);
            if (it == lookup->end()) throw Defect("product leaves U_eta(m-): " + monomial_to_string(mono));
            const auto& [ref, kappa] = (*scale)[it->second];
            if (ref != mono) throw Defect("product leaves the span of the f-monomials: " + monomial_to_string(mono));
            CycAlgebra::add_to(out, it->second, c / kappa);
        }
        return out;
    };
    std::vector<std::pair<std::string, CycAlgebra::Coords>> gens;
    for (int e = 0; e < k; ++e) gens.emplace_back("f" + std::to_string(ctx.m_plus[e] + 1), CycAlgebra::Coords{{static_cast<int>(ipow(m, e)), Cyc(1)}});
    auto basis = nd.basis;
    auto label = [basis, D, l](int i) { return monomial_to_string(PbwMonomial{basis[i], IntVec(l, 0), IntVec(D, 0)}); };
    nd.algebra = CycAlgebra(dim, product, 0, dim - 1, gens, label);
    return nd;
}

RadicalReport check_radical(const WhittakerData& w, const NilpotentSubalgebraData& nd) {
    const auto& a = nd.algebra;
    int n = a.dim();
    RadicalReport rep;
    RowReducer<Cyc> j(n);
    std::vector<CycAlgebra::Coords> jb;
    for (int idx : nd.radical_basis) {
        jb.push_back({{idx, Cyc(1)}});
        j.add(a.dense(jb.back()));
    }
    rep.is_ideal = true;
    for (const auto& [name, g] : a.generators())
        for (const auto& x : jb)
            if (!j.contains(a.dense(a.multiply(g, x))) || !j.contains(a.dense(a.multiply(x, g)))) rep.is_ideal = false;
    std::vector<CycAlgebra::Coords> power = jb;
    rep.nilpotency_index = 1;
    while (!power.empty() && rep.nilpotency_index <= n) {
        RowReducer<Cyc> next(n);
        for (const auto& x : jb)
            for (const auto& p : power) next.add(a.dense(a.multiply(x, p)));
        power.clear();
        for (const auto& r : next.rows()) power.push_back(a.sparse(r));
        ++rep.nilpotency_index;
    }
    if (jb.empty()) rep.nilpotency_index = 1;
    rep.quotient_dim = n - j.rank();
    rep.quotient_commutative = true;
    rep.quotient_truncated = true;
    const auto& ctx = w.ctx;
    for (size_t x = 0; x < a.generators().size(); ++x) {
        if (ctx.gamma_of[x] < 0) continue;
        const auto& gx = a.generators()[x].second;
        for (size_t y = 0; y < a.generators().size(); ++y) {
            if (ctx.gamma_of[y] < 0) continue;
            const auto& gy = a.generators()[y].second;
            auto d = a.dense(a.multiply(gx, gy));
            auto e = a.dense(a.multiply(gy, gx));
            for (int i = 0; i < n; ++i) d[i] -= e[i];
            if (!j.contains(d)) rep.quotient_commutative = false;
        }
        CycAlgebra::Coords p{{a.unit(), Cyc(1)}};
        for (int r = 0; r < ctx.m; ++r) p = a.multiply(p, gx);
        auto d = a.dense(p);
        d[a.unit()] -= nd.dchar[ctx.gamma_of[x]];
        if (!j.contains(d)) rep.quotient_truncated = false;
    }
    return rep;
}

WhittakerCharacter validate_chi(const WhittakerData& w, const NilpotentSubalgebraData& nd, const std::vector<Cyc>& c) {
    const auto& ctx = w.ctx;
    if (static_cast<int>(c.size()) != ctx.l_prime) throw InvalidArgument("need one value c_i per gamma");
    for (int i = 0; i < ctx.l_prime; ++i) {
        if (c[i].is_zero()) throw InvalidArgument("c_" + std::to_string(i + 1) + " must be nonzero");
        if (!(c[i].pow(ctx.m) == nd.dchar[i]))
            throw InvalidArgument("c_" + std::to_string(i + 1) + "^m differs from eta(f_gamma^m) = " + nd.dchar[i].to_string());
    }
    WhittakerCharacter chi;
    chi.c = c;
    int k = static_cast<int>(ctx.m_plus.size());
    std::map<int, Cyc> by_position;
    for (int e = 0; e < k; ++e) {
        chi.values.push_back(ctx.gamma_of[e] >= 0 ? c[ctx.gamma_of[e]] : Cyc(0));
        by_position[ctx.m_plus[e]] = chi.values.back();
    }
    auto chi_of = [&](const IntVec& t) {
        Cyc v(1);
        for (int p = 0; p < static_cast<int>(t.size()); ++p) {
            if (!t[p]) continue;
            auto it = by_position.find(p);
            if (it == by_position.end()) throw Defect("relation leaves U(m-) at position " + std::to_string(p + 1));
            v *= it->second.pow(t[p]);
        }
        return v;
    };
    for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y) {
            int a = ctx.m_plus[x], b = ctx.m_plus[y];
            auto rel = w.psi->f_relation(a, b);
            Cyc residual = chi.values[x] * chi.values[y] - w.u.pbw->q_pow(rel.exponent) * chi.values[y] * chi.values[x];
            for (const auto& [t, coeff] : rel.rhs) residual -= coeff * chi_of(t);
            if (!residual.is_zero())
                throw Defect("chi does not vanish on the relation for positions " + std::to_string(a + 1) + ", " +
                             std::to_string(b + 1) + ": residual " + residual.to_string());
            if (ctx.gamma_of[x] >= 0 && ctx.gamma_of[y] >= 0) chi.gamma_pair_exponents.push_back(rel.exponent);
        }
    const auto& alg = nd.algebra;
    std::vector<Cyc> on_basis;
    for (const auto& t : nd.basis) on_basis.push_back(chi_of(t));
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
            Cyc v(0);
            for (const auto& [idx, coeff] : alg.basis_product(i, j)) v += coeff * on_basis[idx];
            if (!(v == on_basis[i] * on_basis[j]))
                throw Defect("chi is not multiplicative on " + alg.label(i) + " * " + alg.label(j));
        }
    return chi;
}

std::vector<std::string> chi_symbolic_residuals(const WhittakerContext& ctx, int max_pairs) {
    auto alg = std::make_shared<RootOfUnityAlgebra>(ctx.group, CyclotomicField{ctx.m});
    auto psi = Realization<CyclotomicField>::from_cayley(alg, ctx.data, true);
    std::vector<std::pair<int, int>> pairs;
    int k = static_cast<int>(ctx.m_plus.size());
    for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y) pairs.emplace_back(x, y);
    size_t stride = 1;
    if (max_pairs > 0 && pairs.size() > static_cast<size_t>(max_pairs))
        stride = (pairs.size() + max_pairs - 1) / max_pairs;
    std::vector<bool> is_gamma_pos(ctx.group->num_positive(), false);
    for (int e = 0; e < k; ++e)
        if (ctx.gamma_of[e] >= 0) is_gamma_pos[ctx.m_plus[e]] = true;
    std::vector<std::string> out;
    for (size_t n = 0; n < pairs.size(); n += stride) {
        auto [x, y] = pairs[n];
        int a = ctx.m_plus[x], b = ctx.m_plus[y];
        auto rel = psi.f_relation(a, b);
        std::string where = "positions " + std::to_string(a + 1) + ", " + std::to_string(b + 1);
        if (ctx.gamma_of[x] >= 0 && ctx.gamma_of[y] >= 0 && rel.exponent % ctx.m != 0)
            out.push_back(where + ": gamma pair exponent " + std::to_string(rel.exponent) + " is not 0 mod m");
        for (const auto& [t, coeff] : rel.rhs) {
            bool pure = true;
            for (int p = 0; p < static_cast<int>(t.size()); ++p)
                if (t[p] && !is_gamma_pos[p]) pure = false;
            if (pure) out.push_back(where + ": correction term in the gammas alone");
        }
    }
    return out;
}

std::optional<IntVec> twist_between(const WhittakerData& w, const NilpotentSubalgebraData& nd,
                                    const WhittakerCharacter& chi, const WhittakerCharacter& chi2) {
    const auto& ctx = w.ctx;
    int l = ctx.rs.rank(), m = ctx.m;
    std::vector<Root> weights;
    for (const auto& t : nd.basis) weights.push_back(weight_of_exponents(*ctx.group, t));
    IntVec h(l, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < ctx.l_prime && ok; ++i) {
            Root g = ctx.group->root_at(ctx.gamma_position(i));
            ok = Cyc::root_power(m, evaluate_h(g, h)) * chi.c[i] == chi2.c[i];
        }
        if (ok) {
            for (int i = 0; i < nd.dim() && ok; ++i)
                for (int j = 0; j < nd.dim() && ok; ++j)
                    for (const auto& [k, c] : nd.algebra.basis_product(i, j)) {
                        long v = evaluate_h(weights[i], h) + evaluate_h(weights[j], h) - evaluate_h(weights[k], h);
                        if (((v % m) + m) % m != 0) {
                            ok = false;
                            break;
                        }
                    }
            if (ok) return h;
        }
        int i = 0;
        while (i < l && h[i] == m - 1) h[i++] = 0;
        if (i == l) return std::nullopt;
        ++h[i];
    }
}

std::vector<CycMatrix> f_matrices(const WhittakerData& w, const CycModule& v) {
    std::vector<CycMatrix> out;
    for (const auto& f : w.f) out.push_back(act(w.u, v, f));
    return out;
}

WhittakerSpace whittaker_space(const WhittakerData& w, const CycModule& v, const WhittakerCharacter& chi) {
    WhittakerSpace ws;
    if (v.dim == 0) return ws;
    RowReducer<Cyc> eqs(v.dim);
    auto mats = f_matrices(w, v);
    for (size_t e = 0; e < mats.size(); ++e)
        for (int i = 0; i < v.dim; ++i) {
            std::vector<Cyc> row(v.dim);
            for (int j = 0; j < v.dim; ++j) row[j] = mats[e](i, j) - (i == j ? chi.values[e] : Cyc(0));
            eqs.add(row);
        }
    ws.basis = eqs.kernel();
    return ws;
}

bool check_engel(const WhittakerData& w, const CycModule& v, const WhittakerCharacter& chi) {
    return v.dim > 0 && whittaker_space(w, v, chi).dim() >= 1;
}

Cyc k_alpha_power(const QuantumGroup& g, const CentralCharacter& eta, const Root& alpha) {
    int l = g.rank();
    IntVec e(l, 0);
    for (int i = 0; i < l; ++i) {
        IntVec k = g.k_vector(i);
        for (int j = 0; j < l; ++j) e[j] += alpha[i] * k[j];
    }
    Cyc v(1);
    for (int j = 0; j < l; ++j) v *= int_pow(eta.values_l[j], e[j]);
    return v;
}

TorusReport check_torus_genericity(const WhittakerContext& ctx, const CentralCharacter& eta) {
    TorusReport rep;
    int m = ctx.m;
    for (size_t e = 0; e < ctx.m_plus.size(); ++e) {
        if (ctx.gamma_of[e] >= 0) continue;
        int pos = ctx.m_plus[e];
        Root alpha = ctx.group->root_at(pos);
        Cyc value = k_alpha_power(*ctx.group, eta, alpha);
        Cyc sq = value * value;
        TorusWitness wit{alpha, value, {}};
        int d = ctx.group->root_d(pos);
        for (int k = 1; k < m; ++k) {
            Cyc zeta = Cyc::root_power(m, 2L * d * (1 - k));
            if (zeta.pow(m) == sq) wit.k.push_back(k);
        }
        if (!wit.k.empty()) {
            rep.holds = false;
            rep.witnesses.push_back(std::move(wit));
        }
    }
    return rep;
}

bool FreenessVerdict::pass() const {
    if (dim_v == 0 || !divisibility || !rank_identity) return false;
    for (const auto& j : jordan)
        if (!j.all_blocks_size_m) return false;
    for (const auto& mu : multiplicities)
        if (!mu.equal) return false;
    return true;
}

FreenessVerdict verify_freeness(const WhittakerData& w, const CycModule& v, const WhittakerCharacter& chi) {
    const auto& ctx = w.ctx;
    int m = ctx.m;
    FreenessVerdict out;
    out.dim_v = v.dim;
    out.divisor = ipow(m, static_cast<int>(ctx.m_plus.size()));
    out.dim_v_chi = whittaker_space(w, v, chi).dim();
    out.divisibility = v.dim % out.divisor == 0;
    out.rank_identity = v.dim == out.divisor * out.dim_v_chi;
    auto mats = f_matrices(w, v);
    for (size_t e = 0; e < mats.size(); ++e) {
        Root beta = ctx.group->root_at(ctx.m_plus[e]);
        int i = ctx.gamma_of[e];
        if (i < 0) {
            JordanProfile jp{beta, {}, v.dim % m == 0};
            CycMatrix p = CycMatrix::identity(v.dim);
            for (int k = 1; k <= m; ++k) {
                p = p * mats[e];
                jp.ranks.push_back(rank(p));
                if (jp.ranks.back() != v.dim / m * (m - k)) jp.all_blocks_size_m = false;
            }
            out.jordan.push_back(std::move(jp));
        } else {
            MultiplicityProfile mp{beta, {}, true};
            int total = 0;
            for (int j = 0; j < m; ++j) {
                CycMatrix a = mats[e];
                Cyc lambda = chi.c[i] * Cyc::root_power(m, j);
                for (int r = 0; r < v.dim; ++r) a(r, r) -= lambda;
                mp.multiplicities.push_back(nullity(a));
                total += mp.multiplicities.back();
                if (mp.multiplicities.back() != mp.multiplicities.front()) mp.equal = false;
            }
            if (total != v.dim) mp.equal = false;
            out.multiplicities.push_back(std::move(mp));
        }
    }
    return out;
}

InducedModule build_Q_chi(const WhittakerData& w, const WhittakerCharacter& chi, int budget) {
    const auto& a = w.u.algebra;
    if (a.dim() > budget)
        throw BudgetExceeded("U_eta(g) of dimension " + std::to_string(a.dim()) + " exceeds the budget " +
                             std::to_string(budget));
    RowReducer<Cyc> ideal(a.dim());
    for (size_t e = 0; e < w.f.size(); ++e) {
        auto y = w.u.coords(w.f[e]);
        CycAlgebra::add_to(y, a.unit(), -chi.values[e]);
        CycMatrix r = a.right_matrix(y);
        for (int j = 0; j < a.dim(); ++j) ideal.add(column(r, j));
    }
    InducedModule out;
    out.q = quotient(a.regular_module(), ideal);
    std::vector<bool> is_piv(a.dim(), false);
    for (int p : ideal.pivots()) is_piv[p] = true;
    std::vector<Cyc> unit(a.dim(), Cyc(0));
    unit[a.unit()] = Cyc(1);
    auto r = ideal.reduce(unit);
    for (int j = 0; j < a.dim(); ++j)
        if (!is_piv[j]) out.generator.push_back(r[j]);
    return out;
}

QWAlgebra wq_algebra(const WhittakerData& w, const InducedModule& q) {
    QWAlgebra out;
    out.induced = q;
    out.w_basis = hom_space(q.q, q.q);
    out.dim_w = static_cast<int>(out.w_basis.size());
    out.d = ipow(w.ctx.m, static_cast<int>(w.ctx.m_plus.size()));
    const auto& a = w.u.algebra;
    RowReducer<Cyc> image(q.q.dim * q.q.dim);
    for (int i = 0; i < a.dim(); ++i) image.add(flatten(act(w.u, q.q, w.u.element({{i, Cyc(1)}}))));
    out.image_dim = image.rank();
    CycModule wmod{q.q.dim, {}, out.w_basis};
    for (int k = 0; k < out.dim_w; ++k) wmod.names.push_back("w" + std::to_string(k + 1));
    out.centralizer_dim = static_cast<int>(hom_space(wmod, wmod).size());
    out.mat_d_pattern = out.image_dim == a.dim() && a.dim() == out.d * out.d * out.dim_w &&
                        out.centralizer_dim == out.image_dim;
    return out;
}

bool SkryabinCheck::holds() const {
    return dim_hom == dim_v_chi && dim_tensor == dim_v && evaluation_rank == dim_v && whittaker_rank == dim_v_chi;
}

SkryabinCheck skryabin_roundtrip(const WhittakerData& w, const QWAlgebra& qw, const CycModule& v,
                                 const WhittakerCharacter& chi) {
    const CycModule& q = qw.induced.q;
    SkryabinCheck out;
    out.dim_v = v.dim;
    auto vchi = whittaker_space(w, v, chi);
    out.dim_v_chi = vchi.dim();
    RowReducer<Cyc> hom(v.dim * q.dim);
    for (const auto& x : hom_space(q, v)) hom.add(flatten(x));
    int h = hom.rank();
    out.dim_hom = h;
    std::vector<CycMatrix> phis;
    for (const auto& r : hom.rows()) phis.push_back(unflatten(r, v.dim, q.dim));

    int n = q.dim * h;
    RowReducer<Cyc> relations(n);
    for (const auto& wm : qw.w_basis)
        for (int b = 0; b < h; ++b) {
            auto comp = hom.coordinates(flatten(phis[b] * wm));
            for (int qi = 0; qi < q.dim; ++qi) {
                std::vector<Cyc> rel(n, Cyc(0));
                for (int i = 0; i < q.dim; ++i) rel[i * h + b] += wm(i, qi);
                for (int c = 0; c < h; ++c) rel[qi * h + c] -= comp[c];
                relations.add(rel);
            }
        }
    out.dim_tensor = n - relations.rank();

    CycMatrix ev(v.dim, n);
    for (int qi = 0; qi < q.dim; ++qi)
        for (int b = 0; b < h; ++b)
            for (int i = 0; i < v.dim; ++i) ev(i, qi * h + b) = phis[b](i, qi);
    out.evaluation_rank = rank(ev);

    RowReducer<Cyc> images(v.dim);
    for (const auto& phi : phis) images.add(phi.apply(qw.induced.generator));
    int image_rank = images.rank();
    for (const auto& x : vchi.basis) images.add(x);
    out.whittaker_rank = images.rank() == out.dim_v_chi ? image_rank : -1;
    return out;
}

}  // namespace uqs
