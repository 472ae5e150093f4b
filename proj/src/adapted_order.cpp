#include "uqs/adapted_order.hpp"

#include "uqs/coeffs/qpoly.hpp"
#include "uqs/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace uqs {

namespace {

QMatrix weyl_qmatrix(const WeylElement& s) {
    int l = s.rank();
    QMatrix m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m(i, j) = s.matrix()[i][j];
    return m;
}

QVec apply_q(const QMatrix& m, const QVec& v) { return m.apply(v); }

QVec axpy(const QVec& x, const Rational& a, const QVec& y) {
    QVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += a * y[i];
    return r;
}

bool is_zero_vec(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

int order_of(const WeylElement& s) {
    WeylElement p = s;
    int k = 1;
    while (!p.is_identity()) {
        p = p * s;
        ++k;
        if (k > 10000) throw Defect("Weyl element of unbounded order");
    }
    return k;
}

QMatrix poly_of_matrix(const QPoly& f, const QMatrix& s) {
    int l = s.rows();
    QMatrix acc(l, l);
    for (int k = f.degree(); k >= 0; --k) {
        acc = acc * s;
        for (int i = 0; i < l; ++i) acc(i, i) += f.coeff(k);
    }
    return acc;
}

// Basis of {v in span(basis) : (v, w) = 0 for all w in others}.
std::vector<QVec> orthogonal_complement_in(const RootSystem& rs, const std::vector<QVec>& basis,
                                           const std::vector<QVec>& others) {
    if (others.empty()) return basis;
    int nb = static_cast<int>(basis.size());
    QMatrix m(static_cast<int>(others.size()), nb);
    for (size_t r = 0; r < others.size(); ++r)
        for (int c = 0; c < nb; ++c) m(static_cast<int>(r), c) = form_q(rs, others[r], basis[c]);
    std::vector<QVec> out;
    for (const auto& coeffs : nullspace(m)) {
        QVec v(rs.rank(), 0);
        for (int c = 0; c < nb; ++c) v = axpy(v, coeffs[c], basis[c]);
        out.push_back(v);
    }
    return out;
}

QVec project(const RootSystem& rs, const std::vector<QVec>& basis, const QVec& x) {
    int n = static_cast<int>(basis.size());
    QMatrix g(n, n);
    QVec rhs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g(i, j) = form_q(rs, basis[i], basis[j]);
        rhs[i] = form_q(rs, x, basis[i]);
    }
    auto c = solve(g, rhs);
    if (!c) throw Defect("degenerate Gram matrix on an invariant block");
    QVec v(rs.rank(), 0);
    for (int i = 0; i < n; ++i) v = axpy(v, (*c)[i], basis[i]);
    return v;
}

std::vector<Root> all_roots(const RootSystem& rs) {
    std::vector<Root> out = rs.positive_roots();
    for (const auto& r : rs.positive_roots()) {
        Root m = r;
        for (auto& x : m) x = -x;
        out.push_back(m);
    }
    return out;
}

// Vector with (rho', alpha_i) = 1 for every simple root.
QVec regular_vector(const RootSystem& rs) {
    int l = rs.rank();
    QMatrix b(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) b(i, j) = rs.datum().b(i, j);
    auto v = solve(b, QVec(l, 1));
    return *v;
}

QVec reflect_q(const RootSystem& rs, int i, const QVec& v) {
    Rational c = form_q(rs, v, to_qvec(rs.simple_root(i))) / rs.datum().d[i];
    QVec r = v;
    r[i] -= c;
    return r;
}

}  // namespace

Rational form_q(const RootSystem& rs, const QVec& x, const QVec& y) {
    Rational v = 0;
    int l = rs.rank();
    for (int i = 0; i < l; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < l; ++j)
            if (y[j] != 0) v += x[i] * y[j] * rs.datum().b(i, j);
    }
    return v;
}

QVec to_qvec(const Root& r) { return QVec(r.begin(), r.end()); }

InvariantDecomposition invariant_decomposition(const RootSystem& rs, const WeylElement& s) {
    int l = rs.rank();
    QMatrix sm = weyl_qmatrix(s);
    int ord = order_of(s);
    InvariantDecomposition dec;
    for (int k = 1; k <= ord; ++k) {
        if (ord % k != 0) continue;
        auto ker = nullspace(poly_of_matrix(cyclotomic_polynomial(k), sm));
        if (k == 1) {
            dec.blocks.push_back({ker, 1, {}});
            continue;
        }
        int phi = euler_phi(k);
        if (phi > 2) {
            if (!ker.empty()) dec.blocks.push_back({ker, k, {}});
            continue;
        }
        std::vector<QVec> remaining = ker;
        std::vector<QVec> taken;
        while (!remaining.empty()) {
            std::vector<QVec> piece{remaining.front()};
            if (phi == 2) piece.push_back(apply_q(sm, remaining.front()));
            taken.insert(taken.end(), piece.begin(), piece.end());
            dec.blocks.push_back({piece, k, {}});
            remaining = orthogonal_complement_in(rs, ker, taken);
        }
    }

    auto roots = all_roots(rs);
    QVec rho = regular_vector(rs);
    for (auto& blk : dec.blocks) {
        if (blk.basis.empty()) {
            blk.height = QVec(l, 0);
            continue;
        }
        std::vector<Root> relevant;
        for (const auto& a : roots)
            for (const auto& v : blk.basis)
                if (form_q(rs, v, to_qvec(a)) != 0) {
                    relevant.push_back(a);
                    break;
                }
        QVec base = project(rs, blk.basis, rho);
        bool found = false;
        for (int trial = 0; trial < 1000 && !found; ++trial) {
            QVec h = base;
            if (trial > 0)
                for (size_t k = 0; k < blk.basis.size(); ++k)
                    h = axpy(h, Rational(static_cast<long>(k + 1), 7L * trial + static_cast<long>(k)), blk.basis[k]);
            if (is_zero_vec(h)) continue;
            if (std::all_of(relevant.begin(), relevant.end(),
                            [&](const Root& a) { return form_q(rs, h, to_qvec(a)) != 0; })) {
                blk.height = h;
                found = true;
            }
        }
        if (!found) throw Defect("no admissible height on an invariant block");
    }

    // Rescale heights so that each stratum dominates the partial sums of the earlier ones.
    int nb = static_cast<int>(dec.blocks.size());
    std::vector<std::vector<Root>> strata(nb);
    for (const auto& a : roots) strata[stratum_of(rs, dec, a)].push_back(a);
    std::vector<int> nonempty;
    for (int i = 0; i < nb; ++i)
        if (!strata[i].empty()) nonempty.push_back(i);
    for (size_t k = 1; k < nonempty.size(); ++k) {
        int ik = nonempty[k];
        Rational worst = 0, smallest = -1;
        for (const auto& a : strata[ik]) {
            QVec av = to_qvec(a);
            Rational hv = abs(form_q(rs, dec.blocks[ik].height, av));
            if (smallest < 0 || hv < smallest) smallest = hv;
            for (size_t lo = 0; lo < k; ++lo) {
                Rational part = 0;
                for (size_t j = lo; j < k; ++j) part += form_q(rs, dec.blocks[nonempty[j]].height, av);
                worst = std::max(worst, Rational(abs(part)));
            }
        }
        if (worst >= smallest) {
            Rational factor = worst / smallest;
            mpz_class scale = factor.get_num() / factor.get_den() + 1;
            for (auto& x : dec.blocks[ik].height) x *= Rational(scale);
        }
    }
    dec.hbar = QVec(l, 0);
    for (int i : nonempty) dec.hbar = axpy(dec.hbar, 1, dec.blocks[i].height);
    validate_decomposition(rs, s, dec);
    return dec;
}

int stratum_of(const RootSystem& rs, const InvariantDecomposition& dec, const Root& alpha) {
    QVec av = to_qvec(alpha);
    for (int i = static_cast<int>(dec.blocks.size()) - 1; i >= 0; --i)
        if (form_q(rs, dec.blocks[i].height, av) != 0) return i;
    throw Defect("root " + root_to_string(alpha) + " is killed by every height");
}

void validate_decomposition(const RootSystem& rs, const WeylElement& s, const InvariantDecomposition& dec) {
    QMatrix sm = weyl_qmatrix(s);
    int total = 0;
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        const auto& bi = dec.blocks[i];
        total += static_cast<int>(bi.basis.size());
        for (const auto& v : bi.basis) {
            auto sv = apply_q(sm, v);
            if (i == 0 && sv != v) throw Defect("fixed block is not fixed");
            auto img = project(rs, bi.basis, sv);
            if (img != sv) throw Defect("block is not s-invariant");
            for (size_t j = i + 1; j < dec.blocks.size(); ++j)
                for (const auto& w : dec.blocks[j].basis)
                    if (form_q(rs, v, w) != 0) throw Defect("blocks are not orthogonal");
        }
    }
    if (total != rs.rank()) throw Defect("blocks do not span h");
    if (dec.blocks.empty() || nullspace(sm - QMatrix::identity(rs.rank())).size() != dec.blocks[0].basis.size())
        throw Defect("first block is not the full fixed space");
    auto roots = all_roots(rs);
    for (const auto& a : roots)
        if (form_q(rs, dec.hbar, to_qvec(a)) == 0) throw Defect("hbar vanishes on " + root_to_string(a));
    // Separation condition on every nonempty stratum.
    int nb = static_cast<int>(dec.blocks.size());
    std::vector<std::vector<Root>> strata(nb);
    for (const auto& a : roots) strata[stratum_of(rs, dec, a)].push_back(a);
    std::vector<int> nonempty;
    for (int i = 0; i < nb; ++i)
        if (!strata[i].empty()) nonempty.push_back(i);
    for (size_t k = 0; k < nonempty.size(); ++k)
        for (const auto& a : strata[nonempty[k]]) {
            QVec av = to_qvec(a);
            Rational hk = abs(form_q(rs, dec.blocks[nonempty[k]].height, av));
            for (size_t lo = 0; lo < k; ++lo) {
                Rational part = 0;
                for (size_t j = lo; j < k; ++j) part += form_q(rs, dec.blocks[nonempty[j]].height, av);
                if (!(hk > abs(part))) throw Defect("separation condition fails on " + root_to_string(a));
            }
        }
}

AdaptedSystem positive_system(const RootSystem& rs, const WeylElement& s) {
    int l = rs.rank();
    AdaptedSystem out;
    out.original = s;
    out.decomposition = invariant_decomposition(rs, s);
    for (const auto& a : all_roots(rs))
        if (form_q(rs, out.decomposition.hbar, to_qvec(a)) > 0) out.positive_roots_original.push_back(a);

    QVec h = out.decomposition.hbar;
    IntVec word;  // w = s_{word.back()} ... s_{word.front()}
    for (int guard = 0; guard < 10000; ++guard) {
        int bad = -1;
        for (int i = 0; i < l && bad < 0; ++i)
            if (form_q(rs, h, to_qvec(rs.simple_root(i))) < 0) bad = i;
        if (bad < 0) break;
        h = reflect_q(rs, bad, h);
        word.push_back(bad);
    }
    IntVec w_word(word.rbegin(), word.rend());
    out.conjugator = WeylElement::from_word(rs.datum(), w_word);
    WeylElement winv = rs.inverse(out.conjugator);
    out.element = out.conjugator * s * winv;

    QMatrix wm = weyl_qmatrix(out.conjugator);
    for (auto& blk : out.decomposition.blocks) {
        for (auto& v : blk.basis) v = apply_q(wm, v);
        blk.height = apply_q(wm, blk.height);
    }
    out.decomposition.hbar = apply_q(wm, out.decomposition.hbar);
    for (const auto& a : rs.positive_roots())
        if (form_q(rs, out.decomposition.hbar, to_qvec(a)) <= 0) throw Defect("conjugated hbar is not dominant");
    return out;
}

int AdaptedOrdering::position_of(const RootSystem& rs, const Root& r) const {
    int idx = rs.index_of(r);
    for (int p = 0; p < ordering.size(); ++p)
        if (ordering.order[p] == idx) return p;
    return -1;
}

std::vector<Root> AdaptedOrdering::m_plus_roots(const RootSystem& rs) const {
    std::vector<Root> out;
    for (int p = seg_m_plus.begin; p < seg_m_plus.end; ++p) out.push_back(root_at(rs, p));
    return out;
}

namespace {

struct OrderingConstraints {
    int D = 0;
    std::vector<char> in_s1, in_s2, fixed, anti1, anti2;  // per positive root index
    IntVec group;                                           // 1 or 2 for gammas, 0 otherwise
    int n = 0, lp = 0, len1 = 0, len2 = 0, d0 = 0, p = 0;
    int block2_begin() const { return D - d0 - len2; }
};

OrderingConstraints make_constraints(const RootSystem& rs, const CarterDecomposition& cd) {
    OrderingConstraints c;
    c.D = rs.num_positive();
    auto s1 = cd.involution1(rs), s2 = cd.involution2(rs);
    for (auto* v : {&c.in_s1, &c.in_s2, &c.fixed, &c.anti1, &c.anti2}) v->assign(c.D, 0);
    c.group.assign(c.D, 0);
    for (int k = 0; k < c.D; ++k) {
        const auto& a = rs.positive_root(k);
        Root neg = a;
        for (auto& x : neg) x = -x;
        c.in_s1[k] = !RootSystem::is_positive(s1.apply(a));
        c.in_s2[k] = !RootSystem::is_positive(s2.apply(a));
        c.fixed[k] = cd.s.apply(a) == a;
        c.anti1[k] = s1.apply(a) == neg;
        c.anti2[k] = s2.apply(a) == neg;
        c.len1 += c.in_s1[k];
        c.len2 += c.in_s2[k];
        c.d0 += c.fixed[k];
        c.p += c.anti1[k];
    }
    for (const auto& g : cd.gammas1) c.group[rs.index_of(g)] = 1;
    for (const auto& g : cd.gammas2) c.group[rs.index_of(g)] = 2;
    c.n = static_cast<int>(cd.gammas1.size());
    c.lp = cd.l_prime;
    return c;
}

// Gammas of each involution relabeled by their positions in the ordering.
CarterDecomposition relabel(const RootSystem& rs, const CarterDecomposition& cd, const IntVec& order) {
    auto pos = [&](const Root& r) {
        return std::find(order.begin(), order.end(), rs.index_of(r)) - order.begin();
    };
    CarterDecomposition out = cd;
    auto by_pos = [&](const Root& a, const Root& b) { return pos(a) < pos(b); };
    std::sort(out.gammas1.begin(), out.gammas1.end(), by_pos);
    std::sort(out.gammas2.begin(), out.gammas2.end(), by_pos);
    return out;
}

SegmentRange m_plus_segment(const RootSystem& rs, const OrderingConstraints& c, const CarterDecomposition& cd,
                            const IntVec& order) {
    if (c.lp == 0) return {0, 0};
    auto pos = [&](const Root& r) {
        return static_cast<int>(std::find(order.begin(), order.end(), rs.index_of(r)) - order.begin());
    };
    int begin = pos(cd.gammas1.front());
    int end = c.lp > c.n ? pos(cd.gammas2.back()) + 1 : c.block2_begin();
    return {begin, end};
}

std::string non_representable_violation(const RootSystem& rs, const CarterDecomposition& cd,
                                        const NormalOrdering& ord, SegmentRange seg) {
    auto gs = cd.gammas();
    int lp = cd.l_prime;
    int l = rs.rank();
    if (lp == 0) return {};
    QMatrix g(l, lp);
    for (int k = 0; k < lp; ++k)
        for (int a = 0; a < l; ++a) g(a, k) = gs[k][a];
    IntVec gpos(lp);
    for (int k = 0; k < lp; ++k) {
        int idx = rs.index_of(gs[k]);
        gpos[k] = static_cast<int>(std::find(ord.order.begin(), ord.order.end(), idx) - ord.order.begin());
    }
    for (int x = seg.begin; x < seg.end; ++x)
        for (int y = x + 1; y < seg.end; ++y) {
            const auto& a = rs.positive_root(ord.order[x]);
            const auto& b = rs.positive_root(ord.order[y]);
            QVec sum(l);
            for (int i = 0; i < l; ++i) sum[i] = a[i] + b[i];
            auto c = solve(g, sum);
            if (!c) continue;
            bool representable = true;
            for (int k = 0; k < lp && representable; ++k) {
                const Rational& ck = (*c)[k];
                if (ck == 0) continue;
                if (ck < 0 || ck.get_den() != 1 || gpos[k] <= x || gpos[k] >= y) representable = false;
            }
            if (representable)
                return "sum of " + root_to_string(a) + " and " + root_to_string(b) +
                       " is a combination of intermediate gammas";
        }
    return {};
}

std::optional<AdaptedOrdering> search_ordering(const RootSystem& rs, const CarterDecomposition& cd,
                                               const AdaptedSystem& sys, long& nodes, long max_nodes) {
    auto c = make_constraints(rs, cd);
    int D = c.D, l = rs.rank();
    if (c.len1 + c.len2 + c.d0 > D || (c.p - c.n) % 2 != 0) return std::nullopt;
    int before_gamma1 = (c.p - c.n) / 2;

    AdaptedOrdering ao;
    ao.carter = cd;
    ao.system = sys;
    ao.length_s = rs.length(cd.s);
    ao.d0 = c.d0;
    int target_len = expected_m_plus_size(rs, ao);
    int b2 = c.block2_begin();

    IntVec order;
    bool done = false;
    // Anti-invariant run states: 0 = not started, 1 = running, 2 = closed.
    std::function<void(const WeylElement&, int, int, int, int)> dfs = [&](const WeylElement& w, int placed1,
                                                                          int run1, int run2, int anti_before) {
        if (++nodes > max_nodes) throw BudgetExceeded("ordering search exceeded its node budget");
        int pos = static_cast<int>(order.size());
        if (pos == D) {
            NormalOrdering ord;
            ord.order = order;
            auto lab = relabel(rs, cd, order);
            SegmentRange seg = m_plus_segment(rs, c, lab, order);
            if (seg.size() != target_len) return;
            if (!non_representable_violation(rs, lab, ord, seg).empty()) return;
            ao.ordering = ord;
            ao.carter = lab;
            ao.seg_m_plus = seg;
            done = true;
            return;
        }
        bool in_b1 = pos < c.len1;
        bool in_b2 = pos >= b2 && pos < D - c.d0;
        bool in_z = pos >= D - c.d0;
        for (int i = 0; i < l && !done; ++i) {
            Root beta = w.apply(rs.simple_root(i));
            if (!RootSystem::is_positive(beta)) continue;
            int k = rs.index_of(beta);
            if (in_b1 != static_cast<bool>(c.in_s1[k])) continue;
            if (in_b2 != static_cast<bool>(c.in_s2[k] && !c.in_s1[k])) continue;
            if (in_z != static_cast<bool>(c.fixed[k])) continue;
            int grp = c.group[k];
            if ((grp == 1 && !in_b1) || (grp == 2 && !in_b2)) continue;
            int nrun1 = run1, nrun2 = run2, nbefore = anti_before, nplaced1 = placed1;
            if (c.anti1[k]) {
                if (run1 == 2 || placed1 == c.n) continue;
                if (grp == 1) {
                    if (placed1 == 0 && anti_before != before_gamma1) continue;
                    ++nplaced1;
                } else if (placed1 == 0) {
                    if (anti_before >= before_gamma1) continue;
                    ++nbefore;
                }
                nrun1 = 1;
            } else if (run1 == 1) {
                nrun1 = 2;
            }
            if (c.anti2[k] && in_b2) {
                if (run2 == 2) continue;
                if (run2 == 0 && c.lp > c.n && grp != 2) continue;
                nrun2 = 1;
            } else if (run2 == 1) {
                nrun2 = 2;
            }
            order.push_back(k);
            dfs(w * WeylElement::simple_reflection(rs.datum(), i), nplaced1, nrun1, nrun2, nbefore);
            if (done) return;
            order.pop_back();
        }
    };
    dfs(WeylElement::identity(l), 0, 0, 0, 0);
    if (!done) return std::nullopt;

    ao.ordering.source_word = word_from_ordering(rs, ao.ordering.order);
    ao.seg_zero = {D - c.d0, D};
    ao.strata.resize(D);
    for (int p = 0; p < D; ++p) ao.strata[p] = stratum_of(rs, sys.decomposition, ao.root_at(rs, p));
    std::string err = validate_ordering(rs, ao);
    if (!err.empty()) throw Defect("constructed ordering fails validation: " + err);
    return ao;
}

}  // namespace

int expected_m_plus_size(const RootSystem& rs, const AdaptedOrdering& ao) {
    int D = rs.num_positive();
    int diff = ao.length_s - ao.carter.l_prime;
    if (diff % 2 != 0) throw Defect("l(s) - l' is odd");
    return D - (diff / 2 + ao.d0);
}

AdaptedOrdering adapted_ordering(const RootSystem& rs, const WeylElement& s, OrderingSearchBudget budget) {
    AdaptedSystem sys = positive_system(rs, s);
    long nodes = 0;
    for (const auto& cd : carter_decompositions(rs, sys.element)) {
        validate_decomposition(rs, cd);
        if (auto ao = search_ordering(rs, cd, sys, nodes, budget.max_nodes)) return *ao;
    }
    throw Defect("no decomposition of " + word_to_string(rs.reduced_word(sys.element)) +
                 " admits an ordering with the required segment structure");
}

AdaptedOrdering adapted_ordering(const RootSystem& rs, const CarterDecomposition& cd, const AdaptedSystem& sys,
                                 OrderingSearchBudget budget) {
    validate_decomposition(rs, cd);
    long nodes = 0;
    if (auto ao = search_ordering(rs, cd, sys, nodes, budget.max_nodes)) return *ao;
    throw Defect("no ordering with the required segment structure exists for this decomposition");
}

std::string validate_ordering(const RootSystem& rs, const AdaptedOrdering& ao) {
    int D = rs.num_positive();
    const auto& cd = ao.carter;
    if (ao.ordering.size() != D) return "ordering has the wrong length";
    if (!is_normal(rs, ao.ordering.order)) return "ordering is not normal";
    auto c = make_constraints(rs, cd);
    const auto& ord = ao.ordering.order;
    for (int p = 0; p < D; ++p) {
        int k = ord[p];
        if ((p < c.len1) != static_cast<bool>(c.in_s1[k]))
            return "initial segment differs from the inversion set of s^1";
        if ((p >= c.block2_begin() && p < D - c.d0) != static_cast<bool>(c.in_s2[k]))
            return "segment before the fixed roots differs from the inversion set of s^2";
        if ((p >= D - c.d0) != static_cast<bool>(c.fixed[k])) return "final segment differs from the fixed roots";
    }
    IntVec gpos;
    for (const auto& g : cd.gammas()) gpos.push_back(ao.position_of(rs, g));
    for (size_t i = 1; i < gpos.size(); ++i)
        if (gpos[i] <= gpos[i - 1]) return "gammas are not in increasing order";
    auto run = [&](const std::vector<char>& mask) {
        int first = -1, last = -1, count = 0;
        for (int p = 0; p < D; ++p)
            if (mask[ord[p]]) {
                if (first < 0) first = p;
                last = p;
                ++count;
            }
        return std::array<int, 3>{first, last, count};
    };
    auto r1 = run(c.anti1), r2 = run(c.anti2);
    if ((r1[2] > 0 && r1[1] - r1[0] + 1 != r1[2]) || (r2[2] > 0 && r2[1] - r2[0] + 1 != r2[2]))
        return "anti-invariant roots of an involution are not contiguous";
    if (c.n > 0) {
        if (gpos[0] - r1[0] != (c.p - c.n) / 2) return "wrong number of anti-invariant roots before gamma_1";
        if (gpos[c.n - 1] != r1[1]) return "gamma_n does not close the anti-invariant run of s^1";
    }
    if (c.lp > c.n && gpos[c.n] != r2[0]) return "gamma_{n+1} does not open the anti-invariant run of s^2";
    if (ao.seg_zero.begin != D - c.d0 || ao.seg_zero.end != D) return "fixed segment is misplaced";
    if (ao.seg_m_plus.size() != expected_m_plus_size(rs, ao)) return "segment length differs from the length formula";
    SegmentRange expect = m_plus_segment(rs, c, cd, ord);
    if (ao.seg_m_plus.begin != expect.begin || ao.seg_m_plus.end != expect.end)
        return "segment does not run from gamma_1 to its prescribed end";
    auto err = non_representable_violation(rs, cd, ao.ordering, ao.seg_m_plus);
    if (!err.empty()) return err;
    return {};
}

SliceDimensions slice_dimensions(const RootSystem& rs, const AdaptedOrdering& ao) {
    SliceDimensions sd;
    sd.dim_m_minus = ao.seg_m_plus.size();
    sd.dim_G = 2 * rs.num_positive() + rs.rank();
    sd.dim_slice = sd.dim_G - 2 * sd.dim_m_minus;
    sd.codim_slice = 2 * sd.dim_m_minus;
    sd.d0 = ao.d0;
    sd.length_s = ao.length_s;
    return sd;
}

Rational y_functional(const CartanDatum& cd, int j, const Root& beta) {
    int l = cd.rank;
    QMatrix a(l, l);
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y) a(x, y) = cd.a[x][y];
    auto ainv = inverse(a);
    if (!ainv) throw InvalidArgument("singular Cartan matrix");
    Rational v = 0;
    for (int k = 0; k < l; ++k) {
        Rational hk = 0;  // H_k(beta) = <alpha_k^vee, beta>
        for (int b = 0; b < l; ++b) hk += cd.a[k][b] * beta[b];
        v += Rational(cd.d[j]) * (*ainv)(j, k) * hk;
    }
    return v;
}

namespace {

template <class Pred>
YConditionReport scan_tuples(const RootSystem& rs, const AdaptedOrdering& ao, int m, Pred tuple_ok) {
    YConditionReport rep;
    auto gs = ao.carter.gammas();
    int lp = static_cast<int>(gs.size());
    if (lp == 0) return rep;
    IntVec t(lp, 0);
    while (true) {
        int k = 0;
        while (k < lp && t[k] == m - 1) t[k++] = 0;
        if (k == lp) break;
        ++t[k];
        Root beta(rs.rank(), 0);
        for (int i = 0; i < lp; ++i)
            for (int a = 0; a < rs.rank(); ++a) beta[a] += t[i] * gs[i][a];
        int j = tuple_ok(beta);
        if (j >= 0) {
            rep.holds = false;
            rep.witness_tuple = t;
            rep.witness_j = j;
            return rep;
        }
    }
    return rep;
}

bool in_mz(const Rational& v, int m) { return v.get_den() == 1 && v.get_num() % m == 0; }

}  // namespace

YConditionReport check_Y_condition(const RootSystem& rs, const AdaptedOrdering& ao, int m) {
    return scan_tuples(rs, ao, m, [&](const Root& beta) {
        for (int j = 0; j < rs.rank(); ++j)
            if (in_mz(y_functional(rs.datum(), j, beta), m)) return j;
        return -1;
    });
}

YConditionReport check_Y_weights_separated(const RootSystem& rs, const AdaptedOrdering& ao, int m) {
    return scan_tuples(rs, ao, m, [&](const Root& beta) {
        for (int j = 0; j < rs.rank(); ++j)
            if (!in_mz(y_functional(rs.datum(), j, beta), m)) return -1;
        return 0;
    });
}

bool gammas_simple_or_empty(const RootSystem& rs, const CarterDecomposition& cd) {
    auto all_simple = [&](const std::vector<Root>& v) {
        return std::all_of(v.begin(), v.end(), [&](const Root& r) { return rs.simple_index(r) >= 0; });
    };
    return cd.gammas1.empty() || cd.gammas2.empty() || all_simple(cd.gammas1) || all_simple(cd.gammas2);
}

}  // namespace uqs
