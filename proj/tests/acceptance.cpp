// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include "uqs/whittaker.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace uqs;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

RootSystem system_of(const std::string& type) { return RootSystem(CartanDatum::from_type(type)); }

std::string label(const RootSystem& rs, const WeylElement& s) {
    return rs.datum().name() + " " + word_to_string(rs.reduced_word(s));
}

std::vector<WeylElement> class_representatives(const RootSystem& rs) {
    auto all = rs.all_elements();
    std::vector<WeylElement> reps;
    std::set<WeylElement> seen;
    for (const auto& x : all) {
        if (seen.count(x)) continue;
        reps.push_back(x);
        for (const auto& g : all) seen.insert(g * x * rs.inverse(g));
    }
    return reps;
}

int slice_dimension(const RootSystem& rs, const AdaptedOrdering& ao) {
    const WeylElement& s = ao.system.element;
    int fixed = 0;
    for (const auto& r : rs.positive_roots()) fixed += s.apply(r) == r;
    return rs.rank() - moved_rank(rs, s) + 2 * fixed + rs.length(s);
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Outcome criterion_cayley_closed_form() {
    Outcome out;
    int count = 0;
    for (const char* type : {"A1", "A2", "B2", "G2", "A3", "B3"}) {
        RootSystem rs = system_of(type);
        for (const auto& s : rs.all_elements()) {
            auto cd = carter_decompose(rs, s);
            if (cd.l_prime == 0) continue;
            QMatrix lhs = cayley_matrix(rs, cd), rhs = cayley_closed_form(rs, cd);
            for (int i = 0; i < lhs.rows(); ++i)
                for (int j = 0; j < lhs.cols(); ++j)
                    out.require(lhs(i, j) == rhs(i, j), label(rs, s) + " entry " + std::to_string(i + 1) + "," + std::to_string(j + 1));
            ++count;
        }
    }
    if (out.ok) out.detail = std::to_string(count) + " elements with l' > 0";
    return out;
}

Outcome criterion_segment_length() {
    Outcome out;
    int count = 0;
    for (const char* type : {"A1", "A2", "B2", "G2", "A3"}) {
        RootSystem rs = system_of(type);
        int dim_g = 2 * rs.num_positive() + rs.rank();
        for (const auto& s : rs.all_elements()) {
            AdaptedOrdering ao = adapted_ordering(rs, s);
            int size = ao.seg_m_plus.size();
            out.require(size == expected_m_plus_size(rs, ao), label(rs, s) + ": |Delta_m+| differs from D - ((l(s) - l')/2 + D0)");
            out.require(2 * size + slice_dimension(rs, ao) == dim_g, label(rs, s) + ": 2 dim m- + dim Sigma != dim G");
            ++count;
        }
    }
    if (out.ok) out.detail = std::to_string(count) + " elements";
    return out;
}

Outcome criterion_character_well_defined() {
    Outcome out;
    int checked = 0, excluded = 0;
    for (const char* type : {"A1", "A2", "B2", "G2", "A3"}) {
        RootSystem rs = system_of(type);
        for (const auto& s : class_representatives(rs)) {
            AdaptedOrdering ao = adapted_ordering(rs, s);
            for (int m : {3, 5}) {
                std::optional<WhittakerContext> ctx;
                try {
                    ctx.emplace(whittaker_context(rs, ao, m));
                } catch (const InvalidArgument&) {
                    ++excluded;  // m not admissible or n d = 1 mod m unsolvable
                    continue;
                }
                auto res = chi_symbolic_residuals(*ctx, rs.rank() > 2 ? 40 : -1);
                out.require(res.empty(), label(rs, s) + " m=" + std::to_string(m) + ": " + (res.empty() ? "" : res.front()));
                ++checked;
            }
        }
    }
    if (out.ok) out.detail = std::to_string(checked) + " (class, m) pairs; " + std::to_string(excluded) + " outside the hypotheses";
    return out;
}

Outcome criterion_realization_relations() {
    Outcome out;
    int count = 0;
    for (const char* type : {"A1", "A2", "B2"}) {
        RootSystem rs = system_of(type);
        for (const auto& s : rs.all_elements()) {
            AdaptedOrdering ao = adapted_ordering(rs, s);
            auto group = std::make_shared<QuantumGroup>(rs, ao.ordering);
            for (int m : {3, 5}) {
                auto alg = std::make_shared<RootOfUnityAlgebra>(group, CyclotomicField{m});
                CayleyData data = compute_arithmetic(rs, ao.carter, m);
                for (bool inverse : {false, true}) {
                    try {
                        Realization<CyclotomicField>::from_cayley(alg, data, inverse).verify_relations();
                    } catch (const Defect& e) {
                        out.require(false, label(rs, s) + " m=" + std::to_string(m) + ": " + e.what());
                    }
                    ++count;
                }
            }
        }
    }
    if (out.ok) out.detail = std::to_string(count) + " realizations";
    return out;
}

CentralCharacter generic_eta(const RootSystem& rs, int m, long l) {
    CentralCharacter eta = CentralCharacter::restricted(rs, m);
    for (auto& [r, v] : eta.values_x_minus) v = Cyc(1);
    eta.values_l.assign(rs.rank(), Cyc(l));
    return eta;
}

std::shared_ptr<QuantumGroup> standard_group(const RootSystem& rs) {
    return std::make_shared<QuantumGroup>(rs, ordering_from_word(rs, rs.reduced_word(rs.longest_element())));
}

Outcome criterion_pbw_centrality() {
    Outcome out;
    RootSystem a1 = system_of("A1");
    UEta u = build_U_eta(standard_group(a1), generic_eta(a1, 3, 8));
    out.require(u.algebra.dim() == 27 && u.expected_dim() == 27, "dim U_eta(sl2) != 27");
    for (const char* type : {"A1", "A2"}) {
        try {
            central_elements(standard_group(system_of(type)), 3, true);
        } catch (const Defect& e) {
            out.require(false, std::string(type) + ": " + e.what());
        }
    }
    if (out.ok) out.detail = "dim 27; x^+-, l central in A1, A2";
    return out;
}

Outcome criterion_frobenius() {
    Outcome out;
    RootSystem a1 = system_of("A1");
    for (const auto& eta : {generic_eta(a1, 3, 8), CentralCharacter::restricted(a1, 3)}) {
        UEta u = build_U_eta(standard_group(a1), eta);
        out.require(frobenius_form(u.algebra).rank == 27, "Gram rank of U_eta(sl2) != 27");
    }
    for (auto [type, word] : {std::pair<const char*, const char*>{"A1", "s1"}, {"A2", "s1 s2"}}) {
        RootSystem rs = system_of(type);
        auto ctx = whittaker_context(rs, adapted_ordering(rs, rs.parse_element(word)), 3);
        auto w = whittaker_data(ctx, slice_character(ctx, std::vector<Cyc>(ctx.l_prime, Cyc(2)), std::vector<Cyc>(rs.rank(), Cyc(1))));
        auto nd = build_m_minus(w);
        long expected = ipow(3, static_cast<int>(ctx.m_plus.size()));
        out.require(frobenius_form(nd.algebra).rank == expected, std::string(type) + ": Gram rank of U_eta(m-) != m^|Delta_m+|");
    }
    if (out.ok) out.detail = "ranks 27, 27, 3, 27";
    return out;
}

struct A1Setup {
    WhittakerContext ctx;
    WhittakerData w;
    NilpotentSubalgebraData nd;
    WhittakerCharacter chi;
};

A1Setup a1_setup(int m, long l) {
    RootSystem rs = system_of("A1");
    auto ctx = whittaker_context(rs, adapted_ordering(rs, rs.parse_element("s1")), m);
    auto w = whittaker_data(ctx, slice_character(ctx, {Cyc(1)}, {Cyc(l)}));
    auto nd = build_m_minus(w);
    auto chi = validate_chi(w, nd, {Cyc(1)});
    return {ctx, w, nd, chi};
}

Outcome criterion_dkp_divisor() {
    Outcome out;
    std::ostringstream info;
    for (int m : {3, 5}) {
        auto s = a1_setup(m, m == 3 ? 8 : 32);
        out.require(check_torus_genericity(s.ctx, s.w.eta()).holds, "torus genericity fails");
        auto simples = simple_modules(s.w.u.algebra, m);
        info << "m=" << m << ": " << simples.size() << " simples of dim";
        for (const auto& v : simples) {
            auto verdict = verify_freeness(s.w, v, s.chi);
            info << " " << v.dim;
            out.require(v.dim % m == 0, "dimension not divisible by m");
            out.require(v.dim == m * verdict.dim_v_chi, "dim V != m dim V_chi");
            out.require(verdict.pass(), "freeness verdict fails");
        }
        info << "; ";
    }
    if (out.ok) out.detail = info.str();
    return out;
}

Outcome criterion_q_w_algebra() {
    Outcome out;
    auto s = a1_setup(3, 8);
    auto q = build_Q_chi(s.w, s.chi);
    out.require(q.q.dim == 9, "dim Q_chi != 9");
    auto qw = wq_algebra(s.w, q);
    int sigma = slice_dimension(s.ctx.rs, s.ctx.ao);
    out.require(qw.dim_w == 3 && qw.dim_w == ipow(3, sigma), "dim W != m^{dim Sigma}");
    out.require(s.w.u.algebra.dim() == q.q.dim * qw.dim_w, "27 != 9 * 3");
    out.require(qw.d == 3 && qw.mat_d_pattern, "Mat_d pattern fails");
    long sum_squares = 0;
    for (const auto& v : simple_modules(s.w.u.algebra, 3)) {
        auto sk = skryabin_roundtrip(s.w, qw, v, s.chi);
        out.require(sk.holds(), "Skryabin round trip fails on a simple of dim " + std::to_string(v.dim));
        sum_squares += static_cast<long>(sk.dim_hom) * sk.dim_hom;
    }
    // Every simple W-module arises as Hom(Q_chi, V): the squares exhaust dim W.
    out.require(sum_squares == qw.dim_w, "simple W-modules not exhausted");
    if (out.ok) out.detail = "dim Q 9, dim W 3, d 3, round trips on all simples";
    return out;
}

Outcome criterion_engel() {
    Outcome out;
    int count = 0;
    std::mt19937 rng(1);
    auto check_all = [&](const WhittakerData& w, const WhittakerCharacter& chi, std::vector<CycModule> mods) {
        std::uniform_int_distribution<size_t> pick(0, mods.size() - 1);
        for (int k = 0; k < 3; ++k) mods.push_back(direct_sum(mods[pick(rng)], mods[pick(rng)]));
        for (const auto& v : mods) {
            out.require(check_engel(w, v, chi), "module of dim " + std::to_string(v.dim) + " has no Whittaker vector");
            ++count;
        }
    };
    {
        auto s = a1_setup(3, 8);
        std::vector<CycModule> mods = simple_modules(s.w.u.algebra, 3);
        for (const auto& lambda : mth_roots(Cyc(8), 3)) mods.push_back(baby_verma(s.w.u, {lambda}));
        check_all(s.w, s.chi, mods);
    }
    {
        RootSystem rs = system_of("A2");
        auto ctx = whittaker_context(rs, adapted_ordering(rs, rs.parse_element("s1 s2")), 3);
        auto w = whittaker_data(ctx, slice_character(ctx, {Cyc(1), Cyc(1)}, {Cyc(8), Cyc(8)}));
        auto nd = build_m_minus(w);
        auto chi = validate_chi(w, nd, {Cyc(1), Cyc(1)});
        out.require(check_torus_genericity(ctx, w.eta()).holds, "A2 torus genericity fails");
        std::vector<CycModule> mods;
        for (const auto& l1 : mth_roots(Cyc(8), 3)) {
            CycModule z = baby_verma(w.u, {l1, Cyc(2)});
            mods.push_back(baby_verma_head(z));
            mods.push_back(z);
        }
        check_all(w, chi, mods);
    }
    if (out.ok) out.detail = std::to_string(count) + " modules";
    return out;
}

Outcome criterion_negative_controls() {
    Outcome out;
    RootSystem a1 = system_of("A1");
    auto ctx = whittaker_context(a1, adapted_ordering(a1, a1.parse_element("s1")), 3);
    bool rejected = false;
    try {
        build_m_minus(whittaker_data(ctx, slice_character(ctx, {Cyc(0)}, {Cyc(8)})));
    } catch (const PreconditionRejected&) {
        rejected = true;
    }
    out.require(rejected, "off-slice eta was not rejected");

    RootSystem a2 = system_of("A2");
    auto ctx2 = whittaker_context(a2, adapted_ordering(a2, a2.parse_element("s1 s2")), 3);
    Root alpha;
    for (size_t k = 0; k < ctx2.m_plus.size(); ++k)
        if (ctx2.gamma_of[k] < 0) alpha = ctx2.group->root_at(ctx2.m_plus[k]);
    // eta(K_alpha^m) = l_1^{e_1} l_2^{e_2}; l = (8^{e_2}, 8^{-e_1}) makes the product 1.
    IntVec e(2, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e[j] += alpha[i] * ctx2.group->k_vector(i)[j];
    auto p8 = [](int k) { return k >= 0 ? Cyc(ipow(8, k)) : Cyc(1) / Cyc(ipow(8, -k)); };
    auto bad = slice_character(ctx2, {Cyc(1), Cyc(1)}, {p8(e[1]), p8(-e[0])});
    auto rep = check_torus_genericity(ctx2, bad);
    out.require(!rep.holds && !rep.witnesses.empty(), "adversarial eta passed the torus check");
    auto good = slice_character(ctx2, {Cyc(1), Cyc(1)}, {Cyc(8), Cyc(8)});
    out.require(check_torus_genericity(ctx2, good).holds, "generic eta failed the torus check");
    if (out.ok) out.detail = "off-slice rejected; torus witness at " + root_to_string(rep.witnesses[0].alpha);
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        int limit_seconds;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {"Cayley closed form", 10, criterion_cayley_closed_form},
        {"segment length", 10, criterion_segment_length},
        {"character well-definedness", 120, criterion_character_well_defined},
        {"realization relations", 120, criterion_realization_relations},
        {"PBW dimension and centrality", 60, criterion_pbw_centrality},
        {"Frobenius form", 60, criterion_frobenius},
        {"divisibility and freeness (A1)", 300, criterion_dkp_divisor},
        {"q-W algebra (A1, m = 3)", 120, criterion_q_w_algebra},
        {"Engel analogue", 60, criterion_engel},
        {"negative controls", 30, criterion_negative_controls},
    };
    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > criteria[k].limit_seconds) {
            o.ok = false;
            o.detail = "exceeded the time limit of " + std::to_string(criteria[k].limit_seconds) + " s";
        }
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << std::setw(2) << k + 1 << " " << criteria[k].name << ": "
                  << o.detail << " [" << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
