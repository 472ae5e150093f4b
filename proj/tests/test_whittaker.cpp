#include "uqs/whittaker.hpp"

#include <gtest/gtest.h>

using namespace uqs;

namespace {

WhittakerContext context(const std::string& type, const IntVec& word, int m) {
    RootSystem rs(CartanDatum::from_type(type));
    WeylElement s = word.empty() ? WeylElement::identity(rs.rank()) : WeylElement::from_word(rs.datum(), word);
    return whittaker_context(rs, adapted_ordering(rs, s), m);
}

std::vector<Cyc> constant(int n, long v) { return std::vector<Cyc>(n, Cyc(v)); }

struct Setup {
    WhittakerContext ctx;
    WhittakerData w;
    NilpotentSubalgebraData nd;
    WhittakerCharacter chi;
};

Setup setup(const std::string& type, const IntVec& word, int m, long c, std::vector<Cyc> l_values) {
    WhittakerContext ctx = context(type, word, m);
    auto cs = constant(ctx.l_prime, c);
    WhittakerData w = whittaker_data(ctx, slice_character(ctx, cs, l_values));
    NilpotentSubalgebraData nd = build_m_minus(w);
    WhittakerCharacter chi = validate_chi(w, nd, cs);
    return {ctx, w, nd, chi};
}

long power(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST(Context, A1Reflection) {
    auto ctx = context("A1", {0}, 3);
    EXPECT_EQ(ctx.l_prime, 1);
    ASSERT_EQ(ctx.m_plus.size(), 1u);
    EXPECT_EQ(ctx.gamma_of[0], 0);
}

TEST(Context, A2CoxeterHasTwoGammas) {
    auto ctx = context("A2", {0, 1}, 3);
    EXPECT_EQ(ctx.l_prime, 2);
    EXPECT_EQ(ctx.m_plus.size(), 3u);
    int non_gamma = 0;
    for (int g : ctx.gamma_of) non_gamma += g < 0;
    EXPECT_EQ(non_gamma, 1);
}

TEST(Slice, CharacterHasSlicePattern) {
    auto ctx = context("A2", {0, 1}, 3);
    auto w = whittaker_data(ctx, slice_character(ctx, {Cyc(2), Cyc(5)}, constant(2, 1)));
    auto values = f_power_values(w);
    for (size_t k = 0; k < values.size(); ++k) {
        int i = ctx.gamma_of[k];
        if (i < 0) EXPECT_TRUE(values[k].is_zero());
        else EXPECT_EQ(values[k], Cyc(i == 0 ? 8 : 125));
    }
    EXPECT_TRUE(slice_violations(w).empty());
}

TEST(Slice, OffSliceIsRejected) {
    auto ctx = context("A1", {0}, 3);
    auto w = whittaker_data(ctx, CentralCharacter::restricted(ctx.rs, 3));
    EXPECT_EQ(slice_violations(w).size(), 1u);
    EXPECT_THROW(build_m_minus(w), PreconditionRejected);

    auto ctx2 = context("A2", {0, 1}, 3);
    auto eta = slice_character(ctx2, {Cyc(1), Cyc(1)}, constant(2, 1));
    for (size_t k = 0; k < ctx2.m_plus.size(); ++k)
        if (ctx2.gamma_of[k] < 0) eta.values_x_minus[ctx2.group->root_at(ctx2.m_plus[k])] = Cyc(1);
    EXPECT_THROW(build_m_minus(whittaker_data(ctx2, eta)), PreconditionRejected);
}

TEST(NilpotentSubalgebra, A1IsTruncatedPolynomialRing) {
    auto s = setup("A1", {0}, 3, 2, constant(1, 1));
    EXPECT_EQ(s.nd.dim(), 3);
    EXPECT_TRUE(s.nd.radical_basis.empty());
    EXPECT_EQ(s.nd.dchar[0], Cyc(8));
    auto rep = check_radical(s.w, s.nd);
    EXPECT_EQ(rep.quotient_dim, 3);
    EXPECT_TRUE(rep.quotient_commutative);
    EXPECT_TRUE(rep.quotient_truncated);
    EXPECT_EQ(radical(s.nd.algebra).rank(), 0);
}

TEST(NilpotentSubalgebra, IdentityElementIsTrivial) {
    auto ctx = context("A1", {}, 3);
    EXPECT_EQ(ctx.l_prime, 0);
    EXPECT_TRUE(ctx.m_plus.empty());
    auto w = whittaker_data(ctx, slice_character(ctx, {}, constant(1, 1)));
    auto nd = build_m_minus(w);
    EXPECT_EQ(nd.dim(), 1);
    auto rep = check_radical(w, nd);
    EXPECT_EQ(rep.nilpotency_index, 1);
    EXPECT_EQ(rep.quotient_dim, 1);
}

TEST(NilpotentSubalgebra, A2CoxeterRadical) {
    auto s = setup("A2", {0, 1}, 3, 1, constant(2, 1));
    EXPECT_EQ(s.nd.dim(), 27);
    EXPECT_EQ(s.nd.radical_basis.size(), 18u);
    auto rep = check_radical(s.w, s.nd);
    EXPECT_TRUE(rep.is_ideal);
    EXPECT_GE(rep.nilpotency_index, 2);
    EXPECT_LE(rep.nilpotency_index, 3);
    EXPECT_EQ(rep.quotient_dim, 9);
    EXPECT_TRUE(rep.quotient_commutative);
    EXPECT_TRUE(rep.quotient_truncated);
    // Oracle: the trace-form radical of the same algebra.
    auto tr = radical(s.nd.algebra);
    EXPECT_EQ(tr.rank(), 18);
    for (int idx : s.nd.radical_basis) {
        std::vector<Cyc> v(27, Cyc(0));
        v[idx] = Cyc(1);
        EXPECT_TRUE(tr.contains(v));
    }
}

TEST(Character, A2GammaPairsCommute) {
    for (long c : {1L, 2L}) {
        auto s = setup("A2", {0, 1}, 3, c, constant(2, 1));
        ASSERT_EQ(s.chi.gamma_pair_exponents.size(), 1u);
        EXPECT_EQ(s.chi.gamma_pair_exponents[0] % 3, 0);
        for (size_t k = 0; k < s.chi.values.size(); ++k)
            EXPECT_EQ(s.chi.values[k].is_zero(), s.ctx.gamma_of[k] < 0);
    }
}

TEST(Character, RejectsWrongRoot) {
    auto s = setup("A1", {0}, 3, 2, constant(1, 1));
    EXPECT_THROW(validate_chi(s.w, s.nd, {Cyc(3)}), InvalidArgument);
    EXPECT_THROW(validate_chi(s.w, s.nd, {Cyc(0)}), InvalidArgument);
    EXPECT_NO_THROW(validate_chi(s.w, s.nd, {Cyc(2) * Cyc::root_power(3, 1)}));
}

TEST(Character, SymbolicResidualsVanish) {
    struct Case {
        std::string type;
        IntVec word;
    };
    std::vector<Case> cases = {{"A1", {0}},       {"A2", {0}},    {"A2", {0, 1}}, {"A2", {0, 1, 0}},
                               {"B2", {0}},       {"B2", {1}},    {"B2", {0, 1}}, {"B2", {0, 1, 0, 1}}};
    for (const auto& c : cases)
        for (int m : {3, 5}) {
            auto res = chi_symbolic_residuals(context(c.type, c.word, m));
            EXPECT_TRUE(res.empty()) << c.type << " m=" << m << ": " << (res.empty() ? "" : res.front());
        }
}

TEST(Character, OneDimensionalModulesAreTwists) {
    auto s = setup("A2", {0, 1}, 3, 2, constant(2, 1));
    auto simples = simple_modules(s.nd.algebra, 3);
    EXPECT_EQ(simples.size(), 9u);
    for (const auto& v : simples) EXPECT_EQ(v.dim, 1);
    for (int j1 = 0; j1 < 3; ++j1)
        for (int j2 = 0; j2 < 3; ++j2) {
            auto chi2 = validate_chi(s.w, s.nd, {Cyc(2) * Cyc::root_power(3, j1), Cyc(2) * Cyc::root_power(3, j2)});
            auto h = twist_between(s.w, s.nd, s.chi, chi2);
            ASSERT_TRUE(h.has_value());
        }
}

TEST(Torus, A1IsVacuous) {
    auto s = setup("A1", {0}, 3, 1, constant(1, 8));
    EXPECT_TRUE(check_torus_genericity(s.ctx, s.w.eta()).holds);
}

TEST(Torus, A2GenericAndAdversarial) {
    auto ctx = context("A2", {0, 1}, 3);
    auto generic = slice_character(ctx, {Cyc(1), Cyc(1)}, constant(2, 8));
    EXPECT_TRUE(check_torus_genericity(ctx, generic).holds);

    Root alpha;
    for (size_t k = 0; k < ctx.m_plus.size(); ++k)
        if (ctx.gamma_of[k] < 0) alpha = ctx.group->root_at(ctx.m_plus[k]);
    IntVec e(2, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e[j] += alpha[i] * ctx.group->k_vector(i)[j];
    auto pw = [](long v) { return v >= 0 ? Cyc(power(8, static_cast<int>(v))) : Cyc(1) / Cyc(power(8, static_cast<int>(-v))); };
    auto bad = slice_character(ctx, {Cyc(1), Cyc(1)}, {pw(e[1]), pw(-e[0])});
    EXPECT_EQ(k_alpha_power(*ctx.group, bad, alpha), Cyc(1));
    auto rep = check_torus_genericity(ctx, bad);
    EXPECT_FALSE(rep.holds);
    ASSERT_EQ(rep.witnesses.size(), 1u);
    EXPECT_EQ(rep.witnesses[0].k, (std::vector<int>{1, 2}));
}

TEST(WhittakerVectors, ZeroModuleHasNone) {
    auto s = setup("A1", {0}, 3, 1, constant(1, 8));
    CycModule zero{0, u_eta_generator_names(1, 1), std::vector<CycMatrix>(6, CycMatrix(0, 0))};
    EXPECT_FALSE(check_engel(s.w, zero, s.chi));
}

TEST(WhittakerVectors, A1SimplesAreFree) {
    for (int m : {3, 5}) {
        long l = m == 3 ? 8 : 32;
        auto s = setup("A1", {0}, m, 1, constant(1, l));
        auto simples = simple_modules(s.w.u.algebra, m);
        ASSERT_FALSE(simples.empty());
        for (const auto& v : simples) {
            auto verdict = verify_freeness(s.w, v, s.chi);
            EXPECT_TRUE(verdict.pass());
            EXPECT_EQ(verdict.dim_v_chi, 1);
            EXPECT_EQ(verdict.dim_v, m);
        }
    }
}

TEST(WhittakerVectors, A2BabyVermasAndHeads) {
    auto s = setup("A2", {0, 1}, 3, 1, constant(2, 8));
    std::vector<CycModule> mods;
    for (const auto& l1 : mth_roots(Cyc(8), 3))
        for (const auto& l2 : {Cyc(2)}) {
            CycModule z = baby_verma(s.w.u, {l1, l2});
            mods.push_back(z);
            mods.push_back(baby_verma_head(z));
        }
    for (const auto& v : mods) {
        EXPECT_TRUE(check_engel(s.w, v, s.chi));
        auto verdict = verify_freeness(s.w, v, s.chi);
        EXPECT_TRUE(verdict.pass()) << "dim " << v.dim;
        EXPECT_EQ(verdict.dim_v, 27 * verdict.dim_v_chi);
    }
    auto sum = direct_sum(mods[0], mods[2]);
    auto a = whittaker_space(s.w, mods[0], s.chi).dim();
    auto b = whittaker_space(s.w, mods[2], s.chi).dim();
    EXPECT_EQ(whittaker_space(s.w, sum, s.chi).dim(), a + b);
}

TEST(InducedModule, A1SkryabinEquivalence) {
    auto s = setup("A1", {0}, 3, 1, constant(1, 8));
    auto q = build_Q_chi(s.w, s.chi);
    EXPECT_EQ(q.q.dim, 9);
    EXPECT_NO_THROW(verify_module(s.w.u, q.q));
    EXPECT_TRUE(verify_freeness(s.w, q.q, s.chi).pass());
    auto qw = wq_algebra(s.w, q);
    EXPECT_EQ(qw.dim_w, 3);
    EXPECT_EQ(qw.d, 3);
    EXPECT_TRUE(qw.mat_d_pattern);
    for (const auto& v : simple_modules(s.w.u.algebra, 3)) {
        auto sk = skryabin_roundtrip(s.w, qw, v, s.chi);
        EXPECT_TRUE(sk.holds()) << sk.dim_v << " " << sk.dim_hom << " " << sk.dim_tensor << " " << sk.evaluation_rank;
    }
}

TEST(InducedModule, IdentityElementIsRegular) {
    auto ctx = context("A1", {}, 3);
    auto w = whittaker_data(ctx, slice_character(ctx, {}, constant(1, 8)));
    auto nd = build_m_minus(w);
    auto chi = validate_chi(w, nd, {});
    EXPECT_EQ(build_Q_chi(w, chi).q.dim, 27);
    EXPECT_THROW(build_Q_chi(w, chi, 10), BudgetExceeded);
}
