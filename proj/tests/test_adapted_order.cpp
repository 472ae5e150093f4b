#include "uqs/adapted_order.hpp"
#include "uqs/error.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace uqs;

namespace {

// Oracle: every decomposition alpha + beta = gamma of a positive root places gamma between its summands.
bool brute_force_normal(const RootSystem& rs, const IntVec& order) {
    int D = rs.num_positive();
    std::vector<int> pos(D);
    for (int p = 0; p < D; ++p) pos[order[p]] = p;
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
            if (a == b) continue;
            Root sum = rs.positive_root(a);
            for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.positive_root(b)[i];
            int c = rs.index_of(sum);
            if (c < 0) continue;
            int lo = std::min(pos[a], pos[b]), hi = std::max(pos[a], pos[b]);
            if (!(pos[c] > lo && pos[c] < hi)) return false;
        }
    return true;
}

int inversion_count(const RootSystem& rs, const WeylElement& s) {
    int n = 0;
    for (const auto& a : rs.positive_roots())
        if (!RootSystem::is_positive(s.apply(a))) ++n;
    return n;
}

}  // namespace

TEST(InvariantDecomposition, Identity) {
    RootSystem rs(CartanDatum::from_type("A3"));
    auto dec = invariant_decomposition(rs, WeylElement::identity(3));
    ASSERT_EQ(dec.blocks.size(), 1u);
    EXPECT_EQ(dec.blocks[0].basis.size(), 3u);
}

TEST(InvariantDecomposition, Reflection) {
    RootSystem rs(CartanDatum::from_type("A1"));
    auto dec = invariant_decomposition(rs, WeylElement::simple_reflection(rs.datum(), 0));
    ASSERT_EQ(dec.blocks.size(), 2u);
    EXPECT_TRUE(dec.blocks[0].basis.empty());
    EXPECT_EQ(dec.blocks[1].basis.size(), 1u);
    EXPECT_EQ(dec.blocks[1].cyclotomic_index, 2);
}

TEST(InvariantDecomposition, A2CoxeterIsOnePlane) {
    RootSystem rs(CartanDatum::from_type("A2"));
    auto dec = invariant_decomposition(rs, rs.parse_element("s1 s2"));
    ASSERT_EQ(dec.blocks.size(), 2u);
    EXPECT_TRUE(dec.blocks[0].basis.empty());
    EXPECT_EQ(dec.blocks[1].basis.size(), 2u);
    EXPECT_EQ(dec.blocks[1].cyclotomic_index, 3);
}

TEST(PositiveSystem, IdentityKeepsStandardChamber) {
    RootSystem rs(CartanDatum::from_type("B3"));
    auto sys = positive_system(rs, WeylElement::identity(3));
    EXPECT_TRUE(sys.conjugator.is_identity());
}

TEST(PositiveSystem, A1Reflection) {
    RootSystem rs(CartanDatum::from_type("A1"));
    auto sys = positive_system(rs, WeylElement::simple_reflection(rs.datum(), 0));
    EXPECT_EQ(sys.positive_roots_original, (std::vector<Root>{{1}}));
}

TEST(PositiveSystem, A2CoxeterGammasSimple) {
    RootSystem rs(CartanDatum::from_type("A2"));
    auto ao = adapted_ordering(rs, rs.parse_element("s1 s2"));
    EXPECT_EQ(ao.system.positive_roots_original.size(), 3u);
    for (const auto& g : ao.carter.gammas()) EXPECT_GE(rs.simple_index(g), 0);
    EXPECT_EQ(ao.seg_m_plus.size(), 3);
    auto sd = slice_dimensions(rs, ao);
    EXPECT_EQ(sd.dim_G, 8);
    EXPECT_EQ(sd.dim_m_minus, 3);
    EXPECT_EQ(sd.dim_slice, 2);
}

TEST(AdaptedOrdering, Identity) {
    RootSystem rs(CartanDatum::from_type("A2"));
    auto ao = adapted_ordering(rs, WeylElement::identity(2));
    EXPECT_EQ(ao.seg_m_plus.size(), 0);
    EXPECT_EQ(ao.seg_zero.size(), 3);
    auto sd = slice_dimensions(rs, ao);
    EXPECT_EQ(sd.dim_slice, sd.dim_G);
}

TEST(AdaptedOrdering, A1) {
    RootSystem rs(CartanDatum::from_type("A1"));
    auto ao = adapted_ordering(rs, WeylElement::simple_reflection(rs.datum(), 0));
    EXPECT_EQ(ao.ordering.order, IntVec{0});
    EXPECT_EQ(ao.seg_m_plus.size(), 1);
    auto sd = slice_dimensions(rs, ao);
    EXPECT_EQ(sd.dim_G, 3);
    EXPECT_EQ(sd.dim_m_minus, 1);
    EXPECT_EQ(sd.dim_slice, 1);
}

class AdaptedAllElements : public ::testing::TestWithParam<std::string> {};

TEST_P(AdaptedAllElements, ValidatorAndDimensions) {
    RootSystem rs(CartanDatum::from_type(GetParam()));
    int D = rs.num_positive();
    for (const auto& s : rs.all_elements()) {
        auto ao = adapted_ordering(rs, s);
        EXPECT_EQ(validate_ordering(rs, ao), "");
        EXPECT_TRUE(brute_force_normal(rs, ao.ordering.order));

        // Length formula with independently counted quantities.
        int ls = inversion_count(rs, ao.system.element);
        int d0 = 0;
        for (const auto& a : rs.positive_roots()) d0 += ao.system.element.apply(a) == a;
        EXPECT_EQ(ao.seg_m_plus.size(), D - ((ls - ao.carter.l_prime) / 2 + d0));
        EXPECT_EQ(ao.seg_zero.size(), d0);

        auto sd = slice_dimensions(rs, ao);
        EXPECT_EQ(2 * sd.dim_m_minus + sd.dim_slice, sd.dim_G);
        EXPECT_EQ(sd.dim_m_minus == 0, s.is_identity());

        // Stratum criterion agrees with hbar positivity on every root.
        const auto& dec = ao.system.decomposition;
        for (const auto& a : rs.positive_roots()) {
            int st = stratum_of(rs, dec, a);
            EXPECT_GT(form_q(rs, dec.blocks[st].height, to_qvec(a)), 0);
            EXPECT_GT(form_q(rs, dec.hbar, to_qvec(a)), 0);
        }
        // Conjugation is consistent with the original positive system.
        std::set<Root> image;
        for (const auto& a : ao.system.positive_roots_original) image.insert(ao.system.conjugator.apply(a));
        EXPECT_EQ(image, std::set<Root>(rs.positive_roots().begin(), rs.positive_roots().end()));
        EXPECT_EQ(ao.system.element, ao.system.conjugator * s * rs.inverse(ao.system.conjugator));
    }
}

INSTANTIATE_TEST_SUITE_P(Types, AdaptedAllElements, ::testing::Values("A1", "A2", "B2", "G2", "A3", "B3", "C3"));

TEST(YCondition, A1) {
    RootSystem rs(CartanDatum::from_type("A1"));
    auto ao = adapted_ordering(rs, WeylElement::simple_reflection(rs.datum(), 0));
    EXPECT_EQ(y_functional(rs.datum(), 0, {1}), 1);
    EXPECT_TRUE(check_Y_condition(rs, ao, 3).holds);
    EXPECT_TRUE(check_Y_weights_separated(rs, ao, 3).holds);
}

TEST(YCondition, IdentityIsVacuous) {
    RootSystem rs(CartanDatum::from_type("A2"));
    auto ao = adapted_ordering(rs, WeylElement::identity(2));
    EXPECT_TRUE(check_Y_condition(rs, ao, 3).holds);
}

TEST(YCondition, A2CoxeterPerTuple) {
    RootSystem rs(CartanDatum::from_type("A2"));
    auto ao = adapted_ordering(rs, rs.parse_element("s1 s2"));
    auto gs = ao.carter.gammas();
    // Oracle: Y_j(beta) = d_j * (coefficient of alpha_j in beta).
    bool all_j = true, some_j = true;
    for (int m1 = 0; m1 < 3; ++m1)
        for (int m2 = 0; m2 < 3; ++m2) {
            if (m1 == 0 && m2 == 0) continue;
            Root beta(2, 0);
            for (int a = 0; a < 2; ++a) beta[a] = m1 * gs[0][a] + m2 * gs[1][a];
            bool any_out = false;
            for (int j = 0; j < 2; ++j) {
                Rational y = y_functional(rs.datum(), j, beta);
                EXPECT_EQ(y, rs.datum().d[j] * beta[j]);
                bool in = y.get_den() == 1 && y.get_num() % 3 == 0;
                if (in) all_j = false;
                else any_out = true;
            }
            if (!any_out) some_j = false;
        }
    auto lit = check_Y_condition(rs, ao, 3);
    EXPECT_EQ(lit.holds, all_j);
    if (!lit.holds) EXPECT_EQ(lit.witness_tuple.size(), 2u);
    EXPECT_EQ(check_Y_weights_separated(rs, ao, 3).holds, some_j);
}

TEST(YCondition, RandomRankThree) {
    RootSystem rs(CartanDatum::from_type("B3"));
    for (const auto& s : rs.all_elements()) {
        auto ao = adapted_ordering(rs, s);
        auto rep = check_Y_condition(rs, ao, 5);
        if (!rep.holds) {
            Root beta(3, 0);
            auto gs = ao.carter.gammas();
            for (size_t i = 0; i < gs.size(); ++i)
                for (int a = 0; a < 3; ++a) beta[a] += rep.witness_tuple[i] * gs[i][a];
            Rational y = y_functional(rs.datum(), rep.witness_j, beta);
            EXPECT_EQ(y.get_den(), 1);
            EXPECT_EQ(y.get_num() % 5, 0);
        }
    }
}
