#include "uqs/root_of_unity.hpp"

#include <gtest/gtest.h>

using namespace uqs;

namespace {

std::shared_ptr<QuantumGroup> group(const std::string& type) {
    RootSystem rs(CartanDatum::from_type(type));
    return std::make_shared<QuantumGroup>(rs, ordering_from_word(rs, rs.reduced_word(rs.longest_element())));
}

CentralCharacter generic_eta(const QuantumGroup& g, int m, long l_value, long x_minus) {
    CentralCharacter eta = CentralCharacter::restricted(g.roots(), m);
    for (auto& [r, v] : eta.values_x_minus) v = Cyc(x_minus);
    eta.values_l.assign(g.rank(), Cyc(l_value));
    return eta;
}

// C[x_1..x_k] / (x_i^m = d_i): basis indexed by exponent tuples in mixed radix.
CycAlgebra truncated_polynomials(const std::vector<long>& d, int m) {
    int k = static_cast<int>(d.size());
    int dim = 1;
    for (int i = 0; i < k; ++i) dim *= m;
    auto product = [d, k, m](int a, int b) {
        Cyc c(1);
        int index = 0, scale = 1;
        for (int i = 0; i < k; ++i, a /= m, b /= m, scale *= m) {
            int e = a % m + b % m;
            if (e >= m) {
                c *= Cyc(d[i]);
                e -= m;
            }
            index += e * scale;
        }
        return CycAlgebra::Coords{{index, c}};
    };
    std::vector<std::pair<std::string, CycAlgebra::Coords>> gens;
    int scale = 1;
    for (int i = 0; i < k; ++i, scale *= m) gens.emplace_back("x" + std::to_string(i + 1), CycAlgebra::Coords{{scale, Cyc(1)}});
    return CycAlgebra(dim, product, 0, dim - 1, gens);
}

}  // namespace

TEST(CentralElements, LPowersCommuteTrivially) {
    // e^m = 1 gives e^{m d_i delta_ij} = 1.
    for (int m : {3, 5, 7})
        for (int d : {1, 2, 3}) EXPECT_EQ(Cyc::root_power(m, static_cast<long>(m) * d), Cyc(1));
}

TEST(CentralElements, A1CubeOfXMinusIsCentral) {
    auto g = group("A1");
    auto z = central_elements(g, 3);
    const auto& alg = *z.algebra;
    EXPECT_TRUE(alg.commutator(alg.power(alg.x_minus(0), 3), alg.x_plus(0)).is_zero());
    // The square is not central: the check has teeth.
    EXPECT_FALSE(alg.commutator(alg.power(alg.x_minus(0), 2), alg.x_plus(0)).is_zero());
}

TEST(CentralElements, A2AllRootPowersCentral) {
    for (int m : {3, 5}) EXPECT_NO_THROW(central_elements(group("A2"), m)) << m;
}

TEST(CentralElements, B2AndSampledA3) {
    EXPECT_NO_THROW(central_elements(group("B2"), 3));
    EXPECT_NO_THROW(central_elements(group("A3"), 3, true, 2));
}

TEST(CentralElements, RejectsBadOrder) {
    EXPECT_THROW(central_elements(group("A1"), 4), InvalidArgument);
    EXPECT_THROW(central_elements(group("G2"), 3), InvalidArgument);
}

TEST(CentralCharacter, Validation) {
    auto g = group("A1");
    CentralCharacter eta = CentralCharacter::restricted(g->roots(), 3);
    EXPECT_NO_THROW(eta.validate(g->roots()));
    eta.values_l[0] = Cyc(0);
    EXPECT_THROW(eta.validate(g->roots()), InvalidArgument);
    eta.values_l[0] = Cyc::root_power(5, 1);
    EXPECT_THROW(eta.validate(g->roots()), InvalidArgument);
}

TEST(UEta, DimensionIsMToTheDimG) {
    auto g = group("A1");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    EXPECT_EQ(u.algebra.dim(), 27);
    EXPECT_EQ(u.expected_dim(), 27);
    UEta r = build_U_eta(g, CentralCharacter::restricted(g->roots(), 3));
    EXPECT_EQ(r.algebra.dim(), 27);
    for (int i = 0; i < 27; ++i) EXPECT_EQ(u.index_of(u.monomial_at(i)), i);
}

TEST(UEta, A2IsLazy) {
    auto g = group("A2");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    EXPECT_EQ(u.algebra.dim(), 6561);
    auto p = u.algebra.basis_product(u.algebra.top(), u.algebra.top());
    for (const auto& [k, c] : p) EXPECT_LT(k, 6561);
    EXPECT_NO_THROW(u.algebra.check_associativity(20, 7));
}

TEST(UEta, ReductionSubstitutesCentralValues) {
    auto g = group("A1");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 2));
    const auto& alg = *u.pbw;
    Cyc f = root_factor(*g, 0, 3);
    EXPECT_EQ(alg.power(alg.x_minus(0), 3), alg.scalar(Cyc(2) / f));
    EXPECT_TRUE(alg.power(alg.x_plus(0), 3).is_zero());
    EXPECT_EQ(alg.l_monomial({3}), alg.scalar(Cyc(8)));
    EXPECT_EQ(alg.multiply(alg.l_monomial({1}), alg.l_monomial({-1})), alg.one());
}

TEST(UEta, AssociativityOn500Triples) {
    auto g = group("A1");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    EXPECT_NO_THROW(u.algebra.check_associativity(500, 11));
}

TEST(Frobenius, TopMonomialFunctional) {
    auto g = group("A1");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    const auto& a = u.algebra;
    for (int i = 0; i < a.dim(); ++i) {
        Cyc phi = frobenius_pairing(a, {{a.unit(), Cyc(1)}}, {{i, Cyc(1)}});
        EXPECT_EQ(phi, Cyc(i == a.top() ? 1 : 0)) << a.label(i);
    }
}

TEST(Frobenius, A1GramHasFullRank) {
    auto g = group("A1");
    for (auto eta : {generic_eta(*g, 3, 8, 1), CentralCharacter::restricted(g->roots(), 3)}) {
        UEta u = build_U_eta(g, eta);
        FrobeniusForm form = frobenius_form(u.algebra);
        EXPECT_EQ(form.rank, 27);
        EXPECT_TRUE(form.nondegenerate());
        // Associativity of the form: B(ab, c) = B(a, bc).
        const auto& a = u.algebra;
        for (int i : {1, 5, 13})
            for (int j : {2, 9, 26})
                for (int k : {0, 4, 17}) {
                    auto lhs = frobenius_pairing(a, a.basis_product(i, j), {{k, Cyc(1)}});
                    auto rhs = frobenius_pairing(a, {{i, Cyc(1)}}, a.basis_product(j, k));
                    EXPECT_EQ(lhs, rhs);
                }
    }
}

TEST(Frobenius, BudgetIsEnforced) {
    auto g = group("A2");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    EXPECT_THROW(frobenius_form(u.algebra), BudgetExceeded);
}

TEST(BabyVerma, A1ExplicitMatrices) {
    auto g = group("A1");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    Cyc lambda(2);
    CycModule z = baby_verma(u, {lambda});
    EXPECT_EQ(z.dim, 3);
    EXPECT_NO_THROW(verify_module(u, z));
    // L acts diagonally by lambda e^{-t} on X^-^t v.
    const CycMatrix& L = z.gen("L1");
    for (int t = 0; t < 3; ++t)
        for (int s = 0; s < 3; ++s) EXPECT_EQ(L(s, t), s == t ? lambda * Cyc::root_power(3, -t) : Cyc(0));
    // X^+ kills the generator; X^- shifts t up by one.
    const CycMatrix& E = z.gen("e1");
    const CycMatrix& F = z.gen("f1");
    for (int s = 0; s < 3; ++s) EXPECT_TRUE(E(s, 0).is_zero());
    EXPECT_EQ(F(1, 0), Cyc(1));
    EXPECT_EQ(F(2, 1), Cyc(1));
}

TEST(BabyVerma, DimensionIsMToTheD) {
    auto g = group("A2");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    CycModule z = baby_verma(u, {Cyc(2), Cyc(2) * Cyc::root_power(3, 1)});
    EXPECT_EQ(z.dim, 27);
    EXPECT_NO_THROW(verify_module(u, z));
    // Weights: L_i eigenvalues lambda_i e^{-<e_i, weight t>} on the monomial basis.
    for (int col = 0; col < 27; ++col) {
        IntVec t{col % 3, (col / 3) % 3, col / 9};
        Root w = g->weight_of(t);
        for (int i = 0; i < 2; ++i) {
            IntVec s(2, 0);
            s[i] = 1;
            Cyc lambda = i == 0 ? Cyc(2) : Cyc(2) * Cyc::root_power(3, 1);
            EXPECT_EQ(z.gens[2 * 3 + i](col, col), lambda * Cyc::root_power(3, -g->l_pairing(s, w)));
        }
    }
}

TEST(BabyVerma, RejectsIncompatibleLambda) {
    auto g = group("A1");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    EXPECT_THROW(baby_verma(u, {Cyc(3)}), InvalidArgument);
    CentralCharacter eta = generic_eta(*g, 3, 8, 1);
    eta.values_x_plus.begin()->second = Cyc(1);
    UEta v = build_U_eta(g, eta);
    EXPECT_THROW(baby_verma(v, {Cyc(2)}), InvalidArgument);
}

TEST(MthRoots, RationalCases) {
    auto r = mth_roots(Cyc(8), 3);
    ASSERT_EQ(r.size(), 3u);
    for (const auto& x : r) EXPECT_EQ(x.pow(3), Cyc(8));
    EXPECT_EQ(mth_roots(Cyc(Rational(-1, 32)), 5).size(), 5u);
    EXPECT_TRUE(mth_roots(Cyc(2), 3).empty());
    EXPECT_EQ(mth_roots(Cyc(0), 3).size(), 1u);
}

TEST(SimpleModules, TruncatedPolynomialAlgebra) {
    CycAlgebra a = truncated_polynomials({8, 1}, 3);
    auto simples = simple_modules(a, 3);
    EXPECT_EQ(simples.size(), 9u);
    for (const auto& s : simples) EXPECT_EQ(s.dim, 1);
    EXPECT_EQ(radical(a).rank(), 0);
}

TEST(SimpleModules, NotSplitDiagnostic) {
    CycAlgebra a = truncated_polynomials({2}, 3);
    EXPECT_THROW(simple_modules(a, 3), NotSplit);
}

TEST(SimpleModules, A1GenericEtaAllDimensionM) {
    auto g = group("A1");
    for (int m : {3, 5}) {
        long l = m == 3 ? 8 : 32;
        UEta u = build_U_eta(g, generic_eta(*g, m, l, 1));
        auto simples = simple_modules(u.algebra, m);
        long total = 0;
        for (const auto& s : simples) {
            EXPECT_EQ(s.dim, m);
            total += s.dim * s.dim;
            EXPECT_NO_THROW(verify_module(u, s));
        }
        EXPECT_EQ(total, u.algebra.dim() - radical(u.algebra).rank());
        // Oracle: every head of a baby Verma module is one of the simples, and each simple arises.
        std::vector<bool> hit(simples.size(), false);
        for (const auto& lambda : mth_roots(Cyc(l), m)) {
            CycModule head = baby_verma_head(baby_verma(u, {lambda}));
            EXPECT_TRUE(is_absolutely_simple(head, m));
            bool matched = false;
            for (size_t k = 0; k < simples.size(); ++k)
                if (isomorphic(head, simples[k])) matched = hit[k] = true;
            EXPECT_TRUE(matched);
        }
        for (bool h : hit) EXPECT_TRUE(h);
    }
}

TEST(SimpleModules, A1RestrictedIsNotSemisimple) {
    auto g = group("A1");
    UEta u = build_U_eta(g, CentralCharacter::restricted(g->roots(), 3));
    auto simples = simple_modules(u.algebra, 3);
    int rad = radical(u.algebra).rank();
    EXPECT_GT(rad, 0);
    long total = 0;
    for (const auto& s : simples) total += s.dim * s.dim;
    EXPECT_EQ(total, 27 - rad);
    for (const auto& lambda : mth_roots(Cyc(1), 3)) {
        CycModule head = baby_verma_head(baby_verma(u, {lambda}));
        bool matched = false;
        for (const auto& s : simples) matched = matched || isomorphic(head, s);
        EXPECT_TRUE(matched);
    }
}

TEST(SimpleModules, CentralElementsActAsScalars) {
    auto g = group("A1");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    auto z = central_elements(g, 3, false);
    for (const auto& s : simple_modules(u.algebra, 3)) {
        CycMatrix xm = act(u, s, u.pbw->power(u.pbw->x_minus(0), 3));
        CycMatrix lm = act(u, s, u.pbw->l_monomial({3}));
        EXPECT_TRUE(is_scalar_matrix(xm));
        EXPECT_TRUE(is_scalar_matrix(lm));
        EXPECT_TRUE(act(u, s, u.pbw->power(u.pbw->x_plus(0), 3)).is_zero());
    }
}

TEST(Modules, HomSpaceAndDirectSum) {
    auto g = group("A1");
    UEta u = build_U_eta(g, generic_eta(*g, 3, 8, 1));
    CycModule a = baby_verma(u, {Cyc(2)});
    CycModule b = baby_verma(u, {Cyc(2) * Cyc::root_power(3, 1)});
    CycModule ab = direct_sum(a, b);
    EXPECT_EQ(ab.dim, 6);
    EXPECT_NO_THROW(verify_module(u, ab));
    EXPECT_EQ(hom_space(a, ab).size(), isomorphic(a, b) ? 2u : 1u);
    EXPECT_EQ(hom_space(a, a).size(), 1u);
}
