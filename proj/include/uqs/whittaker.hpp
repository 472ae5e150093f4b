#pragma once

#include "uqs/adapted_order.hpp"
#include "uqs/realization.hpp"
#include "uqs/root_of_unity.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace uqs {

// Combinatorial data of a Weyl group element: the adapted ordering, its Cayley data, and the
// quantum group built on the opposite ordering, in which the f_beta of U(m-) are formed.
struct WhittakerContext {
    RootSystem rs;
    AdaptedOrdering ao;
    CayleyData data;
    int m = 3;
    std::shared_ptr<const QuantumGroup> group;
    std::vector<int> m_plus;      // positions of Delta_{m+} in the opposite ordering, increasing
    std::vector<int> gamma_of;    // per entry of m_plus: i for gamma_{i+1}, -1 for the other roots
    int l_prime = 0;

    int num_gammas() const { return l_prime; }
    // Position of gamma_{i+1} in the opposite ordering.
    int gamma_position(int i) const;
};

WhittakerContext whittaker_context(const RootSystem& rs, const AdaptedOrdering& ao, int m);

// U_eta(g) for the context together with the s^{-1}-realization and the generators f_beta of U_eta(m-).
struct WhittakerData {
    WhittakerContext ctx;
    UEta u;
    std::shared_ptr<const Realization<CyclotomicField>> psi;
    std::vector<AlgebraElement<Cyc>> f;  // per entry of ctx.m_plus

    const CentralCharacter& eta() const { return u.eta; }
};

WhittakerData whittaker_data(const WhittakerContext& ctx, const CentralCharacter& eta);

// eta(f_beta^m) for every root of Delta_{m+}, in the order of ctx.m_plus. Throws Defect if a power is not central.
std::vector<Cyc> f_power_values(const WhittakerData& w);

// A character on the slice: eta(f_gamma_i^m) = c_i^m, eta(f_beta^m) = 0 for the other roots of Delta_{m+},
// eta = 0 on every x^+ and on x^- outside Delta_{m+}, eta(l_i) = l_values[i].
CentralCharacter slice_character(const WhittakerContext& ctx, const std::vector<Cyc>& c, const std::vector<Cyc>& l_values);

// Empty when eta has the slice pattern; otherwise one line per violation.
std::vector<std::string> slice_violations(const WhittakerData& w);

// U_eta(m-) with basis f^t (exponents supported on Delta_{m+}, each below m).
struct NilpotentSubalgebraData {
    std::vector<IntVec> basis;        // exponent vectors over all positions
    std::vector<int> radical_basis;   // basis indices with a positive exponent on a root other than the gammas
    std::vector<Cyc> dchar;           // eta(f_gamma_i^m)
    std::vector<AlgebraElement<Cyc>> images;  // basis elements inside U_eta(g)
    CycAlgebra algebra;               // generators f_beta in the order of Delta_{m+}

    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(const IntVec& t) const;
};

// Throws PreconditionRejected listing the violations if eta is not on the slice.
NilpotentSubalgebraData build_m_minus(const WhittakerData& w);

struct RadicalReport {
    bool is_ideal = false;
    int nilpotency_index = 0;     // least k with J^k = 0
    int quotient_dim = 0;
    bool quotient_commutative = false;
    bool quotient_truncated = false;  // f_gamma_i^m = dchar_i in the quotient
};
RadicalReport check_radical(const WhittakerData& w, const NilpotentSubalgebraData& nd);

struct WhittakerCharacter {
    std::vector<Cyc> c;       // values on f_gamma_i
    std::vector<Cyc> values;  // values on the f_beta in the order of Delta_{m+}
    std::vector<long> gamma_pair_exponents;  // relation exponent of each gamma pair i < j, in ordering order
};

// Checks c_i != 0, c_i^m = dchar_i, the vanishing of chi on every relation f_a f_b - e^k f_b f_a - (...)
// with a < b in Delta_{m+}, and multiplicativity on the whole basis of U_eta(m-). Throws InvalidArgument
// for bad input and Defect for a nonzero residual.
WhittakerCharacter validate_chi(const WhittakerData& w, const NilpotentSubalgebraData& nd, const std::vector<Cyc>& c);

// The same relations in the unreduced U_e(g), for every value of the c_i at once: both-gamma pairs need
// exponent = 0 mod m, and no correction term may be a monomial in the gammas alone. Empty when all hold.
std::vector<std::string> chi_symbolic_residuals(const WhittakerContext& ctx, int max_pairs = -1);

// Automorphism f_beta -> e^{beta(h)} f_beta of U_eta(m-) carrying chi to chi2, as the vector (alpha_j(h))_j.
std::optional<IntVec> twist_between(const WhittakerData& w, const NilpotentSubalgebraData& nd,
                                    const WhittakerCharacter& chi, const WhittakerCharacter& chi2);

std::vector<CycMatrix> f_matrices(const WhittakerData& w, const CycModule& v);

struct WhittakerSpace {
    std::vector<std::vector<Cyc>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};
WhittakerSpace whittaker_space(const WhittakerData& w, const CycModule& v, const WhittakerCharacter& chi);
bool check_engel(const WhittakerData& w, const CycModule& v, const WhittakerCharacter& chi);

struct TorusWitness {
    Root alpha;
    Cyc value;           // eta(K_alpha^m)
    std::vector<int> k;  // every k in 1..m-1 with an m-th root of value^2 equal to e_alpha^{2(1-k)}
};
struct TorusReport {
    bool holds = true;
    std::vector<TorusWitness> witnesses;
};
// eta(K_alpha^m) = prod_j eta(l_j)^{(sum_i c_i k_i)_j} for alpha = sum c_i alpha_i.
Cyc k_alpha_power(const QuantumGroup& g, const CentralCharacter& eta, const Root& alpha);
TorusReport check_torus_genericity(const WhittakerContext& ctx, const CentralCharacter& eta);

struct JordanProfile {
    Root beta;
    std::vector<int> ranks;  // rank of f_beta^k, k = 1..m
    bool all_blocks_size_m = false;
};
struct MultiplicityProfile {
    Root gamma;
    std::vector<int> multiplicities;  // of c_i e^j, j = 0..m-1
    bool equal = false;
};
struct FreenessVerdict {
    int dim_v = 0;
    int dim_v_chi = 0;
    long divisor = 1;  // m^{|Delta_{m+}|}
    bool divisibility = false;
    bool rank_identity = false;
    std::vector<JordanProfile> jordan;
    std::vector<MultiplicityProfile> multiplicities;
    bool pass() const;
};
FreenessVerdict verify_freeness(const WhittakerData& w, const CycModule& v, const WhittakerCharacter& chi);

// Q_chi = U_eta(g) (x)_{U_eta(m-)} C_chi as the quotient of the regular module by the left ideal
// generated by f_beta - chi(f_beta).
struct InducedModule {
    CycModule q;
    std::vector<Cyc> generator;  // the class of 1 (x) 1
};
InducedModule build_Q_chi(const WhittakerData& w, const WhittakerCharacter& chi, int budget = 2000);

struct QWAlgebra {
    InducedModule induced;
    std::vector<CycMatrix> w_basis;  // End_{U_eta(g)}(Q_chi)
    int dim_w = 0;
    int image_dim = 0;          // dimension of the image of U_eta(g) in End(Q_chi)
    int centralizer_dim = 0;    // dimension of the centralizer of W in End(Q_chi)
    long d = 1;                 // m^{|Delta_{m+}|}
    bool mat_d_pattern = false;
    // Product in W = End(Q_chi)^{opp}: (a * b) = b o a.
    CycMatrix multiply(int a, int b) const { return w_basis[b] * w_basis[a]; }
};
QWAlgebra wq_algebra(const WhittakerData& w, const InducedModule& q);

struct SkryabinCheck {
    int dim_v = 0;
    int dim_v_chi = 0;
    int dim_hom = 0;             // Hom(Q_chi, V), the W-module E
    int dim_tensor = 0;          // Q_chi (x)_W E
    int evaluation_rank = 0;
    int whittaker_rank = 0;      // rank of E -> V_chi, phi -> phi(1 (x) 1)
    bool holds() const;
};
SkryabinCheck skryabin_roundtrip(const WhittakerData& w, const QWAlgebra& qw, const CycModule& v,
                                 const WhittakerCharacter& chi);

}  // namespace uqs
