#pragma once

#include "uqs/finite_algebra.hpp"
#include "uqs/pbw.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace uqs {

using Cyc = CyclotomicScalar;
using CycMatrix = Matrix<Cyc>;
using CycModule = ModuleRep<Cyc>;
using CycAlgebra = FiniteDimAlgebra<Cyc>;

// The field Q(e) does not contain the eigenvalues needed to split a module.
class NotSplit : public Error {
public:
    using Error::Error;
};

// A character of Z_0: values on x_alpha^+, x_alpha^- (keyed by positive root) and on l_i = L_i^m.
// x_alpha^- = (e_alpha - e_alpha^{-1})^m (X_alpha^-)^m, and likewise for x_alpha^+ with (X_alpha^+)^m.
struct CentralCharacter {
    int m = 3;
    std::map<Root, Cyc> values_x_plus;
    std::map<Root, Cyc> values_x_minus;
    std::vector<Cyc> values_l;

    // All x-values zero and all l-values one.
    static CentralCharacter restricted(const RootSystem& rs, int m);
    Cyc x_plus(const Root& r) const;
    Cyc x_minus(const Root& r) const;
    // Throws InvalidArgument for a malformed character (wrong keys, zero l_i, even or small m).
    void validate(const RootSystem& rs) const;
};

// m odd, m > max d_i.
void check_order(const CartanDatum& cd, int m);

// (e_beta - e_beta^{-1})^m with e_beta = e^{(beta, beta)/2}.
Cyc root_factor(const QuantumGroup& g, int pos, int m);

// The generators of Z_0 inside the unreduced U_e(g).
struct CentralElements {
    std::shared_ptr<const RootOfUnityAlgebra> algebra;
    std::vector<AlgebraElement<Cyc>> x_plus;   // per position
    std::vector<AlgebraElement<Cyc>> x_minus;  // per position
    std::vector<AlgebraElement<Cyc>> l;        // per simple index
};

// Builds x_beta^{+-} and l_i. With verify, checks [z, X_i^{+-}] = [z, L_i] = 0 for every element z
// (all of them when sample_stride == 1, every sample_stride-th position otherwise); throws Defect.
CentralElements central_elements(std::shared_ptr<const QuantumGroup> group, int m, bool verify = true,
                                 int sample_stride = 1);

CentralReduction<Cyc> central_reduction(const QuantumGroup& g, const CentralCharacter& eta);

// U_eta(g): the PBW algebra reduced by eta, with the bounded monomial basis.
// Generators, in this order: e1..eD (X^+ per position), f1..fD (X^- per position), L1..Ll, Linv1..Linvl.
struct UEta {
    std::shared_ptr<const RootOfUnityAlgebra> pbw;
    CentralCharacter eta;
    CycAlgebra algebra;

    int m() const { return eta.m; }
    PbwMonomial monomial_at(int index) const;
    int index_of(const PbwMonomial& mono) const;
    CycAlgebra::Coords coords(const AlgebraElement<Cyc>& x) const;
    AlgebraElement<Cyc> element(const CycAlgebra::Coords& c) const;
    // Total number of bounded monomials, m^{2D+l}.
    long expected_dim() const;
};

std::vector<std::string> u_eta_generator_names(int num_positive, int rank);

UEta build_U_eta(std::shared_ptr<const QuantumGroup> group, const CentralCharacter& eta);

// Matrix of x acting on a U_eta(g)-module given in the generator order of UEta.
CycMatrix act(const UEta& u, const CycModule& v, const AlgebraElement<Cyc>& x);
// Checks the Chevalley relations, the central values and rho(g) rho(h) = rho(gh) for generator pairs.
void verify_module(const UEta& u, const CycModule& v);

struct FrobeniusForm {
    CycMatrix gram;
    int dim = 0;
    int rank = 0;
    bool nondegenerate() const { return rank == dim; }
};

// B(x, y) = coefficient of the top basis element in xy. Throws Defect if the Gram matrix is singular,
// BudgetExceeded if dim exceeds budget.
FrobeniusForm frobenius_form(const CycAlgebra& a, int budget = 2000, int associativity_samples = 50,
                             unsigned seed = 1);
Cyc frobenius_pairing(const CycAlgebra& a, const CycAlgebra::Coords& x, const CycAlgebra::Coords& y);

// Induced from the character of U_eta(b+) with X^+ -> 0 and L_i -> lambda_i.
// Basis X^-^t (x) v, t in [0, m)^D, in the mixed-radix order of t.
CycModule baby_verma(const UEta& u, const std::vector<Cyc>& lambda);

// Rational m-th roots of c in Q (as elements of Q(e)): empty if c is not an m-th power of a rational.
std::vector<Cyc> mth_roots(const Cyc& c, int m);

// Radical via the trace form of the regular representation.
RowReducer<Cyc> radical(const CycAlgebra& a, int budget = 2000);

// Norton's irreducibility test with a one-dimensional kernel; falls back to Burnside's theorem for
// small modules. Returns true iff the module is absolutely simple; throws NotSplit if undecided.
bool is_absolutely_simple(const CycModule& v, int m);

// Every simple module up to isomorphism. Throws BudgetExceeded or NotSplit.
std::vector<CycModule> simple_modules(const CycAlgebra& a, int m, int budget = 2000);

// The head of a baby Verma module: quotient by the largest submodule avoiding the generator.
CycModule baby_verma_head(const CycModule& z);

bool isomorphic(const CycModule& a, const CycModule& b);

}  // namespace uqs
