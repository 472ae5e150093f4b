#pragma once

#include "uqs/linalg.hpp"
#include "uqs/rootsys.hpp"

#include <vector>

namespace uqs {

using QMatrix = Matrix<Rational>;

// s = s_{gamma_1} ... s_{gamma_n} * s_{gamma_{n+1}} ... s_{gamma_l'} with each factor an involution
// built from pairwise orthogonal positive roots.
struct CarterDecomposition {
    WeylElement s;
    std::vector<Root> gammas1;
    std::vector<Root> gammas2;
    int l_prime = 0;

    std::vector<Root> gammas() const;
    WeylElement involution1(const RootSystem& rs) const;
    WeylElement involution2(const RootSystem& rs) const;
};

struct CayleyData {
    QMatrix cayley_gamma;  // ((1+s)/(1-s) P gamma_i, gamma_j)
    QMatrix p;             // p_ij
    int d = 1;
    int n = 1;
    QMatrix c;             // c_ij
    IntMatrix n_int;       // n_ij
    int m = 3;
};

// rank(1 - s) computed over Q.
int moved_rank(const RootSystem& rs, const WeylElement& s);

// All decompositions with l' independent roots, in deterministic order; stops after limit results.
std::vector<CarterDecomposition> carter_decompositions(const RootSystem& rs, const WeylElement& s,
                                                        size_t limit = SIZE_MAX);
// First decomposition in the order above.
CarterDecomposition carter_decompose(const RootSystem& rs, const WeylElement& s);
// Throws Defect if a stated invariant fails.
void validate_decomposition(const RootSystem& rs, const CarterDecomposition& cd);

// Entries ((1+s)/(1-s) P gamma_i, gamma_j) computed by exact linear algebra on the moved space.
QMatrix cayley_matrix(const RootSystem& rs, const CarterDecomposition& cd);
// eps_ij (gamma_i, gamma_j) with eps_ij = -1, 0, 1 for i < j, i = j, i > j.
QMatrix cayley_closed_form(const RootSystem& rs, const CarterDecomposition& cd);
// ((1+s)/(1-s) P x, y) for arbitrary x, y in the root lattice.
Rational cayley_form(const RootSystem& rs, const CarterDecomposition& cd, const Root& x, const Root& y);

CayleyData compute_arithmetic(const RootSystem& rs, const CarterDecomposition& cd, int m);
// n_ij = c_ij / d_j for i < j and 0 otherwise; verifies d_j n_ij - d_i n_ji = c_ij.
IntMatrix solve_nij(const CayleyData& data, const CartanDatum& datum);
// True iff d_j n_ij - d_i n_ji = c_ij for all i, j.
bool satisfies_nij_equation(const IntMatrix& n, const QMatrix& c, const CartanDatum& datum);

}  // namespace uqs
