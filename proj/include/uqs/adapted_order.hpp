#pragma once

#include "uqs/carter.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uqs {

using QVec = std::vector<Rational>;

// Orthogonal s-invariant decomposition of h_R (identified with h* through the invariant form).
struct InvariantDecomposition {
    struct Block {
        std::vector<QVec> basis;  // root coordinates
        int cyclotomic_index = 1; // s acts with minimal polynomial Phi_k on the block
        QVec height;              // h_i, already rescaled
    };
    std::vector<Block> blocks;    // blocks[0] is the fixed space (possibly zero-dimensional)
    QVec hbar;                    // sum of the heights of blocks with a nonempty stratum
};

Rational form_q(const RootSystem& rs, const QVec& x, const QVec& y);
QVec to_qvec(const Root& r);

InvariantDecomposition invariant_decomposition(const RootSystem& rs, const WeylElement& s);
// Stratum index of a root: the largest block index whose height does not vanish on it.
int stratum_of(const RootSystem& rs, const InvariantDecomposition& dec, const Root& alpha);
// Throws Defect if an invariant of the decomposition fails.
void validate_decomposition(const RootSystem& rs, const WeylElement& s, const InvariantDecomposition& dec);

// Positive system {alpha : hbar(alpha) > 0} brought to the standard one by w, i.e. w(Delta_+^s) = Delta_+.
struct AdaptedSystem {
    WeylElement original;
    WeylElement conjugator;       // w
    WeylElement element;          // w s w^{-1}, adapted to the standard positive system
    InvariantDecomposition decomposition; // transported by w
    std::vector<Root> positive_roots_original; // Delta_+^s in the original coordinates
};

AdaptedSystem positive_system(const RootSystem& rs, const WeylElement& s);

struct SegmentRange {
    int begin = 0;
    int end = 0;  // exclusive
    int size() const { return end - begin; }
    bool contains(int pos) const { return pos >= begin && pos < end; }
};

struct AdaptedOrdering {
    NormalOrdering ordering;      // positions -> positive root index
    SegmentRange seg_m_plus;
    SegmentRange seg_zero;
    IntVec strata;                // per position
    CarterDecomposition carter;
    AdaptedSystem system;
    int length_s = 0;             // l(s) in the adapted system
    int d0 = 0;

    const Root& root_at(const RootSystem& rs, int pos) const { return rs.positive_root(ordering.order[pos]); }
    int position_of(const RootSystem& rs, const Root& r) const;
    std::vector<Root> m_plus_roots(const RootSystem& rs) const;
};

struct OrderingSearchBudget {
    long max_nodes = 5'000'000;
};

// Full pipeline from an arbitrary element: adapt, decompose, search.
AdaptedOrdering adapted_ordering(const RootSystem& rs, const WeylElement& s, OrderingSearchBudget budget = {});
// Search for a decomposition whose element is already adapted to the standard positive system.
AdaptedOrdering adapted_ordering(const RootSystem& rs, const CarterDecomposition& cd, const AdaptedSystem& sys,
                                 OrderingSearchBudget budget = {});

// Returns an empty string when valid, otherwise a description of the first failed property.
std::string validate_ordering(const RootSystem& rs, const AdaptedOrdering& ao);
int expected_m_plus_size(const RootSystem& rs, const AdaptedOrdering& ao);

struct SliceDimensions {
    int dim_m_minus = 0;
    int dim_slice = 0;
    int dim_G = 0;
    int codim_slice = 0;
    int d0 = 0;
    int length_s = 0;
};

SliceDimensions slice_dimensions(const RootSystem& rs, const AdaptedOrdering& ao);

struct YConditionReport {
    bool holds = true;
    IntVec witness_tuple;
    int witness_j = -1;
};

// Y_j(sum m_i gamma_i) with Y_j = sum_k d_j (a^{-1})_{jk} H_k.
Rational y_functional(const CartanDatum& cd, int j, const Root& beta);
// Every j and every nonzero tuple in {0..m-1}^{l'} must give Y_j(sum m_i gamma_i) outside mZ.
YConditionReport check_Y_condition(const RootSystem& rs, const AdaptedOrdering& ao, int m);
// For every nonzero tuple some j gives Y_j(sum m_i gamma_i) outside mZ (distinct L-weights).
YConditionReport check_Y_weights_separated(const RootSystem& rs, const AdaptedOrdering& ao, int m);

// gamma_1..gamma_n all simple, or gamma_{n+1}..gamma_l' all simple, or one of the sets is empty.
bool gammas_simple_or_empty(const RootSystem& rs, const CarterDecomposition& cd);

}  // namespace uqs
