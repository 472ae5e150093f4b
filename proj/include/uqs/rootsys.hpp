#pragma once

#include "uqs/coeffs/qpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uqs {

using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;
// Root in coordinates over the simple roots.
using Root = IntVec;

// Cartan matrix a_ij = <alpha_j, alpha_i^vee> with symmetrizers d_i, so that b_ij = d_i a_ij is symmetric.
struct CartanDatum {
    char series = 'A';  // 'X' for a datum given by an explicit matrix
    int rank = 0;
    IntMatrix a;
    IntVec d;

    static CartanDatum from_type(const std::string& type);
    // Symmetrizers are derived from the matrix.
    static CartanDatum from_matrix(const IntMatrix& a);
    // Throws InvalidArgument naming the first violated condition.
    void validate() const;
    int b(int i, int j) const { return d[i] * a[i][j]; }
    std::string name() const;
};

// Weyl group element acting on simple-root coordinates; column j is the image of alpha_j.
class WeylElement {
public:
    WeylElement() = default;
    static WeylElement identity(int rank);
    static WeylElement simple_reflection(const CartanDatum& cd, int i);
    static WeylElement from_word(const CartanDatum& cd, const IntVec& word);
    // No check that the matrix lies in the Weyl group.
    static WeylElement from_matrix(IntMatrix m);

    int rank() const { return static_cast<int>(m_.size()); }
    const IntMatrix& matrix() const { return m_; }
    Root apply(const Root& r) const;
    WeylElement operator*(const WeylElement& o) const;
    bool operator==(const WeylElement& o) const { return m_ == o.m_; }
    bool operator<(const WeylElement& o) const { return m_ < o.m_; }
    bool is_identity() const;

    // Optional word the element was built from.
    const std::optional<IntVec>& word() const { return word_; }
    void set_word(IntVec w) { word_ = std::move(w); }

private:
    IntMatrix m_;
    std::optional<IntVec> word_;
};

class RootSystem {
public:
    explicit RootSystem(CartanDatum datum);

    const CartanDatum& datum() const { return cd_; }
    int rank() const { return cd_.rank; }
    // D = number of positive roots.
    int num_positive() const { return static_cast<int>(pos_.size()); }
    const std::vector<Root>& positive_roots() const { return pos_; }
    const Root& positive_root(int k) const { return pos_[k]; }
    // Index of a positive root, or -1.
    int index_of(const Root& r) const;
    bool is_root(const Root& r) const;
    static bool is_positive(const Root& r);
    Root simple_root(int i) const;
    // Index i with r == alpha_i, or -1.
    int simple_index(const Root& r) const;

    // Invariant form (alpha, beta), determined by (alpha_i, alpha_j) = b_ij.
    long form(const Root& x, const Root& y) const;
    Rational pairing(const Root& x, const Root& y) const { return Rational(form(x, y)); }
    // <x, alpha_i^vee> = sum_j a_ij x_j.
    long coroot_pairing(int i, const Root& x) const;
    Root reflect(int i, const Root& x) const;
    // Reflection s_alpha for a root alpha, as a Weyl element.
    WeylElement root_reflection(const Root& alpha) const;
    int height(const Root& r) const;

    // Number of positive roots sent to negative roots.
    int length(const WeylElement& w) const;
    // Lexicographically first reduced word (greedy descent from the right).
    IntVec reduced_word(const WeylElement& w) const;
    WeylElement inverse(const WeylElement& w) const;
    WeylElement longest_element() const;
    // Every Weyl group element, ordered by length then matrix.
    std::vector<WeylElement> all_elements(size_t budget = 100000) const;
    WeylElement parse_element(const std::string& text) const;

private:
    CartanDatum cd_;
    std::vector<Root> pos_;
    std::map<Root, int> index_;
};

// Total order on the positive roots; order[k] indexes RootSystem::positive_roots().
struct NormalOrdering {
    IntVec order;
    std::optional<IntVec> source_word;

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const NormalOrdering& o) const { return order == o.order; }
    bool operator<(const NormalOrdering& o) const { return order < o.order; }
};

bool is_normal(const RootSystem& rs, const IntVec& order);
// beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}; rejects words that are not reduced words of w0.
NormalOrdering ordering_from_word(const RootSystem& rs, const IntVec& word);
// Inverse of ordering_from_word; rejects orderings that are not normal.
IntVec word_from_ordering(const RootSystem& rs, const IntVec& order);
// Orderings obtained by reversing one rank-2 segment.
std::vector<NormalOrdering> elementary_transpositions(const RootSystem& rs, const NormalOrdering& o);
// Connected component of the transposition graph containing start, sorted.
std::vector<NormalOrdering> all_normal_orderings(const RootSystem& rs, const NormalOrdering& start,
                                                 size_t budget = 200000);

std::string root_to_string(const Root& r);
std::string word_to_string(const IntVec& word);

}  // namespace uqs
