#pragma once

#include "uqs/coeffs/fields.hpp"
#include "uqs/linalg.hpp"
#include "uqs/rootsys.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uqs {

// Word in the simple indices; used both for products of Chevalley generators and for
// coordinates in the quantum shuffle algebra.
using Word = std::vector<int>;
using WordPoly = std::map<Word, RationalQ>;
using ShuffleVec = std::map<Word, RationalQ>;

// Term F_f L^s E_e of the triangular word algebra: an F-word, an L-exponent vector, an E-word.
struct TriKey {
    Word f;
    IntVec s;
    Word e;
    auto operator<=>(const TriKey&) const = default;
};
using TriPoly = std::map<TriKey, RationalQ>;

// (X^-)^t L^s (X^+)^r. Entries of t and r are indexed by position in the normal ordering;
// the X^- factors are multiplied in decreasing position, the X^+ factors in increasing position.
struct PbwMonomial {
    IntVec t;
    IntVec s;
    IntVec r;
    auto operator<=>(const PbwMonomial&) const = default;
    int degree() const;
};

enum class Presentation { standard, s_realized };

template <class S>
struct AlgebraElement {
    std::map<PbwMonomial, S> terms;
    Presentation tag = Presentation::standard;

    bool is_zero() const { return terms.empty(); }
    void add(const PbwMonomial& mono, const S& c) {
        if (scalar_is_zero(c)) return;
        auto [it, fresh] = terms.emplace(mono, c);
        if (!fresh) {
            it->second += c;
            if (scalar_is_zero(it->second)) terms.erase(it);
        }
    }
    S coeff(const PbwMonomial& mono) const {
        auto it = terms.find(mono);
        return it == terms.end() ? S(0) : it->second;
    }
    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [k, c] : o.terms) add(k, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [k, c] : o.terms) add(k, -c);
        return *this;
    }
    AlgebraElement operator+(const AlgebraElement& o) const { return AlgebraElement(*this) += o; }
    AlgebraElement operator-(const AlgebraElement& o) const { return AlgebraElement(*this) -= o; }
    AlgebraElement scaled(const S& c) const {
        AlgebraElement r;
        r.tag = tag;
        if (scalar_is_zero(c)) return r;
        for (const auto& [k, v] : terms) r.terms.emplace(k, v * c);
        return r;
    }
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
};

using GenericElement = AlgebraElement<RationalQ>;

// Levendorskii-Soibelman relation X_a^- X_b^- - q^{(a,b)} X_b^- X_a^- = sum over intermediate monomials.
struct LsRelation {
    int a = 0;  // positions, a < b
    int b = 0;
    long form = 0;  // (beta_a, beta_b)
    // Coefficients of plain-power monomials (X^-)^t; every t is supported strictly between a and b.
    std::map<IntVec, RationalQ> plain;
    // The same constants in the divided-power convention: plain = divided / prod [t_k]_{q_k}!.
    std::map<IntVec, RationalQ> divided;
};

// Generic-q quantum group U_q(g) attached to a normal ordering given by a reduced word of w0.
// Canonical forms use the triangular decomposition and the embedding of U_q(n) into the quantum
// shuffle algebra.
class QuantumGroup {
public:
    QuantumGroup(const RootSystem& rs, NormalOrdering ordering);

    const RootSystem& roots() const { return rs_; }
    const NormalOrdering& ordering() const { return ord_; }
    const IntVec& word() const { return word_; }
    int rank() const { return rs_.rank(); }
    int num_positive() const { return rs_.num_positive(); }
    const Root& root_at(int pos) const { return rs_.positive_root(ord_.order[pos]); }
    int position_of(const Root& r) const;
    // d_beta with (beta, beta) = 2 d_beta.
    int root_d(int pos) const;
    // L-exponent vector of K_i = prod_j L_j^{a_ji}.
    IntVec k_vector(int i) const;
    // <s, beta> = sum_j s_j d_j beta_j, so that L^s X_beta^{+-} L^{-s} = q^{+-<s,beta>} X_beta^{+-}.
    long l_pairing(const IntVec& s, const Root& beta) const;
    Root weight_of(const IntVec& exps) const;
    Root weight_of_word(const Word& w) const;

    // Word algebra.
    TriPoly one() const;
    TriPoly x_plus(int i) const;
    TriPoly x_minus(int i) const;
    TriPoly l_monomial(const IntVec& s) const;
    TriPoly multiply(const TriPoly& x, const TriPoly& y) const;
    // Braid group automorphism T_i.
    TriPoly braid_apply(int i, const TriPoly& x) const;

    // Root vectors as polynomials in the Chevalley generators.
    const WordPoly& root_vector_word(int pos, bool plus) const;
    TriPoly root_vector(int pos, bool plus) const;

    // Quantum shuffle image of a polynomial in the generators of U_q(n).
    ShuffleVec shuffle_image(const WordPoly& p) const;
    ShuffleVec shuffle_product(const ShuffleVec& x, const ShuffleVec& y) const;

    // PBW coordinates of an element of U_q(n_-) (plus = false) or U_q(n_+) given by its shuffle image.
    std::map<IntVec, RationalQ> pbw_coordinates(const ShuffleVec& v, bool plus) const;
    GenericElement to_pbw(const TriPoly& x) const;
    TriPoly from_pbw(const GenericElement& x) const;

    // Structure constants, computed lazily and memoized.
    // X_a^- X_b^- for a < b as a combination of ordered monomials (X^-)^t.
    const std::map<IntVec, RationalQ>& minus_product(int a, int b) const;
    // X_b^+ X_a^+ for a < b as a combination of ordered monomials (X^+)^r.
    const std::map<IntVec, RationalQ>& plus_product(int a, int b) const;
    // X_a^+ X_b^- - X_b^- X_a^+ in PBW form.
    const GenericElement& cross_commutator(int a, int b) const;
    LsRelation ls_relation(int a, int b) const;

    // Kostant partitions of weight nu by positive roots.
    std::vector<IntVec> partitions(const Root& nu) const;

private:
    struct Solver {
        std::vector<IntVec> monomials;
        std::vector<Word> rows;
        Matrix<RationalQ> inverse;
        std::vector<ShuffleVec> images;
    };
    const Solver& solver(const Root& nu, bool plus) const;
    const ShuffleVec& word_image(const Word& w) const;
    const TriPoly& e_times_f(const Word& e, const Word& f) const;
    TriPoly braid_generator(int i, int j, bool plus) const;
    void build_root_vectors();

    RootSystem rs_;
    NormalOrdering ord_;
    IntVec word_;
    std::vector<WordPoly> minus_words_;
    std::vector<WordPoly> plus_words_;
    std::vector<ShuffleVec> minus_images_;
    std::vector<ShuffleVec> plus_images_;

    mutable std::mutex mu_;
    mutable std::map<Word, ShuffleVec> word_images_;
    mutable std::map<std::pair<Word, Word>, TriPoly> ef_cache_;
    mutable std::map<std::pair<Root, bool>, std::shared_ptr<Solver>> solvers_;
    mutable std::map<std::pair<int, int>, std::map<IntVec, RationalQ>> minus_table_;
    mutable std::map<std::pair<int, int>, std::map<IntVec, RationalQ>> plus_table_;
    mutable std::map<std::pair<int, int>, GenericElement> cross_table_;
};

// Values of the central m-th powers used to pass from U_e(g) to U_eta(g).
template <class S>
struct CentralReduction {
    int m = 0;
    std::vector<S> minus_power;  // (X_beta^-)^m, per position
    std::vector<S> plus_power;   // (X_beta^+)^m, per position
    std::vector<S> l_power;      // L_i^m
};

// A product of generators: kind 'E' (X^+ root vector), 'F' (X^- root vector), 'L' (L_i^power).
struct Factor {
    char kind = 'F';
    int index = 0;  // position of the root for 'E'/'F', simple index for 'L'
    int power = 1;
};
template <class S>
using FreeExpression = std::vector<std::pair<std::vector<Factor>, S>>;

// U_q(g) (Field = GenericField) or U_e(g) (Field = CyclotomicField) in the PBW basis of a fixed
// normal ordering, optionally reduced modulo a central character.
template <class Field>
class PbwAlgebra {
public:
    using S = typename Field::Scalar;
    using Element = AlgebraElement<S>;
    using Poly = std::map<IntVec, S>;

    PbwAlgebra(std::shared_ptr<const QuantumGroup> group, Field field,
               std::optional<CentralReduction<S>> reduction = std::nullopt);

    const QuantumGroup& group() const { return *qg_; }
    std::shared_ptr<const QuantumGroup> group_ptr() const { return qg_; }
    const Field& field() const { return field_; }
    const std::optional<CentralReduction<S>>& reduction() const { return red_; }
    int num_positive() const { return D_; }
    int rank() const { return l_; }

    S q_pow(long k) const { return field_.q_pow(k); }
    Element one() const;
    Element monomial(const PbwMonomial& mono, const S& c = S(1)) const;
    Element x_plus(int i) const;
    Element x_minus(int i) const;
    Element root_plus(int pos) const;
    Element root_minus(int pos) const;
    Element l_monomial(const IntVec& s) const;
    // K_i^{power}.
    Element k_power(int i, int power) const;
    Element scalar(const S& c) const;

    Element multiply(const Element& x, const Element& y) const;
    Element power(const Element& x, int k) const;
    Element commutator(const Element& x, const Element& y) const;
    Element normal_form(const FreeExpression<S>& expr) const;
    // The element written back as a product expression over root vectors.
    FreeExpression<S> as_expression(const Element& x) const;
    Element reduce(const Element& x) const;
    Element specialize(const GenericElement& x) const;

private:
    PbwMonomial zero_monomial() const;
    void reduce_minus(IntVec& t, S& c) const;
    void reduce_plus(IntVec& r, S& c) const;
    void reduce_l(IntVec& s, S& c) const;
    void reduce_monomial(PbwMonomial& mono, S& c) const;
    Element left_minus(int b, const Element& x) const;
    Element right_plus(const Element& x, const IntVec& s, const IntVec& r) const;
    const Poly& minus_right(const IntVec& t, int b) const;
    const Poly& plus_right(const IntVec& r, int a) const;
    Poly minus_times(const IntVec& t, const IntVec& u) const;
    Poly plus_times(const IntVec& r, const IntVec& u) const;
    const Element& cross(const IntVec& r, const IntVec& t) const;
    const Element& cross_letter(int a, const IntVec& t) const;
    Element multiply_monomials(const PbwMonomial& x, const PbwMonomial& y) const;
    const Poly& minus_table(int a, int b) const;
    const Poly& plus_table(int a, int b) const;
    const Element& cross_table(int a, int b) const;

    std::shared_ptr<const QuantumGroup> qg_;
    Field field_;
    std::optional<CentralReduction<S>> red_;
    int D_ = 0;
    int l_ = 0;

    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<int, int>, Poly> minus_table_;
    mutable std::map<std::pair<int, int>, Poly> plus_table_;
    mutable std::map<std::pair<int, int>, Element> cross_table_;
    mutable std::map<std::pair<IntVec, int>, Poly> minus_right_;
    mutable std::map<std::pair<IntVec, int>, Poly> plus_right_;
    mutable std::map<std::pair<IntVec, IntVec>, Element> cross_;
    mutable std::map<std::pair<int, IntVec>, Element> cross_letter_;
};

extern template class PbwAlgebra<GenericField>;
extern template class PbwAlgebra<CyclotomicField>;

using GenericAlgebra = PbwAlgebra<GenericField>;
using RootOfUnityAlgebra = PbwAlgebra<CyclotomicField>;

// Ordering recovered from an ordering without a source word.
NormalOrdering with_source_word(const RootSystem& rs, const NormalOrdering& o);
NormalOrdering reversed_ordering(const RootSystem& rs, const NormalOrdering& o);

std::string monomial_to_string(const PbwMonomial& mono);
template <class S>
std::string element_to_string(const AlgebraElement<S>& x) {
    if (x.terms.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : x.terms) {
        if (!out.empty()) out += " + ";
        out += "(" + scalar_to_string(c) + ")*" + monomial_to_string(mono);
    }
    return out;
}

}  // namespace uqs
