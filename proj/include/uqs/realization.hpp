#pragma once

#include "uqs/carter.hpp"
#include "uqs/pbw.hpp"

#include <map>
#include <memory>

namespace uqs {

// The s-realization: e_i -> X_i^+ L^{n_i}, f_i -> L^{-n_i} X_i^-, L_i -> L_i, where n_i is row i of n.
// Root vectors: e_beta -> X_beta^+ L^{v(beta)}, f_beta -> L^{-v(beta)} X_beta^- with v(beta)_j = sum_i c_i n_ij.
template <class Field>
class Realization {
public:
    using S = typename Field::Scalar;
    using Element = AlgebraElement<S>;

    // f_a f_b - q^{exponent} f_b f_a = sum_t rhs[t] f^t, a < b positions.
    struct FRelation {
        int a = 0;
        int b = 0;
        long exponent = 0;
        std::map<IntVec, S> rhs;
    };

    Realization(std::shared_ptr<const PbwAlgebra<Field>> algebra, IntMatrix n);
    // n from the Cayley data; with inverse = true the realization of s^{-1} with solution -n_ij - delta_ij.
    static Realization from_cayley(std::shared_ptr<const PbwAlgebra<Field>> algebra, const CayleyData& data,
                                   bool inverse = false);

    const PbwAlgebra<Field>& algebra() const { return *alg_; }
    const IntMatrix& n() const { return n_; }
    // c_ij = d_j n_ij - d_i n_ji.
    const IntMatrix& c() const { return c_; }
    // sum_ij a_i b_j c_ij.
    long c_form(const Root& a, const Root& b) const;
    IntVec v(const Root& beta) const;

    Element e(int i) const;
    Element f(int i) const;
    Element e_root(int pos) const;
    Element f_root(int pos) const;
    // Image of f^t L^s e^r, with f^t = f_{beta_D}^{t_D} ... f_{beta_1}^{t_1} and e^r increasing.
    Element image(const PbwMonomial& mono) const;
    // f^t = kappa(t) L^{-v(weight t)} (X^-)^t.
    S kappa(const IntVec& t) const;
    // Coordinates of x in the f-monomials; throws Defect if x is not in their span.
    std::map<IntVec, S> f_coordinates(const Element& x) const;
    FRelation f_relation(int a, int b) const;
    // Checks the defining relations of the realization on the images; throws Defect naming the pair.
    void verify_relations() const;
    // Rank of the images of f^t L^s e^r with total root degree <= max_degree and |s_i| <= s_range.
    int image_rank(int max_degree, int s_range, int* count = nullptr) const;

private:
    std::shared_ptr<const PbwAlgebra<Field>> alg_;
    IntMatrix n_;
    IntMatrix c_;
};

extern template class Realization<GenericField>;
extern template class Realization<CyclotomicField>;

}  // namespace uqs
