#pragma once

#include "uqs/modules.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace uqs {

// Finite-dimensional associative algebra given by a basis and a multiplication oracle on basis pairs.
// The basis is never materialized; products are computed on demand and memoized.
template <class S>
class FiniteDimAlgebra {
public:
    using Coords = std::map<int, S>;
    using Product = std::function<Coords(int, int)>;
    using Label = std::function<std::string(int)>;

    FiniteDimAlgebra() = default;
    FiniteDimAlgebra(int dim, Product product, int unit, int top,
                     std::vector<std::pair<std::string, Coords>> generators, Label label = {})
        : dim_(dim), unit_(unit), top_(top), gens_(std::move(generators)), label_(std::move(label)),
          state_(std::make_shared<State>()) {
        if (dim <= 0) throw InvalidArgument("algebra dimension must be positive");
        state_->product = std::move(product);
    }

    int dim() const { return dim_; }
    int unit() const { return unit_; }
    // Basis index of the top monomial used by the Frobenius functional.
    int top() const { return top_; }
    const std::vector<std::pair<std::string, Coords>>& generators() const { return gens_; }
    std::vector<std::string> generator_names() const {
        std::vector<std::string> out;
        for (const auto& g : gens_) out.push_back(g.first);
        return out;
    }
    std::string label(int i) const { return label_ ? label_(i) : "b" + std::to_string(i); }

    const Coords& basis_product(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw InvalidArgument("basis index out of range");
        {
            std::lock_guard lock(state_->mu);
            auto it = state_->memo.find({i, j});
            if (it != state_->memo.end()) return it->second;
        }
        Coords c = state_->product(i, j);
        std::lock_guard lock(state_->mu);
        return state_->memo.emplace(std::make_pair(i, j), std::move(c)).first->second;
    }

    Coords multiply(const Coords& x, const Coords& y) const {
        Coords out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) {
                S ab = a * b;
                for (const auto& [k, c] : basis_product(i, j)) add_to(out, k, ab * c);
            }
        return out;
    }

    static void add_to(Coords& x, int k, const S& c) {
        if (scalar_is_zero(c)) return;
        auto [it, inserted] = x.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (scalar_is_zero(it->second)) x.erase(it);
        }
    }

    std::vector<S> dense(const Coords& x) const {
        std::vector<S> v(dim_, S(0));
        for (const auto& [k, c] : x) v[k] = c;
        return v;
    }
    Coords sparse(const std::vector<S>& v) const {
        Coords x;
        for (int k = 0; k < static_cast<int>(v.size()); ++k)
            if (!scalar_is_zero(v[k])) x.emplace(k, v[k]);
        return x;
    }

    // Matrix of left multiplication by x.
    Matrix<S> left_matrix(const Coords& x) const {
        Matrix<S> m(dim_, dim_);
        for (int j = 0; j < dim_; ++j)
            for (const auto& [k, c] : multiply(x, Coords{{j, S(1)}})) m(k, j) = c;
        return m;
    }

    // Matrix of right multiplication by x.
    Matrix<S> right_matrix(const Coords& x) const {
        Matrix<S> m(dim_, dim_);
        for (int j = 0; j < dim_; ++j)
            for (const auto& [k, c] : multiply(Coords{{j, S(1)}}, x)) m(k, j) = c;
        return m;
    }

    // The left regular representation on the generator list.
    ModuleRep<S> regular_module() const {
        ModuleRep<S> rep{dim_, generator_names(), {}};
        for (const auto& g : gens_) rep.gens.push_back(left_matrix(g.second));
        return rep;
    }

    // (ab)c = a(bc) on random basis triples; throws Defect naming the first failure.
    void check_associativity(int samples, unsigned seed) const {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick(0, dim_ - 1);
        for (int s = 0; s < samples; ++s) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            Coords lhs = multiply(basis_product(a, b), Coords{{c, S(1)}});
            Coords rhs = multiply(Coords{{a, S(1)}}, basis_product(b, c));
            if (!(lhs == rhs))
                throw Defect("associativity fails on (" + label(a) + ", " + label(b) + ", " + label(c) + ")");
        }
    }

private:
    struct State {
        std::mutex mu;
        Product product;
        std::map<std::pair<int, int>, Coords> memo;
    };

    int dim_ = 0;
    int unit_ = 0;
    int top_ = 0;
    std::vector<std::pair<std::string, Coords>> gens_;
    Label label_;
    std::shared_ptr<State> state_;
};

}  // namespace uqs
