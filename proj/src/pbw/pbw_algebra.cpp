#include "uqs/pbw.hpp"

namespace uqs {

namespace {

template <class S>
void add_poly(std::map<IntVec, S>& m, const IntVec& k, const S& c) {
    if (scalar_is_zero(c)) return;
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (scalar_is_zero(it->second)) m.erase(it);
    }
}

template <class S>
S int_power(const S& x, long k) {
    S base = k < 0 ? S(1) / x : x;
    S r(1);
    for (long e = 0; e < std::abs(k); ++e) r *= base;
    return r;
}

long floor_div(long a, long m) { return a >= 0 ? a / m : -((-a + m - 1) / m); }

}  // namespace

template <class Field>
PbwAlgebra<Field>::PbwAlgebra(std::shared_ptr<const QuantumGroup> group, Field field,
                              std::optional<CentralReduction<S>> reduction)
    : qg_(std::move(group)), field_(std::move(field)), red_(std::move(reduction)) {
    if (!qg_) throw InvalidArgument("PbwAlgebra needs a quantum group");
    D_ = qg_->num_positive();
    l_ = qg_->rank();
    if (red_) {
        if (red_->m <= 0) throw InvalidArgument("central reduction needs a positive order");
        if (static_cast<int>(red_->minus_power.size()) != D_ || static_cast<int>(red_->plus_power.size()) != D_ ||
            static_cast<int>(red_->l_power.size()) != l_)
            throw InvalidArgument("central reduction has the wrong number of values");
        for (const auto& x : red_->l_power)
            if (scalar_is_zero(x)) throw InvalidArgument("central character must be nonzero on every l_i");
    }
}

template <class Field>
PbwMonomial PbwAlgebra<Field>::zero_monomial() const {
    return PbwMonomial{IntVec(D_, 0), IntVec(l_, 0), IntVec(D_, 0)};
}

template <class Field>
void PbwAlgebra<Field>::reduce_minus(IntVec& t, S& c) const {
    if (!red_) return;
    for (int k = 0; k < D_; ++k)
        if (t[k] >= red_->m) {
            int e = t[k] / red_->m;
            c *= int_power(red_->minus_power[k], e);
            t[k] -= e * red_->m;
        }
}

template <class Field>
void PbwAlgebra<Field>::reduce_plus(IntVec& r, S& c) const {
    if (!red_) return;
    for (int k = 0; k < D_; ++k)
        if (r[k] >= red_->m) {
            int e = r[k] / red_->m;
            c *= int_power(red_->plus_power[k], e);
            r[k] -= e * red_->m;
        }
}

template <class Field>
void PbwAlgebra<Field>::reduce_l(IntVec& s, S& c) const {
    if (!red_) return;
    for (int i = 0; i < l_; ++i) {
        long e = floor_div(s[i], red_->m);
        if (e == 0) continue;
        c *= int_power(red_->l_power[i], e);
        s[i] -= static_cast<int>(e * red_->m);
    }
}

template <class Field>
void PbwAlgebra<Field>::reduce_monomial(PbwMonomial& mono, S& c) const {
    reduce_minus(mono.t, c);
    reduce_l(mono.s, c);
    reduce_plus(mono.r, c);
}

template <class Field>
auto PbwAlgebra<Field>::one() const -> Element {
    return monomial(zero_monomial());
}

template <class Field>
auto PbwAlgebra<Field>::monomial(const PbwMonomial& mono, const S& c) const -> Element {
    if (static_cast<int>(mono.t.size()) != D_ || static_cast<int>(mono.r.size()) != D_ ||
        static_cast<int>(mono.s.size()) != l_)
        throw InvalidArgument("monomial has the wrong shape");
    for (int k = 0; k < D_; ++k)
        if (mono.t[k] < 0 || mono.r[k] < 0) throw InvalidArgument("negative root vector exponent");
    PbwMonomial m = mono;
    S coeff = c;
    reduce_monomial(m, coeff);
    Element e;
    e.add(m, coeff);
    return e;
}

template <class Field>
auto PbwAlgebra<Field>::root_plus(int pos) const -> Element {
    PbwMonomial m = zero_monomial();
    m.r.at(pos) = 1;
    return monomial(m);
}

template <class Field>
auto PbwAlgebra<Field>::root_minus(int pos) const -> Element {
    PbwMonomial m = zero_monomial();
    m.t.at(pos) = 1;
    return monomial(m);
}

template <class Field>
auto PbwAlgebra<Field>::x_plus(int i) const -> Element {
    return root_plus(qg_->position_of(qg_->roots().simple_root(i)));
}

template <class Field>
auto PbwAlgebra<Field>::x_minus(int i) const -> Element {
    return root_minus(qg_->position_of(qg_->roots().simple_root(i)));
}

template <class Field>
auto PbwAlgebra<Field>::l_monomial(const IntVec& s) const -> Element {
    PbwMonomial m = zero_monomial();
    m.s = s;
    return monomial(m);
}

template <class Field>
auto PbwAlgebra<Field>::k_power(int i, int power) const -> Element {
    IntVec s = qg_->k_vector(i);
    for (int& x : s) x *= power;
    return l_monomial(s);
}

template <class Field>
auto PbwAlgebra<Field>::scalar(const S& c) const -> Element {
    return monomial(zero_monomial(), c);
}

template <class Field>
auto PbwAlgebra<Field>::minus_table(int a, int b) const -> const Poly& {
    std::lock_guard lock(mu_);
    auto it = minus_table_.find({a, b});
    if (it != minus_table_.end()) return it->second;
    Poly p;
    for (const auto& [t, c] : qg_->minus_product(a, b)) add_poly(p, t, field_.lift(c));
    return minus_table_.emplace(std::make_pair(a, b), std::move(p)).first->second;
}

template <class Field>
auto PbwAlgebra<Field>::plus_table(int a, int b) const -> const Poly& {
    std::lock_guard lock(mu_);
    auto it = plus_table_.find({a, b});
    if (it != plus_table_.end()) return it->second;
    Poly p;
    for (const auto& [r, c] : qg_->plus_product(a, b)) add_poly(p, r, field_.lift(c));
    return plus_table_.emplace(std::make_pair(a, b), std::move(p)).first->second;
}

template <class Field>
auto PbwAlgebra<Field>::cross_table(int a, int b) const -> const Element& {
    std::lock_guard lock(mu_);
    auto it = cross_table_.find({a, b});
    if (it != cross_table_.end()) return it->second;
    Element e = specialize(qg_->cross_commutator(a, b));
    return cross_table_.emplace(std::make_pair(a, b), std::move(e)).first->second;
}

template <class Field>
auto PbwAlgebra<Field>::minus_right(const IntVec& t, int b) const -> const Poly& {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(t, b);
    auto it = minus_right_.find(key);
    if (it != minus_right_.end()) return it->second;
    int k = 0;
    while (k < D_ && t[k] == 0) ++k;
    Poly out;
    if (k >= b) {
        IntVec u = t;
        ++u[b];
        S c(1);
        reduce_minus(u, c);
        add_poly(out, u, c);
    } else {
        IntVec t0 = t;
        --t0[k];
        for (const auto& [u, c] : minus_table(k, b))
            for (const auto& [v, d] : minus_times(t0, u)) add_poly(out, v, c * d);
    }
    return minus_right_.emplace(key, std::move(out)).first->second;
}

template <class Field>
auto PbwAlgebra<Field>::plus_right(const IntVec& r, int a) const -> const Poly& {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(r, a);
    auto it = plus_right_.find(key);
    if (it != plus_right_.end()) return it->second;
    int k = D_ - 1;
    while (k >= 0 && r[k] == 0) --k;
    Poly out;
    if (k <= a) {
        IntVec u = r;
        ++u[a];
        S c(1);
        reduce_plus(u, c);
        add_poly(out, u, c);
    } else {
        IntVec r0 = r;
        --r0[k];
        for (const auto& [u, c] : plus_table(a, k))
            for (const auto& [v, d] : plus_times(r0, u)) add_poly(out, v, c * d);
    }
    return plus_right_.emplace(key, std::move(out)).first->second;
}

template <class Field>
auto PbwAlgebra<Field>::minus_times(const IntVec& t, const IntVec& u) const -> Poly {
    Poly cur{{t, S(1)}};
    for (int k = D_ - 1; k >= 0; --k)
        for (int e = 0; e < u[k]; ++e) {
            Poly next;
            for (const auto& [v, c] : cur)
                for (const auto& [w, d] : minus_right(v, k)) add_poly(next, w, c * d);
            cur = std::move(next);
        }
    return cur;
}

template <class Field>
auto PbwAlgebra<Field>::plus_times(const IntVec& r, const IntVec& u) const -> Poly {
    Poly cur{{r, S(1)}};
    for (int k = 0; k < D_; ++k)
        for (int e = 0; e < u[k]; ++e) {
            Poly next;
            for (const auto& [v, c] : cur)
                for (const auto& [w, d] : plus_right(v, k)) add_poly(next, w, c * d);
            cur = std::move(next);
        }
    return cur;
}

template <class Field>
auto PbwAlgebra<Field>::left_minus(int b, const Element& x) const -> Element {
    IntVec eb(D_, 0);
    eb[b] = 1;
    Element out;
    for (const auto& [mono, c] : x.terms)
        for (const auto& [t, d] : minus_times(eb, mono.t)) out.add(PbwMonomial{t, mono.s, mono.r}, c * d);
    return out;
}

template <class Field>
auto PbwAlgebra<Field>::right_plus(const Element& x, const IntVec& s, const IntVec& r) const -> Element {
    Element out;
    for (const auto& [mono, c] : x.terms) {
        S coeff = c * field_.q_pow(-qg_->l_pairing(s, qg_->weight_of(mono.r)));
        IntVec sum = mono.s;
        for (int i = 0; i < l_; ++i) sum[i] += s[i];
        reduce_l(sum, coeff);
        for (const auto& [u, d] : plus_times(mono.r, r)) out.add(PbwMonomial{mono.t, sum, u}, coeff * d);
    }
    return out;
}

template <class Field>
auto PbwAlgebra<Field>::cross_letter(int a, const IntVec& t) const -> const Element& {
    {
        std::lock_guard lock(mu_);
        auto it = cross_letter_.find({a, t});
        if (it != cross_letter_.end()) return it->second;
    }
    int b = D_ - 1;
    while (b >= 0 && t[b] == 0) --b;
    Element out;
    if (b < 0) {
        PbwMonomial m = zero_monomial();
        m.r[a] = 1;
        out = monomial(m);
    } else {
        IntVec t0 = t;
        --t0[b];
        out = left_minus(b, cross_letter(a, t0));
        PbwMonomial m = zero_monomial();
        m.t = t0;
        out += multiply(cross_table(a, b), monomial(m));
    }
    std::lock_guard lock(mu_);
    return cross_letter_.emplace(std::make_pair(a, t), std::move(out)).first->second;
}

template <class Field>
auto PbwAlgebra<Field>::cross(const IntVec& r, const IntVec& t) const -> const Element& {
    {
        std::lock_guard lock(mu_);
        auto it = cross_.find({r, t});
        if (it != cross_.end()) return it->second;
    }
    int a = 0;
    while (a < D_ && r[a] == 0) ++a;
    Element out;
    if (a == D_) {
        PbwMonomial m = zero_monomial();
        m.t = t;
        out = monomial(m);
    } else {
        IntVec r0 = r;
        --r0[a];
        for (const auto& [mono, c] : cross(r0, t).terms)
            out += right_plus(cross_letter(a, mono.t), mono.s, mono.r).scaled(c);
    }
    std::lock_guard lock(mu_);
    return cross_.emplace(std::make_pair(r, t), std::move(out)).first->second;
}

template <class Field>
auto PbwAlgebra<Field>::multiply_monomials(const PbwMonomial& x, const PbwMonomial& y) const -> Element {
    Element out;
    for (const auto& [mid, c] : cross(x.r, y.t).terms) {
        S coeff = c * field_.q_pow(-qg_->l_pairing(x.s, qg_->weight_of(mid.t)) -
                                   qg_->l_pairing(y.s, qg_->weight_of(mid.r)));
        IntVec s = x.s;
        for (int i = 0; i < l_; ++i) s[i] += mid.s[i] + y.s[i];
        reduce_l(s, coeff);
        Poly left = minus_times(x.t, mid.t);
        Poly right = plus_times(mid.r, y.r);
        for (const auto& [t, a] : left)
            for (const auto& [r, b] : right) out.add(PbwMonomial{t, s, r}, coeff * a * b);
    }
    return out;
}

template <class Field>
auto PbwAlgebra<Field>::multiply(const Element& x, const Element& y) const -> Element {
    Element out;
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) out += multiply_monomials(mx, my).scaled(cx * cy);
    out.tag = x.tag;
    return out;
}

template <class Field>
auto PbwAlgebra<Field>::power(const Element& x, int k) const -> Element {
    if (k < 0) throw InvalidArgument("negative power of an algebra element");
    Element r = one();
    for (int e = 0; e < k; ++e) r = multiply(r, x);
    return r;
}

template <class Field>
auto PbwAlgebra<Field>::commutator(const Element& x, const Element& y) const -> Element {
    return multiply(x, y) - multiply(y, x);
}

template <class Field>
auto PbwAlgebra<Field>::normal_form(const FreeExpression<S>& expr) const -> Element {
    Element out;
    for (const auto& [factors, c] : expr) {
        Element prod = scalar(c);
        for (const Factor& f : factors) {
            Element g;
            if (f.kind == 'E' || f.kind == 'F') {
                if (f.index < 0 || f.index >= D_) throw InvalidArgument("root position out of range");
                g = power(f.kind == 'E' ? root_plus(f.index) : root_minus(f.index), f.power);
            } else if (f.kind == 'L') {
                if (f.index < 0 || f.index >= l_) throw InvalidArgument("simple index out of range");
                IntVec s(l_, 0);
                s[f.index] = f.power;
                g = l_monomial(s);
            } else {
                throw InvalidArgument(std::string("unknown factor kind ") + f.kind);
            }
            prod = multiply(prod, g);
        }
        out += prod;
    }
    return out;
}

template <class Field>
auto PbwAlgebra<Field>::as_expression(const Element& x) const -> FreeExpression<S> {
    FreeExpression<S> out;
    for (const auto& [mono, c] : x.terms) {
        std::vector<Factor> fs;
        for (int k = D_ - 1; k >= 0; --k)
            if (mono.t[k]) fs.push_back({'F', k, mono.t[k]});
        for (int i = 0; i < l_; ++i)
            if (mono.s[i]) fs.push_back({'L', i, mono.s[i]});
        for (int k = 0; k < D_; ++k)
            if (mono.r[k]) fs.push_back({'E', k, mono.r[k]});
        out.emplace_back(std::move(fs), c);
    }
    return out;
}

template <class Field>
auto PbwAlgebra<Field>::reduce(const Element& x) const -> Element {
    Element out;
    out.tag = x.tag;
    for (const auto& [mono, c] : x.terms) {
        PbwMonomial m = mono;
        S coeff = c;
        reduce_monomial(m, coeff);
        out.add(m, coeff);
    }
    return out;
}

template <class Field>
auto PbwAlgebra<Field>::specialize(const GenericElement& x) const -> Element {
    Element out;
    out.tag = x.tag;
    for (const auto& [mono, c] : x.terms) {
        PbwMonomial m = mono;
        S coeff = field_.lift(c);
        reduce_monomial(m, coeff);
        out.add(m, coeff);
    }
    return out;
}

template class PbwAlgebra<GenericField>;
template class PbwAlgebra<CyclotomicField>;

}  // namespace uqs
